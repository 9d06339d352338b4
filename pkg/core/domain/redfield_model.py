from dataclasses import dataclass

import numpy as np


def _frozen_array(values, dtype) -> np.ndarray:
    array = np.array(values, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class ZetaTensor:
    """Site-correlation weighted overlap zeta[a, b, c, d], dimensionless."""

    values: np.ndarray

    def __post_init__(self) -> None:
        values = _frozen_array(self.values, float)
        if values.ndim != 4 or len(set(values.shape)) != 1:
            raise ValueError("Zeta must be an N x N x N x N array")
        object.__setattr__(self, "values", values)

    @property
    def size(self) -> int:
        return self.values.shape[0]

    @property
    def transfer_part(self) -> np.ndarray:
        """zeta[a, b, b, a], the factor entering the a -> b rate."""
        return np.einsum("abba->ab", self.values)


@dataclass(frozen=True, eq=False)
class RedfieldTensor:
    """R[a, b, c, d] in rad/ps with the exciton transition frequencies."""

    values: np.ndarray
    frequencies: np.ndarray
    secular: bool = False
    lamb_shift: bool = True

    def __post_init__(self) -> None:
        values = _frozen_array(self.values, complex)
        frequencies = _frozen_array(self.frequencies, float)
        n = frequencies.shape[0]
        if values.shape != (n, n, n, n):
            raise ValueError("Redfield tensor shape does not match the frequencies")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "frequencies", frequencies)

    @property
    def size(self) -> int:
        return self.frequencies.shape[0]

    def as_matrix(self) -> np.ndarray:
        n = self.size
        return self.values.reshape(n * n, n * n)

    def trace_defect(self) -> float:
        """max |sum_a R[a, a, c, d]| over (c, d)."""
        return float(np.max(np.abs(np.einsum("aacd->cd", self.values))))

    def hermiticity_defect(self) -> float:
        swapped = np.conj(np.transpose(self.values, (1, 0, 3, 2)))
        return float(np.max(np.abs(self.values - swapped)))


@dataclass(frozen=True, eq=False)
class RateMatrix:
    """k[a, b] = zeta_part[a, b] * c_part[a, b], rates a -> b in ps^-1."""

    k: np.ndarray
    zeta_part: np.ndarray
    c_part: np.ndarray

    def __post_init__(self) -> None:
        k = _frozen_array(self.k, float)
        zeta_part = _frozen_array(self.zeta_part, float)
        c_part = _frozen_array(self.c_part, float)
        if not (k.shape == zeta_part.shape == c_part.shape) or k.ndim != 2:
            raise ValueError("Rate matrix parts must share one square shape")
        if np.any(np.diag(k) != 0.0):
            raise ValueError("Rate matrix diagonal must be zero")
        if np.any(k < 0):
            raise ValueError("Rates must be non-negative")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "zeta_part", zeta_part)
        object.__setattr__(self, "c_part", c_part)

    @property
    def size(self) -> int:
        return self.k.shape[0]
