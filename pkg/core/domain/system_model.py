from dataclasses import dataclass, field
from typing import Sequence, Tuple, Union

import numpy as np


def _frozen_array(values, dtype=float) -> np.ndarray:
    array = np.array(values, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class Site:
    position: Tuple[float, float, float]
    energy: float

    def __post_init__(self) -> None:
        position = tuple(float(x) for x in self.position)
        if len(position) != 3:
            raise ValueError("Site position must be a 3-vector in nm")
        if not all(np.isfinite(position)) or not np.isfinite(self.energy):
            raise ValueError("Site position and energy must be finite")
        object.__setattr__(self, "position", position)
        object.__setattr__(self, "energy", float(self.energy))


@dataclass(frozen=True)
class DipolePerpendicular:
    """J_mn = strength / R_mn^3 for transition dipoles perpendicular to R_mn."""

    strength: float = 100.0

    def __post_init__(self) -> None:
        if not np.isfinite(self.strength):
            raise ValueError("Dipole coupling strength must be finite")


@dataclass(frozen=True, eq=False)
class ExplicitCouplings:
    matrix: np.ndarray

    def __post_init__(self) -> None:
        matrix = _frozen_array(self.matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("Coupling matrix must be square")
        if not np.all(np.isfinite(matrix)):
            raise ValueError("Coupling matrix must be finite")
        if not np.array_equal(matrix, matrix.T):
            raise ValueError("Coupling matrix must be symmetric")
        if np.any(np.diag(matrix) != 0.0):
            raise ValueError("Coupling matrix must have a zero diagonal")
        object.__setattr__(self, "matrix", matrix)


CouplingRule = Union[DipolePerpendicular, ExplicitCouplings]


@dataclass(frozen=True)
class SiteNetwork:
    sites: Tuple[Site, ...]
    coupling_rule: CouplingRule = field(default_factory=DipolePerpendicular)

    def __post_init__(self) -> None:
        sites = tuple(self.sites)
        if len(sites) < 1:
            raise ValueError("A site network needs at least one site")
        object.__setattr__(self, "sites", sites)
        if isinstance(self.coupling_rule, ExplicitCouplings):
            if self.coupling_rule.matrix.shape[0] != len(sites):
                raise ValueError(
                    "Coupling matrix dimension does not match the number of sites"
                )

    @property
    def size(self) -> int:
        return len(self.sites)

    @property
    def positions(self) -> np.ndarray:
        return np.array([site.position for site in self.sites])

    @property
    def energies(self) -> np.ndarray:
        return np.array([site.energy for site in self.sites])

    @classmethod
    def from_arrays(
        cls,
        positions: Sequence[Sequence[float]],
        energies: Sequence[float],
        coupling_rule: CouplingRule = None,
    ) -> "SiteNetwork":
        sites = tuple(
            Site(position=tuple(p), energy=e) for p, e in zip(positions, energies)
        )
        return cls(sites=sites, coupling_rule=coupling_rule or DipolePerpendicular())


@dataclass(frozen=True, eq=False)
class SiteHamiltonian:
    """Site-basis Hamiltonian in rad/ps together with the site distances in nm."""

    matrix: np.ndarray
    distances: np.ndarray

    def __post_init__(self) -> None:
        matrix = _frozen_array(self.matrix)
        distances = _frozen_array(self.distances)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("Hamiltonian must be square")
        if distances.shape != matrix.shape:
            raise ValueError("Distance matrix must match the Hamiltonian shape")
        if not np.array_equal(matrix, matrix.T):
            raise ValueError("Hamiltonian must be exactly symmetric")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "distances", distances)

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True, eq=False)
class ExcitonBasis:
    """Eigenenergies (rad/ps, ascending) and U with U[n, a] = <s_n|e_a>."""

    energies: np.ndarray
    vectors: np.ndarray

    def __post_init__(self) -> None:
        energies = _frozen_array(self.energies)
        vectors = _frozen_array(self.vectors)
        if energies.ndim != 1 or vectors.shape != (energies.size, energies.size):
            raise ValueError("Exciton basis shapes are inconsistent")
        object.__setattr__(self, "energies", energies)
        object.__setattr__(self, "vectors", vectors)

    @property
    def size(self) -> int:
        return self.energies.size

    @property
    def transition_frequencies(self) -> np.ndarray:
        """omega[a, b] = eps_a - eps_b."""
        return self.energies[:, None] - self.energies[None, :]

    @property
    def site_weights(self) -> np.ndarray:
        """|U_na|^2, the contribution of site n to eigenstate a."""
        return self.vectors**2

    def majority_site(self, state: int) -> int:
        return int(np.argmax(self.site_weights[:, state]))

    def scaled(self, factor: float) -> "ExcitonBasis":
        return ExcitonBasis(energies=factor * self.energies, vectors=self.vectors)
