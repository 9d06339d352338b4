from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from core.domain.system_model import ExcitonBasis

SITE_BASIS = "site"
EXCITON_BASIS = "exciton"
BASES = (SITE_BASIS, EXCITON_BASIS)

RK4 = "rk4"
EXPM = "expm"
METHODS = (RK4, EXPM)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    matrix: np.ndarray
    basis: str = EXCITON_BASIS

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=complex, copy=True)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("Density matrix must be square")
        if self.basis not in BASES:
            raise ValueError(f"Unknown basis tag: {self.basis}")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    @property
    def populations(self) -> np.ndarray:
        return np.real(np.diag(self.matrix)).copy()

    def hermiticity_defect(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T)))

    def min_eigenvalue(self) -> float:
        hermitian = 0.5 * (self.matrix + self.matrix.conj().T)
        return float(np.linalg.eigvalsh(hermitian)[0])

    def vectorized(self) -> np.ndarray:
        return self.matrix.reshape(-1)


@dataclass(frozen=True, eq=False)
class Liouvillian:
    """Generator acting on row-major vectorized exciton-basis density matrices."""

    matrix: np.ndarray
    basis: ExcitonBasis

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=complex, copy=True)
        n = self.basis.size
        if matrix.shape != (n * n, n * n):
            raise ValueError("Liouvillian shape does not match the exciton basis")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def size(self) -> int:
        return self.basis.size

    def apply(self, rho: np.ndarray) -> np.ndarray:
        n = self.size
        return (self.matrix @ np.asarray(rho, dtype=complex).reshape(-1)).reshape(n, n)


@dataclass(frozen=True, eq=False)
class Trajectory:
    times: np.ndarray
    states: Tuple[DensityMatrix, ...]
    site_populations: np.ndarray
    traces: np.ndarray
    min_eigenvalues: np.ndarray
    method: str = EXPM
    dt: Optional[float] = None
    stride: int = 1

    def __post_init__(self) -> None:
        times = np.asarray(self.times, dtype=float)
        if times.ndim != 1 or len(self.states) != times.size:
            raise ValueError("Trajectory needs one state per output time")
        if times.size > 1 and np.any(np.diff(times) <= 0):
            raise ValueError("Trajectory times must be strictly increasing")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "states", tuple(self.states))

    def __len__(self) -> int:
        return self.times.size

    @property
    def exciton_matrices(self) -> np.ndarray:
        return np.stack([state.matrix for state in self.states])

    @property
    def coherences(self) -> np.ndarray:
        """Exciton-basis rho[t, a, b] for a < b, ordered row by row."""
        n = self.states[0].size
        upper = np.triu_indices(n, k=1)
        return self.exciton_matrices[:, upper[0], upper[1]]

    @property
    def coherence_magnitudes(self) -> np.ndarray:
        return np.abs(self.coherences)
