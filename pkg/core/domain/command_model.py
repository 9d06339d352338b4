from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from core.domain.analysis_model import DominantTarget, RateTableRow
from core.domain.bath_model import BathModel
from core.domain.dynamics_model import DensityMatrix, Trajectory
from core.domain.redfield_model import RateMatrix, RedfieldTensor, ZetaTensor
from core.domain.scenario_model import Scenario
from core.domain.system_model import ExcitonBasis, SiteNetwork


@dataclass(frozen=True, eq=False)
class SimulationResult:
    scenario: Scenario
    basis: ExcitonBasis
    tensor: RedfieldTensor
    trajectory: Trajectory
    thermal_state: DensityMatrix
    thermal_site_populations: np.ndarray
    steady_state: DensityMatrix
    steady_site_populations: np.ndarray
    coherent_maximum: Optional[np.ndarray] = None

    @property
    def steady_state_gap(self) -> float:
        """Largest deviation of steady-state from thermal site populations."""
        return float(
            np.max(np.abs(self.steady_site_populations - self.thermal_site_populations))
        )


@dataclass(frozen=True, eq=False)
class RatesResult:
    scenario: Scenario
    basis: ExcitonBasis
    zeta: ZetaTensor
    rates: RateMatrix
    rows: List[RateTableRow]
    dominant: DominantTarget


@dataclass(frozen=True)
class SpectrumGrid:
    """Uniform frequency grid in rad/ps, both ends included when they land on it."""

    omega_min: float
    omega_max: float
    step: float

    def __post_init__(self) -> None:
        if not all(np.isfinite([self.omega_min, self.omega_max, self.step])):
            raise ValueError("Grid bounds and step must be finite")
        if self.omega_min >= self.omega_max:
            raise ValueError("Grid minimum must be below its maximum")
        if self.step <= 0:
            raise ValueError("Grid step must be positive")

    def points(self) -> np.ndarray:
        count = int(np.floor((self.omega_max - self.omega_min) / self.step + 1e-9)) + 1
        return self.omega_min + self.step * np.arange(count)


@dataclass(frozen=True, eq=False)
class SpectrumRequest:
    bath: BathModel
    grid: SpectrumGrid
    network: Optional[SiteNetwork] = None


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    omega: np.ndarray
    spectral_density: np.ndarray
    correlation: np.ndarray
    markers: List[Tuple[int, int, float]] = field(default_factory=list)


@dataclass(frozen=True)
class ScanRequest:
    scenario: Scenario
    factors: Tuple[float, ...]
    source: Optional[int] = None
    geometry: bool = False

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("At least one scale factor is required")
