from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from config import Config
from core.domain.bath_model import BathModel
from core.domain.dynamics_model import BASES, METHODS, SITE_BASIS
from core.domain.system_model import SiteNetwork

INITIAL_SITE = "site"
INITIAL_EXCITON = "exciton"
INITIAL_MATRIX = "matrix"
INITIAL_KINDS = (INITIAL_SITE, INITIAL_EXCITON, INITIAL_MATRIX)


@dataclass(frozen=True)
class SimulationOptions:
    secular: bool = False
    lamb_shift: bool = True
    method: str = Config.DEFAULT_METHOD
    dt: Optional[float] = None
    t_final: float = Config.DEFAULT_T_FINAL_PS
    stride: Optional[int] = None
    grouping_tol: float = Config.SECULAR_GROUPING_TOL

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"Unsupported propagation method: {self.method}")
        if self.dt is not None and self.dt <= 0:
            raise ValueError("dt must be positive")
        if self.t_final <= 0:
            raise ValueError("t_final must be positive")
        if self.dt is not None and self.t_final < self.dt:
            raise ValueError("t_final must be at least dt")
        if self.stride is not None and self.stride < 1:
            raise ValueError("stride must be at least 1")
        if self.grouping_tol < 0:
            raise ValueError("grouping_tol must be non-negative")


@dataclass(frozen=True, eq=False)
class InitialState:
    """Initial condition; indices are 0-based."""

    kind: str = INITIAL_SITE
    index: Optional[int] = 0
    matrix: Optional[np.ndarray] = None
    basis: str = SITE_BASIS

    def __post_init__(self) -> None:
        if self.kind not in INITIAL_KINDS:
            raise ValueError(f"Unknown initial state kind: {self.kind}")
        if self.basis not in BASES:
            raise ValueError(f"Unknown basis tag: {self.basis}")
        if self.kind == INITIAL_MATRIX:
            if self.matrix is None:
                raise ValueError("Matrix initial state needs a matrix")
        elif self.index is None or self.index < 0:
            raise ValueError("Initial state index must be non-negative")


@dataclass(frozen=True)
class Scenario:
    network: SiteNetwork
    bath: BathModel
    options: SimulationOptions = field(default_factory=SimulationOptions)
    initial_state: InitialState = field(default_factory=InitialState)
    name: str = "scenario"
    bath_preset: Optional[str] = None

    def __post_init__(self) -> None:
        n = self.network.size
        if self.initial_state.kind == INITIAL_MATRIX:
            if np.shape(self.initial_state.matrix) != (n, n):
                raise ValueError("Initial matrix dimension does not match the network")
        elif self.initial_state.index >= n:
            raise ValueError("Initial state index exceeds the number of sites")
