from abc import ABC, abstractmethod

import numpy as np

from core.domain.dynamics_model import DensityMatrix, Liouvillian, Trajectory
from core.domain.redfield_model import RedfieldTensor
from core.domain.scenario_model import InitialState
from core.domain.system_model import ExcitonBasis


class PropagationDomainServiceInterface(ABC):
    @abstractmethod
    def build_liouvillian(
        self, basis: ExcitonBasis, tensor: RedfieldTensor
    ) -> Liouvillian:
        raise NotImplementedError

    @abstractmethod
    def default_time_step(self, basis: ExcitonBasis, tensor: RedfieldTensor) -> float:
        raise NotImplementedError

    @abstractmethod
    def initial_state(
        self, initial: InitialState, basis: ExcitonBasis
    ) -> DensityMatrix:
        raise NotImplementedError

    @abstractmethod
    def evolve(
        self,
        liouvillian: Liouvillian,
        rho0: DensityMatrix,
        t_final: float,
        dt: float = None,
        stride: int = None,
        method: str = None,
    ) -> Trajectory:
        raise NotImplementedError

    @abstractmethod
    def thermal_state(self, basis: ExcitonBasis, temperature: float) -> DensityMatrix:
        raise NotImplementedError

    @abstractmethod
    def site_populations(
        self, state: DensityMatrix, vectors: np.ndarray
    ) -> np.ndarray:
        raise NotImplementedError

    @abstractmethod
    def steady_state(self, liouvillian: Liouvillian) -> DensityMatrix:
        raise NotImplementedError
