from abc import ABC, abstractmethod

import numpy as np

from core.domain.dynamics_model import DensityMatrix
from core.domain.system_model import ExcitonBasis, SiteHamiltonian, SiteNetwork


class SystemDomainServiceInterface(ABC):
    @abstractmethod
    def coupling_from_distance(self, distance: float, strength: float) -> float:
        raise NotImplementedError

    @abstractmethod
    def build_hamiltonian(self, network: SiteNetwork) -> SiteHamiltonian:
        raise NotImplementedError

    @abstractmethod
    def diagonalize(self, hamiltonian: SiteHamiltonian) -> ExcitonBasis:
        raise NotImplementedError

    @abstractmethod
    def transform_density(
        self, rho: DensityMatrix, basis_to: str, vectors: np.ndarray
    ) -> DensityMatrix:
        raise NotImplementedError

    @abstractmethod
    def scale_network(
        self, network: SiteNetwork, factor: float, geometry: bool = False
    ) -> SiteNetwork:
        raise NotImplementedError

    @abstractmethod
    def coherent_site_populations(
        self, basis: ExcitonBasis, initial_site: int, times: np.ndarray
    ) -> np.ndarray:
        raise NotImplementedError
