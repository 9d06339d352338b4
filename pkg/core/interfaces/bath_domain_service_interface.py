from abc import ABC, abstractmethod
from typing import Callable, Tuple

import numpy as np

from core.domain.bath_model import BathModel, MaterialParams


class BathDomainServiceInterface(ABC):
    @abstractmethod
    def derive_bath_params(self, material: MaterialParams) -> Tuple[float, float]:
        raise NotImplementedError

    @abstractmethod
    def spectral_density(self, omega, bath: BathModel) -> np.ndarray:
        raise NotImplementedError

    @abstractmethod
    def bose_einstein(self, omega, temperature: float) -> np.ndarray:
        raise NotImplementedError

    @abstractmethod
    def correlation_c(self, omega, bath: BathModel) -> np.ndarray:
        raise NotImplementedError

    @abstractmethod
    def spatial_correlation(self, distance, r_corr: float) -> np.ndarray:
        raise NotImplementedError

    @abstractmethod
    def pv_hilbert(self, omega0: float, bath: BathModel, tol: float = None) -> float:
        raise NotImplementedError

    @abstractmethod
    def principal_value(
        self,
        func: Callable[[float], float],
        omega0: float,
        half_width: float,
        tol: float = None,
    ) -> float:
        raise NotImplementedError
