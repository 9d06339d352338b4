from abc import ABC, abstractmethod
from typing import Tuple

import numpy as np

from core.domain.bath_model import BathModel
from core.domain.redfield_model import RateMatrix, RedfieldTensor, ZetaTensor
from core.domain.system_model import ExcitonBasis


class RedfieldDomainServiceInterface(ABC):
    @abstractmethod
    def compute_zeta(
        self, basis: ExcitonBasis, distances: np.ndarray, r_corr: float
    ) -> ZetaTensor:
        raise NotImplementedError

    @abstractmethod
    def compute_gamma(
        self,
        zeta: ZetaTensor,
        indices: Tuple[int, int, int, int],
        omega: float,
        bath: BathModel,
        lamb_shift: bool = True,
    ) -> complex:
        raise NotImplementedError

    @abstractmethod
    def assemble_tensor(
        self,
        basis: ExcitonBasis,
        zeta: ZetaTensor,
        bath: BathModel,
        secular: bool = False,
        lamb_shift: bool = True,
        grouping_tol: float = None,
    ) -> RedfieldTensor:
        raise NotImplementedError

    @abstractmethod
    def compute_rates(
        self, zeta: ZetaTensor, basis: ExcitonBasis, bath: BathModel
    ) -> RateMatrix:
        raise NotImplementedError

    @abstractmethod
    def secular_filter(
        self, tensor: RedfieldTensor, grouping_tol: float = None
    ) -> RedfieldTensor:
        raise NotImplementedError
