from abc import ABC, abstractmethod
from typing import List, Optional, Sequence

from core.domain.analysis_model import DominantTarget, RateTableRow, ScanResult
from core.domain.bath_model import BathModel
from core.domain.redfield_model import RateMatrix
from core.domain.system_model import ExcitonBasis, SiteNetwork


class AnalysisDomainServiceInterface(ABC):
    @abstractmethod
    def rate_table(self, rates: RateMatrix) -> List[RateTableRow]:
        raise NotImplementedError

    @abstractmethod
    def dominant_target(
        self, rates: RateMatrix, basis: ExcitonBasis, source: int
    ) -> DominantTarget:
        raise NotImplementedError

    @abstractmethod
    def directedness(self, rates: RateMatrix, source: int) -> float:
        raise NotImplementedError

    @abstractmethod
    def scale_scan(
        self,
        network: SiteNetwork,
        bath: BathModel,
        factors: Sequence[float],
        source: Optional[int] = None,
        geometry: bool = False,
        initial_site: Optional[int] = None,
    ) -> List[ScanResult]:
        raise NotImplementedError

    @abstractmethod
    def default_source(
        self, basis: ExcitonBasis, initial_site: Optional[int] = None
    ) -> int:
        raise NotImplementedError
