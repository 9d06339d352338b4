from dataclasses import dataclass
from typing import Optional

from core.domain.redfield_model import RateMatrix


@dataclass(frozen=True)
class RateTableRow:
    """One a -> b entry of a rate table; logs are base 10, rates in s^-1.

    Zero factors are reported as -inf.
    """

    from_state: int
    to_state: int
    log10_zeta: float
    log10_c: float
    log10_k: float
    k_per_ps: float

    @property
    def is_finite(self) -> bool:
        return self.k_per_ps > 0


@dataclass(frozen=True)
class DominantTarget:
    source_state: int
    target_state: Optional[int]
    target_site: Optional[int]
    rate: float

    @property
    def transfers(self) -> bool:
        return self.target_state is not None


@dataclass(frozen=True, eq=False)
class ScanResult:
    factor: float
    source_state: int
    target_state: Optional[int]
    target_site: Optional[int]
    dominant_rate: float
    directedness: float
    rates: RateMatrix
