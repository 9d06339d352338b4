from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

import numpy as np

from adapters.loggers.logger_adapter import app_logger
from config import Config
from core.domain.analysis_model import DominantTarget, RateTableRow, ScanResult
from core.domain.bath_model import BathModel
from core.domain.exceptions import InvalidArgumentError
from core.domain.redfield_model import RateMatrix, ZetaTensor
from core.domain.system_model import ExcitonBasis, SiteNetwork
from core.domain.units import PER_PS_TO_PER_S
from core.interfaces.analysis_domain_service_interface import (
    AnalysisDomainServiceInterface,
)
from core.interfaces.redfield_domain_service_interface import (
    RedfieldDomainServiceInterface,
)
from core.interfaces.system_domain_service_interface import (
    SystemDomainServiceInterface,
)


class AnalysisDomainService(AnalysisDomainServiceInterface):
    def __init__(
        self,
        system_service: SystemDomainServiceInterface,
        redfield_service: RedfieldDomainServiceInterface,
        workers: int = None,
    ) -> None:
        self.system_service = system_service
        self.redfield_service = redfield_service
        self.workers = workers or Config.SCAN_WORKERS

    def rate_table(self, rates: RateMatrix) -> List[RateTableRow]:
        """Every ordered pair a != b, sorted by source then destination."""
        with np.errstate(divide="ignore"):
            log_zeta = np.log10(rates.zeta_part)
            log_c = np.log10(rates.c_part * PER_PS_TO_PER_S)

        rows = []
        for a in range(rates.size):
            for b in range(rates.size):
                if a == b:
                    continue
                rows.append(
                    RateTableRow(
                        from_state=a,
                        to_state=b,
                        log10_zeta=float(log_zeta[a, b]),
                        log10_c=float(log_c[a, b]),
                        log10_k=float(log_zeta[a, b] + log_c[a, b]),
                        k_per_ps=float(rates.k[a, b]),
                    )
                )
        return rows

    def dominant_target(
        self, rates: RateMatrix, basis: ExcitonBasis, source: int
    ) -> DominantTarget:
        self._check_source(source, rates.size)
        row = rates.k[source]
        if not np.any(row > 0):
            return DominantTarget(
                source_state=source, target_state=None, target_site=None, rate=0.0
            )
        target = int(np.argmax(row))
        return DominantTarget(
            source_state=source,
            target_state=target,
            target_site=basis.majority_site(target),
            rate=float(row[target]),
        )

    def directedness(self, rates: RateMatrix, source: int) -> float:
        """Dominant outgoing rate over the sum of the competing ones."""
        self._check_source(source, rates.size)
        row = rates.k[source]
        dominant = float(np.max(row))
        if dominant <= 0:
            return 0.0
        competing = float(np.sum(row)) - dominant
        return dominant / competing if competing > 0 else float("inf")

    def scale_scan(
        self,
        network: SiteNetwork,
        bath: BathModel,
        factors: Sequence[float],
        source: Optional[int] = None,
        geometry: bool = False,
        initial_site: Optional[int] = None,
    ) -> List[ScanResult]:
        factors = [float(factor) for factor in factors]
        if not factors:
            raise InvalidArgumentError("Scale scan needs at least one factor")
        for factor in factors:
            if not np.isfinite(factor) or factor <= 0:
                raise InvalidArgumentError(
                    f"Scale factors must be positive, got {factor}"
                )

        hamiltonian = self.system_service.build_hamiltonian(network)
        basis = self.system_service.diagonalize(hamiltonian)
        if source is None:
            source = self.default_source(basis, initial_site)
        self._check_source(source, basis.size)

        if geometry:

            def evaluate(factor: float) -> ScanResult:
                scaled = self.system_service.scale_network(network, factor, True)
                scaled_hamiltonian = self.system_service.build_hamiltonian(scaled)
                scaled_basis = self.system_service.diagonalize(scaled_hamiltonian)
                zeta = self.redfield_service.compute_zeta(
                    scaled_basis, scaled_hamiltonian.distances, bath.r_corr
                )
                return self._scan_point(factor, zeta, scaled_basis, bath, source)

        else:
            # the eigenvectors do not change under a uniform scale, so zeta is shared
            zeta = self.redfield_service.compute_zeta(
                basis, hamiltonian.distances, bath.r_corr
            )

            def evaluate(factor: float) -> ScanResult:
                return self._scan_point(
                    factor, zeta, basis.scaled(factor), bath, source
                )

        app_logger.debug(
            "Scanning %d factors from exciton state %d (geometry=%s)",
            len(factors),
            source + 1,
            geometry,
        )
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            return list(executor.map(evaluate, factors))

    def _scan_point(
        self,
        factor: float,
        zeta: ZetaTensor,
        basis: ExcitonBasis,
        bath: BathModel,
        source: int,
    ) -> ScanResult:
        rates = self.redfield_service.compute_rates(zeta, basis, bath)
        dominant = self.dominant_target(rates, basis, source)
        return ScanResult(
            factor=factor,
            source_state=source,
            target_state=dominant.target_state,
            target_site=dominant.target_site,
            dominant_rate=dominant.rate,
            directedness=self.directedness(rates, source),
            rates=rates,
        )

    def default_source(
        self, basis: ExcitonBasis, initial_site: Optional[int] = None
    ) -> int:
        """Eigenstate with the largest weight on ``initial_site``, else the top one."""
        if initial_site is None:
            return basis.size - 1
        if not 0 <= initial_site < basis.size:
            raise InvalidArgumentError(f"No site {initial_site + 1}")
        return int(np.argmax(basis.site_weights[initial_site, :]))

    @staticmethod
    def _check_source(source: int, size: int) -> None:
        if not 0 <= source < size:
            raise InvalidArgumentError(
                f"Exciton state {source + 1} outside 1..{size}"
            )
