from adapters.loggers.logger_adapter import app_logger
from core.domain.command_model import RatesResult
from core.domain.scenario_model import INITIAL_EXCITON, INITIAL_SITE, Scenario
from core.interfaces.analysis_domain_service_interface import (
    AnalysisDomainServiceInterface,
)
from core.interfaces.redfield_domain_service_interface import (
    RedfieldDomainServiceInterface,
)
from core.interfaces.system_domain_service_interface import (
    SystemDomainServiceInterface,
)
from core.interfaces.use_case_interfaces import UseCaseInterface


class ComputeRatesUseCase(UseCaseInterface[Scenario, RatesResult]):
    def __init__(
        self,
        system_service: SystemDomainServiceInterface,
        redfield_service: RedfieldDomainServiceInterface,
        analysis_service: AnalysisDomainServiceInterface,
    ) -> None:
        self.system_service = system_service
        self.redfield_service = redfield_service
        self.analysis_service = analysis_service

    def execute(self, request: Scenario) -> RatesResult:
        hamiltonian = self.system_service.build_hamiltonian(request.network)
        basis = self.system_service.diagonalize(hamiltonian)
        zeta = self.redfield_service.compute_zeta(
            basis, hamiltonian.distances, request.bath.r_corr
        )
        rates = self.redfield_service.compute_rates(zeta, basis, request.bath)

        initial = request.initial_state
        if initial.kind == INITIAL_EXCITON:
            source = initial.index
        else:
            source = self.analysis_service.default_source(
                basis, initial.index if initial.kind == INITIAL_SITE else None
            )
        dominant = self.analysis_service.dominant_target(rates, basis, source)

        if dominant.transfers:
            app_logger.info(
                "Dominant transfer in '%s': exciton %d -> %d (site %d), k=%.4e ps^-1",
                request.name,
                source + 1,
                dominant.target_state + 1,
                dominant.target_site + 1,
                dominant.rate,
            )
        else:
            app_logger.info(
                "No population transfer out of exciton %d in '%s'",
                source + 1,
                request.name,
            )

        return RatesResult(
            scenario=request,
            basis=basis,
            zeta=zeta,
            rates=rates,
            rows=self.analysis_service.rate_table(rates),
            dominant=dominant,
        )
