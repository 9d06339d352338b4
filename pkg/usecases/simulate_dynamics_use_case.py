from adapters.loggers.logger_adapter import app_logger
from core.domain.command_model import SimulationResult
from core.domain.scenario_model import INITIAL_SITE, Scenario
from core.interfaces.propagation_domain_service_interface import (
    PropagationDomainServiceInterface,
)
from core.interfaces.redfield_domain_service_interface import (
    RedfieldDomainServiceInterface,
)
from core.interfaces.system_domain_service_interface import (
    SystemDomainServiceInterface,
)
from core.interfaces.use_case_interfaces import UseCaseInterface


class SimulateDynamicsUseCase(UseCaseInterface[Scenario, SimulationResult]):
    def __init__(
        self,
        system_service: SystemDomainServiceInterface,
        redfield_service: RedfieldDomainServiceInterface,
        propagation_service: PropagationDomainServiceInterface,
    ) -> None:
        self.system_service = system_service
        self.redfield_service = redfield_service
        self.propagation_service = propagation_service

    def execute(self, request: Scenario) -> SimulationResult:
        options = request.options
        hamiltonian = self.system_service.build_hamiltonian(request.network)
        basis = self.system_service.diagonalize(hamiltonian)
        zeta = self.redfield_service.compute_zeta(
            basis, hamiltonian.distances, request.bath.r_corr
        )
        tensor = self.redfield_service.assemble_tensor(
            basis,
            zeta,
            request.bath,
            secular=options.secular,
            lamb_shift=options.lamb_shift,
            grouping_tol=options.grouping_tol,
        )
        liouvillian = self.propagation_service.build_liouvillian(basis, tensor)
        rho0 = self.propagation_service.initial_state(request.initial_state, basis)

        trajectory = self.propagation_service.evolve(
            liouvillian,
            rho0,
            options.t_final,
            dt=options.dt,
            stride=options.stride,
            method=options.method,
        )

        thermal = self.propagation_service.thermal_state(
            basis, request.bath.temperature
        )
        steady = self.propagation_service.steady_state(liouvillian)

        coherent_maximum = None
        if request.initial_state.kind == INITIAL_SITE:
            coherent_maximum = self.system_service.coherent_site_populations(
                basis, request.initial_state.index, trajectory.times
            ).max(axis=0)

        result = SimulationResult(
            scenario=request,
            basis=basis,
            tensor=tensor,
            trajectory=trajectory,
            thermal_state=thermal,
            thermal_site_populations=self.propagation_service.site_populations(
                thermal, basis.vectors
            ),
            steady_state=steady,
            steady_site_populations=self.propagation_service.site_populations(
                steady, basis.vectors
            ),
            coherent_maximum=coherent_maximum,
        )
        app_logger.info(
            "Simulated '%s' to %.6g ps with %s: %d output rows, "
            "steady state %.3e from thermal",
            request.name,
            trajectory.times[-1],
            trajectory.method,
            len(trajectory),
            result.steady_state_gap,
        )
        return result
