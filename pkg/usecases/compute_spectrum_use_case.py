import numpy as np

from core.domain.command_model import SpectrumRequest, SpectrumResult
from core.interfaces.bath_domain_service_interface import BathDomainServiceInterface
from core.interfaces.system_domain_service_interface import (
    SystemDomainServiceInterface,
)
from core.interfaces.use_case_interfaces import UseCaseInterface


class ComputeSpectrumUseCase(UseCaseInterface[SpectrumRequest, SpectrumResult]):
    def __init__(
        self,
        bath_service: BathDomainServiceInterface,
        system_service: SystemDomainServiceInterface,
    ) -> None:
        self.bath_service = bath_service
        self.system_service = system_service

    def execute(self, request: SpectrumRequest) -> SpectrumResult:
        omega = request.grid.points()
        markers = []
        if request.network is not None:
            hamiltonian = self.system_service.build_hamiltonian(request.network)
            basis = self.system_service.diagonalize(hamiltonian)
            frequencies = basis.transition_frequencies
            for a in range(basis.size):
                for b in range(basis.size):
                    if a != b:
                        markers.append((a, b, float(frequencies[a, b])))

        return SpectrumResult(
            omega=omega,
            spectral_density=np.asarray(
                self.bath_service.spectral_density(omega, request.bath)
            ),
            correlation=np.asarray(
                self.bath_service.correlation_c(omega, request.bath)
            ),
            markers=markers,
        )
