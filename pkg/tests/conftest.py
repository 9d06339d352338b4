from pathlib import Path
from types import SimpleNamespace

import numpy as np
import pytest
from scipy import integrate

from adapters.controllers.scenario_parser import ScenarioParser
from config import TestingConfig
from core.domain.bath_model import BATH_PRESETS
from core.domain.system_model import DipolePerpendicular, SiteNetwork
from core.services.analysis_domain_service import AnalysisDomainService
from core.services.bath_domain_service import BathDomainService
from core.services.propagation_domain_service import PropagationDomainService
from core.services.redfield_domain_service import RedfieldDomainService
from core.services.system_domain_service import SystemDomainService

SCENARIO_DIR = Path(__file__).resolve().parent.parent / "scenarios"


def random_network(rng: np.random.Generator, size: int) -> SiteNetwork:
    """Sites on a jittered line, 5-10 nm between neighbours, energies 0-2 meV."""
    gaps = rng.uniform(5.0, 10.0, size=size - 1)
    x = np.concatenate([[0.0], np.cumsum(gaps)])
    positions = np.column_stack([x, rng.uniform(-0.5, 0.5, size), np.zeros(size)])
    energies = rng.uniform(0.0, 2.0, size=size)
    return SiteNetwork.from_arrays(positions, energies, DipolePerpendicular())


def subtracted_hilbert(func, omega0: float, half_width: float) -> float:
    """P int f(w) / (omega0 - w) dw on [-W, W] by singularity subtraction."""
    f0 = func(omega0)

    def smooth(w):
        return 0.0 if w == omega0 else (func(w) - f0) / (omega0 - w)

    regular, _ = integrate.quad(
        smooth,
        -half_width,
        half_width,
        points=sorted({0.0, float(omega0)}),
        limit=500,
        epsabs=1e-12,
        epsrel=1e-10,
    )
    return regular + f0 * np.log((half_width + omega0) / (half_width - omega0))


@pytest.fixture
def config():
    return TestingConfig


@pytest.fixture
def gaas_bath():
    return BATH_PRESETS["GaAs-10K"]


@pytest.fixture
def system_service():
    return SystemDomainService()


@pytest.fixture
def bath_service(config):
    return BathDomainService(pv_tolerance=config.PV_TOLERANCE, pv_limit=config.PV_LIMIT)


@pytest.fixture
def redfield_service(bath_service, config):
    return RedfieldDomainService(
        bath_service,
        max_sites=config.MAX_SITES,
        grouping_tol=config.SECULAR_GROUPING_TOL,
    )


@pytest.fixture
def propagation_service(system_service):
    return PropagationDomainService(system_service)


@pytest.fixture
def unchecked_propagation_service(system_service):
    """Propagation without the positivity abort, for method comparisons."""
    return PropagationDomainService(system_service, positivity_fail=-1.0)


@pytest.fixture
def analysis_service(system_service, redfield_service):
    return AnalysisDomainService(system_service, redfield_service, workers=2)


@pytest.fixture
def scenario_parser(system_service, bath_service):
    return ScenarioParser(system_service, bath_service)


@pytest.fixture
def load_scenario(scenario_parser):
    def load(name: str):
        return scenario_parser.parse_file(SCENARIO_DIR / name)

    return load


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def build_model(system_service, redfield_service, propagation_service):
    """Hamiltonian, basis, zeta, Redfield tensor and Liouvillian of a network."""

    def build(network, bath, secular=False, lamb_shift=True):
        hamiltonian = system_service.build_hamiltonian(network)
        basis = system_service.diagonalize(hamiltonian)
        zeta = redfield_service.compute_zeta(basis, hamiltonian.distances, bath.r_corr)
        tensor = redfield_service.assemble_tensor(
            basis, zeta, bath, secular=secular, lamb_shift=lamb_shift
        )
        liouvillian = propagation_service.build_liouvillian(basis, tensor)
        return SimpleNamespace(
            hamiltonian=hamiltonian,
            basis=basis,
            zeta=zeta,
            tensor=tensor,
            liouvillian=liouvillian,
        )

    return build
