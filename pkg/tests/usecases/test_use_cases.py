from dataclasses import replace

import numpy as np
import pytest
from numpy.testing import assert_allclose

from core.domain.command_model import (
    ScanRequest,
    SpectrumGrid,
    SpectrumRequest,
)
from core.domain.scenario_model import INITIAL_EXCITON, InitialState
from usecases.compute_rates_use_case import ComputeRatesUseCase
from usecases.compute_spectrum_use_case import ComputeSpectrumUseCase
from usecases.scale_scan_use_case import ScaleScanUseCase
from usecases.simulate_dynamics_use_case import SimulateDynamicsUseCase


@pytest.fixture
def simulate(system_service, redfield_service, propagation_service):
    return SimulateDynamicsUseCase(
        system_service, redfield_service, propagation_service
    )


@pytest.fixture
def compute_rates(system_service, redfield_service, analysis_service):
    return ComputeRatesUseCase(system_service, redfield_service, analysis_service)


def test_simulate_dimer(simulate, load_scenario):
    scenario = load_scenario("dimer.json")
    scenario = replace(scenario, options=replace(scenario.options, t_final=200.0))
    result = simulate.execute(scenario)

    trajectory = result.trajectory
    assert trajectory.times[0] == 0.0
    assert trajectory.times[-1] == pytest.approx(200.0)
    assert_allclose(trajectory.site_populations[0], [1.0, 0.0], atol=1e-14)
    assert_allclose(trajectory.traces, 1.0, atol=1e-9)
    assert_allclose(trajectory.site_populations[-1], [0.5, 0.5], atol=0.02)
    assert_allclose(result.thermal_site_populations, [0.5, 0.5], atol=1e-14)
    assert_allclose(
        result.thermal_state.populations, [0.8649145, 0.1350855], atol=1e-4
    )
    assert result.steady_state_gap < 0.05
    assert result.coherent_maximum[1] == pytest.approx(1.0, abs=0.02)


def test_simulate_without_site_start_has_no_coherent_reference(
    simulate, load_scenario
):
    scenario = load_scenario("dimer.json")
    scenario = replace(
        scenario,
        options=replace(scenario.options, t_final=5.0),
        initial_state=InitialState(kind=INITIAL_EXCITON, index=1),
    )
    result = simulate.execute(scenario)
    assert result.coherent_maximum is None
    assert_allclose(result.trajectory.exciton_matrices[0].diagonal(), [0, 1])


def test_compute_rates_for_the_dimer(compute_rates, load_scenario):
    scenario = load_scenario("dimer.json")
    scenario = replace(
        scenario, initial_state=InitialState(kind=INITIAL_EXCITON, index=1)
    )
    result = compute_rates.execute(scenario)
    assert len(result.rows) == 2
    assert result.rates.k[1, 0] == pytest.approx(0.07772, abs=1e-4)
    assert result.dominant.source_state == 1
    assert result.dominant.target_state == 0


def test_compute_rates_uses_the_initial_exciton(compute_rates, load_scenario):
    scenario = load_scenario("chain-a.json")
    scenario = replace(
        scenario, initial_state=InitialState(kind=INITIAL_EXCITON, index=1)
    )
    result = compute_rates.execute(scenario)
    assert result.dominant.source_state == 1
    assert result.dominant.target_state == 2


def test_spectrum_without_network(bath_service, system_service, gaas_bath):
    use_case = ComputeSpectrumUseCase(bath_service, system_service)
    result = use_case.execute(SpectrumRequest(gaas_bath, SpectrumGrid(-5.0, 5.0, 0.01)))
    assert result.omega.size == 1001
    assert result.omega[0] == -5.0
    assert result.omega[-1] == pytest.approx(5.0)
    assert np.all(result.spectral_density[result.omega <= 0] == 0)
    assert abs(result.correlation[np.argmin(np.abs(result.omega))]) < 1e-12
    assert result.markers == []


def test_spectrum_markers(bath_service, system_service, load_scenario):
    scenario = load_scenario("chain-a.json")
    use_case = ComputeSpectrumUseCase(bath_service, system_service)
    result = use_case.execute(
        SpectrumRequest(scenario.bath, SpectrumGrid(-5.0, 5.0, 0.01), scenario.network)
    )
    assert len(result.markers) == 6
    frequencies = {(a, b): omega for a, b, omega in result.markers}
    assert frequencies[(2, 0)] == pytest.approx(-frequencies[(0, 2)])
    assert 1.5 < frequencies[(2, 0)] < 1.6


def test_scale_scan(analysis_service, load_scenario):
    scenario = load_scenario("chain-a.json")
    results = ScaleScanUseCase(analysis_service).execute(
        ScanRequest(scenario, (1.0, 3.5), geometry=True)
    )
    assert [result.target_site for result in results] == [0, 1]
    assert all(result.source_state == 2 for result in results)


def test_scale_scan_with_explicit_source(analysis_service, load_scenario):
    scenario = load_scenario("chain-a.json")
    results = ScaleScanUseCase(analysis_service).execute(
        ScanRequest(scenario, (1.0,), source=1)
    )
    assert results[0].source_state == 1
    assert results[0].target_state == 2


def test_unit_scan_matches_the_rate_table(
    analysis_service, compute_rates, load_scenario
):
    scenario = load_scenario("chain-a.json")
    dominant = compute_rates.execute(scenario).dominant
    (point,) = ScaleScanUseCase(analysis_service).execute(
        ScanRequest(scenario, (1.0,))
    )
    assert point.source_state == dominant.source_state
    assert point.target_state == dominant.target_state
    assert point.dominant_rate == dominant.rate
