import numpy as np
import pytest
from numpy.testing import assert_allclose

from core.domain.bath_model import BathModel
from core.domain.exceptions import InvalidArgumentError
from core.domain.system_model import ExplicitCouplings, SiteNetwork
from core.domain.units import thermal_frequency
from core.services.redfield_domain_service import RedfieldDomainService
from tests.conftest import random_network, subtracted_hilbert


def dimer(distance: float) -> SiteNetwork:
    return SiteNetwork.from_arrays([[0, 0, 0], [distance, 0, 0]], [0.0, 0.0])


@pytest.mark.parametrize("distance", [1.0, 2.5, 5.0, 10.0])
def test_symmetric_dimer_zeta(build_model, gaas_bath, distance):
    model = build_model(dimer(distance), gaas_bath, lamb_shift=False)
    expected = 0.5 * (1.0 - np.exp(-distance / gaas_bath.r_corr))
    assert model.zeta.transfer_part[0, 1] == pytest.approx(expected, rel=1e-12)
    assert model.zeta.transfer_part[1, 0] == pytest.approx(expected, rel=1e-12)


def test_zeta_symmetries(system_service, redfield_service, rng):
    hamiltonian = system_service.build_hamiltonian(random_network(rng, 4))
    basis = system_service.diagonalize(hamiltonian)
    z = redfield_service.compute_zeta(basis, hamiltonian.distances, 3.0).values
    assert_allclose(z, z.transpose(1, 0, 2, 3), atol=1e-14)
    assert_allclose(z, z.transpose(0, 1, 3, 2), atol=1e-14)
    assert_allclose(z, z.transpose(2, 3, 0, 1), atol=1e-14)


def test_fully_correlated_bath_has_no_transfer(system_service, redfield_service, rng):
    hamiltonian = system_service.build_hamiltonian(random_network(rng, 3))
    basis = system_service.diagonalize(hamiltonian)
    zeta = redfield_service.compute_zeta(basis, hamiltonian.distances, 1e12)
    eye = np.eye(3)
    assert_allclose(zeta.values, np.einsum("ab,cd->abcd", eye, eye), atol=1e-9)


def test_zeta_rejects_mismatched_distances(system_service, redfield_service):
    basis = system_service.diagonalize(system_service.build_hamiltonian(dimer(5.0)))
    with pytest.raises(InvalidArgumentError):
        redfield_service.compute_zeta(basis, np.zeros((3, 3)), 3.0)


def test_tensor_preserves_trace_and_hermiticity(build_model, gaas_bath, rng):
    for size in (2, 3, 4):
        tensor = build_model(random_network(rng, size), gaas_bath).tensor
        scale = np.max(np.abs(tensor.values))
        assert tensor.trace_defect() <= 1e-12 * scale
        assert tensor.hermiticity_defect() <= 1e-14 * max(scale, 1.0)


def test_population_block_matches_the_rates(
    build_model, redfield_service, gaas_bath, rng
):
    model = build_model(random_network(rng, 4), gaas_bath)
    rates = redfield_service.compute_rates(model.zeta, model.basis, gaas_bath)
    population_block = np.einsum("bbaa->ab", model.tensor.values)
    off_diagonal = ~np.eye(4, dtype=bool)
    assert_allclose(
        population_block.real[off_diagonal], rates.k[off_diagonal], rtol=1e-12, atol=0
    )
    assert_allclose(population_block.imag, 0.0, atol=1e-14)
    assert_allclose(np.diag(population_block).real, -rates.k.sum(axis=1), atol=1e-14)


def test_tensor_without_lamb_shift_is_real(build_model, gaas_bath, rng):
    network = random_network(rng, 3)
    plain = build_model(network, gaas_bath, lamb_shift=False).tensor
    shifted = build_model(network, gaas_bath).tensor
    assert not plain.lamb_shift
    assert np.all(plain.values.imag == 0)
    assert_allclose(plain.values.real, shifted.values.real, atol=1e-15)


def test_gamma_components(build_model, redfield_service, bath_service, gaas_bath):
    model = build_model(dimer(5.0), gaas_bath)
    omega = model.basis.transition_frequencies[1, 0]
    gamma = redfield_service.compute_gamma(model.zeta, (0, 1, 1, 0), omega, gaas_bath)
    expected = 0.5 * model.zeta.values[0, 1, 1, 0] * bath_service.correlation_c(
        omega, gaas_bath
    )
    assert gamma.real == pytest.approx(expected, rel=1e-14)
    half_width = 10 * gaas_bath.omega_c + abs(omega)
    shift = subtracted_hilbert(
        lambda w: bath_service.correlation_c(w, gaas_bath), omega, half_width
    )
    expected_imag = model.zeta.values[0, 1, 1, 0] * shift / (2.0 * np.pi)
    assert gamma.imag == pytest.approx(expected_imag, rel=1e-6)


def test_secular_filter(build_model, gaas_bath, rng):
    network = random_network(rng, 3)
    full = build_model(network, gaas_bath).tensor
    secular = build_model(network, gaas_bath, secular=True).tensor

    omega = full.frequencies
    gap = np.abs(omega[:, :, None, None] - omega[None, None, :, :])
    assert secular.secular
    assert np.all(secular.values[gap > 1e-9] == 0)
    assert_allclose(secular.values[gap <= 1e-9], full.values[gap <= 1e-9])
    assert_allclose(
        np.einsum("bbaa->ab", secular.values), np.einsum("bbaa->ab", full.values)
    )
    assert secular.trace_defect() <= 1e-12 * np.max(np.abs(full.values))


def test_site_limit(bath_service, build_model, gaas_bath, rng):
    model = build_model(random_network(rng, 3), gaas_bath, lamb_shift=False)
    small = RedfieldDomainService(bath_service, max_sites=2)
    with pytest.raises(InvalidArgumentError):
        small.assemble_tensor(model.basis, model.zeta, gaas_bath)


def test_rates_factor_into_zeta_and_bath(build_model, redfield_service, gaas_bath):
    model = build_model(dimer(5.0), gaas_bath, lamb_shift=False)
    rates = redfield_service.compute_rates(model.zeta, model.basis, gaas_bath)
    assert np.all(np.diag(rates.k) == 0)
    assert_allclose(rates.k, rates.zeta_part * rates.c_part, rtol=1e-15)
    assert rates.zeta_part[1, 0] == pytest.approx(0.40556, abs=1e-5)
    assert rates.c_part[1, 0] == pytest.approx(0.19164, abs=1e-4)
    assert rates.k[1, 0] == pytest.approx(0.07772, abs=1e-4)

    omega_t = thermal_frequency(gaas_bath.temperature)
    omega = model.basis.transition_frequencies[1, 0]
    assert rates.k[0, 1] / rates.k[1, 0] == pytest.approx(
        np.exp(-omega / omega_t), rel=1e-12
    )


def test_decoupled_sites_do_not_exchange_population(build_model, redfield_service):
    couplings = ExplicitCouplings(matrix=np.zeros((2, 2)))
    network = SiteNetwork.from_arrays([[0, 0, 0], [5, 0, 0]], [0.0, 1.0], couplings)
    bath = BathModel()
    model = build_model(network, bath, lamb_shift=False)
    rates = redfield_service.compute_rates(model.zeta, model.basis, bath)
    assert np.all(rates.k == 0)


def test_secular_filter_keeps_degenerate_blocks(build_model, propagation_service):
    side = 6.0
    positions = [[0, 0, 0], [side, 0, 0], [side / 2, side * np.sqrt(3) / 2, 0]]
    network = SiteNetwork.from_arrays(positions, [0.0, 0.0, 0.0])
    bath = BathModel()
    full = build_model(network, bath).tensor
    model = build_model(network, bath, secular=True)
    secular = model.tensor

    energies = model.basis.energies
    assert energies[0] == pytest.approx(energies[1], abs=1e-12)
    assert_allclose(energies, [-0.703, -0.703, 1.407], atol=1e-3)

    omega = full.frequencies
    gap = np.abs(omega[:, :, None, None] - omega[None, None, :, :])
    assert np.count_nonzero(gap <= 1e-9) == 33

    # the 0-1 coherence is stationary and couples to every zero-frequency pair
    zero = np.abs(omega) <= 1e-9
    assert np.count_nonzero(zero) == 5
    assert_allclose(secular.values[0, 1][zero], full.values[0, 1][zero])
    assert np.any(secular.values[0, 1][zero] != 0)
    assert np.all(secular.values[0, 1][~zero] == 0)

    steady = propagation_service.steady_state(model.liouvillian)
    boltzmann = np.exp(
        -(energies - energies.min()) / thermal_frequency(bath.temperature)
    )
    boltzmann /= boltzmann.sum()
    assert_allclose(steady.populations, boltzmann, atol=1e-6)
    assert_allclose(steady.populations, [0.4546, 0.4546, 0.0907], atol=1e-3)
