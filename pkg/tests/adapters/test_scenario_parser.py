import json

import numpy as np
import pytest
from numpy.testing import assert_allclose

from adapters.controllers.scenario_parser import ScenarioParser, flatten_errors
from core.domain.bath_model import BATH_PRESETS
from core.domain.exceptions import (
    ScenarioError,
    ScenarioPhysicsError,
    ScenarioSchemaError,
    ScenarioSyntaxError,
)
from core.domain.scenario_model import INITIAL_EXCITON, INITIAL_MATRIX, INITIAL_SITE
from core.domain.system_model import DipolePerpendicular, ExplicitCouplings

SITES = [
    {"position": [0.0, 0.0, 0.0], "energy": 0.0},
    {"position": [5.0, 0.0, 0.0], "energy": 1.0},
]


def document(**overrides):
    data = {"sites": SITES, "bath": "GaAs-10K"}
    data.update(overrides)
    return json.dumps(data)


def schema_errors(parser, text):
    with pytest.raises(ScenarioSchemaError) as error:
        parser.parse(text)
    return error.value.errors


def test_minimal_scenario_uses_defaults(scenario_parser):
    scenario = scenario_parser.parse(document(), default_name="minimal")
    assert scenario.name == "minimal"
    assert scenario.network.size == 2
    assert scenario.network.coupling_rule == DipolePerpendicular(strength=100.0)
    assert scenario.bath == BATH_PRESETS["GaAs-10K"]
    assert scenario.bath_preset == "GaAs-10K"
    assert scenario.initial_state.kind == INITIAL_SITE
    assert scenario.initial_state.index == 0
    assert not scenario.options.secular
    assert scenario.options.lamb_shift
    assert scenario.options.method == "expm"
    assert scenario.options.t_final == 1000.0


def test_bath_object_overrides_a_preset(scenario_parser):
    scenario = scenario_parser.parse(
        document(bath={"preset": "GaAs-10K", "temperature": 77.0})
    )
    assert scenario.bath.temperature == 77.0
    assert scenario.bath.eta == 0.035
    assert scenario.bath_preset is None


def test_bath_from_material_constants(scenario_parser):
    bath = {
        "material": {"d_e": -14.6, "d_h": -4.8, "rho": 5370, "u": 5110, "l": 5.1252},
        "r_corr": 3.0,
        "temperature": 10.0,
    }
    scenario = scenario_parser.parse(document(bath=bath))
    assert scenario.bath.eta == pytest.approx(0.0316, abs=5e-4)
    assert scenario.bath.omega_c == pytest.approx(1.41, abs=1e-3)


def test_negative_temperature_is_named(scenario_parser):
    bath = {"preset": "GaAs-10K", "temperature": -4.0}
    errors = schema_errors(scenario_parser, document(bath=bath))
    assert list(errors) == ["bath.temperature"]


def test_incomplete_bath(scenario_parser):
    errors = schema_errors(scenario_parser, document(bath={"eta": 0.03}))
    assert {"bath.omega_c", "bath.r_corr", "bath.temperature"} <= set(errors)


def test_unknown_preset(scenario_parser):
    errors = schema_errors(scenario_parser, document(bath="InAs-4K"))
    assert "GaAs-10K" in errors["bath"][0]


def test_unknown_field_is_rejected(scenario_parser):
    errors = schema_errors(scenario_parser, document(solver="magic"))
    assert "solver" in errors


def test_missing_site_energy_has_a_path(scenario_parser):
    sites = [{"position": [0, 0, 0]}, {"position": [5, 0, 0], "energy": 0.0}]
    errors = schema_errors(scenario_parser, document(sites=sites))
    assert "sites.0.energy" in errors


def test_initial_state_needs_exactly_one_kind(scenario_parser):
    errors = schema_errors(scenario_parser, document(initial={"site": 1, "exciton": 2}))
    assert "initial" in errors


def test_non_object_document(scenario_parser):
    errors = schema_errors(scenario_parser, "[1, 2]")
    assert errors == {"<root>": ["Expected an object."]}


@pytest.mark.parametrize("text", ["{", b"\xff\xfe{}", "{'sites': []}"])
def test_syntax_errors(scenario_parser, text):
    with pytest.raises(ScenarioSyntaxError):
        scenario_parser.parse(text)


def test_coincident_sites_are_unphysical(scenario_parser):
    sites = [SITES[0], dict(SITES[0], energy=1.0)]
    with pytest.raises(ScenarioPhysicsError, match="coincide"):
        scenario_parser.parse(document(sites=sites))


def test_too_many_sites(system_service, bath_service):
    parser = ScenarioParser(system_service, bath_service, max_sites=1)
    with pytest.raises(ScenarioPhysicsError, match="maximum"):
        parser.parse(document())


def test_initial_index_beyond_the_network(scenario_parser):
    with pytest.raises(ScenarioPhysicsError):
        scenario_parser.parse(document(initial={"site": 3}))


def test_explicit_couplings(scenario_parser):
    coupling = {"rule": "explicit", "matrix": [[0.0, 0.2], [0.2, 0.0]]}
    scenario = scenario_parser.parse(document(coupling=coupling))
    assert isinstance(scenario.network.coupling_rule, ExplicitCouplings)
    with pytest.raises(ScenarioSchemaError):
        scenario_parser.parse(document(coupling={"rule": "explicit"}))


def test_exciton_and_matrix_initial_states(scenario_parser):
    scenario = scenario_parser.parse(document(initial={"exciton": 2}))
    assert scenario.initial_state.kind == INITIAL_EXCITON
    assert scenario.initial_state.index == 1

    matrix = [[0.5, [0.0, 0.1]], [[0.0, -0.1], 0.5]]
    scenario = scenario_parser.parse(
        document(initial={"matrix": matrix, "basis": "exciton"})
    )
    assert scenario.initial_state.kind == INITIAL_MATRIX
    assert scenario.initial_state.basis == "exciton"
    assert_allclose(
        np.asarray(scenario.initial_state.matrix), [[0.5, 0.1j], [-0.1j, 0.5]]
    )


def test_options(scenario_parser):
    options = {"secular": True, "method": "rk4", "dt": 0.002, "stride": 10}
    scenario = scenario_parser.parse(document(options=options))
    assert scenario.options.secular
    assert scenario.options.method == "rk4"
    assert scenario.options.dt == 0.002
    assert scenario.options.stride == 10
    errors = schema_errors(scenario_parser, document(options={"method": "euler"}))
    assert "options.method" in errors


def test_parse_file(scenario_parser, tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(document(), encoding="utf-8")
    assert scenario_parser.parse_file(path).name == "pair"
    with pytest.raises(ScenarioError):
        scenario_parser.parse_file(tmp_path / "missing.json")


def test_flatten_errors():
    messages = {
        "bath": {"temperature": ["Too low."]},
        "sites": {1: {"energy": ["Missing."]}},
        "_schema": ["Broken."],
    }
    assert flatten_errors(messages) == {
        "bath.temperature": ["Too low."],
        "sites.1.energy": ["Missing."],
        "<root>": ["Broken."],
    }


def test_shipped_scenarios_load(load_scenario):
    for name in ("dimer.json", "chain-a.json", "chain-a-x3.5.json"):
        scenario = load_scenario(name)
        assert scenario.bath_preset == "GaAs-10K"


def test_scaled_chain_is_the_scaled_hamiltonian(load_scenario):
    base = load_scenario("chain-a.json").network
    scaled = load_scenario("chain-a-x3.5.json").network
    assert scaled.coupling_rule == base.coupling_rule
    for original, moved in zip(base.sites, scaled.sites):
        assert moved.energy == pytest.approx(3.5 * original.energy, abs=1e-4)
        assert np.asarray(moved.position) == pytest.approx(
            3.5 ** (-1 / 3) * np.asarray(original.position), abs=1e-4
        )
