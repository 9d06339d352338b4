import json
from pathlib import Path
from typing import Any, Dict, List, Union

from marshmallow import (
    RAISE,
    Schema,
    ValidationError,
    fields,
    validate,
    validates_schema,
)

from adapters.loggers.logger_adapter import app_logger
from config import Config
from core.domain.bath_model import BATH_PRESETS, BathModel, MaterialParams
from core.domain.dynamics_model import BASES, METHODS, SITE_BASIS
from core.domain.exceptions import (
    EETException,
    ScenarioError,
    ScenarioPhysicsError,
    ScenarioSchemaError,
    ScenarioSyntaxError,
)
from core.domain.scenario_model import (
    INITIAL_EXCITON,
    INITIAL_MATRIX,
    INITIAL_SITE,
    InitialState,
    Scenario,
    SimulationOptions,
)
from core.domain.system_model import (
    DipolePerpendicular,
    ExplicitCouplings,
    Site,
    SiteNetwork,
)
from core.interfaces.bath_domain_service_interface import BathDomainServiceInterface
from core.interfaces.system_domain_service_interface import (
    SystemDomainServiceInterface,
)

POSITIVE = validate.Range(min=0, min_inclusive=False)
NON_NEGATIVE = validate.Range(min=0)

DIPOLE_RULE = "dipole"
EXPLICIT_RULE = "explicit"


class ComplexNumber(fields.Field):
    """A JSON number or a ``[re, im]`` pair."""

    def _deserialize(self, value, attr, data, **kwargs) -> complex:
        if isinstance(value, bool):
            raise ValidationError("Expected a number or a [re, im] pair.")
        if isinstance(value, (int, float)):
            return complex(value)
        if (
            isinstance(value, list)
            and len(value) == 2
            and not any(isinstance(v, bool) for v in value)
            and all(isinstance(v, (int, float)) for v in value)
        ):
            return complex(value[0], value[1])
        raise ValidationError("Expected a number or a [re, im] pair.")


class SiteSchema(Schema):
    class Meta:
        unknown = RAISE

    position = fields.List(
        fields.Float(), required=True, validate=validate.Length(equal=3)
    )
    energy = fields.Float(required=True)


class CouplingSchema(Schema):
    class Meta:
        unknown = RAISE

    rule = fields.String(validate=validate.OneOf([DIPOLE_RULE, EXPLICIT_RULE]))
    strength = fields.Float()
    matrix = fields.List(fields.List(fields.Float()))

    @validates_schema
    def check_rule(self, data: Dict[str, Any], **kwargs) -> None:
        rule = data.get("rule", DIPOLE_RULE)
        if rule == EXPLICIT_RULE:
            if "matrix" not in data:
                raise ValidationError("Explicit couplings need a matrix.", "matrix")
            if "strength" in data:
                raise ValidationError(
                    "Strength only applies to the dipole rule.", "strength"
                )
        elif "matrix" in data:
            raise ValidationError(
                "A matrix needs the explicit coupling rule.", "matrix"
            )


class MaterialSchema(Schema):
    class Meta:
        unknown = RAISE

    d_e = fields.Float(required=True)
    d_h = fields.Float(required=True)
    rho = fields.Float(required=True, validate=POSITIVE)
    u = fields.Float(required=True, validate=POSITIVE)
    l = fields.Float(required=True, validate=POSITIVE)  # noqa: E741


class BathSchema(Schema):
    class Meta:
        unknown = RAISE

    preset = fields.String(validate=validate.OneOf(sorted(BATH_PRESETS)))
    eta = fields.Float(validate=NON_NEGATIVE)
    omega_c = fields.Float(validate=POSITIVE)
    r_corr = fields.Float(validate=POSITIVE)
    temperature = fields.Float(validate=POSITIVE)
    material = fields.Nested(MaterialSchema)

    @validates_schema
    def check_complete(self, data: Dict[str, Any], **kwargs) -> None:
        if "material" in data and ("eta" in data or "omega_c" in data):
            raise ValidationError(
                "Give either material constants or eta/omega_c, not both.", "material"
            )
        if "preset" in data:
            return
        required = ["r_corr", "temperature"]
        if "material" not in data:
            required = ["eta", "omega_c"] + required
        missing = {
            name: ["Missing data for required field."]
            for name in required
            if name not in data
        }
        if missing:
            raise ValidationError(missing)


class BathField(fields.Field):
    """A preset name or a bath object."""

    def _deserialize(self, value, attr, data, **kwargs) -> Dict[str, Any]:
        if isinstance(value, str):
            if value not in BATH_PRESETS:
                raise ValidationError(
                    f"Unknown bath preset '{value}'; known presets: "
                    f"{', '.join(sorted(BATH_PRESETS))}."
                )
            return {"preset": value}
        if isinstance(value, dict):
            return BathSchema().load(value)
        raise ValidationError("Expected a preset name or a bath object.")


class OptionsSchema(Schema):
    class Meta:
        unknown = RAISE

    secular = fields.Boolean()
    lamb_shift = fields.Boolean()
    method = fields.String(validate=validate.OneOf(METHODS))
    dt = fields.Float(allow_none=True, validate=POSITIVE)
    t_final = fields.Float(validate=POSITIVE)
    stride = fields.Integer(
        strict=True, allow_none=True, validate=validate.Range(min=1)
    )
    grouping_tol = fields.Float(validate=NON_NEGATIVE)


class InitialSchema(Schema):
    """Initial condition with 1-based ``site`` or ``exciton`` indices."""

    class Meta:
        unknown = RAISE

    site = fields.Integer(strict=True, validate=validate.Range(min=1))
    exciton = fields.Integer(strict=True, validate=validate.Range(min=1))
    matrix = fields.List(fields.List(ComplexNumber()))
    basis = fields.String(validate=validate.OneOf(BASES))

    @validates_schema
    def check_kind(self, data: Dict[str, Any], **kwargs) -> None:
        kinds = (INITIAL_SITE, INITIAL_EXCITON, INITIAL_MATRIX)
        given = [kind for kind in kinds if kind in data]
        if len(given) != 1:
            raise ValidationError("Give exactly one of site, exciton or matrix.")
        if "basis" in data and INITIAL_MATRIX not in data:
            raise ValidationError("Basis only applies to a matrix.", "basis")


class ScenarioSchema(Schema):
    class Meta:
        unknown = RAISE

    name = fields.String(validate=validate.Length(min=1))
    description = fields.String()
    sites = fields.List(
        fields.Nested(SiteSchema), required=True, validate=validate.Length(min=1)
    )
    coupling = fields.Nested(CouplingSchema)
    bath = BathField(required=True)
    options = fields.Nested(OptionsSchema)
    initial = fields.Nested(InitialSchema)


def flatten_errors(
    messages: Union[Dict, List, str], prefix: str = ""
) -> Dict[str, List[str]]:
    """Turn marshmallow's nested messages into ``{"a.b.0.c": [...]}``."""
    if isinstance(messages, dict):
        flat: Dict[str, List[str]] = {}
        for key, value in messages.items():
            if key == "_schema":
                path = prefix or "<root>"
            else:
                path = f"{prefix}.{key}" if prefix else str(key)
            for sub_path, sub_messages in flatten_errors(value, path).items():
                flat.setdefault(sub_path, []).extend(sub_messages)
        return flat
    if isinstance(messages, list) and all(isinstance(m, str) for m in messages):
        return {prefix or "<root>": list(messages)}
    if isinstance(messages, list):
        flat = {}
        for value in messages:
            for sub_path, sub_messages in flatten_errors(value, prefix).items():
                flat.setdefault(sub_path, []).extend(sub_messages)
        return flat
    return {prefix or "<root>": [str(messages)]}


class ScenarioParser:
    def __init__(
        self,
        system_service: SystemDomainServiceInterface,
        bath_service: BathDomainServiceInterface,
        max_sites: int = None,
    ) -> None:
        self.system_service = system_service
        self.bath_service = bath_service
        self.max_sites = max_sites or Config.MAX_SITES

    def parse_file(self, path: Union[str, Path]) -> Scenario:
        path = Path(path)
        try:
            raw = path.read_bytes()
        except OSError as error:
            raise ScenarioError(f"Cannot read scenario {path}: {error}") from error
        scenario = self.parse(raw, default_name=path.stem)
        app_logger.debug("Loaded scenario '%s' from %s", scenario.name, path)
        return scenario

    def parse(
        self, text: Union[str, bytes], default_name: str = "scenario"
    ) -> Scenario:
        if isinstance(text, bytes):
            try:
                text = text.decode("utf-8")
            except UnicodeDecodeError as error:
                raise ScenarioSyntaxError(f"Scenario is not UTF-8: {error}") from error
        try:
            document = json.loads(text)
        except json.JSONDecodeError as error:
            raise ScenarioSyntaxError(
                f"Invalid JSON at line {error.lineno} column {error.colno}: {error.msg}"
            ) from error
        if not isinstance(document, dict):
            raise ScenarioSchemaError(
                "Scenario must be a JSON object",
                errors={"<root>": ["Expected an object."]},
            )

        try:
            data = ScenarioSchema().load(document)
        except ValidationError as error:
            errors = flatten_errors(error.messages)
            summary = "; ".join(
                f"{path}: {' '.join(messages)}"
                for path, messages in sorted(errors.items())
            )
            raise ScenarioSchemaError(
                f"Scenario failed validation: {summary}", errors=errors
            ) from error

        try:
            scenario = self._build(data, default_name)
            self.system_service.build_hamiltonian(scenario.network)
        except (ValueError, EETException) as error:
            message = getattr(error, "message", str(error))
            raise ScenarioPhysicsError(
                f"Scenario is not physical: {message}"
            ) from error
        return scenario

    def _build(self, data: Dict[str, Any], default_name: str) -> Scenario:
        if len(data["sites"]) > self.max_sites:
            raise ValueError(
                f"{len(data['sites'])} sites exceed the maximum of {self.max_sites}"
            )
        sites = tuple(
            Site(position=tuple(site["position"]), energy=site["energy"])
            for site in data["sites"]
        )

        coupling = data.get("coupling", {})
        if coupling.get("rule", DIPOLE_RULE) == EXPLICIT_RULE:
            rule = ExplicitCouplings(matrix=coupling["matrix"])
        else:
            rule = DipolePerpendicular(strength=coupling.get("strength", 100.0))

        bath, preset = self._build_bath(data["bath"])

        options = SimulationOptions(**data.get("options", {}))

        initial = data.get("initial", {INITIAL_SITE: 1})
        if INITIAL_MATRIX in initial:
            initial_state = InitialState(
                kind=INITIAL_MATRIX,
                index=None,
                matrix=initial[INITIAL_MATRIX],
                basis=initial.get("basis", SITE_BASIS),
            )
        else:
            kind = INITIAL_SITE if INITIAL_SITE in initial else INITIAL_EXCITON
            initial_state = InitialState(kind=kind, index=initial[kind] - 1)

        return Scenario(
            network=SiteNetwork(sites=sites, coupling_rule=rule),
            bath=bath,
            options=options,
            initial_state=initial_state,
            name=data.get("name", default_name),
            bath_preset=preset,
        )

    def _build_bath(self, data: Dict[str, Any]):
        preset = data.get("preset")
        values = {}
        if preset is not None:
            base = BATH_PRESETS[preset]
            values = {
                "eta": base.eta,
                "omega_c": base.omega_c,
                "r_corr": base.r_corr,
                "temperature": base.temperature,
            }
        if "material" in data:
            eta, omega_c = self.bath_service.derive_bath_params(
                MaterialParams(**data["material"])
            )
            values.update(eta=eta, omega_c=omega_c)
        for name in ("eta", "omega_c", "r_corr", "temperature"):
            if name in data:
                values[name] = data[name]

        # a preset with overrides is no longer that preset
        overridden = len(data) > 1
        return BathModel(**values), (None if overridden else preset)
