from typing import Any, Dict, Optional


class EETException(Exception):
    error_code = "eet_error"

    def __init__(self, message: str = "EET operation failed") -> None:
        self.message = message
        super().__init__(self.message)


class InvalidArgumentError(EETException):
    error_code = "invalid_argument"

    def __init__(self, message: str = "Invalid argument") -> None:
        super().__init__(message)


class InvalidGeometryError(InvalidArgumentError):
    error_code = "invalid_geometry"

    def __init__(self, message: str = "Invalid site geometry") -> None:
        super().__init__(message)


class DivergenceError(EETException):
    error_code = "divergence"

    def __init__(self, message: str = "Expression diverges") -> None:
        super().__init__(message)


class NumericalError(EETException):
    error_code = "numerical_error"

    def __init__(self, message: str = "Numerical procedure failed") -> None:
        super().__init__(message)


class QuadratureError(NumericalError):
    error_code = "quadrature_failure"

    def __init__(
        self,
        message: str = "Quadrature did not converge",
        estimate: float = float("nan"),
        abs_error: float = float("nan"),
    ) -> None:
        self.estimate = estimate
        self.abs_error = abs_error
        super().__init__(message)


class IntegrationInstabilityError(NumericalError):
    error_code = "integration_instability"

    def __init__(
        self, message: str = "Propagation became unstable; use a smaller dt"
    ) -> None:
        super().__init__(message)


class PositivityError(NumericalError):
    error_code = "positivity_violation"

    def __init__(
        self,
        message: str = "Density matrix lost positivity",
        min_eigenvalue: float = float("nan"),
    ) -> None:
        self.min_eigenvalue = min_eigenvalue
        super().__init__(message)


class ScenarioError(EETException):
    error_code = "scenario_error"

    def __init__(self, message: str = "Scenario could not be loaded") -> None:
        super().__init__(message)


class ScenarioSyntaxError(ScenarioError):
    error_code = "syntax_error"

    def __init__(self, message: str = "Scenario is not valid JSON") -> None:
        super().__init__(message)


class ScenarioSchemaError(ScenarioError):
    error_code = "schema_error"

    def __init__(
        self,
        message: str = "Scenario violates the schema",
        errors: Optional[Dict[str, Any]] = None,
    ) -> None:
        self.errors = errors or {}
        super().__init__(message)


class ScenarioPhysicsError(ScenarioError):
    error_code = "physics_error"

    def __init__(self, message: str = "Scenario is physically invalid") -> None:
        super().__init__(message)
