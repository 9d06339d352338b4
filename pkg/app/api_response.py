import json
from typing import Any, Dict, Optional

from adapters.writers.result_writer import json_safe
from core.domain.exceptions import EETException, ScenarioSchemaError


class ApiResponse:
    """Envelope printed by every command: one JSON object per line."""

    @staticmethod
    def success(data: Any = None, message: str = "Success") -> Dict[str, Any]:
        response = {
            "success": True,
            "message": message,
        }
        if data is not None:
            response["data"] = data
        return response

    @staticmethod
    def error(
        message: str = "An error occurred",
        details: Optional[Any] = None,
        error_code: Optional[str] = None,
    ) -> Dict[str, Any]:
        response = {
            "success": False,
            "message": message,
        }
        if details is not None:
            response["details"] = details
        if error_code is not None:
            response["error_code"] = error_code
        return response

    @staticmethod
    def from_exception(error: BaseException) -> Dict[str, Any]:
        if isinstance(error, EETException):
            details = error.errors if isinstance(error, ScenarioSchemaError) else None
            return ApiResponse.error(
                error.message, details=details, error_code=error.error_code
            )
        return ApiResponse.error(
            str(error) or type(error).__name__, error_code="unexpected_error"
        )

    @staticmethod
    def dumps(response: Dict[str, Any]) -> str:
        return json.dumps(json_safe(response), separators=(",", ":"))
