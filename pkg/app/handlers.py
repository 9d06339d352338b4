import atexit
import sys
import time
from typing import Callable, Dict, Tuple, Type

from adapters.loggers.logger_adapter import app_logger
from app.api_response import ApiResponse
from core.domain.exceptions import (
    DivergenceError,
    EETException,
    InvalidArgumentError,
    NumericalError,
    ScenarioError,
    ScenarioPhysicsError,
)

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_SCENARIO = 2
EXIT_PHYSICS = 3
EXIT_NUMERICAL = 4

# first match wins, so subclasses precede their bases
ERROR_EXIT_CODES: Tuple[Tuple[Type[BaseException], int], ...] = (
    (ScenarioPhysicsError, EXIT_PHYSICS),
    (ScenarioError, EXIT_SCENARIO),
    (InvalidArgumentError, EXIT_PHYSICS),
    (DivergenceError, EXIT_PHYSICS),
    (NumericalError, EXIT_NUMERICAL),
)


def exit_code_for(error: BaseException) -> int:
    for error_type, code in ERROR_EXIT_CODES:
        if isinstance(error, error_type):
            return code
    return EXIT_UNEXPECTED


def handle_error(error: BaseException, stream=None) -> int:
    code = exit_code_for(error)
    if isinstance(error, EETException):
        app_logger.error("%s: %s", error.error_code, error.message)
    else:
        app_logger.error("Unexpected error: %s", str(error), exc_info=True)
    envelope = ApiResponse.dumps(ApiResponse.from_exception(error))
    print(envelope, file=stream or sys.stderr)
    return code


def timed_command(name: str, handler: Callable[..., Dict]) -> Callable[..., Dict]:
    def run(args):
        started = time.perf_counter()
        app_logger.debug("Command started: %s", name)
        response = handler(args)
        app_logger.info(
            "Command completed: %s - Time: %.4fs", name, time.perf_counter() - started
        )
        return response

    return run


def register_shutdown_handlers() -> None:
    def on_exit():
        app_logger.debug("EET simulator is shutting down")

    atexit.register(on_exit)
