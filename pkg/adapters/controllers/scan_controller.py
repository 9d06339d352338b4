from argparse import Namespace
from typing import Any, Dict, List, Tuple

from adapters.controllers.command_controller import CommandController
from adapters.controllers.scenario_parser import ScenarioParser
from adapters.writers.result_writer import ResultWriter
from app.api_response import ApiResponse
from core.domain.analysis_model import ScanResult
from core.domain.command_model import ScanRequest
from core.domain.exceptions import InvalidArgumentError
from usecases.scale_scan_use_case import ScaleScanUseCase

SCAN_HEADER = [
    "factor",
    "dominant_from",
    "dominant_to_state",
    "target_site",
    "k_dominant",
    "directedness",
]


def parse_factors(text: str) -> Tuple[float, ...]:
    try:
        factors = tuple(float(part) for part in text.split(",") if part.strip())
    except ValueError as error:
        raise InvalidArgumentError(f"Invalid factor list '{text}'") from error
    if not factors:
        raise InvalidArgumentError("At least one scale factor is required")
    return factors


def scan_rows(results: List[ScanResult]) -> List[List[Any]]:
    rows = []
    for result in results:
        to_state = None if result.target_state is None else result.target_state + 1
        site = None if result.target_site is None else result.target_site + 1
        rows.append(
            [
                result.factor,
                result.source_state + 1,
                to_state,
                site,
                result.dominant_rate,
                result.directedness,
            ]
        )
    return rows


class ScanController(CommandController):
    def __init__(
        self,
        use_case: ScaleScanUseCase,
        parser: ScenarioParser,
        writer: ResultWriter,
    ) -> None:
        super().__init__(parser, writer)
        self.use_case = use_case

    def handle(self, args: Namespace) -> Dict[str, Any]:
        scenario = self.load_scenario(args)
        source = None
        if args.source is not None:
            if args.source < 1:
                raise InvalidArgumentError("--source is a 1-based exciton index")
            source = args.source - 1

        results = self.use_case.execute(
            ScanRequest(
                scenario=scenario,
                factors=parse_factors(args.factors),
                source=source,
                geometry=args.geometry,
            )
        )
        files = self.write_table(args, SCAN_HEADER, scan_rows(results))
        return ApiResponse.success(
            {
                "command": "scan",
                "scenario": scenario.name,
                "files": files,
                "target_sites": [row[3] for row in scan_rows(results)],
            },
            message="Scale scan completed",
        )
