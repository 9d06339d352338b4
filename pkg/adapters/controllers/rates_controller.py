from argparse import Namespace
from typing import Any, Dict, List

from adapters.controllers.command_controller import CommandController
from adapters.controllers.scenario_parser import ScenarioParser
from adapters.writers.result_writer import ResultWriter
from app.api_response import ApiResponse
from core.domain.analysis_model import RateTableRow
from usecases.compute_rates_use_case import ComputeRatesUseCase

RATE_HEADER = ["from", "to", "log10_zeta", "log10_C_s", "log10_k_s", "k_ps"]


def rate_rows(rows: List[RateTableRow]) -> List[List[Any]]:
    return [
        [
            row.from_state + 1,
            row.to_state + 1,
            row.log10_zeta,
            row.log10_c,
            row.log10_k,
            row.k_per_ps,
        ]
        for row in rows
    ]


class RatesController(CommandController):
    def __init__(
        self,
        use_case: ComputeRatesUseCase,
        parser: ScenarioParser,
        writer: ResultWriter,
    ) -> None:
        super().__init__(parser, writer)
        self.use_case = use_case

    def handle(self, args: Namespace) -> Dict[str, Any]:
        scenario = self.load_scenario(args)
        result = self.use_case.execute(scenario)
        files = self.write_table(args, RATE_HEADER, rate_rows(result.rows))

        dominant = result.dominant
        summary = {"from": dominant.source_state + 1, "to": None, "site": None}
        if dominant.transfers:
            summary.update(
                to=dominant.target_state + 1,
                site=dominant.target_site + 1,
                k_ps=dominant.rate,
            )
        return ApiResponse.success(
            {
                "command": "rates",
                "scenario": scenario.name,
                "files": files,
                "dominant": summary,
            },
            message="Rates computed",
        )
