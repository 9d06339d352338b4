from argparse import Namespace
from typing import Any, Dict, List

import numpy as np

from adapters.controllers.command_controller import CommandController
from adapters.controllers.scenario_parser import ScenarioParser
from adapters.writers.result_writer import ResultWriter
from app.api_response import ApiResponse
from config import Config
from core.domain.bath_model import BATH_PRESETS
from core.domain.command_model import SpectrumGrid, SpectrumRequest, SpectrumResult
from core.domain.exceptions import InvalidArgumentError
from core.domain.units import PER_PS_TO_PER_S
from usecases.compute_spectrum_use_case import ComputeSpectrumUseCase

SPECTRUM_HEADER = ["omega_rad_ps", "J_ps_inv", "C_ps_inv", "C_s_inv"]


def parse_grid(text: str) -> SpectrumGrid:
    """``min:max:step`` in rad/ps."""
    parts = text.split(":") if text else []
    if len(parts) != 3:
        raise InvalidArgumentError(f"Grid must read min:max:step, got '{text}'")
    try:
        return SpectrumGrid(*(float(part) for part in parts))
    except ValueError as error:
        raise InvalidArgumentError(f"Invalid grid '{text}': {error}") from error


def marker_labels(result: SpectrumResult) -> List[str]:
    """Transition labels ``a->b`` placed on the grid point nearest to omega_ab."""
    labels = [[] for _ in result.omega]
    if result.omega.size == 0:
        return []
    step = result.omega[1] - result.omega[0] if result.omega.size > 1 else 1.0
    for a, b, omega in result.markers:
        index = int(np.argmin(np.abs(result.omega - omega)))
        if abs(result.omega[index] - omega) <= 0.5 * step:
            labels[index].append(f"{a + 1}->{b + 1}")
    return [";".join(label) for label in labels]


class SpectrumController(CommandController):
    def __init__(
        self,
        use_case: ComputeSpectrumUseCase,
        parser: ScenarioParser,
        writer: ResultWriter,
    ) -> None:
        super().__init__(parser, writer)
        self.use_case = use_case

    def handle(self, args: Namespace) -> Dict[str, Any]:
        grid = (
            parse_grid(args.grid) if args.grid else SpectrumGrid(*Config.SPECTRUM_GRID)
        )
        network = None
        if args.scenario:
            if args.preset:
                raise InvalidArgumentError("Give either --scenario or --preset")
            scenario = self.parser.parse_file(args.scenario)
            bath, network, source = scenario.bath, scenario.network, scenario.name
        else:
            preset = args.preset or "GaAs-10K"
            if preset not in BATH_PRESETS:
                raise InvalidArgumentError(f"Unknown bath preset '{preset}'")
            bath, source = BATH_PRESETS[preset], preset

        result = self.use_case.execute(
            SpectrumRequest(bath=bath, grid=grid, network=network)
        )

        columns = [
            result.omega,
            result.spectral_density,
            result.correlation,
            result.correlation * PER_PS_TO_PER_S,
        ]
        rows = [list(row) for row in zip(*columns)]
        header = list(SPECTRUM_HEADER)
        if network is not None:
            header.append("marker")
            for row, label in zip(rows, marker_labels(result)):
                row.append(label)
        files = self.write_table(args, header, rows)

        peak = int(np.argmax(result.correlation))
        return ApiResponse.success(
            {
                "command": "spectrum",
                "source": source,
                "files": files,
                "c_peak_omega": float(result.omega[peak]),
                "c_peak_ps_inv": float(result.correlation[peak]),
            },
            message="Spectrum computed",
        )
