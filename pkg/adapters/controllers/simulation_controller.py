from argparse import Namespace
from typing import Any, Dict, List

import numpy as np

from adapters.controllers.command_controller import CommandController
from adapters.controllers.scenario_parser import ScenarioParser
from adapters.writers.result_writer import ResultWriter, companion_path
from app.api_response import ApiResponse
from config import Config
from core.domain.command_model import SimulationResult
from core.domain.units import HBAR_MEV_PS
from usecases.simulate_dynamics_use_case import SimulateDynamicsUseCase


def trajectory_header(size: int) -> List[str]:
    header = ["t_ps"] + [f"pop_site_{n + 1}" for n in range(size)]
    for a in range(size):
        for b in range(a + 1, size):
            header += [f"re_rho_{a + 1}_{b + 1}", f"im_rho_{a + 1}_{b + 1}"]
    return header + ["trace", "min_eig"]


def trajectory_rows(result: SimulationResult) -> List[List[float]]:
    trajectory = result.trajectory
    coherences = trajectory.coherences
    rows = []
    for index, time in enumerate(trajectory.times):
        row = [time] + list(trajectory.site_populations[index])
        for value in coherences[index]:
            row += [value.real, value.imag]
        row += [trajectory.traces[index], trajectory.min_eigenvalues[index]]
        rows.append(row)
    return rows


class SimulationController(CommandController):
    def __init__(
        self,
        use_case: SimulateDynamicsUseCase,
        parser: ScenarioParser,
        writer: ResultWriter,
    ) -> None:
        super().__init__(parser, writer)
        self.use_case = use_case

    def handle(self, args: Namespace) -> Dict[str, Any]:
        scenario = self.load_scenario(args)
        result = self.use_case.execute(scenario)

        size = result.basis.size
        sidecar = companion_path(args.out, ".thermal.json")
        with self.writer.batch() as writer:
            files = self.write_table(
                args, trajectory_header(size), trajectory_rows(result), writer
            )
            files.append(str(writer.write_json(sidecar, self._baselines(result))))

        final = result.trajectory.site_populations[-1]
        return ApiResponse.success(
            {
                "command": "simulate",
                "scenario": scenario.name,
                "files": files,
                "final_site_populations": final.tolist(),
                "steady_state_gap": result.steady_state_gap,
            },
            message="Simulation completed",
        )

    @staticmethod
    def _baselines(result: SimulationResult) -> Dict[str, Any]:
        scenario = result.scenario
        coherent = result.coherent_maximum
        return {
            "version": Config.VERSION,
            "scenario": scenario.name,
            "bath_preset": scenario.bath_preset,
            "temperature_k": scenario.bath.temperature,
            "secular": scenario.options.secular,
            "lamb_shift": scenario.options.lamb_shift,
            "method": result.trajectory.method,
            "dt_ps": result.trajectory.dt,
            "exciton_energies_mev": (result.basis.energies * HBAR_MEV_PS).tolist(),
            "exciton_site_weights": result.basis.site_weights.T.tolist(),
            "thermal_exciton_populations": result.thermal_state.populations.tolist(),
            "thermal_site_populations": result.thermal_site_populations.tolist(),
            "steady_state_site_populations": np.real(
                result.steady_site_populations
            ).tolist(),
            "steady_state_gap": result.steady_state_gap,
            "final_site_populations": result.trajectory.site_populations[-1].tolist(),
            "coherent_maximum_site_populations": (
                None if coherent is None else coherent.tolist()
            ),
        }
