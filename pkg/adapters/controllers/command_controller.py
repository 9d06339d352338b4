from argparse import Namespace
from dataclasses import replace
from pathlib import Path
from typing import Any, List, Optional, Sequence

from adapters.controllers.scenario_parser import ScenarioParser
from adapters.writers.result_writer import ResultWriter, companion_path
from core.domain.scenario_model import Scenario
from core.interfaces.command_controller_interface import CommandControllerInterface


class CommandController(CommandControllerInterface):
    """Shared plumbing of the CLI commands: scenario loading and table output."""

    def __init__(self, parser: ScenarioParser, writer: ResultWriter) -> None:
        self.parser = parser
        self.writer = writer

    def load_scenario(self, args: Namespace) -> Scenario:
        scenario = self.parser.parse_file(args.scenario)
        overrides = {}
        if getattr(args, "secular", False):
            overrides["secular"] = True
        if getattr(args, "no_lamb_shift", False):
            overrides["lamb_shift"] = False
        if getattr(args, "method", None):
            overrides["method"] = args.method
        if overrides:
            scenario = replace(scenario, options=replace(scenario.options, **overrides))
        return scenario

    def write_table(
        self,
        args: Namespace,
        header: Sequence[str],
        rows: Sequence[Sequence[Any]],
        writer: Optional[ResultWriter] = None,
    ) -> List[str]:
        """CSV at ``--out`` plus the JSON mirror when ``--json`` is set."""
        writer = writer or self.writer
        written = [str(writer.write_csv(args.out, header, rows))]
        if getattr(args, "json", False):
            mirror = companion_path(args.out, ".json")
            if Path(mirror) == Path(args.out):
                mirror = Path(str(args.out) + ".json")
            written.append(str(writer.write_records(mirror, header, rows)))
        return written
