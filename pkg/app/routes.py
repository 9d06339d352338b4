import argparse
from typing import Dict

from app.handlers import timed_command
from config import Config
from core.domain.dynamics_model import METHODS
from core.interfaces.command_controller_interface import CommandControllerInterface


def _add_output_flags(command: argparse.ArgumentParser) -> None:
    command.add_argument("--out", required=True, help="CSV output path")
    command.add_argument(
        "--json", action="store_true", help="also write the table as JSON records"
    )


def register_routes(
    controllers: Dict[str, CommandControllerInterface]
) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eet-simulator",
        description="Excitonic energy transfer in site networks coupled to a "
        "phonon bath. Set LOG_LEVEL to change verbosity.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {Config.VERSION}"
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    simulate = commands.add_parser(
        "simulate", help="propagate the density matrix of a scenario"
    )
    simulate.add_argument("--scenario", required=True, help="scenario JSON path")
    _add_output_flags(simulate)
    simulate.add_argument(
        "--secular", action="store_true", help="apply the secular filter"
    )
    simulate.add_argument(
        "--no-lamb-shift",
        action="store_true",
        help="drop the principal-value part of the bath response",
    )
    simulate.add_argument("--method", choices=METHODS, help="propagation method")

    rates = commands.add_parser("rates", help="population transfer rate table")
    rates.add_argument("--scenario", required=True, help="scenario JSON path")
    _add_output_flags(rates)

    spectrum = commands.add_parser(
        "spectrum", help="spectral density and correlation function on a grid"
    )
    spectrum.add_argument(
        "--grid",
        help="min:max:step in rad/ps (default %s)"
        % ":".join(str(v) for v in Config.SPECTRUM_GRID),
    )
    spectrum.add_argument("--preset", help="bath preset (default GaAs-10K)")
    spectrum.add_argument(
        "--scenario", help="take the bath from a scenario and mark its transitions"
    )
    _add_output_flags(spectrum)

    scan = commands.add_parser("scan", help="scale the Hamiltonian and follow transfer")
    scan.add_argument("--scenario", required=True, help="scenario JSON path")
    scan.add_argument(
        "--factors", required=True, help="comma separated positive scale factors"
    )
    scan.add_argument(
        "--geometry",
        action="store_true",
        help="realize the scaling by moving sites instead of scaling energies",
    )
    scan.add_argument(
        "--source", type=int, help="1-based exciton state to follow"
    )
    _add_output_flags(scan)

    for name, command in (
        ("simulate", simulate),
        ("rates", rates),
        ("spectrum", spectrum),
        ("scan", scan),
    ):
        command.set_defaults(handler=timed_command(name, controllers[name].handle))
    return parser
