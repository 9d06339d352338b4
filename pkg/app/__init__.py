"""
Application factory for the EET simulator command line.
"""

import sys
from typing import List, Optional, Type

from adapters.controllers.rates_controller import RatesController
from adapters.controllers.scan_controller import ScanController
from adapters.controllers.scenario_parser import ScenarioParser
from adapters.controllers.simulation_controller import SimulationController
from adapters.controllers.spectrum_controller import SpectrumController
from adapters.loggers.logger_adapter import app_logger
from adapters.writers.result_writer import ResultWriter
from app.api_response import ApiResponse
from app.handlers import EXIT_OK, handle_error, register_shutdown_handlers
from app.routes import register_routes
from config import Config
from core.services.analysis_domain_service import AnalysisDomainService
from core.services.bath_domain_service import BathDomainService
from core.services.propagation_domain_service import PropagationDomainService
from core.services.redfield_domain_service import RedfieldDomainService
from core.services.system_domain_service import SystemDomainService
from usecases.compute_rates_use_case import ComputeRatesUseCase
from usecases.compute_spectrum_use_case import ComputeSpectrumUseCase
from usecases.scale_scan_use_case import ScaleScanUseCase
from usecases.simulate_dynamics_use_case import SimulateDynamicsUseCase


class Application:
    def __init__(self, config: Type[Config], parser, controllers) -> None:
        self.config = config
        self.parser = parser
        self.controllers = controllers

    def run(self, argv: Optional[List[str]] = None, stdout=None) -> int:
        """Run one command; returns the process exit code."""
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as exit_request:
            return exit_request.code if isinstance(exit_request.code, int) else 2

        try:
            response = args.handler(args)
        except Exception as error:
            return handle_error(error)

        print(ApiResponse.dumps(response), file=stdout or sys.stdout)
        return EXIT_OK


class ApplicationFactory:
    """
    Factory class wiring services, use cases and controllers into the CLI.
    """

    @staticmethod
    def create_app(config_class: Type[Config] = None) -> Application:
        """
        Create and configure an application instance.

        Args:
            config_class: Configuration class to use. Defaults to Config.

        Returns:
            Application: Ready-to-run command line application.
        """
        config_class = config_class or Config
        controllers = ApplicationFactory._register_controllers(config_class)
        parser = register_routes(controllers)
        register_shutdown_handlers()

        app_logger.debug("EET simulator %s initialised", config_class.VERSION)
        return Application(config_class, parser, controllers)

    @staticmethod
    def _register_controllers(config):
        """Build the service graph and one controller per command."""

        system_service = SystemDomainService()
        bath_service = BathDomainService(
            pv_tolerance=config.PV_TOLERANCE, pv_limit=config.PV_LIMIT
        )
        redfield_service = RedfieldDomainService(
            bath_service,
            max_sites=config.MAX_SITES,
            grouping_tol=config.SECULAR_GROUPING_TOL,
        )
        propagation_service = PropagationDomainService(
            system_service,
            default_method=config.DEFAULT_METHOD,
            output_interval=config.OUTPUT_INTERVAL_PS,
            max_dt=config.MAX_DT_PS,
            trace_drift_limit=config.TRACE_DRIFT_LIMIT,
            positivity_warn=config.POSITIVITY_WARN,
            positivity_fail=config.POSITIVITY_FAIL,
        )
        analysis_service = AnalysisDomainService(
            system_service, redfield_service, workers=config.SCAN_WORKERS
        )

        parser = ScenarioParser(
            system_service, bath_service, max_sites=config.MAX_SITES
        )
        writer = ResultWriter()

        return {
            "simulate": SimulationController(
                SimulateDynamicsUseCase(
                    system_service, redfield_service, propagation_service
                ),
                parser,
                writer,
            ),
            "rates": RatesController(
                ComputeRatesUseCase(system_service, redfield_service, analysis_service),
                parser,
                writer,
            ),
            "spectrum": SpectrumController(
                ComputeSpectrumUseCase(bath_service, system_service), parser, writer
            ),
            "scan": ScanController(ScaleScanUseCase(analysis_service), parser, writer),
        }


create_app = ApplicationFactory.create_app
