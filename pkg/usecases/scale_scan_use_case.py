from typing import List

from adapters.loggers.logger_adapter import app_logger
from core.domain.analysis_model import ScanResult
from core.domain.command_model import ScanRequest
from core.domain.scenario_model import INITIAL_EXCITON, INITIAL_SITE
from core.interfaces.analysis_domain_service_interface import (
    AnalysisDomainServiceInterface,
)
from core.interfaces.use_case_interfaces import UseCaseInterface


class ScaleScanUseCase(UseCaseInterface[ScanRequest, List[ScanResult]]):
    def __init__(self, analysis_service: AnalysisDomainServiceInterface) -> None:
        self.analysis_service = analysis_service

    def execute(self, request: ScanRequest) -> List[ScanResult]:
        scenario = request.scenario
        initial = scenario.initial_state
        source = request.source
        if source is None and initial.kind == INITIAL_EXCITON:
            source = initial.index

        results = self.analysis_service.scale_scan(
            scenario.network,
            scenario.bath,
            request.factors,
            source=source,
            geometry=request.geometry,
            initial_site=initial.index if initial.kind == INITIAL_SITE else None,
        )
        switches = sum(
            1
            for previous, current in zip(results, results[1:])
            if previous.target_site != current.target_site
        )
        app_logger.info(
            "Scanned %d factors of '%s' (geometry=%s); target site changed %d times",
            len(results),
            scenario.name,
            request.geometry,
            switches,
        )
        return results
