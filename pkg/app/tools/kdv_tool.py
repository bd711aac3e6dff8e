from ..factory.service_factory import service_factory
from ..models import CriterionOutcome, OutputFormat, RunConfig, ToolResult
from ..utils.errors import InvalidInputError
from ..utils.logger import get_logger
from .common import require_format

logger = get_logger("kdv_tool")


def _as_int(v, name: str) -> int:
    if v.denominator != 1:
        raise InvalidInputError(f"the KdV criterion takes integer slopes, got --{name} {v}")
    return int(v)


def kdv(run: RunConfig) -> ToolResult:
    """Gamma certificate for --v, or the two-slope criterion for --v1/--v2"""
    require_format(run, OutputFormat.JSON)
    applications_service = service_factory.get_service('applications')
    report_service = service_factory.get_service('report')

    if run.v1 is None or run.v2 is None:
        verdict = applications_service.kdv_one_segment(run.v)
        payload = {"verdict": verdict.to_dict()}
        if run.v.denominator == 1:
            payload["certificate"] = applications_service.gamma_membership(int(run.v)).to_dict()
        return ToolResult(exit_code=verdict.exit_code, report=report_service.to_json(payload))

    result = applications_service.kdv_two_segment_criterion(_as_int(run.v1, "v1"), _as_int(run.v2, "v2"))
    exit_code = 0 if result.outcome is not CriterionOutcome.INCONCLUSIVE else result.fallback.exit_code
    logger.info(f"🔎 kdv ({run.v1}, {run.v2}): {result.outcome.value}")
    return ToolResult(exit_code=exit_code, report=report_service.to_json({"criterion": result.to_dict()}))
