from ..factory.service_factory import service_factory
from ..models import OutputFormat, RunConfig, ToolResult
from ..utils.logger import get_logger
from .common import parse_symbol, require_format

logger = get_logger("oracle_tool")


def oracle_compare(run: RunConfig) -> ToolResult:
    """Certified Pi(v) against exhaustive enumeration; exit 3 on any difference"""
    require_format(run, OutputFormat.JSON)
    diophantine_service = service_factory.get_service('diophantine')
    sym = parse_symbol(run)

    solved = diophantine_service.pi_set(sym, run.v).pairs_in_window(run.window)
    oracle = diophantine_service.pi_oracle(sym, run.v, run.window)
    missing = sorted(oracle - solved)
    extra = sorted(solved - oracle)
    agrees = not missing and not extra
    if not agrees:
        logger.error(f"❌ oracle mismatch for p={sym} v={run.v}: missing {missing[:5]}, extra {extra[:5]}")

    payload = {
        "symbol": str(sym),
        "v": str(run.v),
        "window": run.window,
        "agrees": agrees,
        "pairs": len(oracle),
        "missing": [list(p) for p in missing],
        "extra": [list(p) for p in extra],
    }
    report = service_factory.get_service('report').to_json(payload)
    return ToolResult(exit_code=0 if agrees else 3, report=report)
