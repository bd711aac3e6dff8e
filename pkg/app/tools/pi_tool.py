from ..factory.service_factory import service_factory
from ..models import OutputFormat, RunConfig, ToolResult
from ..utils.logger import get_logger
from .common import parse_symbol, require_format

logger = get_logger("pi_tool")


def pi_set(run: RunConfig) -> ToolResult:
    """Resonant set with its enumeration bound; --oracle adds the windowed brute-force check"""
    require_format(run, OutputFormat.JSON, OutputFormat.CSV)
    diophantine_service = service_factory.get_service('diophantine')
    report_service = service_factory.get_service('report')
    sym = parse_symbol(run)

    pairs = diophantine_service.pi_set(sym, run.v)
    if run.output_format is OutputFormat.CSV:
        rows = sorted(pairs.pairs_in_window(run.window))
        return ToolResult(report=report_service.to_csv(("k", "m"), rows))

    payload = {
        "symbol": str(sym),
        "v": str(run.v),
        "finite_pairs": [list(p) for p in pairs.finite_pairs],
        "infinite_families": list(pairs.infinite_families),
        "bound": diophantine_service.resonance_bound(sym, run.v),
    }
    if run.oracle:
        oracle = diophantine_service.pi_oracle(sym, run.v, run.window)
        payload["oracle"] = {
            "window": run.window,
            "pairs": [list(p) for p in sorted(oracle)],
            "agrees": oracle == pairs.pairs_in_window(run.window),
        }
    return ToolResult(report=report_service.to_json(payload))
