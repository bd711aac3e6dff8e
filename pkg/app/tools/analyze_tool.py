from ..factory.service_factory import service_factory
from ..models import OutputFormat, RunConfig, ToolResult
from ..utils.logger import get_logger
from .common import first_segment, parse_symbol, require_format, segments

logger = get_logger("analyze_tool")


def analyze(run: RunConfig) -> ToolResult:
    """One-segment verdict when --v2 is absent, two-segment verdict otherwise"""
    require_format(run, OutputFormat.JSON)
    symbol_service = service_factory.get_service('symbol')
    decision_service = service_factory.get_service('decision')
    witness_service = service_factory.get_service('witness')
    report_service = service_factory.get_service('report')
    sym = parse_symbol(run)

    if run.v2 is None:
        verdict = decision_service.decide_one_segment(sym, run.v1)
    else:
        verdict = decision_service.decide_two_segments(sym, run.v1, run.v2)
    decision_service.validate_verdict(sym, verdict)
    payload = {"verdict": verdict.to_dict()}

    state, segs = None, ()
    if verdict.resonant_pair is not None:
        seg = first_segment(run)
        state = witness_service.pair_vanishing_state(sym, run.v1, seg.t0, seg.x0, verdict.resonant_pair)
        segs = (seg,)
    elif verdict.cycle_witness is not None:
        segs = segments(run)
        t0, x0 = witness_service.intersection_point(*segs)
        state = witness_service.cycle_vanishing_state(sym, verdict.cycle_witness, t0, x0)

    if state is not None:
        residuals = witness_service.verify_vanishing(state, sym, segs)
        payload["vanishing_state"] = {
            "coefficients": state.to_dict()["coefficients"],
            "residual": residuals.to_dict(),
            "max_residual": residuals.max_residual,
        }

    logger.info(f"⚖️ analyze {symbol_service.describe(sym)} slopes={[str(v) for v in verdict.slopes]}: {verdict.reason.value}")
    return ToolResult(exit_code=verdict.exit_code, report=report_service.to_json(payload))
