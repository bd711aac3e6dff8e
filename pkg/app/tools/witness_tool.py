from ..config.config import config
from ..factory.service_factory import service_factory
from ..models import OutputFormat, RunConfig, ToolResult, WitnessKind
from ..utils.errors import WitnessNotFoundError
from ..utils.logger import get_logger
from .common import first_segment, parse_symbol, require_format, segments
from .ratio_tool import ratio_rows

logger = get_logger("witness_tool")


def _state_payload(state, residuals) -> dict:
    return {
        "coefficients": state.to_dict()["coefficients"],
        "norm_sq": state.norm_sq(),
        "residual": residuals.to_dict(),
        "max_residual": residuals.max_residual,
    }


def witness(run: RunConfig) -> ToolResult:
    """Vanishing states from a resonant pair or a two-colored cycle, or the ratio sequence"""
    diophantine_service = service_factory.get_service('diophantine')
    decision_service = service_factory.get_service('decision')
    graph_service = service_factory.get_service('graph')
    witness_service = service_factory.get_service('witness')
    numeric_service = service_factory.get_service('numeric')
    report_service = service_factory.get_service('report')
    sym = parse_symbol(run)
    require_format(run, OutputFormat.JSON, OutputFormat.CSV)

    if run.kind is WitnessKind.RATIO:
        rows = ratio_rows(run, sym)
        if run.output_format is OutputFormat.CSV:
            return ToolResult(report=report_service.ratio_csv(rows))
        return ToolResult(report=report_service.to_json({"rows": [r.to_dict() for r in rows]}))

    if run.kind is WitnessKind.PAIR:
        pair = run.pair or decision_service.pick_pair(diophantine_service.pi_set(sym, run.v))
        if pair is None:
            raise WitnessNotFoundError(f"Pi({run.v}) is empty for p = {sym}; no resonant pair")
        seg = first_segment(run, v=run.v)
        segs = (seg,)
        state = witness_service.pair_vanishing_state(sym, run.v, seg.t0, seg.x0, pair)
        residuals = witness_service.verify_vanishing(state, sym, segs)
        payload = {"pair": list(pair), "state": _state_payload(state, residuals)}
    else:
        g = graph_service.build_graph(sym, run.v1, run.v2, run.window)
        has_cycle, cycle = graph_service.has_two_colored_cycle(g)
        if not has_cycle:
            raise WitnessNotFoundError(f"G({run.v1}, {run.v2}) has no two-colored cycle for p = {sym}")
        segs = segments(run)
        t0, x0 = witness_service.intersection_point(*segs)
        state = witness_service.cycle_vanishing_state(sym, cycle, t0, x0)
        residuals = witness_service.verify_vanishing(state, sym, segs)
        payload = {
            "cycle": cycle.to_dict(),
            "intersection": {"t0": str(t0), "x0": str(x0)},
            "state": _state_payload(state, residuals),
        }

    if run.output_format is OutputFormat.CSV:
        # trace along the first segment
        trace = numeric_service.segment_trace(state, sym, segs[0], config.RESIDUAL_SAMPLES)
        return ToolResult(report=report_service.trace_csv(trace))

    logger.info(f"🧪 {run.kind.value} witness for p={sym}: max residual {residuals.max_residual:.3g}")
    return ToolResult(report=report_service.to_json(payload))
