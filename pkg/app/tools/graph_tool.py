from ..factory.service_factory import service_factory
from ..models import EdgeColor, OutputFormat, RunConfig, ToolResult
from ..utils.logger import get_logger
from .common import parse_symbol

logger = get_logger("graph_tool")


def graph(run: RunConfig) -> ToolResult:
    """G(v1, v2) as JSON (with summary, cycle and reduced graph), DOT or an edge list"""
    graph_service = service_factory.get_service('graph')
    report_service = service_factory.get_service('report')
    sym = parse_symbol(run)

    g = graph_service.build_graph(sym, run.v1, run.v2, run.window)
    if run.output_format is OutputFormat.DOT:
        return ToolResult(report=report_service.to_dot(g))
    if run.output_format is OutputFormat.CSV:
        rows = [(a, b, color.value) for color in EdgeColor for a, b in g.edges(color)]
        return ToolResult(report=report_service.to_csv(("k", "m", "color"), rows))

    has_cycle, cycle = graph_service.has_two_colored_cycle(g)
    summary = graph_service.component_summary(g)
    payload = {
        "graph": g.to_dict(),
        "summary": summary.to_dict(),
        "two_colored_cycle": cycle.to_dict() if has_cycle else None,
        "reduced": graph_service.reduce_graph(g).to_dict(),
    }
    logger.debug(f"🕸️ graph tool: cycle={has_cycle} g={summary.g_value}")
    return ToolResult(report=report_service.to_json(payload))
