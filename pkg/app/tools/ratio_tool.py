from typing import List

from ..config.config import config
from ..factory.service_factory import service_factory
from ..models import OutputFormat, PolynomialSymbol, RatioRow, RunConfig, ToolResult
from ..utils.logger import get_logger
from .common import parse_symbol, segments

logger = get_logger("ratio_tool")


def ratio_rows(run: RunConfig, sym: PolynomialSymbol) -> List[RatioRow]:
    graph_service = service_factory.get_service('graph')
    witness_service = service_factory.get_service('witness')
    g = graph_service.build_graph(sym, run.v1, run.v2, run.window)
    rows = witness_service.ratio_sequence(sym, g, segments(run), run.n_list)
    bound = 4 * run.T + config.RATIO_BOUND_SLACK
    for row in rows:
        if row.seg_integral > bound:
            logger.warning(f"⚠️ n={row.n}: observed energy {row.seg_integral:.6g} exceeds {bound:.6g}")
    return rows


def ratio(run: RunConfig) -> ToolResult:
    """(n, norm_sq, seg_integral, ratio) along alternative paths of length 2n"""
    report_service = service_factory.get_service('report')
    rows = ratio_rows(run, parse_symbol(run))
    if run.output_format is OutputFormat.JSON:
        return ToolResult(report=report_service.to_json({"rows": [r.to_dict() for r in rows]}))
    return ToolResult(report=report_service.ratio_csv(rows))
