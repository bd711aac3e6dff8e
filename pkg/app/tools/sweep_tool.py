from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations
from typing import List, Tuple

import numpy as np

from ..config.config import config
from ..factory.service_factory import service_factory
from ..models import OutputFormat, PolynomialSymbol, RunConfig, ToolResult
from ..utils.logger import get_logger
from .common import parse_symbol, require_format

logger = get_logger("sweep_tool")

SweepPair = Tuple[Fraction, Fraction]

RANDOM_MODE_RANGE = 10


def grid_pairs(run: RunConfig) -> List[SweepPair]:
    """All v1 < v2 over the integer grid plus the extra slopes"""
    slopes = sorted({Fraction(v) for v in run.grid} | set(run.extra_slopes))
    return list(combinations(slopes, 2))


def random_pairs(sym: PolynomialSymbol, samples: int, seed: int) -> List[SweepPair]:
    """Slopes drawn as divided differences of random modes, so each Pi(v) is nonempty"""
    symbol_service = service_factory.get_service('symbol')
    rng = np.random.default_rng(seed)
    pairs = []
    while len(pairs) < samples:
        k1, m1, k2, m2 = (int(x) for x in rng.integers(-RANDOM_MODE_RANGE, RANDOM_MODE_RANGE + 1, size=4))
        if k1 == m1 or k2 == m2:
            continue
        v1 = symbol_service.divided_diff(sym, 0, k1, m1)
        v2 = symbol_service.divided_diff(sym, 0, k2, m2)
        if v1 != v2:
            pairs.append((v1, v2))
    return pairs


def sweep(run: RunConfig) -> ToolResult:
    """Two-segment verdicts over a slope grid or a seeded random sample"""
    require_format(run, OutputFormat.JSON, OutputFormat.CSV)
    decision_service = service_factory.get_service('decision')
    report_service = service_factory.get_service('report')
    sym = parse_symbol(run)

    pairs = grid_pairs(run) if (run.grid or run.extra_slopes) else random_pairs(sym, run.samples, run.seed)
    logger.info(f"🧹 sweep p={sym} over {len(pairs)} slope pairs with {config.SWEEP_WORKERS} workers")

    with ThreadPoolExecutor(max_workers=config.SWEEP_WORKERS) as pool:
        verdicts = list(pool.map(lambda pair: decision_service.decide_two_segments(sym, *pair), pairs))

    rows = sorted(
        ((str(v.slopes[0]), str(v.slopes[1]), v.qualitative, v.quantitative, v.reason.value)
         for v in verdicts),
        key=lambda row: (Fraction(row[0]), Fraction(row[1])),
    )
    if run.output_format is OutputFormat.CSV:
        header = ("v1", "v2", "qualitative", "quantitative", "reason")
        return ToolResult(report=report_service.to_csv(header, rows))

    payload = {
        "symbol": str(sym),
        "results": [
            {"v1": v1, "v2": v2, "qualitative": q, "quantitative": qq, "reason": r}
            for v1, v2, q, qq, r in rows
        ],
    }
    return ToolResult(report=report_service.to_json(payload))
