"""
Helpers shared by the command handlers
"""

from typing import Tuple

from ..factory.service_factory import service_factory
from ..models import OutputFormat, RunConfig, SegmentSpec
from ..utils.errors import InvalidInputError


def first_segment(run: RunConfig, v=None) -> SegmentSpec:
    return SegmentSpec(t0=run.t1, x0=run.x1, v=run.v1 if v is None else v, T=run.T)


def segments(run: RunConfig) -> Tuple[SegmentSpec, SegmentSpec]:
    return (
        SegmentSpec(t0=run.t1, x0=run.x1, v=run.v1, T=run.T),
        SegmentSpec(t0=run.t2, x0=run.x2, v=run.v2, T=run.T),
    )


def parse_symbol(run: RunConfig):
    return service_factory.get_service('symbol').parse_symbol(run.symbol)


def require_format(run: RunConfig, *allowed: OutputFormat) -> None:
    if run.output_format not in allowed:
        choices = ", ".join(f.value for f in allowed)
        raise InvalidInputError(f"{run.command.value} supports --format {choices}, got {run.output_format.value}")
