from enum import Enum
from typing import Optional, Tuple

from pydantic import Field, field_validator, model_validator

from .base import FrozenModel, IntPair, Rational
from .symbol import Quantity
from ..config.config import config


class Command(str, Enum):
    ANALYZE = "analyze"
    PI = "pi"
    XI = "xi"
    GRAPH = "graph"
    WITNESS = "witness"
    RATIO = "ratio"
    KDV = "kdv"
    ORACLE_COMPARE = "oracle-compare"
    SWEEP = "sweep"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    DOT = "dot"


class WitnessKind(str, Enum):
    PAIR = "pair"
    CYCLE = "cycle"
    RATIO = "ratio"


class RunConfig(FrozenModel):
    """One validated command-line invocation"""
    command: Command
    symbol: str = "schrodinger"
    v: Optional[Rational] = None
    v1: Optional[Rational] = None
    v2: Optional[Rational] = None
    k: Optional[int] = None
    pair: Optional[IntPair] = None
    kind: WitnessKind = WitnessKind.PAIR
    t1: Quantity = Field(default_factory=Quantity)
    x1: Quantity = Field(default_factory=Quantity)
    t2: Quantity = Field(default_factory=Quantity)
    x2: Quantity = Field(default_factory=Quantity)
    T: float = Field(default=1.0, gt=0)
    output_format: OutputFormat = OutputFormat.JSON
    window: int = Field(default=config.DEFAULT_WINDOW, ge=1)
    oracle: bool = False
    n_list: Tuple[int, ...] = (2, 4, 8)
    grid: Tuple[int, ...] = ()
    extra_slopes: Tuple[Rational, ...] = ()
    samples: int = Field(default=config.SWEEP_DEFAULT_SAMPLES, ge=0)
    seed: int = config.SWEEP_DEFAULT_SEED

    @field_validator("t1", "x1", "t2", "x2", mode="before")
    @classmethod
    def _parse_quantity(cls, value):
        if isinstance(value, (str, int)):
            return Quantity.parse(str(value))
        return value

    @field_validator("n_list")
    @classmethod
    def _positive_n(cls, values):
        if not values or any(n < 1 for n in values):
            raise ValueError("n values must be positive integers")
        return values

    @model_validator(mode="after")
    def _check_required(self):
        needs = {
            Command.ANALYZE: ("v1",),
            Command.PI: ("v",),
            Command.XI: ("v", "k"),
            Command.GRAPH: ("v1", "v2"),
            Command.RATIO: ("v1", "v2"),
            Command.ORACLE_COMPARE: ("v",),
        }.get(self.command, ())
        if self.command is Command.WITNESS:
            needs = ("v",) if self.kind is WitnessKind.PAIR else ("v1", "v2")
        if self.command is Command.KDV and self.v is None and (self.v1 is None or self.v2 is None):
            raise ValueError("kdv needs --v or both --v1 and --v2")

        missing = [name for name in needs if getattr(self, name) is None]
        if missing:
            raise ValueError(f"{self.command.value} requires {', '.join('--' + m for m in missing)}")
        if self.v1 is not None and self.v2 is not None and self.v1 == self.v2:
            raise ValueError("slopes v1 and v2 must differ")
        return self


class ToolResult(FrozenModel):
    exit_code: int = 0
    report: str = ""
