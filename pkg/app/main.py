"""
Command-line front end: `python -m app <command> ...`
"""

from typing import Annotated, Optional

import typer
from pydantic import ValidationError

import settings

from .config.config import config
from .initialize import get_workflow, initialize_application
from .models import Command, OutputFormat, RunConfig, WitnessKind
from .services.symbol_service import PRESETS
from .utils.errors import InvalidInputError
from .utils.logger import get_logger, set_log_level
from .utils.parsing import parse_grid, parse_int_list, parse_pair, parse_rational_list

logger = get_logger("main")

USAGE_ERROR = 2

PRESET_HELP = "; ".join(f"{name} = {poly}" for name, poly in PRESETS.items())

cli = typer.Typer(
    name="dispersive-observability",
    help="Decide observability of linear dispersive equations on the torus from line segments.",
    no_args_is_help=True,
    add_completion=False,
)

Symbol = Annotated[str, typer.Option("--symbol", help=f"Coefficients 'a0,a1,...,ad' of p(k), or a preset: {PRESET_HELP}")]
V = Annotated[Optional[str], typer.Option("--v", help="Slope, e.g. 3 or 7/2")]
V1 = Annotated[Optional[str], typer.Option("--v1", help="Slope of the first (red) segment")]
V2 = Annotated[Optional[str], typer.Option("--v2", help="Slope of the second (blue) segment")]
T1 = Annotated[str, typer.Option("--t1", help="Start time of segment 1; decimals or pi multiples like 3/4pi")]
X1 = Annotated[str, typer.Option("--x1", help="Start point of segment 1")]
T2 = Annotated[str, typer.Option("--t2", help="Start time of segment 2")]
X2 = Annotated[str, typer.Option("--x2", help="Start point of segment 2")]
Length = Annotated[float, typer.Option("--T", help="Segment length in time")]
Window = Annotated[int, typer.Option("--window", help="Family pairs are materialized for |k| <= window")]


def _execute(**fields) -> None:
    """Validate, run and exit with the run's exit code"""
    fields = {name: value for name, value in fields.items() if value is not None}
    try:
        run = RunConfig(**fields)
    except ValidationError as e:
        typer.echo(f"error: {e.errors()[0]['msg']}", err=True)
        raise typer.Exit(code=USAGE_ERROR)

    initialize_application()
    result = get_workflow().run(run)
    typer.echo(result.report, nl=False)
    raise typer.Exit(code=result.exit_code)


def _parsed(parse, text: Optional[str]):
    if text is None:
        return None
    try:
        return tuple(parse(text))
    except InvalidInputError as e:
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=USAGE_ERROR)


def _print_version(value: bool):
    if value:
        typer.echo(f"{settings.NAME} {settings.VERSION}")
        raise typer.Exit()


@cli.callback()
def main(
    verbose: Annotated[bool, typer.Option("--verbose", help="Log at DEBUG level")] = False,
    version: Annotated[Optional[bool], typer.Option("--version", callback=_print_version, is_eager=True, help="Print the version and exit")] = None,
):
    if verbose:
        set_log_level("DEBUG")
    else:
        set_log_level(config.LOG_LEVEL)


@cli.command("analyze")
def analyze(
    v1: V1 = None, v2: V2 = None, symbol: Symbol = "schrodinger",
    t1: T1 = "0", x1: X1 = "0", t2: T2 = "0", x2: X2 = "0", T: Length = 1.0,
):
    """Observability verdict: one segment with --v1 alone, two segments with --v1 and --v2."""
    _execute(command=Command.ANALYZE, symbol=symbol, v1=v1, v2=v2, t1=t1, x1=x1, t2=t2, x2=x2, T=T)


@cli.command("pi")
def pi(
    v: V = None, symbol: Symbol = "schrodinger", window: Window = config.DEFAULT_WINDOW,
    oracle: Annotated[bool, typer.Option("--oracle", help="Also enumerate |k|, |m| <= window by brute force")] = False,
    output_format: Annotated[OutputFormat, typer.Option("--format")] = OutputFormat.JSON,
):
    """Resonant set Pi(v): explicit pairs and families {k, s-k}."""
    _execute(command=Command.PI, symbol=symbol, v=v, window=window, oracle=oracle, output_format=output_format)


@cli.command("xi")
def xi(
    v: V = None,
    k: Annotated[Optional[int], typer.Option("--k", help="Anchor mode")] = None,
    symbol: Symbol = "schrodinger",
):
    """Resonance class of k: every m with lambda_m(v) = lambda_k(v)."""
    _execute(command=Command.XI, symbol=symbol, v=v, k=k)


@cli.command("graph")
def graph(
    v1: V1 = None, v2: V2 = None, symbol: Symbol = "schrodinger", window: Window = config.DEFAULT_WINDOW,
    output_format: Annotated[OutputFormat, typer.Option("--format")] = OutputFormat.JSON,
):
    """Two-colored resonance graph G(v1, v2) with its summary, cycle and reduction."""
    _execute(command=Command.GRAPH, symbol=symbol, v1=v1, v2=v2, window=window, output_format=output_format)


@cli.command("witness")
def witness(
    kind: Annotated[WitnessKind, typer.Option("--kind")] = WitnessKind.PAIR,
    v: V = None, v1: V1 = None, v2: V2 = None, symbol: Symbol = "schrodinger",
    pair: Annotated[Optional[str], typer.Option("--pair", help="Resonant pair 'k,m'; defaults to the smallest one")] = None,
    t1: T1 = "0", x1: X1 = "0", t2: T2 = "0", x2: X2 = "0", T: Length = 1.0,
    n: Annotated[Optional[str], typer.Option("--n", help="Path half-lengths, e.g. 2,4,8")] = None,
    window: Window = config.DEFAULT_WINDOW,
    output_format: Annotated[OutputFormat, typer.Option("--format")] = OutputFormat.JSON,
):
    """Vanishing states (pair, cycle) or the ratio sequence along alternative paths."""
    _execute(
        command=Command.WITNESS, kind=kind, symbol=symbol, v=v, v1=v1, v2=v2, pair=_parsed(parse_pair, pair),
        t1=t1, x1=x1, t2=t2, x2=x2, T=T, n_list=_parsed(parse_int_list, n), window=window,
        output_format=output_format,
    )


@cli.command("ratio")
def ratio(
    v1: V1 = None, v2: V2 = None, symbol: Symbol = "schrodinger",
    t1: T1 = "0", x1: X1 = "0", t2: T2 = "0", x2: X2 = "0", T: Length = 1.0,
    n: Annotated[Optional[str], typer.Option("--n", help="Path half-lengths, e.g. 2,4,8,16")] = None,
    window: Window = config.DEFAULT_WINDOW,
    output_format: Annotated[OutputFormat, typer.Option("--format")] = OutputFormat.CSV,
):
    """CSV of n, norm_sq, seg_integral and ratio."""
    _execute(
        command=Command.RATIO, symbol=symbol, v1=v1, v2=v2, t1=t1, x1=x1, t2=t2, x2=x2, T=T,
        n_list=_parsed(parse_int_list, n), window=window, output_format=output_format,
    )


@cli.command("kdv")
def kdv(v: V = None, v1: V1 = None, v2: V2 = None):
    """Linear KdV: Gamma certificate for --v, sufficient criteria for --v1/--v2."""
    _execute(command=Command.KDV, symbol="kdv", v=v, v1=v1, v2=v2)


@cli.command("oracle-compare")
def oracle_compare(
    v: V = None, symbol: Symbol = "schrodinger",
    window: Annotated[int, typer.Option("--window", help="Brute-force window")] = config.ORACLE_WINDOW,
):
    """Certified Pi(v) against brute-force enumeration; exit 3 on mismatch."""
    _execute(command=Command.ORACLE_COMPARE, symbol=symbol, v=v, window=window)


@cli.command("sweep")
def sweep(
    symbol: Symbol = "schrodinger",
    grid: Annotated[Optional[str], typer.Option("--grid", help="Integer slope range 'a..b'")] = None,
    extra: Annotated[Optional[str], typer.Option("--extra", help="Additional slopes, e.g. 1/2,1/3")] = None,
    samples: Annotated[int, typer.Option("--samples", help="Random slope pairs when no grid is given")] = config.SWEEP_DEFAULT_SAMPLES,
    seed: Annotated[int, typer.Option("--seed")] = config.SWEEP_DEFAULT_SEED,
    output_format: Annotated[OutputFormat, typer.Option("--format")] = OutputFormat.JSON,
):
    """Two-segment verdicts over a slope grid or a seeded random sample."""
    _execute(
        command=Command.SWEEP, symbol=symbol, grid=_parsed(parse_grid, grid),
        extra_slopes=_parsed(parse_rational_list, extra), samples=samples, seed=seed,
        output_format=output_format,
    )


if __name__ == "__main__":
    cli()
