from ..factory.service_factory import service_factory
from ..models import OutputFormat, RunConfig, ToolResult
from .common import parse_symbol, require_format


def xi_class(run: RunConfig) -> ToolResult:
    require_format(run, OutputFormat.JSON)
    diophantine_service = service_factory.get_service('diophantine')
    symbol_service = service_factory.get_service('symbol')
    sym = parse_symbol(run)

    cls = diophantine_service.xi_class(sym, run.v, run.k)
    payload = {
        "symbol": str(sym),
        "v": str(run.v),
        "lambda": str(symbol_service.lambda_kv(sym, run.v, run.k)),
        "class": cls.to_dict(),
        "size": cls.size,
    }
    return ToolResult(report=service_factory.get_service('report').to_json(payload))
