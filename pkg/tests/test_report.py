import math

import orjson
import pytest

from app.factory import ToolFactory
from app.models import Command, RatioRow, RunConfig, ToolResult
from app.utils.errors import ConsistencyError, InvalidInputError
from app.workflow import RunWorkflow


def test_json_is_sorted_and_versioned(report_service):
    text = report_service.to_json({"b": 1, "a": {"d": 2, "c": 3}})
    assert text.endswith("\n")
    assert orjson.loads(text) == {"schema": 1, "a": {"c": 3, "d": 2}, "b": 1}
    assert text.index('"a"') < text.index('"b"') < text.index('"schema"')
    assert report_service.to_json({"b": 1, "a": 2}) == report_service.to_json({"a": 2, "b": 1})


def test_error_json(report_service):
    document = orjson.loads(report_service.error_json("InvalidInputError", "bad slope"))
    assert document["error"] == {"kind": "InvalidInputError", "message": "bad slope"}


def test_ratio_csv_keeps_full_precision(report_service):
    row = RatioRow(n=3, norm_sq=12 * math.pi, seg_integral=1.5, ratio=1.5 / (12 * math.pi), first_segment=0.0, second_segment=1.5)
    lines = report_service.ratio_csv([row]).splitlines()
    assert lines[0] == "n,norm_sq,seg_integral,ratio"
    n, norm_sq, _, ratio = lines[1].split(",")
    assert int(n) == 3
    assert float(norm_sq) == 12 * math.pi
    assert float(ratio) == row.ratio


def test_dot_export(report_service, graph_service, kdv, schrodinger):
    dot = report_service.to_dot(graph_service.build_graph(kdv, 7, 3))
    assert dot.startswith("graph G {")
    assert '"-2" -- "1" [ color = blue ];' in dot
    assert '"1" -- "2" [ color = red ];' in dot

    ladder = report_service.to_dot(graph_service.build_graph(schrodinger, 0, 1, window=3))
    assert '"-1" -- "1" [ color = red, style = dashed, label = "family s=0" ];' in ladder
    assert 'label = "family s=1"' in ladder


def _workflow(report_service, command, tool):
    factory = ToolFactory()
    factory.add_tool(command, tool)
    return RunWorkflow(factory, report_service)


def test_workflow_maps_errors_to_exit_codes(report_service):
    def bad_input(run):
        raise InvalidInputError("slope out of range")

    def broken(run):
        raise ConsistencyError("residual too large")

    run = RunConfig(command=Command.PI, v="1")
    usage = _workflow(report_service, Command.PI, bad_input).run(run)
    assert usage.exit_code == 2
    assert orjson.loads(usage.report)["error"]["kind"] == "InvalidInputError"

    consistency = _workflow(report_service, Command.PI, broken).run(run)
    assert consistency.exit_code == 3


def test_workflow_passes_results_through(report_service):
    result = _workflow(report_service, Command.PI, lambda run: ToolResult(exit_code=10, report="ok")).run(
        RunConfig(command=Command.PI, v="1")
    )
    assert result == ToolResult(exit_code=10, report="ok")


def test_workflow_needs_services():
    with pytest.raises(RuntimeError):
        RunWorkflow().run(RunConfig(command=Command.PI, v="1"))


def test_tool_factory():
    factory = ToolFactory()
    assert "oracle-compare" in factory.get_tool_names()
    assert len(factory.get_tools()) == len(Command)
