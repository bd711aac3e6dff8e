from ..models import Command
from ..utils.logger import get_logger
from ..tools.analyze_tool import analyze
from ..tools.pi_tool import pi_set
from ..tools.xi_tool import xi_class
from ..tools.graph_tool import graph
from ..tools.witness_tool import witness
from ..tools.ratio_tool import ratio
from ..tools.kdv_tool import kdv
from ..tools.oracle_tool import oracle_compare
from ..tools.sweep_tool import sweep


logger = get_logger("tool_factory")


class ToolFactory:
    def __init__(self):
        self.tools = {
            Command.ANALYZE: analyze,
            Command.PI: pi_set,
            Command.XI: xi_class,
            Command.GRAPH: graph,
            Command.WITNESS: witness,
            Command.RATIO: ratio,
            Command.KDV: kdv,
            Command.ORACLE_COMPARE: oracle_compare,
            Command.SWEEP: sweep,
        }

    def get_tool_names(self):
        return [command.value for command in self.tools]

    def add_tool(self, command: Command, tool):
        self.tools[command] = tool

    def get_tool(self, command: Command):
        if command not in self.tools:
            raise ValueError(f"No tool registered for '{command.value}'")
        return self.tools[command]

    def get_tools(self):
        return list(self.tools.values())
