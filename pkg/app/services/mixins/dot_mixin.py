"""
Graphviz export of colored resonance graphs
"""

from ...models import ColoredGraph, EdgeColor
from ...utils.logger import get_logger

logger = get_logger("dot_mixin")


class DotExportMixin:
    """Undirected DOT text; family pairs inside the window drawn as dashed labelled rays"""

    def __init__(self):
        self.logger = logger

    def to_dot(self, g: ColoredGraph) -> str:
        lines = ["graph G {"]
        if g.provenance is not None:
            p = g.provenance
            lines.append(f'   label = "p = {p.symbol}, v1 = {p.v1}, v2 = {p.v2}";')
        for k in g.vertices:
            lines.append(f'   "{k}";')
        for color in EdgeColor:
            for a, b in g.edges(color):
                if g.is_family_edge((a, b), color):
                    style = f'color = {color.value}, style = dashed, label = "family s={a + b}"'
                else:
                    style = f"color = {color.value}"
                lines.append(f'   "{a}" -- "{b}" [ {style} ];')
        lines.append("}")
        self.logger.debug(f"🖼️ DOT export of {len(g.vertices)} vertices")
        return "\n".join(lines) + "\n"
