from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from pydantic import Field

from .base import FrozenModel, IntPair, Rational
from .symbol import PolynomialSymbol

INFINITY = "inf"


class EdgeColor(str, Enum):
    RED = "red"
    BLUE = "blue"

    @property
    def other(self) -> "EdgeColor":
        return EdgeColor.BLUE if self is EdgeColor.RED else EdgeColor.RED


class GraphProvenance(FrozenModel):
    symbol: PolynomialSymbol
    v1: Rational
    v2: Rational


class ColoredGraph(FrozenModel):
    """G(v1, v2): red edges resonate under v1, blue edges under v2.

    Explicit edges cover every finite resonance; families are carried as the
    sums s of their pairs {k, s-k} and are materialized only inside `window`.
    """
    vertices: Tuple[int, ...] = ()
    red_edges: Tuple[IntPair, ...] = ()
    blue_edges: Tuple[IntPair, ...] = ()
    red_families: Tuple[int, ...] = ()
    blue_families: Tuple[int, ...] = ()
    window: int = 0
    provenance: Optional[GraphProvenance] = None

    def edges(self, color: EdgeColor) -> Tuple[Tuple[int, int], ...]:
        return self.red_edges if color is EdgeColor.RED else self.blue_edges

    def families(self, color: EdgeColor) -> Tuple[int, ...]:
        return self.red_families if color is EdgeColor.RED else self.blue_families

    def is_family_edge(self, pair: Tuple[int, int], color: EdgeColor) -> bool:
        return sum(pair) in self.families(color)

    def finite_edges(self, color: EdgeColor) -> List[Tuple[int, int]]:
        """Edges that do not lie on a family line"""
        return [e for e in self.edges(color) if not self.is_family_edge(e, color)]

    def adjacency(self) -> Dict[int, List[Tuple[int, EdgeColor]]]:
        adj: Dict[int, List[Tuple[int, EdgeColor]]] = {k: [] for k in self.vertices}
        for color in EdgeColor:
            for a, b in self.edges(color):
                adj.setdefault(a, []).append((b, color))
                adj.setdefault(b, []).append((a, color))
        for k in adj:
            adj[k].sort(key=lambda item: (item[0], item[1].value))
        return adj

    @property
    def is_ladder(self) -> bool:
        """Families of both colors with different sums chain into infinite paths"""
        return any(r != b for r in self.red_families for b in self.blue_families)


class CycleWitness(FrozenModel):
    """Alternative cycle k_1..k_2m; edge j joins vertices j and j+1 (cyclically)"""
    vertices: Tuple[int, ...]
    edge_colors: Tuple[EdgeColor, ...]
    red_slope: Optional[Rational] = None
    blue_slope: Optional[Rational] = None


class PathWitness(FrozenModel):
    """Alternative path k_1..k_2n, first edge red"""
    vertices: Tuple[int, ...]
    edge_colors: Tuple[EdgeColor, ...]
    red_slope: Optional[Rational] = None
    blue_slope: Optional[Rational] = None


class ComponentSummary(FrozenModel):
    """Connected-component sizes and g(v1, v2).

    `sizes` maps a component size to how many explicit components have it;
    `family_pairs` flags the infinitely many isolated family pairs and
    `unbounded` flags infinite alternating chains.
    """
    sizes: Dict[int, int] = Field(default_factory=dict)
    family_pairs: bool = False
    unbounded: bool = False
    g_value: Union[int, str] = 0

    @property
    def g_finite(self) -> bool:
        return self.g_value != INFINITY
