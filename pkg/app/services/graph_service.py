"""
Edge-colored resonance graph G(v1, v2) and the queries the decisions rely on
"""

import time
from collections import Counter, deque
from itertools import count
from typing import Dict, Iterable, List, Optional, Set, Tuple

from ..config.config import config
from ..models import (
    INFINITY,
    ColoredGraph,
    ComponentSummary,
    CycleWitness,
    EdgeColor,
    GraphProvenance,
    PathWitness,
    PolynomialSymbol,
    Slope,
)
from ..utils.errors import ConsistencyError, InvalidInputError, WitnessNotFoundError
from ..utils.logger import get_logger
from ..utils.union_find import UnionFind

logger = get_logger("graph_service")

Edge = Tuple[int, int]
RED, BLUE = EdgeColor.RED, EdgeColor.BLUE

NAIVE_VERTEX_LIMIT = 20


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def _anchors(limit: int) -> Iterable[int]:
    """0, 1, -1, 2, -2, ... (limit values)"""
    yield 0
    for i in count(1):
        if 2 * i - 1 >= limit:
            return
        yield i
        yield -i


class _ExplicitGraph:
    """Mutable working copy: vertex set plus an edge set per color"""

    def __init__(self, vertices: Iterable[int], red: Iterable[Edge], blue: Iterable[Edge]):
        self.edges: Dict[EdgeColor, Set[Edge]] = {RED: set(red), BLUE: set(blue)}
        self.vertices: Set[int] = set(vertices)
        for color in EdgeColor:
            for a, b in self.edges[color]:
                self.vertices.update((a, b))

    def neighbors(self) -> Dict[int, Dict[EdgeColor, Set[int]]]:
        adj = {k: {RED: set(), BLUE: set()} for k in self.vertices}
        for color in EdgeColor:
            for a, b in self.edges[color]:
                adj[a][color].add(b)
                adj[b][color].add(a)
        return adj

    def induced(self, keep: Set[int]) -> "_ExplicitGraph":
        return _ExplicitGraph(
            keep,
            (e for e in self.edges[RED] if e[0] in keep and e[1] in keep),
            (e for e in self.edges[BLUE] if e[0] in keep and e[1] in keep),
        )


class GraphService:
    """Builds G(v1, v2), finds two-colored cycles, components, reductions and paths"""

    def __init__(self, symbol_service=None, diophantine_service=None):
        self.symbol_service = symbol_service
        self.diophantine_service = diophantine_service
        self.logger = logger

    # Construction

    def build_graph(self, sym: PolynomialSymbol, v1: Slope, v2: Slope, window: int = None) -> ColoredGraph:
        """Red edges from Pi(v1), blue from Pi(v2); families materialized inside the window"""
        if v1 == v2:
            raise InvalidInputError(f"slopes must differ, got v1 = v2 = {v1}")
        window = config.DEFAULT_WINDOW if window is None else window
        start_time = time.time()

        red_set = self.diophantine_service.pi_set(sym, v1)
        blue_set = self.diophantine_service.pi_set(sym, v2)
        red = set(red_set.finite_pairs) | red_set.family_pairs_in_window(window)
        blue = set(blue_set.finite_pairs) | blue_set.family_pairs_in_window(window)

        shared = red & blue
        if shared:
            raise ConsistencyError(f"pairs {sorted(shared)[:3]} resonate under both slopes")

        vertices = sorted({k for pair in red | blue for k in pair})
        graph = ColoredGraph(
            vertices=tuple(vertices),
            red_edges=tuple(sorted(red)),
            blue_edges=tuple(sorted(blue)),
            red_families=red_set.infinite_families,
            blue_families=blue_set.infinite_families,
            window=window,
            provenance=GraphProvenance(symbol=sym, v1=v1, v2=v2),
        )
        self.logger.debug(
            f"🕸️ build_graph p={sym} v1={v1} v2={v2}: {len(vertices)} vertices, "
            f"{len(red)} red / {len(blue)} blue edges in {time.time() - start_time:.3f}s"
        )
        return graph

    def _single_family(self, g: ColoredGraph, color: EdgeColor) -> Optional[int]:
        families = g.families(color)
        if len(families) > 1:
            raise ConsistencyError(f"{color.value} slope carries several families {list(families)}")
        return families[0] if families else None

    def _check_ladder(self, g: ColoredGraph) -> Tuple[int, int]:
        s_red = self._single_family(g, RED)
        s_blue = self._single_family(g, BLUE)
        if g.finite_edges(RED) or g.finite_edges(BLUE):
            raise ConsistencyError("families of both colors alongside finite resonances are not supported")
        return s_red, s_blue

    def closure(self, g: ColoredGraph) -> _ExplicitGraph:
        """Finite part of G: finite edges plus family edges at their endpoints.

        Components of G not reached this way are isolated family pairs.
        """
        if g.is_ladder:
            raise ConsistencyError("ladder graphs have no finite closure")
        red = set(g.finite_edges(RED))
        blue = set(g.finite_edges(BLUE))
        core = {k for edges in (red, blue) for e in edges for k in e}
        if not g.red_families and not g.blue_families:
            core |= set(g.vertices)

        for color, edges in ((RED, red), (BLUE, blue)):
            s = self._single_family(g, color)
            if s is None:
                continue
            for k in sorted(core):
                if s - k != k:
                    edges.add(_edge(k, s - k))
        return _ExplicitGraph(core, red, blue)

    # Two-colored cycles

    def has_two_colored_cycle(self, g: ColoredGraph) -> Tuple[bool, Optional[CycleWitness]]:
        """Contract color classes; a cycle in the class incidence forest is an alternative cycle"""
        if g.is_ladder:
            self._check_ladder(g)
            return False, None
        witness = self._incidence_cycle(self.closure(g))
        if witness is None:
            return False, None
        if g.provenance is not None:
            witness = witness.model_copy(update={"red_slope": g.provenance.v1, "blue_slope": g.provenance.v2})
        return True, witness

    def _incidence_cycle(self, graph: _ExplicitGraph) -> Optional[CycleWitness]:
        classes = {}
        for color in EdgeColor:
            uf = UnionFind()
            for a, b in sorted(graph.edges[color]):
                uf.union(a, b)
            classes[color] = uf

        forest = UnionFind()
        links: Dict[Tuple[str, int], List[Tuple[Tuple[str, int], int]]] = {}
        for k in sorted(graph.vertices):
            if k not in classes[RED].parent or k not in classes[BLUE].parent:
                continue
            red_node = ("R", classes[RED].find(k))
            blue_node = ("B", classes[BLUE].find(k))
            if forest.union(red_node, blue_node):
                links.setdefault(red_node, []).append((blue_node, k))
                links.setdefault(blue_node, []).append((red_node, k))
                continue
            return self._expand_cycle(links, red_node, blue_node, k)
        return None

    def _expand_cycle(self, links, start, goal, closing_vertex: int) -> CycleWitness:
        """Turn the forest path start..goal plus the closing vertex into an alternative cycle"""
        previous = {start: None}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            if node == goal:
                break
            for nxt, vertex in links.get(node, ()):
                if nxt not in previous:
                    previous[nxt] = (node, vertex)
                    queue.append(nxt)

        nodes, path_vertices = [goal], []
        while previous[nodes[-1]] is not None:
            node, vertex = previous[nodes[-1]]
            path_vertices.append(vertex)
            nodes.append(node)
        nodes.reverse()
        path_vertices.reverse()
        if len(path_vertices) < 3:
            raise ConsistencyError(f"vertex {closing_vertex} shares both color classes with a neighbor")

        vertices = path_vertices + [closing_vertex]
        colors = [RED if node[0] == "R" else BLUE for node in nodes[1:]] + [RED]
        return self._canonical_cycle(vertices, colors)

    @staticmethod
    def _canonical_cycle(vertices: List[int], colors: List[EdgeColor]) -> CycleWitness:
        """Smallest vertex first, first edge red"""
        size = len(vertices)
        r = vertices.index(min(vertices))
        vertices = vertices[r:] + vertices[:r]
        colors = colors[r:] + colors[:r]
        if colors[0] is not RED:
            vertices = [vertices[0]] + vertices[1:][::-1]
            colors = [colors[size - 1 - i] for i in range(size)]
        return CycleWitness(vertices=tuple(vertices), edge_colors=tuple(colors))

    def naive_two_colored_cycle(self, g: ColoredGraph) -> bool:
        """Brute-force simple-cycle enumeration; test oracle for small graphs"""
        if g.is_ladder:
            return False
        graph = self.closure(g)
        if len(graph.vertices) > NAIVE_VERTEX_LIMIT:
            raise InvalidInputError(f"naive cycle search is limited to {NAIVE_VERTEX_LIMIT} vertices")
        adj = graph.neighbors()

        def walk(start: int, node: int, visited: Set[int], used: Set[EdgeColor], length: int) -> bool:
            for color in EdgeColor:
                for nxt in sorted(adj[node][color]):
                    if nxt == start and length >= 2 and len(used | {color}) == 2:
                        return True
                    if nxt > start and nxt not in visited:
                        visited.add(nxt)
                        if walk(start, nxt, visited, used | {color}, length + 1):
                            return True
                        visited.discard(nxt)
            return False

        return any(walk(start, start, {start}, set(), 0) for start in sorted(graph.vertices))

    # Components

    def component_summary(self, g: ColoredGraph) -> ComponentSummary:
        """Component sizes and g(v1, v2)"""
        if g.is_ladder:
            self._check_ladder(g)
            return ComponentSummary(sizes={}, unbounded=True, g_value=INFINITY)

        graph = self.closure(g)
        uf = UnionFind()
        for k in graph.vertices:
            uf.add(k)
        for color in EdgeColor:
            for a, b in graph.edges[color]:
                uf.union(a, b)
        sizes = Counter(len(group) for group in uf.groups())
        family_pairs = bool(g.red_families or g.blue_families)
        largest = max(sizes, default=0)
        if family_pairs:
            largest = max(largest, 2)
        return ComponentSummary(sizes=dict(sorted(sizes.items())), family_pairs=family_pairs, g_value=largest)

    # Reduction

    def reduce_graph(self, g: ColoredGraph) -> ColoredGraph:
        """Peel vertices whose edges are all one color until nothing changes"""
        if g.is_ladder:
            return self._reduce_ladder(g)
        kept = self._peel(self.closure(g))
        return self._to_colored(kept, g)

    def _peel(self, graph: _ExplicitGraph) -> _ExplicitGraph:
        adj = graph.neighbors()
        alive = set(graph.vertices)
        queue = deque(sorted(k for k in alive if not adj[k][RED] or not adj[k][BLUE]))
        while queue:
            k = queue.popleft()
            if k not in alive:
                continue
            alive.discard(k)
            for color in EdgeColor:
                for nbr in adj[k][color]:
                    adj[nbr][color].discard(k)
                    if nbr in alive and not adj[nbr][color]:
                        queue.append(nbr)
        return graph.induced(alive)

    def _reduce_ladder(self, g: ColoredGraph) -> ColoredGraph:
        """Keep chains that are infinite both ways; one-way chains end at a fixed point"""
        s_red, s_blue = self._check_ladder(g)
        shift = s_blue - s_red
        fixed = [s // 2 for s in (s_red, s_blue) if s % 2 == 0]
        two_way = {k for k in g.vertices if all((k - f) % shift for f in fixed)}
        return g.model_copy(update={
            "vertices": tuple(sorted(two_way)),
            "red_edges": tuple(e for e in g.red_edges if e[0] in two_way and e[1] in two_way),
            "blue_edges": tuple(e for e in g.blue_edges if e[0] in two_way and e[1] in two_way),
        })

    def portion(self, g: ColoredGraph, k: int, color: EdgeColor) -> ColoredGraph:
        """Vertices and edges reaching k along paths whose last edge has the given color"""
        graph = self.closure(g)
        adj = graph.neighbors()
        if k not in adj:
            raise InvalidInputError(f"vertex {k} is not in the graph")
        reached: Set[int] = set()
        queue = deque(sorted(adj[k][color]))
        reached.update(queue)
        while queue:
            node = queue.popleft()
            for nbrs in adj[node].values():
                for nxt in nbrs:
                    if nxt != k and nxt not in reached:
                        reached.add(nxt)
                        queue.append(nxt)
        part = graph.induced(reached | {k})
        return self._to_colored(part, g)

    def reduce_graph_by_portions(self, g: ColoredGraph) -> ColoredGraph:
        """Delete k when its red or its blue portion holds no two-colored cycle"""
        graph = self.closure(g)
        keep = set()
        for k in sorted(graph.vertices):
            red_part = self.closure(self.portion(g, k, RED))
            blue_part = self.closure(self.portion(g, k, BLUE))
            if self._incidence_cycle(red_part) and self._incidence_cycle(blue_part):
                keep.add(k)
        return self._to_colored(graph.induced(keep), g)

    @staticmethod
    def _to_colored(graph: _ExplicitGraph, source: ColoredGraph) -> ColoredGraph:
        return ColoredGraph(
            vertices=tuple(sorted(graph.vertices)),
            red_edges=tuple(sorted(graph.edges[RED])),
            blue_edges=tuple(sorted(graph.edges[BLUE])),
            window=source.window,
            provenance=source.provenance,
        )

    # Paths

    def find_alternative_path(self, g: ColoredGraph, n: int) -> PathWitness:
        """2n vertices joined red, blue, red, ...; ladders use the closed-form neighbor maps"""
        if n < 1:
            raise InvalidInputError(f"path length parameter n must be >= 1, got {n}")
        if g.is_ladder:
            vertices = self._ladder_path(g, n)
        else:
            vertices = self._search_path(g, n)
        colors = tuple(RED if i % 2 == 0 else BLUE for i in range(2 * n - 1))
        slopes = {}
        if g.provenance is not None:
            slopes = {"red_slope": g.provenance.v1, "blue_slope": g.provenance.v2}
        return PathWitness(vertices=tuple(vertices), edge_colors=colors, **slopes)

    def _ladder_path(self, g: ColoredGraph, n: int) -> List[int]:
        s_red, s_blue = self._check_ladder(g)
        attempts = 4 * (2 * n + abs(s_red) + abs(s_blue)) + 8
        for anchor in _anchors(attempts):
            # the anchor is the third vertex; walk back two steps to the first
            vertex = s_red - (s_blue - anchor)
            path = [vertex]
            for step in range(2 * n - 1):
                vertex = (s_red if step % 2 == 0 else s_blue) - vertex
                path.append(vertex)
            if len(set(path)) == len(path):
                return path
        raise WitnessNotFoundError(f"no alternative path of {2 * n} vertices on the ladder")

    def _search_path(self, g: ColoredGraph, n: int) -> List[int]:
        graph = self.closure(g)
        adj = graph.neighbors()
        target = 2 * n

        def extend(path: List[int], on_path: Set[int]) -> Optional[List[int]]:
            if len(path) == target:
                return path
            color = RED if len(path) % 2 == 1 else BLUE
            for nxt in sorted(adj[path[-1]][color]):
                if nxt not in on_path:
                    on_path.add(nxt)
                    found = extend(path + [nxt], on_path)
                    if found:
                        return found
                    on_path.discard(nxt)
            return None

        for start in sorted(graph.vertices):
            found = extend([start], {start})
            if found:
                return found

        s_red = self._single_family(g, RED)
        if n == 1 and s_red is not None:
            anchor = 0 if s_red != 0 else -1
            return [anchor, s_red - anchor]
        raise WitnessNotFoundError(f"no alternative path of {target} vertices in a graph of {len(graph.vertices)} vertices")

    # Validation

    def _check_steps(self, sym: PolynomialSymbol, vertices, colors, red_slope, blue_slope, closed: bool):
        if red_slope is None or blue_slope is None:
            raise InvalidInputError("witness carries no slopes to validate against")
        size = len(vertices)
        if len(set(vertices)) != size:
            raise ConsistencyError(f"witness repeats a vertex: {list(vertices)}")
        steps = size if closed else size - 1
        if len(colors) != steps:
            raise ConsistencyError(f"witness has {len(colors)} colors for {steps} edges")
        for i in range(steps):
            if i and colors[i] is colors[i - 1]:
                raise ConsistencyError(f"colors do not alternate at edge {i}")
            a, b = vertices[i], vertices[(i + 1) % size]
            slope = red_slope if colors[i] is RED else blue_slope
            if self.symbol_service.divided_diff(sym, slope, a, b) != 0:
                raise ConsistencyError(f"{a} and {b} do not resonate under v = {slope}")
        if closed and colors[-1] is colors[0]:
            raise ConsistencyError("cycle does not alternate across its closing edge")

    def validate_cycle(self, sym: PolynomialSymbol, cycle: CycleWitness) -> bool:
        if len(cycle.vertices) < 4 or len(cycle.vertices) % 2:
            raise ConsistencyError(f"alternative cycle needs even length >= 4, got {len(cycle.vertices)}")
        self._check_steps(sym, cycle.vertices, cycle.edge_colors, cycle.red_slope, cycle.blue_slope, closed=True)
        return True

    def validate_path(self, sym: PolynomialSymbol, path: PathWitness) -> bool:
        if path.edge_colors and path.edge_colors[0] is not RED:
            raise ConsistencyError("alternative path must start with a red edge")
        self._check_steps(sym, path.vertices, path.edge_colors, path.red_slope, path.blue_slope, closed=False)
        return True
