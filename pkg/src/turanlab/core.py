"""Dense bitset graphs and basic structural operations.

Graphs are undirected and simple, on vertex set 0..n-1, stored as one integer
bitmask per vertex (bit u of ``rows[v]`` means u and v are adjacent). That
representation keeps neighborhood intersection and popcount cheap, which is
what the pattern checkers and the search engines lean on throughout.

Conventions:
  * vertices are 0-based ints; edge iteration is ascending (u, v) with u < v
  * mutating methods exist for the construction phase only; once a graph is
    handed to checkers or searches, treat it as immutable (rows are shared)
  * averages are exact Fractions, never floats
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MAX_VERTICES = 1 << 16


class GraphError(ValueError):
    """Raised for malformed graph operations (bad vertex, loop, size cap)."""


def _bits(mask: int):
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SimpleGraph:
    """Undirected simple graph with bit-row adjacency."""

    __slots__ = ("n", "rows", "m")

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a non-negative int, got {n!r}")
        if n > MAX_VERTICES:
            raise GraphError(f"graph too large for dense representation: n={n} > {MAX_VERTICES}")
        self.n = n
        self.rows: list[int] = [0] * n
        self.m = 0

    @classmethod
    def from_edges(cls, n: int, edges) -> "SimpleGraph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    @classmethod
    def from_rows(cls, n: int, rows) -> "SimpleGraph":
        """Adopt bit rows directly; validates symmetry and looplessness."""
        g = cls(n)
        rows = list(rows)
        if len(rows) != n:
            raise GraphError(f"expected {n} rows, got {len(rows)}")
        deg_total = 0
        for v, row in enumerate(rows):
            if row >> n:
                raise GraphError(f"row {v} has bits beyond vertex {n - 1}")
            if (row >> v) & 1:
                raise GraphError(f"row {v} encodes a loop")
            deg_total += row.bit_count()
        below = 0
        for v, row in enumerate(rows):
            for u in _bits(row):
                if u >= v:
                    break
                if not (rows[u] >> v) & 1:
                    raise GraphError(f"rows are asymmetric at ({u}, {v})")
                below += 1
        # every below-diagonal bit has its mirror; equal counts force the
        # above-diagonal bits to be exactly those mirrors
        if deg_total != 2 * below:
            raise GraphError("rows are asymmetric")
        g.rows = rows
        g.m = deg_total // 2
        return g

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def add_edge(self, u: int, v: int) -> "SimpleGraph":
        """Add edge {u, v}. Loops are rejected; re-adding is a no-op."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"loop at vertex {u} rejected")
        if not (self.rows[u] >> v) & 1:
            self.rows[u] |= 1 << v
            self.rows[v] |= 1 << u
            self.m += 1
        return self

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            hi = self.rows[v] >> (v + 1)
            u = v + 1
            while hi:
                if hi & 1:
                    out.append((v, u))
                hi >>= 1
                u += 1
        return out

    def copy(self) -> "SimpleGraph":
        g = SimpleGraph(self.n)
        g.rows = list(self.rows)
        g.m = self.m
        return g

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.m})"


class BipartiteGraph:
    """A SimpleGraph together with a two-sided vertex partition.

    side[v] is 0 or 1; every edge must cross sides (checked at build).
    """

    __slots__ = ("graph", "side")

    def __init__(self, graph: SimpleGraph, side) -> None:
        side = tuple(side)
        if len(side) != graph.n:
            raise GraphError(f"side array length {len(side)} != n={graph.n}")
        if any(s not in (0, 1) for s in side):
            raise GraphError("side labels must be 0 or 1")
        for u, v in graph.edges():
            if side[u] == side[v]:
                raise GraphError(f"edge ({u}, {v}) does not cross the bipartition")
        self.graph = graph
        self.side = side

    @classmethod
    def from_edges(cls, n: int, edges, side) -> "BipartiteGraph":
        return cls(SimpleGraph.from_edges(n, edges), side)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def rows(self):
        return self.graph.rows

    def degree(self, v: int) -> int:
        return self.graph.degree(v)

    def neighbors(self, v: int) -> list[int]:
        return self.graph.neighbors(v)

    def has_edge(self, u: int, v: int) -> bool:
        return self.graph.has_edge(u, v)

    def edges(self) -> list[tuple[int, int]]:
        return self.graph.edges()

    def side_vertices(self, s: int) -> list[int]:
        return [v for v in range(self.graph.n) if self.side[v] == s]

    def __repr__(self) -> str:
        n0 = len(self.side_vertices(0))
        return f"BipartiteGraph(n={self.n}, m={self.m}, sides=({n0}, {self.n - n0}))"


@dataclass(frozen=True)
class DegreeStats:
    min_degree: int
    max_degree: int
    average: Fraction


@dataclass(frozen=True)
class LayerDecomposition:
    """BFS layers from a root: layers[0] == (root,), then N_1, N_2, ..."""

    root: int
    layers: tuple[tuple[int, ...], ...]
    unreachable: tuple[int, ...]

    def layer(self, i: int) -> tuple[int, ...]:
        return self.layers[i] if i < len(self.layers) else ()


def degree_stats(g: SimpleGraph) -> DegreeStats:
    if g.n == 0:
        raise GraphError("degree_stats undefined for the empty vertex set")
    degs = g.degrees()
    return DegreeStats(min(degs), max(degs), Fraction(2 * g.m, g.n))


def neighborhood_layers(g: SimpleGraph, root: int) -> LayerDecomposition:
    """Partition reachable vertices by BFS distance from root."""
    g._check_vertex(root)
    layers = [(root,)]
    seen = 1 << root
    frontier = 1 << root
    while True:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        nxt &= ~seen
        if not nxt:
            break
        layers.append(tuple(_bits(nxt)))
        seen |= nxt
        frontier = nxt
    full = (1 << g.n) - 1
    return LayerDecomposition(root, tuple(layers), tuple(_bits(full & ~seen)))


def induced_subgraph(g: SimpleGraph, vertices) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Induced subgraph on the given vertex set.

    Returns (subgraph, old_of_new) where old_of_new[i] is the original index
    of the subgraph's vertex i; the map is ascending, so indices are stable.
    """
    keep = sorted(set(vertices))
    for v in keep:
        g._check_vertex(v)
    pos = {v: i for i, v in enumerate(keep)}
    sub = SimpleGraph(len(keep))
    for i, v in enumerate(keep):
        row = 0
        for u in _bits(g.rows[v]):
            j = pos.get(u)
            if j is not None:
                row |= 1 << j
        sub.rows[i] = row
    sub.m = sum(r.bit_count() for r in sub.rows) // 2
    return sub, tuple(keep)


def min_degree_peel(g: SimpleGraph, tau) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Repeatedly delete a vertex of minimum degree while that degree < tau.

    Ties break to the lowest index. tau may be an int or a Fraction; the
    result may be empty. Returns (peeled graph, surviving original indices).
    """
    alive = (1 << g.n) - 1
    rows = list(g.rows)
    degs = g.degrees()
    count = g.n
    while count:
        best = -1
        bd = None
        for v in _bits(alive):
            if bd is None or degs[v] < bd:
                bd = degs[v]
                best = v
        if bd >= tau:
            break
        alive &= ~(1 << best)
        count -= 1
        for u in _bits(rows[best]):
            rows[u] &= ~(1 << best)
            degs[u] -= 1
        rows[best] = 0
        degs[best] = 0
    return induced_subgraph(g, _bits(alive))


def two_coloring(g: SimpleGraph) -> list[int] | None:
    """A proper 2-coloring (component roots colored 0), or None if none exists."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in _bits(g.rows[v]):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def bipartite_double_cover(g: SimpleGraph) -> BipartiteGraph:
    """The double cover on V x {0, 1}: (u, 0) ~ (v, 1) iff u ~ v in g.

    Vertex (v, s) maps to index v + s * n. The cover is always bipartite, so
    it contains no odd cycle regardless of g.
    """
    n = g.n
    cover = SimpleGraph(2 * n)
    for u, v in g.edges():
        cover.add_edge(u, n + v)
        cover.add_edge(v, n + u)
    return BipartiteGraph(cover, [0] * n + [1] * n)
