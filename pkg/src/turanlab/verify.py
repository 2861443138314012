"""Computational audits of the structural claims behind the edge bounds.

Every check here is a falsification instrument: it takes a concrete graph,
tests the hypotheses a claim needs, and then compares both sides of the
claimed inequality with exact arithmetic (integers and fractions, never
floats). The verdict is one of

* ``holds``                the hypotheses and the inequality both check out
* ``hypotheses-not-met``   the graph is outside the claim's scope; the
                           failed hypotheses are listed and nothing is
                           asserted about the inequality
* ``VIOLATION``            hypotheses hold but the inequality fails; the
                           report carries the concrete evidence

A ``VIOLATION`` from any checker on any input would be a counterexample to
a theorem, so tests treat it as a hard failure.

Conventions: a 3-walk is an ordered vertex sequence joined by edges with
repeats allowed; a 3-path additionally has all four vertices distinct.
Layers N1, N2, N3 are the breadth-first distance classes from a root.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from turanlab import kernels, patterns
from turanlab.core import SimpleGraph, _bits, neighborhood_layers

HOLDS = "holds"
SKIPPED = "hypotheses-not-met"
VIOLATION = "VIOLATION"
INFO = "informational"


class VerifyError(ValueError):
    pass


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    verdict: str
    lhs: object = None
    rhs: object = None
    failed_hypotheses: tuple = ()
    details: dict = field(default_factory=dict, compare=False)

    def ok(self) -> bool:
        return self.verdict != VIOLATION


def _avg_degree(g: SimpleGraph) -> Fraction:
    return Fraction(2 * g.m, g.n)


def _mask(vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def _hypotheses(g: SimpleGraph, wanted) -> tuple[tuple[str, ...], dict]:
    """wanted: list of ('no-C5', length) style tags; returns failures."""
    failed = []
    evidence = {}
    for tag in wanted:
        kind = tag[0]
        if kind == "cycle-free":
            w = patterns.contains_cycle_of_length(g, tag[1])
            label = f"no C{tag[1]}"
        elif kind == "kst-free":
            w = patterns.contains_kst(g, tag[1], tag[2])
            label = f"no K_{tag[1]},{tag[2]} subgraph"
        elif kind == "induced-kst-free":
            w = patterns.contains_induced_kst(g, tag[1], tag[2])
            label = f"no induced K_{tag[1]},{tag[2]}"
        elif kind == "max-degree":
            bound = tag[1]
            dmax = max((g.degree(v) for v in range(g.n)), default=0)
            w = None if Fraction(dmax) <= bound else (dmax,)
            label = f"max degree <= {bound}"
        elif kind == "min-degree":
            bound = tag[1]
            dmin = min((g.degree(v) for v in range(g.n)), default=0)
            w = None if Fraction(dmin) >= bound else (dmin,)
            label = f"min degree >= {bound}"
        else:  # pragma: no cover - internal misuse
            raise VerifyError(f"unknown hypothesis tag {tag!r}")
        if w is not None:
            failed.append(label)
            evidence[label] = getattr(w, "vertices", w)
    return tuple(failed), evidence


def count_3_walks(g: SimpleGraph) -> int:
    """Ordered walks on 3 edges: sum of deg(u)deg(v) over ordered adjacent
    pairs (the middle edge determines the count of extensions both ways)."""
    degs = g.degrees()
    return 2 * sum(degs[u] * degs[v] for u, v in g.edges())


def walks_from_vertex(g: SimpleGraph, root: int) -> int:
    degs = g.degrees()
    return sum(degs[v2] for v1 in g.neighbors(root) for v2 in g.neighbors(v1))


def walks_from_edge(g: SimpleGraph, x: int, y: int) -> int:
    """3-walks whose first edge is {x, y}, both orientations."""
    if not g.has_edge(x, y):
        raise VerifyError(f"({x}, {y}) is not an edge")
    degs = g.degrees()
    return sum(degs[z] for z in g.neighbors(y)) + sum(degs[z] for z in g.neighbors(x))


def blakley_roy_check(g: SimpleGraph) -> ClaimReport:
    """Every graph has at least n * (average degree)^3 ordered 3-walks."""
    claim = "3-walk count >= n * avg_degree^3"
    if g.n == 0:
        return ClaimReport(claim, HOLDS, 0, 0, details={"note": "empty graph"})
    walks = count_3_walks(g)
    davg = _avg_degree(g)
    rhs = g.n * davg**3  # = 8 m^3 / n^2, exact
    per_vertex = [walks_from_vertex(g, v) for v in range(g.n)]
    best = max(range(g.n), key=lambda v: (per_vertex[v], -v))
    details = {
        "average_degree": davg,
        "best_start_vertex": best,
        "walks_from_best_vertex": per_vertex[best],
        "pigeonhole_floor": davg**3,
    }
    verdict = HOLDS if walks >= rhs else VIOLATION
    if per_vertex and per_vertex[best] < davg**3:
        verdict = VIOLATION  # pigeonhole corollary cannot fail alone, but audit it
        details["note"] = "no vertex reaches the average-degree-cubed floor"
    return ClaimReport(claim, verdict, walks, rhs, details=details)


@dataclass(frozen=True)
class WalkClassification:
    """3-walks from a root, split by where steps two and three land.

    total = good + returning + within_first_layer + second_to_first +
    within_second_layer; within_first_layer can only be hit when the root
    lies in a triangle.
    """

    root: int
    total: int
    good: int  # v1 in N1, v2 in N2, v3 in N3
    returning: int  # v2 = root
    within_first_layer: int  # v2 in N1 (needs an edge inside N1)
    second_to_first: int  # v2 in N2, v3 back in N1
    within_second_layer: int  # v2 in N2, v3 in N2


def _classify_walks(g: SimpleGraph, root: int) -> WalkClassification:
    layers = neighborhood_layers(g, root)
    n1 = _mask(layers.layer(1))
    n2 = _mask(layers.layer(2))
    n3 = _mask(layers.layer(3))
    good = returning = within1 = back1 = within2 = 0
    for v1 in g.neighbors(root):
        for v2 in g.neighbors(v1):
            if v2 == root:
                returning += g.degree(root)
            elif (n1 >> v2) & 1:
                within1 += g.degree(v2)
            else:  # v2 in N2 by bipartite-free BFS structure
                row = g.rows[v2]
                back1 += (row & n1).bit_count()
                within2 += (row & n2).bit_count()
                good += (row & n3).bit_count()
    total = walks_from_vertex(g, root)
    cls = WalkClassification(root, total, good, returning, within1, back1, within2)
    if total != good + returning + within1 + back1 + within2:  # pragma: no cover
        raise VerifyError(f"walk classification does not add up at root {root}: {cls}")
    return cls


def classify_3_walks_from_vertex(
    g: SimpleGraph, root: int, t: int, k: int
) -> tuple[WalkClassification, ClaimReport]:
    """Split the 3-walks from root by layer, then bound the ones that miss
    the third layer.

    Triangle-freeness is a hard precondition (it makes the split
    exhaustive), so a triangle raises. The remaining hypotheses
    (C_{2k+1}-free, K_{2,t}-free, max degree <= 4d) only gate the claim:
    when one fails, the stats are still returned with a skipped report.
    """
    if k < 2 or t < 2:
        raise VerifyError(f"need k >= 2 and t >= 2, got k={k}, t={t}")
    tri = patterns.contains_cycle_of_length(g, 3)
    if tri is not None:
        raise VerifyError(f"graph has a triangle on vertices {tri.vertices}")
    cls = _classify_walks(g, root)
    claim = f"not-good 3-walks from a vertex <= 32(4k-7)(t-1)d^2 (k={k}, t={t})"
    if g.m == 0:
        return cls, ClaimReport(claim, HOLDS, 0, 0, details={"note": "no walks"})
    davg = _avg_degree(g)
    failed, evidence = _hypotheses(
        g,
        [
            ("cycle-free", 2 * k + 1),
            ("kst-free", 2, t),
            ("max-degree", 4 * davg),
        ],
    )
    if failed:
        return cls, ClaimReport(claim, SKIPPED, failed_hypotheses=failed, details=evidence)
    lhs = cls.total - cls.good
    rhs = 32 * (4 * k - 7) * (t - 1) * davg**2
    details = {
        "root": root,
        "classification": cls,
        "piece_bounds": {
            "returning": 16 * davg**2,
            "second_to_first": 16 * (t - 1) * davg**2,
            "within_second_layer": 64 * (k - 2) * (t - 1) * davg**2,
        },
    }
    report = ClaimReport(claim, HOLDS if lhs <= rhs else VIOLATION, lhs, rhs, details=details)
    return cls, report


def not_good_walks_check(g: SimpleGraph, k: int, t: int) -> ClaimReport:
    """Suite-friendly wrapper: run the walk classification claim from the
    busiest vertex, turning a triangle into hypotheses-not-met instead of
    an error."""
    if k < 2 or t < 2:
        raise VerifyError(f"need k >= 2 and t >= 2, got k={k}, t={t}")
    claim = f"not-good 3-walks from busiest vertex <= 32(4k-7)(t-1)d^2 (k={k}, t={t})"
    if g.n == 0 or g.m == 0:
        return ClaimReport(claim, HOLDS, 0, 0, details={"note": "no walks"})
    failed, evidence = _hypotheses(g, [("cycle-free", 3)])
    if failed:
        return ClaimReport(claim, SKIPPED, failed_hypotheses=failed, details=evidence)
    root = max(range(g.n), key=lambda v: (walks_from_vertex(g, v), -v))
    _, report = classify_3_walks_from_vertex(g, root, t, k)
    return report


def n2_edge_bound_check(g: SimpleGraph, root: int, k: int) -> ClaimReport:
    """In a triangle-free, C_{2k+1}-free graph, the second neighborhood of
    any root induces at most (2k-4)|N2| edges.

    The audit follows the argument operationally: assign each second-layer
    vertex to its least-index first-layer neighbor, check each parent class
    is independent, two-color the classes so at least half the induced
    edges become bichromatic (greedy, one class at a time), confirm the
    bichromatic graph has no path on 2k-2 vertices, and apply the
    path-free edge bound to it.
    """
    if k < 2:
        raise VerifyError(f"need k >= 2, got k={k}")
    claim = f"edges inside second layer <= (2k-4)|N2| (k={k})"
    failed, evidence = _hypotheses(g, [("cycle-free", 3), ("cycle-free", 2 * k + 1)])
    if failed:
        return ClaimReport(claim, SKIPPED, failed_hypotheses=failed, details=evidence)
    layers = neighborhood_layers(g, root)
    n1 = list(layers.layer(1))
    n2 = list(layers.layer(2))
    n2_mask = _mask(n2)
    inner_edges = [
        (u, v) for u in n2 for v in _bits(g.rows[u] & n2_mask) if u < v
    ]
    e2 = len(inner_edges)
    n1_mask = _mask(n1)
    parent = {}
    for w in n2:
        parent[w] = _least_bit(g.rows[w] & n1_mask)
    classes = {}
    for w, p in parent.items():
        classes.setdefault(p, []).append(w)
    for p, members in classes.items():
        mm = _mask(members)
        for w in members:
            if g.rows[w] & mm:  # triangle with the parent; ruled out above
                raise VerifyError(f"parent class of {p} is not independent")
    # greedy bichromatic coloring over classes in parent order, then local
    # search: flip single classes while a flip gains bichromatic edges
    color = {}
    class_of = {w: p for p, ms in classes.items() for w in ms}
    for p in sorted(classes):
        to_red = to_blue = 0
        for w in classes[p]:
            for u in _bits(g.rows[w] & n2_mask):
                cp = class_of[u]
                if cp in color:
                    if color[cp] == 0:
                        to_red += 1
                    else:
                        to_blue += 1
        color[p] = 1 if to_red >= to_blue else 0
    while True:
        flipped = False
        for p in sorted(classes):
            same = diff = 0
            for w in classes[p]:
                for u in _bits(g.rows[w] & n2_mask):
                    if color[class_of[u]] == color[p]:
                        same += 1
                    else:
                        diff += 1
            if same > diff:
                color[p] = 1 - color[p]
                flipped = True
        if not flipped:
            break
    b_edges = [
        (u, v)
        for u, v in inner_edges
        if color[class_of[u]] != color[class_of[v]]
    ]
    bichromatic = len(b_edges)
    details = {
        "n1_size": len(n1),
        "n2_size": len(n2),
        "edges_inside_n2": e2,
        "class_count": len(classes),
        "bichromatic_edges": bichromatic,
    }
    # at a local optimum every class sees at least as many cross edges as
    # monochromatic ones, so at least half of e2 is bichromatic
    if 2 * bichromatic < e2:
        raise VerifyError(f"coloring lost more than half the edges: {details}")
    sub, old = _induced_on(sorted({v for e in b_edges for v in e}), b_edges)
    path = kernels.has_path_on(sub.rows, sub.n, 2 * k - 2) if sub.n else None
    if path is not None:
        details["path_on_2k_minus_2"] = tuple(old[v] for v in path)
        return ClaimReport(claim, VIOLATION, e2, (2 * k - 4) * len(n2), details=details)
    details["no_path_on"] = 2 * k - 2
    lhs, rhs = e2, (2 * k - 4) * len(n2)
    return ClaimReport(claim, HOLDS if lhs <= rhs else VIOLATION, lhs, rhs, details=details)


def erdos_gallai_path_check(g: SimpleGraph, p: int) -> ClaimReport:
    """A graph with no path on p vertices has at most (p-2)/2 * n edges."""
    if p < 2:
        raise VerifyError(f"need p >= 2, got {p}")
    claim = f"no path on {p} vertices implies m <= (p-2)/2 * n"
    path = kernels.has_path_on(g.rows, g.n, p)
    if path is not None:
        return ClaimReport(
            claim,
            SKIPPED,
            failed_hypotheses=(f"graph contains a path on {p} vertices",),
            details={"path": path},
        )
    lhs, rhs = g.m, Fraction(p - 2, 2) * g.n
    return ClaimReport(claim, HOLDS if lhs <= rhs else VIOLATION, lhs, rhs)


def limited_cherries_check(g: SimpleGraph, t: int) -> ClaimReport:
    """C5-free with no induced K_{2,t}: non-adjacent vertex pairs share at
    most max(3,t)-1 neighbors."""
    if t < 2:
        raise VerifyError(f"need t >= 2, got {t}")
    claim = f"non-adjacent codegree <= max(3,{t})-1"
    cap = max(3, t) - 1
    worst, pair = patterns.max_codegree_nonadjacent(g)
    failed, evidence = _hypotheses(g, [("cycle-free", 5), ("induced-kst-free", 2, t)])
    if failed:
        # the measurement is still informative, so it rides along unasserted
        return ClaimReport(
            claim, SKIPPED, worst, cap, failed_hypotheses=failed,
            details=dict(evidence, pair=pair),
        )
    details = {"pair": pair}
    return ClaimReport(claim, HOLDS if worst <= cap else VIOLATION, worst, cap, details=details)


@dataclass(frozen=True)
class TriangleDecomposition:
    """Edge split of a graph into its triangle-supported part and the rest."""

    triangle_part: SimpleGraph
    remainder: SimpleGraph

    @property
    def triangle_edges(self) -> int:
        return self.triangle_part.m

    @property
    def remainder_edges(self) -> int:
        return self.remainder.m


def triangle_edge_decomposition(g: SimpleGraph) -> TriangleDecomposition:
    """Split edges by whether they lie in some triangle. The remainder is
    triangle-free: a triangle there would be one in g, putting all three
    of its edges into the other part."""
    tri, rest = [], []
    for u, v in g.edges():
        (tri if g.rows[u] & g.rows[v] else rest).append((u, v))
    dec = TriangleDecomposition(
        SimpleGraph.from_edges(g.n, tri), SimpleGraph.from_edges(g.n, rest)
    )
    if patterns.count_triangles(dec.remainder):  # pragma: no cover
        raise VerifyError("remainder is not triangle-free")
    if dec.triangle_edges + dec.remainder_edges != g.m:  # pragma: no cover
        raise VerifyError("decomposition lost edges")
    return dec


def kst_removal_check(g: SimpleGraph, s: int, t: int) -> ClaimReport:
    """If g has no induced K_{s,t}, removing every triangle edge leaves no
    K_{s,t} at all: a surviving copy would need an edge inside a side,
    which makes a triangle with two of its edges."""
    if s < 1 or t < s:
        raise VerifyError(f"need 1 <= s <= t, got s={s}, t={t}")
    claim = f"triangle-edge removal kills every K_{s},{t} (induced-free input)"
    failed, evidence = _hypotheses(g, [("induced-kst-free", s, t)])
    if failed:
        return ClaimReport(claim, SKIPPED, failed_hypotheses=failed, details=evidence)
    dec = triangle_edge_decomposition(g)
    w = patterns.contains_kst(dec.remainder, s, t)
    details = {
        "triangle_edges": dec.triangle_edges,
        "remainder_edges": dec.remainder_edges,
    }
    if w is not None:
        details["witness"] = w.vertices
        return ClaimReport(claim, VIOLATION, details=details)
    return ClaimReport(claim, HOLDS, details=details)


def gyori_li_triangle_report(g: SimpleGraph, k: int) -> ClaimReport:
    """Triangle count against n^(1+1/k), informational only: the constant
    in the known cap for C_{2k+1}-free graphs is not pinned down here."""
    if k < 2:
        raise VerifyError(f"need k >= 2, got {k}")
    claim = f"triangles / n^(1+1/{k}) (no asserted constant)"
    failed, evidence = _hypotheses(g, [("cycle-free", 2 * k + 1)])
    tri = patterns.count_triangles(g)
    details = {
        "triangles": tri,
        "normalized": tri / g.n ** (1 + 1 / k) if g.n else 0.0,
    }
    if failed:
        return ClaimReport(claim, SKIPPED, failed_hypotheses=failed, details=dict(evidence, **details))
    return ClaimReport(claim, INFO, lhs=tri, details=details)


@dataclass(frozen=True)
class Good3PathStats:
    """3-paths whose first edge is {x, y} (both orientations). A path is
    good when its second and fourth vertices are non-adjacent."""

    edge: tuple[int, int]
    walks: int
    paths: int
    good: int
    per_last_vertex: dict = field(compare=False)


def _good_3path_stats(g: SimpleGraph, x: int, y: int) -> Good3PathStats:
    if not g.has_edge(x, y):
        raise VerifyError(f"({x}, {y}) is not an edge")
    per_last = {}
    paths = good = 0
    exclude = (1 << x) | (1 << y)
    for a, b in ((x, y), (y, x)):  # walk a -> b -> z -> w
        for z in _bits(g.rows[b] & ~exclude):
            cands = g.rows[z] & ~exclude & ~(1 << z)
            paths += cands.bit_count()
            goods = cands & ~g.rows[b]
            good += goods.bit_count()
            for w in _bits(goods):
                per_last[w] = per_last.get(w, 0) + 1
    return Good3PathStats((x, y), walks_from_edge(g, x, y), paths, good, per_last)


def good_3path_stats(g: SimpleGraph, x: int, y: int, t: int) -> tuple[Good3PathStats, ClaimReport]:
    """Count the 3-paths whose first edge is {x, y} and whose second and
    fourth vertices are non-adjacent, per last vertex. When the graph is
    C5-free with no induced K_{2,t}, asserts the per-endpoint cap
    max(3,t)-1; otherwise the stats come back with a skipped report."""
    if t < 2:
        raise VerifyError(f"need t >= 2, got {t}")
    st = _good_3path_stats(g, x, y)
    cap = max(3, t) - 1
    claim = f"good 3-paths per (first edge, last vertex) <= {cap}"
    failed, evidence = _hypotheses(g, [("cycle-free", 5), ("induced-kst-free", 2, t)])
    if failed:
        return st, ClaimReport(claim, SKIPPED, failed_hypotheses=failed, details=evidence)
    worst = max(st.per_last_vertex.values(), default=0)
    details = {"edge": st.edge, "good_paths": st.good}
    report = ClaimReport(claim, HOLDS if worst <= cap else VIOLATION, worst, cap, details=details)
    return st, report


def max_good_3path_edge(g: SimpleGraph, t: int, k: int = 2):
    """Find the edge starting the most good 3-paths; under the standing
    hypotheses (C_{2k+1}-free, no induced K_{2,t}, min degree >= d/2, max
    degree <= 6d) assert that count is at least 2d^2 - 84d, vacuously once
    the right side is not positive. Returns (edge, count, report)."""
    if t < 2:
        raise VerifyError(f"need t >= 2, got {t}")
    if k < 2:
        raise VerifyError(f"need k >= 2, got {k}")
    claim = "some edge starts >= 2d^2 - 84d good 3-paths"
    if g.m == 0:
        raise VerifyError("graph has no edges")
    best = None
    for u, v in g.edges():
        st = _good_3path_stats(g, u, v)
        if best is None or st.good > best.good:
            best = st
    davg = _avg_degree(g)
    failed, evidence = _hypotheses(
        g,
        [
            ("cycle-free", 2 * k + 1),
            ("induced-kst-free", 2, t),
            ("min-degree", davg / 2),
            ("max-degree", 6 * davg),
        ],
    )
    if failed:
        report = ClaimReport(claim, SKIPPED, failed_hypotheses=failed, details=evidence)
        return best.edge, best.good, report
    rhs = 2 * davg**2 - 84 * davg
    details = {"best_edge": best.edge, "good_paths": best.good}
    if rhs <= 0:
        details["note"] = "right side not positive at this size; holds vacuously"
        report = ClaimReport(claim, HOLDS, best.good, rhs, details=details)
    else:
        report = ClaimReport(
            claim, HOLDS if best.good >= rhs else VIOLATION, best.good, rhs, details=details
        )
    return best.edge, best.good, report


def good_3path_endpoint_check(g: SimpleGraph, t: int, edge=None) -> ClaimReport:
    """C5-free with no induced K_{2,t}: for any first edge, at most
    max(3,t)-1 good 3-paths share a last vertex. Checks one edge or all."""
    if t < 2:
        raise VerifyError(f"need t >= 2, got {t}")
    cap = max(3, t) - 1
    claim = f"good 3-paths per (first edge, last vertex) <= {cap}"
    failed, evidence = _hypotheses(g, [("cycle-free", 5), ("induced-kst-free", 2, t)])
    if failed:
        return ClaimReport(claim, SKIPPED, failed_hypotheses=failed, details=evidence)
    edges = [edge] if edge is not None else g.edges()
    worst = 0
    worst_at = None
    for u, v in edges:
        st = _good_3path_stats(g, u, v)
        for w, c in st.per_last_vertex.items():
            if c > worst:
                worst, worst_at = c, (u, v, w)
    details = {"worst_at": worst_at}
    return ClaimReport(claim, HOLDS if worst <= cap else VIOLATION, worst, cap, details=details)


def _least_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _induced_on(vertices, edges):
    """Subgraph on the listed vertices with exactly the listed edges."""
    idx = {v: i for i, v in enumerate(vertices)}
    sub = SimpleGraph.from_edges(len(vertices), [(idx[u], idx[v]) for u, v in edges])
    return sub, list(vertices)
