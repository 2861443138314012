"""Certified extremal constructions.

Each construction comes in layers: ``build_x`` assembles the graph,
``certify_x`` re-checks the structural claims on a finished graph and
raises ``ConstructionError`` if any fails, and the public entry point runs
both. Certification is deliberately independent of the build path: it
checks degrees, codegrees, and forbidden patterns directly on the
adjacency structure, so a bug in a builder cannot self-certify.

Every certificate carries a reference value of the matching main-term
edge formula and the achieved ratio. The ratio is reported, never
asserted: the clean power formulas drop lower-order terms, and small
graphs legitimately sit on either side of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from turanlab import bounds, patterns
from turanlab.core import BipartiteGraph, SimpleGraph, bipartite_double_cover
from turanlab.fields import FieldError, FiniteField
from turanlab.patterns import FamilySpec, parse_family


class ConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class ConstructionCertificate:
    """Outcome of certifying one built graph.

    graph is the certified object itself; family is the forbidden family
    it was verified to avoid; properties lists the further structural
    facts checked (degrees, codegrees, counts). reference_bound is the
    main-term formula value at this size and edge_to_bound_ratio is
    m divided by it.
    """

    name: str
    parameters: dict = field(compare=False)
    graph: object = field(compare=False)
    family: FamilySpec
    n: int
    m: int
    properties: tuple[str, ...]
    reference_bound: float

    @property
    def edge_to_bound_ratio(self) -> float:
        return self.m / self.reference_bound


def _field(q: int) -> FiniteField:
    try:
        return FiniteField(q)
    except FieldError as e:
        raise ConstructionError(str(e)) from e


def _check_free(g, family: FamilySpec) -> None:
    w = patterns.is_family_free(g, family)
    if w is not None:
        raise ConstructionError(f"contains {w.pattern} on vertices {w.vertices}")


def _projective_points(f: FiniteField) -> list[tuple[int, int, int]]:
    """Canonical representatives (first nonzero coordinate = 1)."""
    q = f.q
    pts = [(1, y, z) for y in range(q) for z in range(q)]
    pts += [(0, 1, z) for z in range(q)]
    pts.append((0, 0, 1))
    return pts


def build_projective_plane_incidence(q: int) -> BipartiteGraph:
    """Point-line incidence graph of the projective plane of order q.

    Side 0 holds the q^2+q+1 points, side 1 the q^2+q+1 lines (same
    canonical triples, read as line coefficients); point (x,y,z) lies on
    line (a,b,c) when xa+yb+zc = 0.
    """
    f = _field(q)
    pts = _projective_points(f)
    n1 = len(pts)
    edges = []
    for i, (x, y, z) in enumerate(pts):
        for j, (a, b, c) in enumerate(pts):
            s = f.add(f.add(f.mul(x, a), f.mul(y, b)), f.mul(z, c))
            if s == f.zero:
                edges.append((i, n1 + j))
    side = [0] * n1 + [1] * n1
    return BipartiteGraph.from_edges(2 * n1, edges, side)


def certify_projective_plane_incidence(g: BipartiteGraph, q: int) -> ConstructionCertificate:
    n1 = q * q + q + 1
    props = []
    if g.n != 2 * n1 or sorted(g.side) != [0] * n1 + [1] * n1:
        raise ConstructionError(f"expected two sides of {n1} vertices")
    props.append(f"two sides of {n1} vertices")
    if any(g.degree(v) != q + 1 for v in range(g.n)):
        raise ConstructionError(f"some degree differs from {q + 1}")
    props.append(f"every degree = {q + 1}")
    for s in (0, 1):
        vs = g.side_vertices(s)
        for i, u in enumerate(vs):
            for v in vs[i + 1:]:
                if (g.rows[u] & g.rows[v]).bit_count() != 1:
                    raise ConstructionError(
                        f"same-side pair ({u}, {v}) does not share exactly one neighbor"
                    )
    props.append("every same-side pair shares exactly one neighbor")
    family = parse_family("C4")
    _check_free(g, family)
    props.append("no 4-cycle")
    if patterns.contains_cycle_of_length(g, 6) is None:
        raise ConstructionError("no 6-cycle found")
    props.append("girth 6")
    ref = bounds.asymptotic_bound(g.n, 2, 2)
    return ConstructionCertificate(
        "projective-plane-incidence", {"q": q}, g, family, g.n, g.m, tuple(props), ref
    )


def projective_plane_incidence(q: int) -> BipartiteGraph:
    """Build and certify; the certificate is discarded, a violation raises."""
    return projective_plane_certificate(q).graph


def projective_plane_certificate(q: int) -> ConstructionCertificate:
    g = build_projective_plane_incidence(q)
    return certify_projective_plane_incidence(g, q)


def build_furedi_k2t(q: int, t: int) -> SimpleGraph:
    """Furedi's dense graph in which every vertex pair has at most t-1
    common neighbors.

    Vertices are the nonzero pairs of GF(q)^2 collapsed by the order-(t-1)
    multiplicative subgroup H (classes {(ha, hb) : h in H}); two classes
    are adjacent when ax+by lands in H, a condition independent of the
    chosen representatives. Loops (classes adjacent to themselves) are
    dropped, so degrees are q or q-1. Requires t >= 2 and (t-1) | (q-1).
    """
    if t < 2:
        raise ConstructionError(f"need t >= 2, got {t}")
    f = _field(q)
    if (q - 1) % (t - 1):
        raise ConstructionError(f"need (t-1) | (q-1), got t-1={t - 1}, q-1={q - 1}")
    gen = f.generator()
    h0 = f.pow(gen, (q - 1) // (t - 1))
    subgroup = []
    x = f.one
    for _ in range(t - 1):
        subgroup.append(x)
        x = f.mul(x, h0)
    hset = frozenset(subgroup)

    pairs = [(a, b) for a in f.elements() for b in f.elements() if (a, b) != (0, 0)]
    rep_of = {}
    for a, b in pairs:
        orbit = [(f.mul(h, a), f.mul(h, b)) for h in subgroup]
        rep_of[(a, b)] = min(orbit)
    reps = sorted(set(rep_of.values()))
    index = {r: i for i, r in enumerate(reps)}

    edges = set()
    for i, (a, b) in enumerate(reps):
        for x2, y2 in reps[i + 1:]:
            if f.add(f.mul(a, x2), f.mul(b, y2)) in hset:
                edges.add((i, index[(x2, y2)]))
    return SimpleGraph.from_edges(len(reps), sorted(edges))


def certify_furedi_k2t(g: SimpleGraph, q: int, t: int) -> ConstructionCertificate:
    n = (q * q - 1) // (t - 1)
    props = []
    if g.n != n:
        raise ConstructionError(f"expected {n} vertices, got {g.n}")
    props.append(f"(q^2-1)/(t-1) = {n} vertices")
    if any(g.degree(v) not in (q - 1, q) for v in range(g.n)):
        raise ConstructionError(f"some degree outside {{{q - 1}, {q}}}")
    props.append(f"every degree in {{{q - 1}, {q}}}")
    if 2 * g.m < n * (q - 1):
        raise ConstructionError(f"fewer than n(q-1)/2 = {n * (q - 1) / 2} edges")
    props.append(f"at least n(q-1)/2 = {n * (q - 1) // 2} edges")
    cap = t - 1
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (g.rows[u] & g.rows[v]).bit_count() > cap:
                raise ConstructionError(f"pair ({u}, {v}) shares more than {cap} neighbors")
    props.append(f"every pair shares at most {cap} neighbors")
    family = parse_family(f"K2,{t}")
    _check_free(g, family)
    props.append(f"no K2,{t} subgraph")
    ref = bounds.dense_kst_main_term(g.n, t)
    return ConstructionCertificate(
        "furedi-k2t", {"q": q, "t": t}, g, family, g.n, g.m, tuple(props), ref
    )


def furedi_k2t_graph(q: int, t: int) -> SimpleGraph:
    return furedi_k2t_certificate(q, t).graph


def furedi_k2t_certificate(q: int, t: int) -> ConstructionCertificate:
    g = build_furedi_k2t(q, t)
    return certify_furedi_k2t(g, q, t)


def build_bipartite_k2t(q: int, t: int) -> BipartiteGraph:
    """Bipartite double cover of the Furedi graph: a dense bipartite graph
    with the same codegree cap, twice the vertices and edges."""
    return bipartite_double_cover(build_furedi_k2t(q, t))


def certify_bipartite_k2t(g: BipartiteGraph, q: int, t: int) -> ConstructionCertificate:
    n1 = (q * q - 1) // (t - 1)
    props = []
    if g.n != 2 * n1 or sorted(g.side) != [0] * n1 + [1] * n1:
        raise ConstructionError(f"expected two sides of {n1} vertices")
    props.append(f"two sides of {n1} vertices")
    if any(g.degree(v) not in (q - 1, q) for v in range(g.n)):
        raise ConstructionError(f"some degree outside {{{q - 1}, {q}}}")
    props.append(f"every degree in {{{q - 1}, {q}}}")
    family = parse_family(f"K2,{t}")
    _check_free(g, family)
    props.append(f"no K2,{t} subgraph")
    ref = bounds.asymptotic_bound(g.n, 2, t)
    return ConstructionCertificate(
        "bipartite-k2t", {"q": q, "t": t}, g, family, g.n, g.m, tuple(props), ref
    )


def bipartite_k2t_extremal(q: int, t: int) -> BipartiteGraph:
    return bipartite_k2t_certificate(q, t).graph


def bipartite_k2t_certificate(q: int, t: int) -> ConstructionCertificate:
    g = build_bipartite_k2t(q, t)
    return certify_bipartite_k2t(g, q, t)


def build_vertex_doubling(g0: BipartiteGraph, double_side: int = 1) -> SimpleGraph:
    """Replace every vertex of one side of a bipartite graph by an
    adjacent twin pair, each twin inheriting all of the original's edges.

    Kept vertices come first (in side order), then the twin pairs
    (2i, 2i+1 offsets) in side order of their originals.
    """
    if double_side not in (0, 1):
        raise ConstructionError(f"double_side must be 0 or 1, got {double_side}")
    kept = g0.side_vertices(1 - double_side)
    doubled = g0.side_vertices(double_side)
    new_of_kept = {v: i for i, v in enumerate(kept)}
    base = len(kept)
    edges = []
    for i, b in enumerate(doubled):
        b1, b2 = base + 2 * i, base + 2 * i + 1
        edges.append((b1, b2))
        for a in g0.neighbors(b):
            edges.append((new_of_kept[a], b1))
            edges.append((new_of_kept[a], b2))
    return SimpleGraph.from_edges(base + 2 * len(doubled), edges)


def certify_vertex_doubling(
    g: SimpleGraph, n_kept: int, n_doubled: int, host_m: int,
    parameters: dict | None = None,
) -> ConstructionCertificate:
    """Certify a doubled graph against the host's counts: the doubling of
    a 4-cycle-free bipartite host has no 5-cycle, no induced 4-cycle, and
    exactly one triangle per host edge."""
    props = []
    if g.n != n_kept + 2 * n_doubled:
        raise ConstructionError(f"expected {n_kept + 2 * n_doubled} vertices, got {g.n}")
    if g.m != 2 * host_m + n_doubled:
        raise ConstructionError(f"expected {2 * host_m + n_doubled} edges, got {g.m}")
    props.append(f"{g.n} vertices, {g.m} edges")
    family = parse_family("C5;C4-ind")
    _check_free(g, family)
    props.append("no 5-cycle")
    props.append("no induced 4-cycle")
    tri = patterns.count_triangles(g)
    if tri != host_m:
        raise ConstructionError(f"expected {host_m} triangles, got {tri}")
    props.append(f"one triangle per host edge ({host_m})")
    ref = bounds.pentagon_family_lower(g.n)
    return ConstructionCertificate(
        "pentagon-free-doubling", dict(parameters or {}), g, family,
        g.n, g.m, tuple(props), ref,
    )


def bollobas_gyori_double(g0: BipartiteGraph, double_side: int = 1) -> ConstructionCertificate:
    """Bollobas and Gyori's doubling applied to any 4-cycle-free bipartite
    host: pentagon-free, no induced 4-cycle, one triangle per host edge."""
    w = patterns.contains_kst(g0, 2, 2)
    if w is not None:
        raise ConstructionError(f"host contains a 4-cycle on vertices {w.vertices}")
    g = build_vertex_doubling(g0, double_side)
    n_doubled = len(g0.side_vertices(double_side))
    return certify_vertex_doubling(
        g, g0.n - n_doubled, n_doubled, g0.m,
        {"host_n": g0.n, "host_m": g0.m, "double_side": double_side},
    )


def bollobas_gyori_certificate(q: int) -> ConstructionCertificate:
    """The classic instance: double the line side of a projective plane
    incidence graph of order q."""
    cert = bollobas_gyori_double(projective_plane_incidence(q))
    params = dict(cert.parameters)
    params["q"] = q
    return ConstructionCertificate(
        cert.name, params, cert.graph, cert.family,
        cert.n, cert.m, cert.properties, cert.reference_bound,
    )
