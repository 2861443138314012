from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import naive
from conftest import graphs
from turanlab import verify
from turanlab.constructions import bollobas_gyori_certificate
from turanlab.core import SimpleGraph
from turanlab.patterns import (
    contains_cycle_of_length,
    contains_induced_kst,
    contains_kst,
    count_triangles,
)
from turanlab.verify import (
    HOLDS,
    INFO,
    SKIPPED,
    VIOLATION,
    VerifyError,
    blakley_roy_check,
    classify_3_walks_from_vertex,
    count_3_walks,
    erdos_gallai_path_check,
    good_3path_endpoint_check,
    good_3path_stats,
    gyori_li_triangle_report,
    kst_removal_check,
    limited_cherries_check,
    max_good_3path_edge,
    n2_edge_bound_check,
    not_good_walks_check,
    triangle_edge_decomposition,
    walks_from_edge,
    walks_from_vertex,
)


@pytest.fixture(scope="module")
def bg2():
    return bollobas_gyori_certificate(2).graph


# ---------------------------------------------------------------------------
# walk counts and the cube-of-average-degree floor


def test_count_3_walks_examples():
    assert count_3_walks(naive.complete_graph(2)) == 2
    assert count_3_walks(naive.complete_graph(3)) == 24
    assert count_3_walks(naive.star_graph(3)) == 18


@given(graphs(max_n=8))
def test_count_3_walks_matches_naive(g):
    assert count_3_walks(g) == naive.count_3_walks(g)


def test_walks_from_vertex_and_edge():
    g = naive.complete_graph(3)
    assert sum(walks_from_vertex(g, v) for v in range(3)) == 24
    assert walks_from_edge(g, 0, 1) > 0
    with pytest.raises(VerifyError):
        walks_from_edge(naive.path_graph(3), 0, 2)


def test_blakley_roy_tight_cases():
    rep = blakley_roy_check(naive.complete_graph(2))
    assert rep.verdict == HOLDS and rep.lhs == 2 and rep.rhs == 2
    rep = blakley_roy_check(naive.complete_graph(3))
    assert rep.lhs == 24 and rep.rhs == 24
    rep = blakley_roy_check(naive.star_graph(3))
    assert rep.lhs == 18 and rep.rhs == Fraction(27, 2)
    assert isinstance(rep.rhs, Fraction)


def test_blakley_roy_empty_graph():
    assert blakley_roy_check(SimpleGraph(0)).verdict == HOLDS


@given(graphs(max_n=10))
def test_blakley_roy_never_violated(g):
    rep = blakley_roy_check(g)
    assert rep.verdict == HOLDS
    if g.n:
        assert rep.lhs >= rep.rhs


# ---------------------------------------------------------------------------
# walk classification


def test_classify_c6_frozen():
    cls, rep = classify_3_walks_from_vertex(naive.cycle_graph(6), 0, t=2, k=3)
    assert (cls.total, cls.good, cls.returning, cls.within_first_layer,
            cls.second_to_first, cls.within_second_layer) == (8, 2, 4, 0, 2, 0)
    assert rep.verdict == HOLDS and rep.lhs == 6 and rep.rhs == 640


def test_classify_star_center_all_returning():
    cls, rep = classify_3_walks_from_vertex(naive.star_graph(4), 0, t=2, k=2)
    assert (cls.total, cls.good, cls.returning) == (16, 0, 16)
    assert rep.verdict == HOLDS


def test_classify_heawood_frozen():
    cls, rep = classify_3_walks_from_vertex(naive.heawood_graph(), 0, t=2, k=3)
    assert (cls.total, cls.good, cls.returning, cls.second_to_first) == (27, 12, 9, 6)
    assert rep.lhs == 15 and rep.rhs == 1440


def test_classify_petersen_frozen():
    cls, rep = classify_3_walks_from_vertex(naive.petersen_graph(), 0, t=2, k=3)
    assert (cls.total, cls.good, cls.within_second_layer) == (27, 0, 12)
    assert rep.verdict == HOLDS and rep.lhs == 27


def test_classify_rejects_triangles():
    with pytest.raises(VerifyError) as e:
        classify_3_walks_from_vertex(naive.complete_graph(3), 0, t=2, k=2)
    assert "triangle" in str(e.value)


def test_classify_rejects_bad_parameters():
    g = naive.cycle_graph(6)
    with pytest.raises(VerifyError):
        classify_3_walks_from_vertex(g, 0, t=1, k=3)
    with pytest.raises(VerifyError):
        classify_3_walks_from_vertex(g, 0, t=2, k=1)


def test_classify_skips_when_hypotheses_fail():
    # C4 is K_{2,2}, so t=2 hypotheses fail on it
    cls, rep = classify_3_walks_from_vertex(naive.cycle_graph(4), 0, t=2, k=2)
    assert rep.verdict == SKIPPED
    assert any("K_2,2" in h for h in rep.failed_hypotheses)
    assert cls.total == naive.count_3_walks_from(naive.cycle_graph(4), 0)


@given(graphs(min_n=1, max_n=9), st.sampled_from([2, 3]), st.sampled_from([2, 3]))
def test_classification_partitions_total(g, t, k):
    if count_triangles(g) or g.n == 0:
        return
    cls, rep = classify_3_walks_from_vertex(g, 0, t=t, k=k)
    assert rep.verdict in (HOLDS, SKIPPED)
    parts = (cls.good + cls.returning + cls.within_first_layer
             + cls.second_to_first + cls.within_second_layer)
    assert parts == cls.total
    # triangle-free graphs have no walk staying inside the first layer
    assert cls.within_first_layer == 0


def test_not_good_walks_wrapper():
    rep = not_good_walks_check(naive.cycle_graph(6), 3, 2)
    assert rep.verdict == HOLDS and rep.details.get("root") == 0
    rep = not_good_walks_check(naive.complete_graph(4), 2, 2)
    assert rep.verdict == SKIPPED  # triangles


# ---------------------------------------------------------------------------
# second-layer edge bound


def test_n2_frozen_values(bg2):
    rep = n2_edge_bound_check(naive.cycle_graph(6), 0, 2)
    assert rep.verdict == HOLDS and (rep.lhs, rep.rhs) == (0, 0)
    rep = n2_edge_bound_check(naive.petersen_graph(), 0, 3)
    assert rep.verdict == HOLDS and (rep.lhs, rep.rhs) == (6, 12)
    assert rep.details["bichromatic_edges"] * 2 >= rep.details["edges_inside_n2"]
    rep = n2_edge_bound_check(naive.heawood_graph(), 0, 3)
    assert (rep.lhs, rep.rhs) == (0, 12)
    rep = n2_edge_bound_check(naive.star_graph(4), 0, 2)
    assert (rep.lhs, rep.rhs) == (0, 0)
    assert rep.details["n2_size"] == 0


def test_n2_skips_on_odd_cycles():
    rep = n2_edge_bound_check(naive.cycle_graph(5), 0, 2)
    assert rep.verdict == SKIPPED
    assert any("C5" in h for h in rep.failed_hypotheses)
    rep = n2_edge_bound_check(naive.complete_graph(3), 0, 2)
    assert rep.verdict == SKIPPED


def test_n2_rejects_k_below_2():
    with pytest.raises(VerifyError):
        n2_edge_bound_check(naive.cycle_graph(6), 0, 1)


@given(graphs(min_n=1, max_n=10))
def test_n2_k2_second_layer_has_no_edges(g):
    # triangle-free and C5-free force an empty second-layer edge set
    if contains_cycle_of_length(g, 3) or contains_cycle_of_length(g, 5):
        return
    for v in range(g.n):
        rep = n2_edge_bound_check(g, v, 2)
        assert rep.verdict == HOLDS
        assert rep.details["edges_inside_n2"] == 0


# ---------------------------------------------------------------------------
# path bound and cherries


def test_erdos_gallai_tight_cases():
    rep = erdos_gallai_path_check(naive.complete_graph(3), 4)
    assert rep.verdict == HOLDS and (rep.lhs, rep.rhs) == (3, 3)
    two = naive.disjoint_union(naive.complete_graph(3), naive.complete_graph(3))
    rep = erdos_gallai_path_check(two, 4)
    assert (rep.lhs, rep.rhs) == (6, 6)


def test_erdos_gallai_skips_with_path_witness():
    rep = erdos_gallai_path_check(naive.cycle_graph(5), 5)
    assert rep.verdict == SKIPPED
    assert rep.details["path"] == (0, 1, 2, 3, 4)


def test_erdos_gallai_edge_cases():
    assert erdos_gallai_path_check(SimpleGraph(3), 2).verdict == HOLDS
    with pytest.raises(VerifyError):
        erdos_gallai_path_check(naive.path_graph(3), 1)


@given(graphs(max_n=9), st.sampled_from([3, 4, 5, 6]))
def test_erdos_gallai_never_violated(g, p):
    assert erdos_gallai_path_check(g, p).verdict != VIOLATION


def test_limited_cherries_frozen(bg2):
    rep = limited_cherries_check(bg2, 2)
    assert rep.verdict == HOLDS and (rep.lhs, rep.rhs) == (2, 2)
    assert rep.details["pair"] is not None


def test_limited_cherries_skips_carry_measurement():
    rep = limited_cherries_check(naive.cycle_graph(5), 2)
    assert rep.verdict == SKIPPED
    assert (rep.lhs, rep.rhs) == (1, 2)
    assert rep.failed_hypotheses == ("no C5",)
    rep = limited_cherries_check(naive.complete_bipartite(2, 3), 3)
    assert rep.verdict == SKIPPED and rep.lhs == 3
    assert rep.failed_hypotheses == ("no induced K_2,3",)


def test_limited_cherries_rejects_bad_t():
    with pytest.raises(VerifyError):
        limited_cherries_check(naive.cycle_graph(6), 1)


# ---------------------------------------------------------------------------
# triangle decomposition


def test_decomposition_examples(bg2):
    dec = triangle_edge_decomposition(naive.complete_graph(3))
    assert (dec.triangle_edges, dec.remainder_edges) == (3, 0)
    dec = triangle_edge_decomposition(naive.cycle_graph(5))
    assert (dec.triangle_edges, dec.remainder_edges) == (0, 5)
    dec = triangle_edge_decomposition(bg2)
    assert (dec.triangle_edges, dec.remainder_edges) == (49, 0)


@given(graphs(max_n=10))
def test_decomposition_invariants(g):
    dec = triangle_edge_decomposition(g)
    assert dec.triangle_edges + dec.remainder_edges == g.m
    assert set(dec.triangle_part.edges()) | set(dec.remainder.edges()) == set(g.edges())
    assert not set(dec.triangle_part.edges()) & set(dec.remainder.edges())
    assert count_triangles(dec.remainder) == 0
    assert dec.triangle_edges <= 3 * count_triangles(g)


@given(graphs(max_n=9), st.sampled_from([(2, 2), (2, 3), (3, 3)]))
def test_kst_removal_on_induced_free_inputs(g, st_pair):
    s, t = st_pair
    rep = kst_removal_check(g, s, t)
    assert rep.verdict != VIOLATION
    if contains_induced_kst(g, s, t):
        assert rep.verdict == SKIPPED
    else:
        assert rep.verdict == HOLDS
        assert contains_kst(triangle_edge_decomposition(g).remainder, s, t) is None


def test_kst_removal_examples(bg2):
    assert kst_removal_check(naive.cycle_graph(6), 2, 2).verdict == HOLDS
    assert kst_removal_check(bg2, 2, 2).verdict == HOLDS
    assert kst_removal_check(naive.complete_bipartite(2, 3), 2, 3).verdict == SKIPPED


def test_gyori_li_report(bg2):
    rep = gyori_li_triangle_report(bg2, 2)
    assert rep.verdict == INFO
    assert rep.details["triangles"] == 21
    assert rep.details["normalized"] == pytest.approx(21 / 21**1.5)
    rep = gyori_li_triangle_report(naive.complete_graph(3), 2)
    assert rep.verdict == INFO and rep.details["triangles"] == 1
    rep = gyori_li_triangle_report(naive.complete_bipartite(3, 3), 2)
    assert rep.details["triangles"] == 0
    rep = gyori_li_triangle_report(naive.cycle_graph(5), 2)
    assert rep.verdict == SKIPPED
    with pytest.raises(VerifyError):
        gyori_li_triangle_report(bg2, 1)


# ---------------------------------------------------------------------------
# good 3-paths


def test_good_3path_p4_edges():
    p4 = naive.path_graph(4)
    stats, rep = good_3path_stats(p4, 0, 1, t=2)
    assert (stats.walks, stats.paths, stats.good) == (5, 1, 1)
    assert stats.per_last_vertex == {3: 1}
    assert rep.verdict == HOLDS
    stats, rep = good_3path_stats(p4, 1, 2, t=2)
    assert (stats.paths, stats.good) == (0, 0)


def test_good_3path_c6_and_k4():
    stats, rep = good_3path_stats(naive.cycle_graph(6), 0, 1, t=2)
    assert (stats.paths, stats.good) == (2, 2)
    assert stats.per_last_vertex == {3: 1, 4: 1}
    assert rep.verdict == HOLDS
    stats, _ = good_3path_stats(naive.complete_graph(4), 0, 1, t=2)
    assert (stats.paths, stats.good) == (4, 0)


def test_good_3path_rejects_non_edge():
    with pytest.raises(VerifyError):
        good_3path_stats(naive.path_graph(3), 0, 2, t=2)


@given(graphs(min_n=2, max_n=8), st.integers(min_value=0, max_value=27))
def test_good_3path_counts_match_naive(g, pick):
    edges = g.edges()
    if not edges:
        return
    x, y = edges[pick % len(edges)]
    stats, _ = good_3path_stats(g, x, y, t=2)
    walks, paths, good = naive.good_3_paths_from_edge(g, x, y)
    assert (stats.walks, stats.paths, stats.good) == (walks, paths, good)
    assert sum(stats.per_last_vertex.values()) == good


def test_max_good_3path_edge_frozen(bg2):
    edge, cnt, rep = max_good_3path_edge(bg2, t=2, k=2)
    assert edge == (7, 8) and cnt == 24
    assert rep.verdict == HOLDS
    assert rep.rhs == Fraction(-3136, 9)
    assert "vacuous" in rep.details["note"]


def test_max_good_3path_edge_small_cases():
    edge, cnt, rep = max_good_3path_edge(naive.complete_graph(2), t=2, k=2)
    assert edge == (0, 1) and cnt == 0
    assert rep.verdict == HOLDS  # right side negative, vacuous
    with pytest.raises(VerifyError):
        max_good_3path_edge(SimpleGraph(4), t=2, k=2)


def test_max_good_3path_edge_skips_with_measurement(bg2):
    # a pendant vertex pushes the minimum degree below d/2 while keeping
    # all other hypotheses intact
    g = SimpleGraph.from_edges(bg2.n + 1, bg2.edges() + [(0, bg2.n)])
    edge, cnt, rep = max_good_3path_edge(g, t=2, k=2)
    assert rep.verdict == SKIPPED
    assert len(rep.failed_hypotheses) == 1
    assert "min degree" in rep.failed_hypotheses[0]
    assert cnt >= 0 and edge is not None


def test_good_3path_endpoint_check(bg2):
    rep = good_3path_endpoint_check(bg2, 2)
    assert rep.verdict == HOLDS and (rep.lhs, rep.rhs) == (2, 2)
    assert rep.details["worst_at"] == (0, 15, 3)
    rep = good_3path_endpoint_check(naive.cycle_graph(5), 2)
    assert rep.verdict == SKIPPED


@given(graphs(min_n=2, max_n=9), st.sampled_from([2, 3]))
def test_endpoint_check_never_violated_on_filtered_inputs(g, t):
    if g.m == 0:
        return
    if contains_cycle_of_length(g, 5) or contains_induced_kst(g, 2, t):
        return
    rep = good_3path_endpoint_check(g, t)
    assert rep.verdict != VIOLATION
    if rep.verdict == HOLDS:
        assert rep.lhs <= rep.rhs == max(3, t) - 1
