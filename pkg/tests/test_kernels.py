import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

import naive
from conftest import graphs
from turanlab import kernels, _pykernels
from turanlab.core import SimpleGraph
from turanlab.patterns import parse_family

compiled = kernels.load_backend("compiled")

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled backend not built"
)


def _pats(text):
    return parse_family(text).as_kernel()


# ---------------------------------------------------------------------------
# pure kernels against the naive oracles


@given(graphs(max_n=7), st.sampled_from([3, 4, 5, 6, 7]),
       st.booleans())
def test_find_cycle_matches_naive(g, length, induced):
    got = _pykernels.find_cycle(g.rows, g.n, length, induced)
    assert (got is not None) == naive.has_cycle(g, length, induced)
    if got is not None:
        order = list(got)
        assert len(set(order)) == length
        for i in range(length):
            assert g.has_edge(order[i], order[(i + 1) % length])


@given(graphs(max_n=7), st.sampled_from([(1, 1), (1, 3), (2, 2), (2, 3), (3, 3)]),
       st.booleans())
def test_find_kst_matches_naive(g, st_pair, induced):
    s, t = st_pair
    got = _pykernels.find_kst(g.rows, g.n, s, t, induced)
    assert (got is not None) == naive.has_kst(g, s, t, induced)
    if got is not None:
        side_a, side_b = got
        assert len(side_a) == s and len(side_b) == t
        assert not set(side_a) & set(side_b)
        for a in side_a:
            for b in side_b:
                assert g.has_edge(a, b)


@given(graphs(max_n=8))
def test_counting_kernels_match_naive(g):
    assert _pykernels.count_triangles(g.rows, g.n) == naive.count_triangles(g)
    cod, pair = _pykernels.max_codegree_nonadjacent(g.rows, g.n)
    assert cod == naive.max_codegree_nonadjacent(g)
    if pair is not None:
        u, v = pair
        assert not g.has_edge(u, v)


@given(graphs(max_n=7), st.integers(min_value=1, max_value=7))
def test_has_path_matches_naive(g, p):
    got = _pykernels.has_path_on(g.rows, g.n, p)
    assert (got is not None) == naive.has_path(g, p)
    if got is not None:
        assert len(set(got)) == p
        assert all(g.has_edge(got[i], got[i + 1]) for i in range(p - 1))


# ---------------------------------------------------------------------------
# pack / canon


@given(graphs(max_n=12))
def test_pack_roundtrip(g):
    key = _pykernels.pack_key(g.rows, g.n)
    assert _pykernels.unpack_key(key, g.n) == g.rows


@given(graphs(max_n=9), st.integers(min_value=0, max_value=10**6))
def test_canon_invariant_under_relabeling(g, seed):
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    h = naive.relabel(g, perm)
    assert kernels.canon_key(g.rows, g.n) == kernels.canon_key(h.rows, h.n)


def test_canon_separates_all_4_vertex_classes():
    keys = {kernels.canon_key(g.rows, 4) for g in naive.all_graphs(4)}
    assert len(keys) == 11


def test_canon_regression_individualized_color():
    # graphs whose refinement individualizes a vertex of color 0: the
    # backends must agree on the resulting key ordering
    for g in naive.all_graphs(4):
        want = _pykernels.canon_key(g.rows, 4)
        assert kernels.canon_key(g.rows, 4) == want
        if compiled is not None:
            assert compiled.canon_key(g.rows, 4) == want


# ---------------------------------------------------------------------------
# compiled backend equivalence


@needs_compiled
@given(graphs(max_n=12))
def test_backends_agree_on_finders(g):
    r, n = g.rows, g.n
    assert compiled.count_triangles(r, n) == _pykernels.count_triangles(r, n)
    assert compiled.max_codegree_nonadjacent(r, n) == _pykernels.max_codegree_nonadjacent(r, n)
    for length in (3, 4, 5, 6):
        for ind in (False, True):
            assert compiled.find_cycle(r, n, length, ind) == _pykernels.find_cycle(r, n, length, ind)
    for s, t in ((1, 2), (2, 2), (2, 3), (3, 3)):
        for ind in (False, True):
            assert compiled.find_kst(r, n, s, t, ind) == _pykernels.find_kst(r, n, s, t, ind)
    for p in (2, 4, 6):
        assert compiled.has_path_on(r, n, p) == _pykernels.has_path_on(r, n, p)
    assert compiled.pack_key(r, n) == _pykernels.pack_key(r, n)
    assert compiled.canon_key(r, n) == _pykernels.canon_key(r, n)


@needs_compiled
@given(graphs(max_n=10), st.sampled_from(["C4", "C3;K1,3", "C5;K2,2-ind", "C3;C5;K2,2"]))
def test_backends_agree_on_violated_pattern(g, fam):
    pats = _pats(fam)
    assert compiled.violated_pattern(g.rows, g.n, pats) == _pykernels.violated_pattern(g.rows, g.n, pats)


@needs_compiled
@pytest.mark.parametrize("fam", ["C4", "C5;K2,2-ind", "C3;C5;K2,2"])
def test_backends_agree_on_extension_ladder(fam):
    pats = _pats(fam)
    pure_level = comp_level = [_pykernels.pack_key([], 0)]
    for k in range(7):
        pure_level = _pykernels.extend_free_level(pure_level, k, pats)
        comp_level = compiled.extend_free_level(comp_level, k, pats)
        assert pure_level == comp_level


@needs_compiled
@pytest.mark.parametrize("fam", ["C4", "C5;K2,2-ind", "C3;C5;K2,2", "K1,3"])
@pytest.mark.parametrize("n", [2, 5, 7])
def test_backends_agree_on_bb_search(fam, n):
    pats = _pats(fam)
    assert compiled.bb_search(n, pats) == _pykernels.bb_search(n, pats)


@needs_compiled
def test_backends_agree_under_budgets():
    pats = _pats("C4")
    for kw in (dict(node_limit=1), dict(node_limit=100), dict(initial_lb=3)):
        assert compiled.bb_search(7, pats, **kw) == _pykernels.bb_search(7, pats, **kw)


@needs_compiled
def test_extension_counts_all_graphs():
    # unrestricted growth enumerates one representative per isomorphism
    # class: 1, 2, 4, 11, 34, 156, 1044 classes on 1..7 vertices
    level = [_pykernels.pack_key([], 0)]
    sizes = []
    for k in range(7):
        level = compiled.extend_free_level(level, k, ())
        sizes.append(len(level))
    assert sizes == [1, 2, 4, 11, 34, 156, 1044]


# ---------------------------------------------------------------------------
# backend selection


def test_load_backend_names():
    assert kernels.load_backend("pure") is _pykernels
    with pytest.raises(ValueError):
        kernels.load_backend("vectorized")


def test_pure_env_forces_pure_backend():
    env = dict(os.environ, TURANLAB_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from turanlab import kernels; print(kernels.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.strip() == "pure"


def test_backend_constant_is_declared():
    assert kernels.BACKEND in ("pure", "compiled")
