import pytest
from hypothesis import given, strategies as st

import naive
from conftest import graphs
from turanlab.patterns import (
    FamilyParseError,
    FamilySpec,
    ForbiddenPattern,
    PatternError,
    Witness,
    contains_cycle_of_length,
    contains_induced_kst,
    contains_kst,
    count_triangles,
    is_family_free,
    max_codegree_nonadjacent,
    parse_family,
)


# ---------------------------------------------------------------------------
# pattern and family values


def test_pattern_constructors():
    c = ForbiddenPattern.cycle(5)
    assert (c.kind, c.a, c.induced) == ("cycle", 5, False)
    assert str(c) == "C5"
    k = ForbiddenPattern.kst(3, 2, induced=True)
    assert (k.a, k.b) == (2, 3)  # sides are stored sorted
    assert str(k) == "K2,3-ind"
    assert k.vertex_count() == 5
    with pytest.raises(PatternError):
        ForbiddenPattern.cycle(2)
    with pytest.raises(PatternError):
        ForbiddenPattern.kst(0, 2)


def test_family_dedupe_and_str():
    fam = FamilySpec([
        ForbiddenPattern.cycle(5),
        ForbiddenPattern.kst(2, 2),
        ForbiddenPattern.cycle(5),
    ])
    assert len(fam.patterns) == 2
    assert str(fam) == "C5;K2,2"
    with pytest.raises(PatternError):
        FamilySpec([])


def test_family_canonical_sorts():
    fam = parse_family("K2,2;C5;C3")
    assert str(fam) == "K2,2;C5;C3"      # declaration order is kept
    assert fam.canonical() == "C3;C5;K2,2"


def test_parse_family_grammar():
    fam = parse_family("C5;K2,2-ind")
    assert [str(p) for p in fam.patterns] == ["C5", "K2,2-ind"]
    assert fam.patterns[1].induced
    # comma separators are fine for cycle-only families
    assert parse_family("C3,C5").canonical() == "C3;C5"
    assert parse_family(" C4 ").canonical() == "C4"
    assert parse_family("c5; k2,3-ind").canonical() == "C5;K2,3-ind"
    # induced mode is also accepted on cycles (used by the C4 checkers)
    fam = parse_family("C4-ind;K2,2")
    assert fam.patterns[0].induced and not fam.patterns[1].induced


def test_parse_family_errors():
    for bad in ("", "C2", "K2", "K2,", "C4;;C5", "Q5", "C3,K2,2",
                "K2,2-IND", "C4x"):
        with pytest.raises(FamilyParseError):
            parse_family(bad)
    err = pytest.raises(FamilyParseError, parse_family, "C4;Q5").value
    assert "position" in str(err)


# ---------------------------------------------------------------------------
# containment checkers, worked examples


def test_cycle_examples():
    w = contains_cycle_of_length(naive.cycle_graph(5), 5)
    assert w is not None and w.verify(naive.cycle_graph(5))
    assert contains_cycle_of_length(naive.complete_graph(4), 5) is None
    assert contains_cycle_of_length(naive.petersen_graph(), 5) is not None
    assert contains_cycle_of_length(naive.cycle_graph(6), 4, induced=True) is None


def test_kst_examples():
    k23 = naive.complete_bipartite(2, 3)
    assert contains_kst(k23, 2, 3) is not None
    assert contains_induced_kst(k23, 2, 3) is not None
    plus = k23.copy()
    plus.add_edge(0, 1)  # join the 2-side
    assert contains_kst(plus, 2, 3) is not None
    assert contains_induced_kst(plus, 2, 3) is None
    assert contains_kst(naive.cycle_graph(5), 2, 2) is None
    assert contains_induced_kst(naive.cycle_graph(6), 2, 2) is None


def test_codegree_examples():
    assert max_codegree_nonadjacent(naive.complete_bipartite(2, 3))[0] == 3
    assert max_codegree_nonadjacent(naive.complete_graph(4)) == (0, None)
    assert max_codegree_nonadjacent(naive.cycle_graph(5))[0] == 1


def test_count_triangles_examples():
    assert count_triangles(naive.complete_graph(3)) == 1
    assert count_triangles(naive.complete_graph(4)) == 4
    assert count_triangles(naive.cycle_graph(5)) == 0


def test_is_family_free_examples():
    fam = parse_family("C5")
    w = is_family_free(naive.cycle_graph(5), fam)
    assert w is not None and w.pattern == ForbiddenPattern.cycle(5)
    assert is_family_free(naive.heawood_graph(), parse_family("C4,C5")) is None
    assert is_family_free(naive.complete_graph(4), parse_family("C5;K2,2-ind")) is None


def test_is_family_free_reports_first_pattern_in_order():
    g = naive.complete_graph(4)  # contains both C3 and C4
    w = is_family_free(g, parse_family("C4;C3"))
    assert w.pattern == ForbiddenPattern.cycle(4)
    w = is_family_free(g, parse_family("C3;C4"))
    assert w.pattern == ForbiddenPattern.cycle(3)


def test_witness_verify_rejects_tampering():
    g = naive.cycle_graph(5)
    w = contains_cycle_of_length(g, 5)
    assert w.verify(g)
    bad = Witness(w.pattern, (0, 1, 2, 3, 3))
    assert not bad.verify(g)
    assert not w.verify(naive.path_graph(5))


# ---------------------------------------------------------------------------
# properties


@given(graphs(max_n=7),
       st.sampled_from(["C3", "C4", "C5", "K2,2", "K2,3", "C5;K2,2-ind",
                        "C3;C5;K2,2", "K2,2-ind"]))
def test_checker_agrees_with_naive(g, fam_text):
    fam = parse_family(fam_text)
    pats = []
    for p in fam.patterns:
        if p.kind == "cycle":
            pats.append(("cycle", p.a, p.induced))
        else:
            pats.append(("kst", p.a, p.b, p.induced))
    w = is_family_free(g, fam)
    assert (w is None) == naive.family_free(g, pats)
    if w is not None:
        assert w.verify(g)


@given(st.sampled_from(["C4", "C3;C5", "K2,2", "C5;K2,2-ind", "K3,3-ind"]))
def test_parse_str_roundtrip(fam_text):
    fam = parse_family(fam_text)
    assert parse_family(str(fam)).canonical() == fam.canonical()
    assert parse_family(fam.canonical()).canonical() == fam.canonical()
