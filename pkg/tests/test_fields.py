import pytest
from hypothesis import given, strategies as st

from turanlab.fields import FieldError, FiniteField

ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms(q):
    f = FiniteField(q)
    elems = list(f.elements())
    assert len(elems) == q
    for a in elems:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a != 0:
            assert f.mul(a, f.inv(a)) == 1
    # spot-check associativity/commutativity/distributivity on a slice
    probe = elems[: min(q, 6)]
    for a in probe:
        for b in probe:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in probe:
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))


@pytest.mark.parametrize("q", ORDERS)
def test_generator_spans_multiplicative_group(q):
    f = FiniteField(q)
    g = f.generator()
    seen = set()
    x = 1
    for _ in range(q - 1):
        seen.add(x)
        x = f.mul(x, g)
    assert x == 1
    assert len(seen) == q - 1


@pytest.mark.parametrize("q", ORDERS)
def test_pow_matches_repeated_mul(q):
    f = FiniteField(q)
    for a in list(f.elements())[:5]:
        acc = 1
        for e in range(5):
            assert f.pow(a, e) == acc
            acc = f.mul(acc, a)


def test_subtraction():
    f = FiniteField(9)
    for a in f.elements():
        for b in f.elements():
            assert f.add(f.sub(a, b), b) == a


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27])
def test_extension_characteristic(q):
    p = {4: 2, 8: 2, 9: 3, 16: 2, 25: 5, 27: 3}[q]
    f = FiniteField(q)
    acc = 0
    for _ in range(p):
        acc = f.add(acc, 1)
    assert acc == 0


def test_unsupported_orders():
    for q in (0, 1, 6, 10, 12, 15, 32):
        with pytest.raises(FieldError):
            FiniteField(q)


def test_zero_has_no_inverse():
    with pytest.raises(FieldError):
        FiniteField(7).inv(0)


def test_element_range_checked():
    f = FiniteField(5)
    with pytest.raises(FieldError):
        f.add(5, 0)
    with pytest.raises(FieldError):
        f.mul(0, -1)


@given(st.sampled_from([7, 9, 16]), st.data())
def test_inverse_is_involutive(q, data):
    f = FiniteField(q)
    a = data.draw(st.integers(min_value=1, max_value=q - 1))
    assert f.inv(f.inv(a)) == a
