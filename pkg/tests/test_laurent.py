from hypothesis import given, strategies as st

from ropebound.laurent import A, ONE, Z, ZERO, LaurentPoly2

exps = st.integers(-4, 4)
polys = st.dictionaries(st.tuples(exps, exps), st.integers(-5, 5), max_size=5).map(LaurentPoly2)


def test_zero_terms_dropped():
    p = LaurentPoly2({(0, 1): 3, (1, 0): 0})
    assert p.terms == {(0, 1): 3}
    assert (p + -p).is_zero()
    assert (p + -p).terms == {}


def test_unit():
    p = LaurentPoly2({(-1, 2): 4, (3, -1): -2})
    assert ONE * p == p


def test_delta_squared():
    delta = (A - A.shift(a=-2)).shift(z=-1)  # (a - a^-1) z^-1
    want = LaurentPoly2({(-2, 2): 1, (-2, 0): -2, (-2, -2): 1})
    assert delta * delta == want
    assert delta ** 2 == want


def test_serialize_examples():
    assert ONE.serialize() == "1"
    assert ZERO.serialize() == "0"
    assert LaurentPoly2({(-1, 1): 1, (-1, -1): -1}).serialize() == "-1 z^-1 a^-1 + 1 z^-1 a^1"


def test_mirror():
    p = LaurentPoly2({(0, 2): 2, (0, 4): -1, (2, 2): 1})
    assert p.substitute_mirror().substitute_mirror() == p
    assert p.substitute_mirror().a_exponents() == [-4, -2]


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p and p * ONE == p


@given(polys)
def test_serialize_round_trip(p):
    assert LaurentPoly2.parse(p.serialize()) == p


@given(polys, exps, exps)
def test_shift_is_monomial_product(p, i, j):
    assert p.shift(i, j) == p * LaurentPoly2.monomial(1, i, j)
    assert Z * p == p.shift(1, 0)
