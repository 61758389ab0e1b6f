import random

import pytest
from hypothesis import given, settings, strategies as st

from tanvar.errors import DimensionMismatch, ParseSyntaxError, UnknownVariable
from tanvar.fields import prime_field, rationals
from tanvar.poly import (
    GREVLEX,
    LEX,
    MonomialOrder,
    PolyRing,
    Polynomial,
    block_order,
    parse_poly,
)

FIELD = prime_field()
R3 = PolyRing(("x", "y", "z"), FIELD)


def rand_poly(ring, rng, nterms=5, maxdeg=3):
    terms = {}
    for _ in range(nterms):
        m = tuple(rng.randrange(maxdeg + 1) for _ in range(ring.nvars))
        c = ring.ops.rand(rng)
        if c != 0:
            terms[m] = c
    return Polynomial(ring, terms)


# -- parsing -----------------------------------------------------------------


def test_parse_square_identity():
    p = parse_poly("x^2 - 2*x*y + y^2", R3)
    q = parse_poly("(x - y)*(x - y)", R3)
    assert p == q


def test_parse_zero():
    p = parse_poly("0", PolyRing(("x",), FIELD))
    assert p.is_zero()
    assert p.terms == {}


def test_parse_mod_p_reduction():
    from tanvar.fields import FieldConfig
    f101 = FieldConfig(kind="prime", prime=2147483629)
    ring = PolyRing(("u0", "u1"), f101)
    p = parse_poly("u0^3 + 7", ring)
    assert p.terms[(0, 0)] == 7


def test_parse_rational_coefficients():
    ring = PolyRing(("x",), rationals())
    p = parse_poly("1/2*x + 3", ring)
    assert p.evaluate((2,)) == 4


def test_parse_errors():
    with pytest.raises(ParseSyntaxError):
        parse_poly("x +* y", R3)
    with pytest.raises(ParseSyntaxError):
        parse_poly("", R3)
    with pytest.raises(ParseSyntaxError):
        parse_poly("x^-2", R3)
    with pytest.raises(UnknownVariable):
        parse_poly("x + w", R3)


def test_parse_evaluates_like_source():
    rng = random.Random(0)
    ops = FIELD.ops
    src = "3*x^2*y - 7*z + (x - 2)*(y + z^2) - 1/3"
    p = parse_poly(src, R3)
    for _ in range(20):
        pt = tuple(ops.rand(rng) for _ in range(3))
        x, y, z = pt
        expected = ops.from_fraction(-1, 3)
        term1 = 3 * x * x % FIELD.prime * y % FIELD.prime
        direct = (term1 - 7 * z + (x - 2) * (y + z * z)) % FIELD.prime
        expected = (direct + expected) % FIELD.prime
        assert p.evaluate(pt) == expected


# -- arithmetic properties ----------------------------------------------------


@given(st.integers(0, 10 ** 9))
@settings(max_examples=30, deadline=None)
def test_ring_axioms(seed):
    rng = random.Random(seed)
    f, g, h = (rand_poly(R3, rng) for _ in range(3))
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == R3.zero()


@given(st.integers(0, 10 ** 9))
@settings(max_examples=30, deadline=None)
def test_leibniz_rule(seed):
    rng = random.Random(seed)
    f, g = rand_poly(R3, rng), rand_poly(R3, rng)
    for v in R3.names:
        lhs = (f * g).derivative(v)
        rhs = f.derivative(v) * g + f * g.derivative(v)
        assert lhs == rhs


@given(st.integers(0, 10 ** 9))
@settings(max_examples=30, deadline=None)
def test_derivative_symmetry(seed):
    rng = random.Random(seed)
    f = rand_poly(R3, rng, nterms=8, maxdeg=4)
    for a in R3.names:
        for b in R3.names:
            assert f.derivative(a).derivative(b) == f.derivative(b).derivative(a)


@given(st.integers(0, 10 ** 9))
@settings(max_examples=30, deadline=None)
def test_evaluate_is_ring_homomorphism(seed):
    rng = random.Random(seed)
    ops = FIELD.ops
    f, g = rand_poly(R3, rng), rand_poly(R3, rng)
    pt = tuple(ops.rand(rng) for _ in range(3))
    assert (f + g).evaluate(pt) == ops.add(f.evaluate(pt), g.evaluate(pt))
    assert (f * g).evaluate(pt) == ops.mul(f.evaluate(pt), g.evaluate(pt))


def test_evaluate_at_origin_gives_constant_term():
    rng = random.Random(3)
    f = rand_poly(R3, rng)
    assert f.evaluate((0, 0, 0)) == f.terms.get((0, 0, 0), 0)


def test_evaluate_dimension_mismatch():
    f = parse_poly("x", R3)
    with pytest.raises(DimensionMismatch):
        f.evaluate((1, 2))


def test_modular_evaluation_matches_rational():
    """Rational evaluation reduced mod p agrees with modular evaluation
    whenever no denominator vanishes (integer inputs: always)."""
    rng = random.Random(11)
    p = FIELD.prime
    qring = PolyRing(("x", "y", "z"), rationals())
    for _ in range(100):
        terms_int = {
            tuple(rng.randrange(4) for _ in range(3)): rng.randrange(-50, 50)
            for _ in range(6)
        }
        fq = Polynomial(
            qring, {m: qring.ops.from_int(c) for m, c in terms_int.items() if c}
        )
        fp = Polynomial(
            R3, {m: R3.ops.from_int(c) for m, c in terms_int.items() if c % p}
        )
        pt_int = [rng.randrange(-20, 20) for _ in range(3)]
        vq = fq.evaluate([qring.ops.from_int(v) for v in pt_int])
        vp = fp.evaluate([R3.ops.from_int(v) for v in pt_int])
        assert int(vq) % p == vp


# -- derivative basics ---------------------------------------------------------


def test_derivative_of_cube():
    ring = PolyRing(("u",), FIELD)
    f = parse_poly("u^3", ring)
    assert f.derivative("u") == parse_poly("3*u^2", ring)


def test_derivative_of_foreign_variable_is_zero():
    f = parse_poly("y^2 + z", R3)
    assert f.derivative("x").is_zero()


def test_twisted_cubic_chart_derivative():
    ring = PolyRing(("t",), FIELD)
    f = parse_poly("t^3", ring)
    assert f.derivative("t") == parse_poly("3*t^2", ring)


# -- monomial orders ------------------------------------------------------------


def rand_mono(rng, n=4, maxdeg=5):
    return tuple(rng.randrange(maxdeg) for _ in range(n))


@pytest.mark.parametrize("order", [GREVLEX, LEX, block_order(2)])
@given(seed=st.integers(0, 10 ** 9))
@settings(max_examples=40, deadline=None)
def test_order_is_total_and_multiplicative(order, seed):
    rng = random.Random(seed)
    key = order.key()
    m1, m2, m3 = (rand_mono(rng) for _ in range(3))
    # totality / antisymmetry
    assert (key(m1) < key(m2)) or (key(m2) < key(m1)) or m1 == m2
    # 1 is minimal
    one = (0, 0, 0, 0)
    if m1 != one:
        assert key(one) < key(m1)
    # multiplicative
    if key(m1) < key(m2):
        prod1 = tuple(a + b for a, b in zip(m1, m3))
        prod2 = tuple(a + b for a, b in zip(m2, m3))
        assert key(prod1) < key(prod2)


def test_block_order_eliminates():
    key = block_order(1).key()
    # any monomial containing the first variable beats any without it
    assert key((1, 0, 0, 0)) > key((0, 9, 9, 9))
