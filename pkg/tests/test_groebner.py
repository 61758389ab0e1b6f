import random

import pytest
from hypothesis import given, settings, strategies as st

from tanvar.errors import (
    DegreeCapExceeded,
    NotHomogeneous,
    NotZeroDimensional,
)
from tanvar.fields import prime_field, rationals
from tanvar.groebner import (
    Ideal,
    buchberger,
    count_zero_dim,
    eliminate,
    hilbert_dim_degree,
    interreduce,
    leading_monomial,
    normal_form,
    presolve_linear,
    saturate,
)
from tanvar.poly import GREVLEX, LEX, MonomialOrder, PolyRing, Polynomial, parse_poly

FIELD = prime_field()


def ring(*names, field=FIELD):
    return PolyRing(tuple(names), field)


def polys(ring_, *srcs):
    return [parse_poly(s, ring_) for s in srcs]


# -- basic bases ---------------------------------------------------------------


def test_linear_ideal_lex():
    R = ring("x", "y", "z")
    gb = buchberger(polys(R, "x - y", "y - z"), LEX)
    assert gb == polys(R, "y - z", "x - z") or gb == polys(R, "x - z", "y - z")
    # x - z and y - z both reduce to zero
    for g in polys(R, "x - z", "y - z"):
        assert normal_form(g, gb, LEX).is_zero()


def test_twisted_cubic_affine_contains_resultant():
    """The lex basis of {x^2 - y, x^3 - z} contains y^3 - z^2, the
    resultant of the generators with respect to x."""
    R = ring("x", "y", "z")
    gens = polys(R, "x^2 - y", "x^3 - z")
    expected = _sylvester_resultant_x(gens[0], gens[1], R)
    gb = buchberger(gens, LEX)
    assert any(g == expected or g == -expected for g in gb)


def _sylvester_resultant_x(f, g, R):
    """Independent oracle: Sylvester resultant eliminating x, computed by
    exact determinant expansion over the coefficient ring k[y,z]."""
    def coeffs_in_x(p, deg):
        out = [R.zero() for _ in range(deg + 1)]
        xi = R.index["x"]
        for m, c in p.terms.items():
            e = m[xi]
            rest = m[:xi] + (0,) + m[xi + 1:]
            out[e] = out[e] + Polynomial(R, {rest: c})
        return out

    fc = coeffs_in_x(f, 2)   # x^2 - y
    gc = coeffs_in_x(g, 3)   # x^3 - z
    # Sylvester matrix is 5x5: three shifted rows of f, two of g
    rows = []
    for s in range(3):
        row = [R.zero()] * 5
        for i, c in enumerate(reversed(fc)):
            row[s + i] = c
        rows.append(row)
    for s in range(2):
        row = [R.zero()] * 5
        for i, c in enumerate(reversed(gc)):
            row[s + i] = c
        rows.append(row)

    def det(mat):
        n = len(mat)
        if n == 1:
            return mat[0][0]
        acc = R.zero()
        for j in range(n):
            if mat[0][j].is_zero():
                continue
            sub = [r[:j] + r[j + 1:] for r in mat[1:]]
            term = mat[0][j] * det(sub)
            acc = acc + term if j % 2 == 0 else acc - term
        return acc

    d = det(rows)
    lm = leading_monomial(d, LEX)
    return d.scale(R.ops.inv(d.terms[lm]))


def test_unit_ideal():
    R = ring("x", "y")
    gb = buchberger(polys(R, "x", "x + 1"), GREVLEX)
    assert len(gb) == 1 and gb[0] == R.one()


def test_reduced_basis_unique_under_generator_shuffle():
    R = ring("x", "y", "z", "w")
    rng = random.Random(4)
    gens = polys(
        R,
        "x*z - y^2", "x*w - y*z", "y*w - z^2",
    )
    gb1 = buchberger(list(gens), GREVLEX)
    for _ in range(4):
        shuffled = list(gens)
        rng.shuffle(shuffled)
        assert buchberger(shuffled, GREVLEX) == gb1


@given(st.integers(0, 10 ** 9))
@settings(max_examples=15, deadline=None)
def test_buchberger_criterion_on_output(seed):
    """Every S-polynomial of the returned basis reduces to zero."""
    rng = random.Random(seed)
    R = ring("x", "y", "z")
    gens = []
    for _ in range(3):
        terms = {
            tuple(rng.randrange(3) for _ in range(3)): R.ops.rand(rng)
            for _ in range(3)
        }
        p = Polynomial(R, {m: c for m, c in terms.items() if c})
        if not p.is_zero():
            gens.append(p)
    if not gens:
        return
    gb = buchberger(gens, GREVLEX)
    from tanvar.poly import mono_div, mono_lcm
    for i in range(len(gb)):
        for j in range(i + 1, len(gb)):
            mi = leading_monomial(gb[i], GREVLEX)
            mj = leading_monomial(gb[j], GREVLEX)
            L = mono_lcm(mi, mj)
            s = gb[i].mul_term(mono_div(L, mi), R.ops.one) - \
                gb[j].mul_term(mono_div(L, mj), R.ops.one)
            assert normal_form(s, gb, GREVLEX).is_zero()


def test_degree_cap_raises():
    # Katsura-style system blows past a tiny cap
    R = ring("x", "y", "z")
    gens = polys(R, "x^4*y^3 - z^5*x^2 + y", "y^4*z^3 - x^6 + z")
    with pytest.raises(DegreeCapExceeded):
        buchberger(gens, GREVLEX, degree_cap=6)


def test_elimination_monotone():
    """I subset J implies eliminate(I) subset eliminate(J)."""
    R = ring("t", "x", "y")
    I = Ideal(R, polys(R, "x - t^2"))
    J = Ideal(R, polys(R, "x - t^2", "y - t^3"))
    EI = eliminate(I, ["x", "y"])
    EJ = eliminate(J, ["x", "y"])
    assert EJ.contains_ideal(EI)


def test_eliminate_parabola():
    R = ring("t", "x", "y")
    I = Ideal(R, polys(R, "x - t", "y - t^2"))
    E = eliminate(I, ["x", "y"])
    R2 = E.ring
    assert list(E.gens) == [parse_poly("x^2 - y", R2)] or \
        list(E.gens) == [parse_poly("-1*x^2 + y", R2)]


def test_eliminate_everything_zero_or_unit():
    R = ring("t", "x")
    E = eliminate(Ideal(R, polys(R, "x - t")), [])
    assert E.is_zero()
    E2 = eliminate(Ideal(R, polys(R, "t", "t - 1")), [])
    assert len(E2.gens) == 1 and E2.gens[0].is_constant()


def test_saturate_basic():
    R = ring("x", "y")
    I = Ideal(R, polys(R, "x*y"))
    S = saturate(I, parse_poly("x", R))
    assert list(S.gens) == polys(R, "y")


def test_saturate_by_one_is_identity():
    R = ring("x", "y")
    I = Ideal(R, polys(R, "x^2 - y"))
    S = saturate(I, R.one())
    assert S.equals(I)


def test_saturate_idempotent():
    R = ring("x", "y", "z")
    I = Ideal(R, polys(R, "x^2*y - z*x", "y^2*x"))
    f = parse_poly("x", R)
    S1 = saturate(I, f)
    S2 = saturate(S1, f)
    assert S1.equals(S2)
    assert S1.contains_ideal(I)


def test_saturation_of_graph_cone_dimension():
    """Saturating the twisted-cubic graph cone ideal by the homogenizing
    coordinate never raises the Hilbert dimension."""
    R = ring("t", "h", "x0", "x1", "x2", "x3")
    gens = [parse_poly(f"x{k} - h*t^{k}", R) for k in range(4)]
    I = Ideal(R, gens)
    E = eliminate(I, ["x0", "x1", "x2", "x3"])
    before = hilbert_dim_degree(E)
    S = saturate(E, parse_poly("x0", E.ring))
    after = hilbert_dim_degree(S)
    assert after.projective_dimension <= before.projective_dimension


# -- Hilbert data ---------------------------------------------------------------


def test_hilbert_twisted_cubic_minors():
    R = ring("x0", "x1", "x2", "x3")
    I = Ideal(R, polys(
        R, "x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"
    ), homogeneous=True)
    hd = hilbert_dim_degree(I)
    assert (hd.projective_dimension, hd.degree) == (1, 3)


def test_hilbert_hyperplane():
    R = ring("x0", "x1", "x2", "x3")
    hd = hilbert_dim_degree(Ideal(R, polys(R, "x0")))
    assert (hd.projective_dimension, hd.degree) == (2, 1)


def test_hilbert_zero_and_irrelevant():
    R = ring("x0", "x1")
    assert hilbert_dim_degree(Ideal(R, [])).projective_dimension == 1
    hd = hilbert_dim_degree(Ideal(R, polys(R, "x0", "x1")))
    assert hd.projective_dimension == -1


def test_hilbert_requires_homogeneous():
    R = ring("x0", "x1")
    with pytest.raises(NotHomogeneous):
        hilbert_dim_degree(Ideal(R, polys(R, "x0^2 - x1")))


def test_hilbert_numerator_consistency():
    """Degree equals the coefficient sum of the numerator after dividing
    out (1-t)^(dim+1) factors."""
    R = ring("x0", "x1", "x2", "x3")
    I = Ideal(R, polys(R, "x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"))
    hd = hilbert_dim_degree(I)
    num = list(hd.hilbert_numerator)
    cancels = R.nvars - (hd.projective_dimension + 1)
    for _ in range(cancels):
        q = [0] * (len(num) - 1)
        acc = 0
        for i in range(len(num) - 1, 0, -1):
            acc -= num[i]
            q[i - 1] = acc
        num = q
        while num and num[-1] == 0:
            num.pop()
    assert sum(num) == hd.degree


def test_hilbert_invariant_under_linear_change():
    """Projective dimension and degree survive a random invertible linear
    change of coordinates (tested on the twisted cubic)."""
    rng = random.Random(12)
    R = ring("x0", "x1", "x2", "x3")
    gens = polys(R, "x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2")
    base = hilbert_dim_degree(Ideal(R, gens))
    from tanvar.linalg import rank
    while True:
        M = [[R.ops.rand(rng) for _ in range(4)] for _ in range(4)]
        if rank(M, R.ops) == 4:
            break
    images = []
    for j in range(4):
        acc = R.zero()
        for i in range(4):
            if M[i][j] != 0:
                acc = acc + R.var(f"x{i}").scale(M[i][j])
        images.append(acc)
    moved = [g.subst(images) for g in gens]
    hd = hilbert_dim_degree(Ideal(R, moved))
    assert (hd.projective_dimension, hd.degree) == \
        (base.projective_dimension, base.degree)


# -- zero-dimensional counting ----------------------------------------------------


def test_count_two_by_two():
    R = ring("x", "y")
    I = Ideal(R, polys(R, "x^2 - 1", "y^2 - 1"))
    assert count_zero_dim(I, "x") == (4, 2)


def test_count_double_point():
    R = ring("x", field=FIELD)
    I = Ideal(R, polys(R, "x^2"))
    assert count_zero_dim(I, "x") == (2, 1)


def test_count_rejects_positive_dimensional():
    R = ring("x", "y")
    I = Ideal(R, polys(R, "x*y"))
    with pytest.raises(NotZeroDimensional):
        count_zero_dim(I, "x")


def test_count_total_is_order_independent():
    """The quotient dimension does not depend on the monomial order used
    for the basis."""
    R = ring("x", "y")
    gens = polys(R, "x^2 + y - 3", "y^3 - x")
    t1, _ = count_zero_dim(Ideal(R, gens), "x")
    I2 = Ideal(R, gens)
    gb_lex = I2.gb(LEX)
    from tanvar.groebner import quotient_basis
    assert len(quotient_basis(gb_lex, LEX, R)) == t1


def test_count_distinct_le_total():
    R = ring("x", "y")
    I = Ideal(R, polys(R, "x^3 - x", "y - x^2"))
    total, distinct = count_zero_dim(I, "x")
    assert distinct <= total
    assert (total, distinct) == (3, 3)


# -- presolve ---------------------------------------------------------------------


def test_presolve_preserves_solutions():
    R = ring("x", "y", "z")
    gens = polys(R, "z - x^2", "x^2 + y^2 + z - 3", "y - 1")
    reduced = presolve_linear(gens, {R.index["z"], R.index["y"]})
    # z and y substituted away; remaining system in x only
    used = set()
    for g in reduced:
        used |= g.variables_used()
    assert R.index["z"] not in used
    assert R.index["y"] not in used
    sols_x = count_zero_dim(Ideal(R, gens), "x")
    from tanvar.groebner import compact_system
    small_gens, small, _ = compact_system(reduced, R, keep_names=["x"])
    assert count_zero_dim(Ideal(small, small_gens), "x") == sols_x


def test_over_rationals_small():
    Rq = PolyRing(("x", "y"), rationals())
    gens = [parse_poly("x^2 - y", Rq), parse_poly("y - 4", Rq)]
    gb = buchberger(gens, LEX)
    total, distinct = count_zero_dim(Ideal(Rq, gens), "x")
    assert (total, distinct) == (2, 2)
