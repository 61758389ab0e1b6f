"""Rational-point machinery for small polynomial systems.

Used to sample random points on constraint loci (chart-normalized
parameter spaces, Roth members) and to drive retry logic for randomized
counting.  Root finding over a prime field is Cantor-Zassenhaus with the
randomness drawn from the caller's seeded generator, so everything stays
deterministic per seed.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NoRegularPointFound
from .fields import PRIME
from .groebner import (
    DEFAULT_DEGREE_CAP,
    buchberger,
    eliminant,
    quotient_basis,
    upoly_deg,
    upoly_gcd,
    upoly_mod,
    upoly_monic,
    _upoly_trim,
)
from .linalg import rref
from .poly import GREVLEX, PolyRing, Polynomial


# ---------------------------------------------------------------------------
# Univariate roots
# ---------------------------------------------------------------------------


def _upoly_powmod(base, e, mod, ops):
    """base^e modulo the univariate polynomial ``mod``."""
    result = [ops.one]
    base = upoly_mod(list(base), mod, ops)
    while e:
        if e & 1:
            result = upoly_mod(_umul(result, base, ops), mod, ops)
        e >>= 1
        if e:
            base = upoly_mod(_umul(base, base, ops), mod, ops)
    return result


def _umul(a, b, ops):
    out = [ops.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x != 0:
            for j, y in enumerate(b):
                if y != 0:
                    out[i + j] = ops.add(out[i + j], ops.mul(x, y))
    return _upoly_trim(out)


def _roots_prime(coeffs, field, rng):
    """Distinct roots in GF(p) of a univariate polynomial (ascending coeffs)."""
    ops = field.ops
    p = field.prime
    c = _upoly_trim(list(coeffs))
    if not c or len(c) == 1:
        return []
    roots = []
    # factor out x | c
    shift = 0
    while c[0] == 0:
        c = c[1:]
        shift += 1
    if shift:
        roots.append(ops.zero)
    if len(c) <= 1:
        return roots
    c = upoly_monic(c, ops)
    # keep only the GF(p)-rational part: gcd(c, x^p - x)
    xp = _upoly_powmod([ops.zero, ops.one], p, c, ops)
    xp_minus_x = _upoly_trim(
        [ops.sub(xp[i] if i < len(xp) else ops.zero, ops.one if i == 1 else ops.zero)
         for i in range(max(len(xp), 2))]
    )
    g = upoly_gcd(c, xp_minus_x, ops)
    if not g or upoly_deg(g) == 0:
        return roots

    def split(h):
        d = upoly_deg(h)
        if d == 0:
            return
        if d == 1:
            roots.append(ops.neg(h[0]))
            return
        while True:
            a = ops.from_int(rng.randrange(p))
            # gcd((x+a)^((p-1)/2) - 1, h)
            t = _upoly_powmod([a, ops.one], (p - 1) // 2, h, ops)
            t = list(t)
            if not t:
                t = [ops.neg(ops.one)]
            else:
                t[0] = ops.sub(t[0], ops.one)
            t = _upoly_trim(t)
            if not t:
                continue
            w = upoly_gcd(h, t, ops)
            if w and 0 < upoly_deg(w) < d:
                split(w)
                # h / w by repeated division
                q = _udiv(h, w, ops)
                split(q)
                return

    split(g)
    roots.sort()
    return roots


def _udiv(a, b, ops):
    """Exact quotient a / b for monic-compatible univariate polynomials."""
    a = list(a)
    q = [ops.zero] * (len(a) - len(b) + 1)
    db, lb = len(b) - 1, b[-1]
    inv = ops.inv(lb)
    while len(a) - 1 >= db and a:
        f = ops.mul(a[-1], inv)
        shift = len(a) - 1 - db
        q[shift] = f
        for i, x in enumerate(b):
            a[shift + i] = ops.sub(a[shift + i], ops.mul(f, x))
        _upoly_trim(a)
        if not a:
            break
    return _upoly_trim(q)


def _roots_rationals(coeffs, field, rng):
    """Rational roots via the rational root theorem."""
    c = _upoly_trim(list(coeffs))
    if not c or len(c) == 1:
        return []
    # clear denominators to integers
    from math import gcd, lcm

    den = 1
    for x in c:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in c]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g:
        ints = [x // g for x in ints]
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        while ints[0] == 0:
            ints = ints[1:]
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(n):
        n = abs(n)
        out = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.append(d)
                out.append(n // d)
            d += 1
        return sorted(set(out))

    if a0 == 0:
        return roots
    for num in divisors(a0):
        for dden in divisors(an):
            for sign in (1, -1):
                cand = Fraction(sign * num, dden)
                val = Fraction(0)
                for coef in reversed(ints):
                    val = val * cand + coef
                if val == 0 and cand not in roots:
                    roots.append(cand)
    roots.sort()
    return roots


def upoly_roots(coeffs, field, rng):
    """Distinct roots of a univariate polynomial lying in the base field."""
    if field.kind == PRIME:
        return _roots_prime(coeffs, field, rng)
    return _roots_rationals(coeffs, field, rng)


# ---------------------------------------------------------------------------
# Random forms
# ---------------------------------------------------------------------------


def random_linear_form(ring: PolyRing, idxs, rng, constant=None) -> Polynomial:
    """Random linear form in the listed variables, optionally affine."""
    ops = ring.ops
    terms = {}
    for i in idxs:
        c = ops.rand(rng)
        if c != 0:
            m = tuple(1 if j == i else 0 for j in range(ring.nvars))
            terms[m] = c
    if not terms:
        # force at least one nonzero coefficient
        i = idxs[0]
        m = tuple(1 if j == i else 0 for j in range(ring.nvars))
        terms[m] = ops.one
    if constant is not None and constant != 0:
        terms[(0,) * ring.nvars] = constant
    return Polynomial(ring, terms)


def random_vector(field, length, rng):
    ops = field.ops
    return tuple(ops.rand(rng) for _ in range(length))


# ---------------------------------------------------------------------------
# Rational points on small systems
# ---------------------------------------------------------------------------


def _solve_linear_system(gens, ring: PolyRing, rng):
    """Random solution of an affine-linear system, or None if inconsistent."""
    ops = ring.ops
    rows = []
    rhs = []
    for g in gens:
        row = [ops.zero] * ring.nvars
        const = ops.zero
        for m, c in g.terms.items():
            d = sum(m)
            if d == 0:
                const = c
            else:
                (i,) = [j for j, e in enumerate(m) if e]
                row[i] = c
        rows.append(row)
        rhs.append(ops.neg(const))
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(aug, ops)
    n = ring.nvars
    for row in reduced:
        if all(x == 0 for x in row[:n]) and row[n] != 0:
            return None
    if n in pivots:
        return None
    free = [i for i in range(n) if i not in pivots]
    x = [ops.zero] * n
    for i in free:
        x[i] = ops.rand(rng)
    for r, pc in enumerate(pivots):
        acc = reduced[r][n]
        for i in free:
            if reduced[r][i] != 0:
                acc = ops.sub(acc, ops.mul(reduced[r][i], x[i]))
        x[pc] = acc
    return tuple(x)


def solve_zero_dim_point(gens, ring: PolyRing, rng, degree_cap=DEFAULT_DEGREE_CAP):
    """One rational point of a zero-dimensional system, or None.

    Works by eliminant root-finding on the last variable followed by
    back-substitution; candidate roots are tried in rng-shuffled order.
    """
    gens = [g for g in gens if not g.is_zero()]
    if any(g.is_constant() for g in gens):
        return None
    if ring.nvars == 0:
        return ()
    if not gens:
        return tuple(ring.ops.rand(rng) for _ in range(ring.nvars))
    if all(g.total_degree() <= 1 for g in gens):
        return _solve_linear_system(gens, ring, rng)
    try:
        gb = buchberger(gens, GREVLEX, degree_cap)
    except Exception:
        return None
    if any(g.is_constant() for g in gb):
        return None
    try:
        quotient_basis(gb, GREVLEX, ring)
    except Exception:
        return None
    last = ring.names[-1]
    try:
        upol = eliminant(gb, ring, last, GREVLEX)
    except Exception:
        return None
    roots = upoly_roots(upol, ring.field, rng)
    if not roots:
        return None
    roots = list(roots)
    rng.shuffle(roots)
    idx = ring.nvars - 1
    sub_ring = PolyRing(ring.names[:-1], ring.field)
    var_map = list(range(ring.nvars - 1)) + [None]
    for r in roots:
        sub_gens = []
        ok = True
        for g in gens:
            h = g.eval_partial({idx: r})
            try:
                h2 = h.map_ring(sub_ring, var_map)
            except Exception:
                ok = False
                break
            sub_gens.append(h2)
        if not ok:
            continue
        tail = solve_zero_dim_point(sub_gens, sub_ring, rng, degree_cap)
        if tail is not None:
            return tail + (r,)
    return None


def sample_constraint_point(
    constraints,
    ring: PolyRing,
    locus_dim: int,
    rng,
    tries: int = 10,
    degree_cap: int = DEFAULT_DEGREE_CAP,
):
    """Random rational point on V(constraints), a locus of dimension
    ``locus_dim`` inside affine space, found by slicing with random affine
    hyperplanes.  Raises NoRegularPointFound after ``tries`` attempts."""
    ops = ring.ops
    constraints = [g for g in constraints if not g.is_zero()]
    if not constraints and locus_dim == ring.nvars:
        return tuple(ops.rand(rng) for _ in range(ring.nvars))
    for _ in range(tries):
        slices = [
            random_linear_form(
                ring, list(range(ring.nvars)), rng, constant=ops.rand_nonzero(rng)
            )
            for _ in range(locus_dim)
        ]
        sys_gens = constraints + slices
        if all(g.total_degree() <= 1 for g in sys_gens):
            pt = _solve_linear_system(sys_gens, ring, rng)
        else:
            pt = solve_zero_dim_point(sys_gens, ring, rng, degree_cap)
        if pt is not None:
            residual = [g.evaluate(pt) for g in constraints]
            if all(v == 0 for v in residual):
                return pt
    raise NoRegularPointFound(
        f"no rational point on the constraint locus after {tries} tries"
    )
