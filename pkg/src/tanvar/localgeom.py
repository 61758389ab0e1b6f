"""Pointwise differential geometry: second fundamental form, focal loci in
the tangent space, and developability of one-dimensional families.

All constructions work over the exact base field at a sampled regular
frame.  Normal-space completion uses exact Gaussian elimination with
deterministic pivoting, so the quadrics and focal determinants are
reproducible per seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    DegenerateFamily,
    DisagreementAcrossTrials,
    InvalidSpec,
    TangentFamilyDegenerate,
)
from .groebner import DEFAULT_DEGREE_CAP, HilbertData, Ideal, hilbert_dim_degree
from .linalg import complete_to_basis, coords_in_basis, rank
from .poly import PolyRing, Polynomial
from .tangential import TangentFrame, regular_point
from .varieties import VarietyHandle


@dataclass
class SecondFF:
    """Second fundamental form at a frame: a basis of independent quadrics
    in the tangent-direction coordinates l1..ln, plus the normal completion
    used to read off normal components."""

    frame: TangentFrame
    quadrics: list
    normal_basis: list
    lambda_ring: PolyRing

    @property
    def linear_system_dim(self) -> int:
        return len(self.quadrics) - 1


@dataclass
class FocalData:
    """Focal locus of the family of tangent spaces inside P(t_x X)."""

    focal_ideal: Ideal
    is_hypersurface: bool
    focal_degree: int


def _normal_data(frame: TangentFrame, ops):
    width = len(frame.point)
    extra = complete_to_basis(frame.span_rows, ops, width)
    basis = list(frame.span_rows) + extra

    def normal_coords(v):
        coords = coords_in_basis(basis, v, ops)
        if coords is None:
            raise InvalidSpec("frame basis completion failed")
        return coords[len(frame.span_rows):]

    return extra, normal_coords


def second_ff(X: VarietyHandle, rng) -> SecondFF:
    """Second fundamental form at a random regular frame: one quadric in
    the direction coordinates per normal coordinate of the second
    derivative tensor, pruned to an independent basis."""
    pm = X.param
    if pm is None:
        raise InvalidSpec("second_ff needs a parametrization")
    ops = pm.ring.ops
    fr = regular_point(pm, rng)
    n = pm.expected_dim
    extra, normal_coords = _normal_data(fr, ops)
    lring = PolyRing(tuple(f"l{i+1}" for i in range(n)), pm.field)

    normal_of = {
        ij: normal_coords(vec) for ij, vec in fr.hess_vectors.items()
    }
    ncount = len(extra)
    quadrics = []
    for k in range(ncount):
        terms = {}
        for (i, j), nc in normal_of.items():
            c = nc[k]
            if c == 0:
                continue
            if i != j:
                c = ops.add(c, c)  # symmetric off-diagonal contributes twice
            m = tuple(
                (2 if (t == i and i == j) else (1 if t in (i, j) else 0))
                for t in range(n)
            )
            prev = terms.get(m, ops.zero)
            acc = ops.add(prev, c)
            if acc == 0:
                terms.pop(m, None)
            else:
                terms[m] = acc
        q = Polynomial(lring, terms)
        if not q.is_zero():
            quadrics.append(q)
    independent = _independent_polys(quadrics, lring)
    return SecondFF(fr, independent, extra, lring)


def _independent_polys(polys, ring: PolyRing):
    """Reduce a list of polynomials to a linearly independent sub-basis by
    row reduction of their coefficient vectors (deterministic order)."""
    if not polys:
        return []
    ops = ring.ops
    monos = sorted({m for p in polys for m in p.terms})
    pos = {m: i for i, m in enumerate(monos)}
    rows = []
    kept = []
    for p in polys:
        v = [ops.zero] * len(monos)
        for m, c in p.terms.items():
            v[pos[m]] = c
        for pivot, rv in rows:
            f = v[pivot]
            if f != 0:
                v = [ops.sub(x, ops.mul(f, y)) for x, y in zip(v, rv)]
        piv = next((i for i, x in enumerate(v) if x != 0), None)
        if piv is None:
            continue
        inv = ops.inv(v[piv])
        rows.append((piv, [ops.mul(inv, x) for x in v]))
        kept.append(p)
    return kept


def ff_base_locus(ff: SecondFF, degree_cap: int = DEFAULT_DEGREE_CAP):
    """Ideal generated by the quadrics plus Hilbert data of its
    projectivization (the asymptotic directions)."""
    ideal = Ideal(ff.lambda_ring, ff.quadrics, homogeneous=True)
    data = hilbert_dim_degree(ideal, degree_cap)
    return ideal, data


def focal_at(X: VarietyHandle, rng, degree_cap: int = DEFAULT_DEGREE_CAP) -> FocalData:
    """Focal locus of the tangent family intersected with the tangent
    space at a random regular point, as an ideal in the direction
    coordinates: the maximal minors of the normal-component matrix of the
    second-derivative pencil.  Square case: a single determinant of degree
    n."""
    pm = X.param
    if pm is None:
        raise InvalidSpec("focal_at needs a parametrization")
    n = pm.expected_dim
    N = pm.ambient_dim
    if N < 2 * n:
        raise TangentFamilyDegenerate(
            "focal theory needs N >= 2n for the tangent family"
        )
    ops = pm.ring.ops
    fr = regular_point(pm, rng)
    extra, normal_coords = _normal_data(fr, ops)
    lring = PolyRing(tuple(f"l{i+1}" for i in range(n)), pm.field)

    normal_of = {ij: normal_coords(vec) for ij, vec in fr.hess_vectors.items()}
    # A(l)[k][j] = normal coordinate k of sum_i l_i H[i,j]
    ncount = len(extra)
    A = []
    for k in range(ncount):
        row = []
        for j in range(n):
            terms = {}
            for i in range(n):
                key = (i, j) if i <= j else (j, i)
                c = normal_of[key][k]
                if c == 0:
                    continue
                m = tuple(1 if t == i else 0 for t in range(n))
                prev = terms.get(m, ops.zero)
                acc = ops.add(prev, c)
                if acc == 0:
                    terms.pop(m, None)
                else:
                    terms[m] = acc
            row.append(Polynomial(lring, terms))
        A.append(row)

    minors = []
    for rows_idx in combinations(range(ncount), n):
        sub = [A[r] for r in rows_idx]
        minors.append(_det(sub, lring))
    minors = [m for m in minors if not m.is_zero()]
    if not minors:
        raise TangentFamilyDegenerate(
            "all focal minors vanish: dim Tan(X) < 2n, every point is focal"
        )
    ideal = Ideal(lring, minors, homogeneous=True)
    principal = ncount == n
    return FocalData(ideal, principal, n if principal else -1)


def _det(rows, ring: PolyRing):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = ring.zero()
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        sub = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * _det(sub, ring)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


@dataclass
class DevelopabilityReport:
    developable: bool
    base_rank: int
    extended_rank: int
    focal_form: tuple  # linear functional on the lambda coords, or None
    focal_rows: list   # ambient span of the focal subspace, or None


def developable_check(family, rng, trials: int = 3) -> DevelopabilityReport:
    """Developability of a one-dimensional family of r-spaces given by
    coordinate-vector functions a_0(t)..a_r(t).

    The family is developable iff the span of the a_i and their t-derivatives
    has dimension r+2 at a general parameter; the focal hyperplane inside a
    member is the kernel of the induced map to the quotient.
    """
    if not family:
        raise DegenerateFamily("empty family")
    ring = family[0][0].ring
    if ring.nvars != 1:
        raise InvalidSpec("family vectors must be univariate")
    ops = ring.ops
    r = len(family) - 1
    derivs = [[p.derivative(0) for p in vec] for vec in family]

    outcomes = []
    for _ in range(trials):
        t0 = (ops.rand(rng),)
        base = [tuple(p.evaluate(t0) for p in vec) for vec in family]
        dvecs = [tuple(p.evaluate(t0) for p in vec) for vec in derivs]
        base_rank = rank(base, ops)
        if base_rank != r + 1:
            raise DegenerateFamily(
                f"family spans rank {base_rank}, expected {r + 1}"
            )
        ext_rank = rank(base + dvecs, ops)
        outcomes.append((base_rank, ext_rank, t0))
    ranks = [o[1] for o in outcomes]
    best = max(set(ranks), key=ranks.count)
    if ranks.count(best) * 2 <= len(ranks):
        raise DisagreementAcrossTrials(f"family ranks disagree: {ranks}")
    base_rank, ext_rank, t0 = next(o for o in outcomes if o[1] == best)

    developable = ext_rank == r + 2
    if not developable:
        return DevelopabilityReport(False, base_rank, ext_rank, None, None)

    # kernel of l -> [sum l_i a_i'(t0)] in the quotient by the member span
    base = [tuple(p.evaluate(t0) for p in vec) for vec in family]
    dvecs = [tuple(p.evaluate(t0) for p in vec) for vec in derivs]
    width = len(base[0])
    extra = complete_to_basis(base, ops, width)
    basis = base + extra
    qrows = []
    for dv in dvecs:
        coords = coords_in_basis(basis, dv, ops)
        qrows.append(tuple(coords[r + 1:]))
    from .linalg import kernel_basis

    kern = kernel_basis(qrows, ops, ncols=len(qrows[0]))
    # kern as row combinations: v in kernel iff v . qrows = 0; we need the
    # left kernel {l : sum l_i qrows[i] = 0}
    from .linalg import transpose

    left = kernel_basis(transpose(qrows), ops, ncols=r + 1)
    # the focal hyperplane form vanishes on that kernel
    forms = kernel_basis(left, ops, ncols=r + 1) if left else []
    focal_form = forms[0] if forms else None
    focal_rows = []
    for lam in left:
        acc = None
        for c, vec in zip(lam, base):
            part = tuple(ops.mul(c, x) for x in vec)
            acc = part if acc is None else tuple(
                ops.add(x, y) for x, y in zip(acc, part)
            )
        focal_rows.append(acc)
    return DevelopabilityReport(True, base_rank, ext_rank, focal_form, focal_rows)
