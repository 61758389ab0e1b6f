"""Variety constructors and geometric operations on them.

Every family is realized as a constrained polynomial parametrization: a
coordinate lift psi mapping an affine parameter space into A^(N+1),
together with a constraint ideal in the parameters.  Chart normalizations
(projective scalings of parameter groups) are encoded as explicit
random-linear-form-equals-one constraints drawn from the seeded
generator, which keeps every counting system zero-dimensional without
special-casing group actions.  The constrained shape makes divisor-type
members (Roth surfaces) first-class citizens: they have no global
rational parametrization, but they are cut inside a parametrized cone by
one more constraint.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .errors import (
    CenterContainsVariety,
    DimensionMismatch,
    FiberNotFinite,
    ImageDegenerate,
    InvalidSpec,
    NoRegularPointFound,
    NotHypersurface,
    NotZeroDimensional,
    PointNotOnAmbient,
    SmoothnessCheckFailed,
)
from .fields import FieldConfig
from .groebner import (
    DEFAULT_DEGREE_CAP,
    Ideal,
    compact_system,
    count_zero_dim,
    eliminate,
    hilbert_dim_degree,
    presolve_linear,
)
from .linalg import (
    complete_to_basis,
    kernel_basis,
    mat_vec,
    rank,
    rref,
)
from .poly import PolyRing, Polynomial, parse_poly
from .solve import random_linear_form, sample_constraint_point


@dataclass(frozen=True)
class LinearSpace:
    """Linear subspace of P^N given by independent spanning rows of its lift."""

    span_rows: tuple

    def __post_init__(self):
        if not self.span_rows:
            raise InvalidSpec("linear space needs at least one row")

    def validate(self, ops):
        if rank(list(self.span_rows), ops) != len(self.span_rows):
            raise InvalidSpec("linear space rows are dependent")

    @property
    def ambient_points(self) -> int:
        return len(self.span_rows[0])

    @property
    def dim(self) -> int:
        return len(self.span_rows) - 1


class ParamMap:
    """Constrained polynomial parametrization of a projective variety.

    ``psi`` lifts parameters to A^(N+1); the constraint ideal cuts the
    parameter locus down to dimension ``expected_dim`` so the induced map
    to P^N is generically finite.
    """

    __slots__ = ("ring", "psi", "constraints", "ambient_dim", "expected_dim",
                 "pdeg", "_jac", "_hess", "_cjac", "_chess")

    def __init__(self, ring: PolyRing, psi, constraints, ambient_dim: int,
                 expected_dim: int):
        psi = tuple(psi)
        if len(psi) != ambient_dim + 1:
            raise DimensionMismatch(
                f"psi has {len(psi)} coordinates for ambient P^{ambient_dim}"
            )
        self.ring = ring
        self.psi = psi
        self.constraints = tuple(constraints)
        self.ambient_dim = ambient_dim
        self.expected_dim = expected_dim
        self.pdeg = None
        self._jac = None
        self._hess = None
        self._cjac = None
        self._chess = None

    @property
    def field(self) -> FieldConfig:
        return self.ring.field

    def jacobian(self):
        """d psi_k / d u_j as polynomials, cached."""
        if self._jac is None:
            self._jac = [
                [p.derivative(j) for j in range(self.ring.nvars)] for p in self.psi
            ]
        return self._jac

    def hessians(self):
        """Second partials of each coordinate, cached (upper triangle)."""
        if self._hess is None:
            jac = self.jacobian()
            self._hess = [
                {
                    (i, j): jac[k][i].derivative(j)
                    for i in range(self.ring.nvars)
                    for j in range(i, self.ring.nvars)
                }
                for k in range(len(self.psi))
            ]
        return self._hess

    def constraint_jacobian(self):
        if self._cjac is None:
            self._cjac = [
                [g.derivative(j) for j in range(self.ring.nvars)]
                for g in self.constraints
            ]
        return self._cjac

    def constraint_hessians(self):
        if self._chess is None:
            cj = self.constraint_jacobian()
            self._chess = [
                {
                    (i, j): cj[l][i].derivative(j)
                    for i in range(self.ring.nvars)
                    for j in range(i, self.ring.nvars)
                }
                for l in range(len(self.constraints))
            ]
        return self._chess

    def psi_at(self, u0):
        return tuple(p.evaluate(u0) for p in self.psi)

    def sample_parameter_point(self, rng, tries: int = 10):
        return sample_constraint_point(
            list(self.constraints), self.ring, self.expected_dim, rng, tries
        )


class VarietyHandle:
    """A variety known by parametrization, by homogeneous ideal, or both."""

    __slots__ = ("name", "field", "param", "ideal", "hilbert", "_tan", "_sec")

    def __init__(self, name: str, field: FieldConfig, param: ParamMap = None,
                 ideal: Ideal = None):
        if param is None and ideal is None:
            raise InvalidSpec("a variety needs a parametrization or an ideal")
        self.name = name
        self.field = field
        self.param = param
        self.ideal = ideal
        self.hilbert = None
        self._tan = None
        self._sec = None

    @property
    def ambient_dim(self) -> int:
        if self.param is not None:
            return self.param.ambient_dim
        return self.ideal.ring.nvars - 1

    @property
    def dim(self) -> int:
        if self.param is not None:
            return self.param.expected_dim
        return self.hilbert_data().projective_dimension

    def hilbert_data(self, degree_cap: int = DEFAULT_DEGREE_CAP):
        if self.hilbert is None:
            ideal = implicitize(self, degree_cap)
            self.hilbert = hilbert_dim_degree(ideal, degree_cap)
        return self.hilbert

    def coordinate_ring(self) -> PolyRing:
        if self.ideal is not None:
            return self.ideal.ring
        return PolyRing(
            tuple(f"x{k}" for k in range(self.ambient_dim + 1)), self.field
        )

    def __repr__(self):
        return f"VarietyHandle({self.name})"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def _chart_form(ring: PolyRing, idxs, rng) -> Polynomial:
    """Random linear form in the given variables minus 1 (chart slice)."""
    ops = ring.ops
    terms = {}
    for i in idxs:
        c = ops.rand_nonzero(rng)
        m = tuple(1 if j == i else 0 for j in range(ring.nvars))
        terms[m] = c
    terms[(0,) * ring.nvars] = ops.neg(ops.one)
    return Polynomial(ring, terms)


def rnc(d: int, field: FieldConfig) -> VarietyHandle:
    """Rational normal curve of degree d in P^d (affine chart of P^1)."""
    if d < 1:
        raise InvalidSpec("rnc needs d >= 1")
    ring = PolyRing(("t",), field)
    t = ring.var("t")
    psi = [t ** k for k in range(d + 1)]
    pm = ParamMap(ring, psi, (), d, 1)
    return VarietyHandle(f"rnc({d})", field, param=pm)


def scroll(a, field: FieldConfig, rng) -> VarietyHandle:
    """Rational normal scroll S(a_1,...,a_n); zero entries give cones."""
    a = list(a)
    if not a or any(ai < 0 for ai in a):
        raise InvalidSpec("scroll needs non-negative block degrees")
    if all(ai == 0 for ai in a):
        raise InvalidSpec("scroll needs at least one positive block")
    n = len(a)
    names = ("t",) + tuple(f"l{i+1}" for i in range(n))
    ring = PolyRing(names, field)
    t = ring.var("t")
    psi = []
    for i, ai in enumerate(a):
        lam = ring.var(f"l{i+1}")
        for j in range(ai + 1):
            psi.append(lam * t ** j)
    N = len(psi) - 1
    chart = _chart_form(ring, [ring.index[f"l{i+1}"] for i in range(n)], rng)
    pm = ParamMap(ring, psi, (chart,), N, n)
    label = ",".join(str(x) for x in a)
    return VarietyHandle(f"S({label})", field, param=pm)


def veronese(n: int, field: FieldConfig, rng) -> VarietyHandle:
    """Quadratic Veronese embedding of P^n."""
    if n < 1:
        raise InvalidSpec("veronese needs n >= 1")
    names = tuple(f"y{i}" for i in range(n + 1))
    ring = PolyRing(names, field)
    gens = ring.gens()
    monos = list(itertools.combinations_with_replacement(range(n + 1), 2))
    psi = [gens[i] * gens[j] for i, j in monos]
    chart = _chart_form(ring, list(range(n + 1)), rng)
    pm = ParamMap(ring, psi, (chart,), len(psi) - 1, n)
    return VarietyHandle(f"v2(P^{n})", field, param=pm)


def segre(a: int, b: int, field: FieldConfig, rng) -> VarietyHandle:
    """Segre embedding of P^a x P^b."""
    if a < 1 or b < 1:
        raise InvalidSpec("segre needs a, b >= 1")
    names = tuple(f"y{i}" for i in range(a + 1)) + tuple(f"z{j}" for j in range(b + 1))
    ring = PolyRing(names, field)
    psi = [
        ring.var(f"y{i}") * ring.var(f"z{j}")
        for i in range(a + 1)
        for j in range(b + 1)
    ]
    charts = (
        _chart_form(ring, list(range(a + 1)), rng),
        _chart_form(ring, list(range(a + 1, a + b + 2)), rng),
    )
    pm = ParamMap(ring, psi, charts, len(psi) - 1, a + b)
    return VarietyHandle(f"P^{a}xP^{b}", field, param=pm)


def osculating_scroll(curve: VarietyHandle, k: int, rng) -> VarietyHandle:
    """Variety of osculating k-spaces to a parametrized curve."""
    pm = curve.param
    if pm is None or pm.ring.nvars != 1 or pm.constraints:
        raise InvalidSpec("osculating scroll needs an unconstrained curve chart")
    if k < 1:
        raise InvalidSpec("osculating order must be >= 1")
    field = curve.field
    names = ("t",) + tuple(f"m{j}" for j in range(k + 1))
    ring = PolyRing(names, field)
    # derivative vectors of the curve lift, remapped into the big ring
    vecs = [list(pm.psi)]
    for _ in range(k):
        vecs.append([p.derivative(0) for p in vecs[-1]])
    var_map = [0]
    psi = []
    for coord in range(pm.ambient_dim + 1):
        acc = ring.zero()
        for j in range(k + 1):
            acc = acc + ring.var(f"m{j}") * vecs[j][coord].map_ring(ring, var_map)
        psi.append(acc)
    chart = _chart_form(ring, [ring.index[f"m{j}"] for j in range(k + 1)], rng)
    pm2 = ParamMap(ring, psi, (chart,), pm.ambient_dim, k + 1)
    return VarietyHandle(f"T^({k}){curve.name}", field, param=pm2)


def verra(d: int, field: FieldConfig, rng) -> VarietyHandle:
    """Verra surface of degree d in P^5: ruled join of a twisted cubic
    Z in a P^3 with a disjoint line W via a degree d-3 covering Z -> W."""
    if d < 4:
        raise InvalidSpec("verra needs degree >= 4")
    e = d - 3
    names = ("t", "al", "be")
    ring = PolyRing(names, field)
    ops = ring.ops
    t = ring.var("t")
    zhat = [ring.var("al") * t ** j for j in range(4)] + [ring.zero(), ring.zero()]
    # degree-e map to the vertex line W (general coefficients, seeded)
    g0 = ring.zero()
    g1 = ring.zero()
    for j in range(e + 1):
        g0 = g0 + ring.const(ops.rand_nonzero(rng)) * t ** j
        g1 = g1 + ring.const(ops.rand_nonzero(rng)) * t ** j
    what = [ring.zero()] * 4 + [ring.var("be") * g0, ring.var("be") * g1]
    psi = [zc + wc for zc, wc in zip(zhat, what)]
    chart = _chart_form(ring, [ring.index["al"], ring.index["be"]], rng)
    pm = ParamMap(ring, psi, (chart,), 5, 2)
    return VarietyHandle(f"Verra({d})", field, param=pm)


def roth(b: int, N: int, field: FieldConfig, rng,
         tries: int = 3) -> VarietyHandle:
    """Roth surface of degree b(N-2)+1 inside the cone S(0,0,N-2) in P^N.

    A member of the class bH+F is cut by G(t; l) = sum over |alpha| = b of
    c_alpha(t) l^alpha with deg_t c_alpha = 1 + (N-2) alpha_2; coefficients
    are drawn from the seeded generator, with redraws if the generic-rank
    regularity probe fails.
    """
    if b < 1:
        raise InvalidSpec("roth needs b >= 1")
    if N < 5:
        raise InvalidSpec("roth needs ambient P^N with N >= 5")
    names = ("t", "l0", "l1", "l2")
    ring = PolyRing(names, field)
    ops = ring.ops
    t = ring.var("t")
    psi = [ring.var("l0"), ring.var("l1")] + [
        ring.var("l2") * t ** j for j in range(N - 1)
    ]
    for _ in range(tries):
        G = ring.zero()
        for a0 in range(b + 1):
            for a1 in range(b + 1 - a0):
                a2 = b - a0 - a1
                dt = 1 + (N - 2) * a2
                c = ring.zero()
                for j in range(dt + 1):
                    c = c + ring.const(ops.rand_nonzero(rng)) * t ** j
                G = G + c * (ring.var("l0") ** a0) * (ring.var("l1") ** a1) * (
                    ring.var("l2") ** a2
                )
        chart = _chart_form(ring, [1, 2, 3], rng)
        pm = ParamMap(ring, psi, (G, chart), N, 2)
        if _regularity_probe(pm, rng):
            return VarietyHandle(f"Roth({b},{N})", field, param=pm)
    raise SmoothnessCheckFailed(
        f"no regular member found for roth({b},{N}) after {tries} redraws"
    )


def _regularity_probe(pm: ParamMap, rng) -> bool:
    """Check the generic parameter Jacobian rank equals expected_dim."""
    try:
        u0 = pm.sample_parameter_point(rng)
    except NoRegularPointFound:
        return False
    ops = pm.ring.ops
    cjac = [
        [g.evaluate(u0) for g in row] for row in
        ([[g.derivative(j) for j in range(pm.ring.nvars)] for g in pm.constraints])
    ]
    kern = kernel_basis(cjac, ops, ncols=pm.ring.nvars) if cjac else [
        tuple(ops.one if i == j else ops.zero for j in range(pm.ring.nvars))
        for i in range(pm.ring.nvars)
    ]
    if len(kern) != pm.expected_dim:
        return False
    jac = [[pm.psi[k].derivative(j).evaluate(u0) for j in range(pm.ring.nvars)]
           for k in range(len(pm.psi))]
    rows = [pm.psi_at(u0)] + [mat_vec(jac, v, ops) for v in kern]
    return rank(rows, ops) == pm.expected_dim + 1


def custom(vars_, psi_text, constraints_text, dim: int,
           field: FieldConfig) -> VarietyHandle:
    ring = PolyRing(tuple(vars_), field)
    psi = [parse_poly(s, ring) for s in psi_text]
    constraints = [parse_poly(s, ring) for s in constraints_text or []]
    pm = ParamMap(ring, psi, constraints, len(psi) - 1, dim)
    return VarietyHandle("custom", field, param=pm)


# ---------------------------------------------------------------------------
# Geometric operations
# ---------------------------------------------------------------------------


def implicitize(X: VarietyHandle, degree_cap: int = DEFAULT_DEGREE_CAP) -> Ideal:
    """Homogeneous ideal of the closure of the image in P^N.

    Eliminates parameters and the scaling variable h from the graph system
    x_k = h psi_k(u); the image of that map is the affine cone over the
    variety, so the elimination ideal is homogeneous and saturated with
    respect to the irrelevant ideal.  Cached on the handle.
    """
    if X.ideal is not None:
        return X.ideal
    pm = X.param
    unames = pm.ring.names
    hname = "h" if "h" not in pm.ring.index else "h__"
    xnames = tuple(f"x{k}" for k in range(pm.ambient_dim + 1))
    if set(xnames) & set(unames):
        raise InvalidSpec("parameter names collide with ambient coordinates")
    big = PolyRing(unames + (hname,) + xnames, pm.field)
    umap = list(range(len(unames)))
    h = big.var(hname)
    gens = []
    for k, p in enumerate(pm.psi):
        gens.append(big.var(xnames[k]) - h * p.map_ring(big, umap))
    for g in pm.constraints:
        gens.append(g.map_ring(big, umap))
    ideal = eliminate(Ideal(big, gens), xnames, degree_cap)
    hd = hilbert_dim_degree(ideal, degree_cap)
    if hd.projective_dimension < pm.expected_dim:
        raise ImageDegenerate(
            f"image has dimension {hd.projective_dimension}, "
            f"expected {pm.expected_dim}"
        )
    X.ideal = ideal
    X.hilbert = hd
    return ideal


def _projection_rows(center: LinearSpace, ops, width: int):
    """Rows of a surjection A^(N+1) -> A^(N+1-c) whose kernel is the center
    lift: coordinates at non-pivot columns after removing the RREF part."""
    reduced, pivots = rref(list(center.span_rows), ops)
    if len(reduced) != len(center.span_rows):
        raise InvalidSpec("projection center rows are dependent")
    rows = []
    pivset = set(pivots)
    for j in range(width):
        if j in pivset:
            continue
        # functional x_j - sum_r reduced[r][j] * x_{pivot_r}
        row = [ops.zero] * width
        row[j] = ops.one
        for r, pc in enumerate(pivots):
            row[pc] = ops.neg(reduced[r][j])
        rows.append(tuple(row))
    return rows


def project(X: VarietyHandle, center: LinearSpace, rng,
            degree_cap: int = DEFAULT_DEGREE_CAP) -> VarietyHandle:
    """Linear projection of X away from a center disjoint from a general
    point of X."""
    ops = X.field.ops
    center.validate(ops)
    width = X.ambient_dim + 1
    if center.ambient_points != width:
        raise DimensionMismatch("center lives in a different ambient space")
    rows = _projection_rows(center, ops, width)
    if X.param is not None:
        pm = X.param
        new_psi = []
        for row in rows:
            acc = pm.ring.zero()
            for c, p in zip(row, pm.psi):
                if c != 0:
                    acc = acc + p.scale(c)
            new_psi.append(acc)
        if all(p.is_zero() for p in new_psi):
            raise CenterContainsVariety("projection of psi is identically zero")
        # probabilistic disjointness check at a sampled parameter point
        u0 = pm.sample_parameter_point(rng)
        if all(v == 0 for p in new_psi for v in [p.evaluate(u0)]):
            u0 = pm.sample_parameter_point(rng)
            if all(p.evaluate(u0) == 0 for p in new_psi):
                raise CenterContainsVariety(
                    "sampled points of X project into the center"
                )
        pm2 = ParamMap(pm.ring, new_psi, pm.constraints,
                       len(rows) - 1, pm.expected_dim)
        return VarietyHandle(f"proj({X.name})", X.field, param=pm2)
    # ideal route: substitute x = B^(-1) y and eliminate the center block
    ideal = X.ideal
    ring = ideal.ring
    crows = [list(r) for r in center.span_rows]
    basis = [list(r) for r in rows] + crows
    # x = basis^T applied to new coords: x_j = sum_i basis[i][j] * y_i
    ynames = tuple(f"y{k}" for k in range(width))
    yring = PolyRing(ynames, X.field)
    images = []
    for j in range(width):
        acc = yring.zero()
        for i in range(width):
            c = basis[i][j]
            if c != 0:
                acc = acc + yring.var(ynames[i]).scale(c)
        images.append(acc)
    mapped = [g.subst(images) for g in ideal.gens]
    keep = ynames[: len(rows)]
    elim_ideal = eliminate(Ideal(yring, mapped), keep, degree_cap)
    out_ring = PolyRing(tuple(f"x{k}" for k in range(len(rows))), X.field)
    var_map = [out_ring.index[f"x{k}"] for k in range(len(rows))]
    out = [g.map_ring(out_ring, var_map) for g in elim_ideal.gens]
    result = Ideal(out_ring, out)
    h = VarietyHandle(f"proj({X.name})", X.field, ideal=result)
    return h


def embed(X: VarietyHandle, new_ambient: int, offset: int) -> VarietyHandle:
    """Re-embed a parametrized variety into a larger P^N, placing its
    coordinates at positions offset..offset+N_old."""
    pm = X.param
    if pm is None:
        raise InvalidSpec("embed needs a parametrization")
    zero = pm.ring.zero()
    psi = [zero] * (new_ambient + 1)
    for k, p in enumerate(pm.psi):
        psi[offset + k] = p
    pm2 = ParamMap(pm.ring, psi, pm.constraints, new_ambient, pm.expected_dim)
    return VarietyHandle(X.name, X.field, param=pm2)


def cone_join(A, B: VarietyHandle, rng) -> VarietyHandle:
    """Join of A (a linear space or a parametrized variety) with B.

    Both lifts must live in the same A^(N+1); psi is psi_A + s psi_B with
    merged constraints plus a chart pinning the A-side scaling.
    """
    field = B.field
    ops = field.ops
    pmB = B.param
    if pmB is None:
        raise InvalidSpec("cone_join needs a parametrized base")
    width = pmB.ambient_dim + 1

    if isinstance(A, LinearSpace):
        if A.ambient_points != width:
            raise DimensionMismatch("vertex and base live in different spaces")
        k = len(A.span_rows)
        anames = tuple(f"mu{i}" for i in range(k))
        aring = PolyRing(anames, field)
        psi_A = []
        for j in range(width):
            acc = aring.zero()
            for i in range(k):
                c = A.span_rows[i][j]
                if c != 0:
                    acc = acc + aring.var(anames[i]).scale(c)
            psi_A.append(acc)
        a_constraints = []
        a_dim = k - 1
        a_name = f"P^{k-1}"
    else:
        pmA = A.param
        if pmA is None:
            raise InvalidSpec("cone_join vertex needs a parametrization")
        if pmA.ambient_dim != pmB.ambient_dim:
            raise DimensionMismatch("vertex and base live in different spaces")
        anames = tuple(f"A_{n}" for n in pmA.ring.names)
        aring = PolyRing(anames, field)
        amap = list(range(len(anames)))
        psi_A = [p.map_ring(aring, amap) for p in pmA.psi]
        a_constraints = [g.map_ring(aring, amap) for g in pmA.constraints]
        a_dim = pmA.expected_dim
        a_name = A.name

    bnames = tuple(f"B_{n}" for n in pmB.ring.names)
    names = aring.names + bnames + ("s_j",)
    ring = PolyRing(names, field)
    amap2 = [ring.index[n] for n in aring.names]
    bmap = [ring.index[f"B_{n}"] for n in pmB.ring.names]
    s = ring.var("s_j")
    psi = [
        pa.map_ring(ring, amap2) + s * pb.map_ring(ring, bmap)
        for pa, pb in zip(psi_A, pmB.psi)
    ]
    constraints = [g.map_ring(ring, amap2) for g in a_constraints]
    constraints += [g.map_ring(ring, bmap) for g in pmB.constraints]
    if isinstance(A, LinearSpace):
        constraints.append(
            _chart_form(ring, [ring.index[n] for n in aring.names], rng)
        )
    pm = ParamMap(ring, psi, tuple(constraints), pmB.ambient_dim,
                  a_dim + pmB.expected_dim + 1)
    return VarietyHandle(f"S({a_name},{B.name})", field, param=pm)


def multiplicity_at(H: Ideal, point, degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Multiplicity of a hypersurface at a point of P^N: the minimal total
    degree of the local expansion in an affine chart centered there."""
    gb = H.gb(degree_cap=degree_cap)
    if len(gb) != 1:
        raise NotHypersurface(f"ideal has a {len(gb)}-element basis")
    f = gb[0]
    ring = H.ring
    ops = ring.ops
    if len(point) != ring.nvars:
        raise PointNotOnAmbient("point has the wrong number of coordinates")
    chart = next((j for j, c in enumerate(point) if c != 0), None)
    if chart is None:
        raise PointNotOnAmbient("point has no nonzero coordinate")
    ynames = tuple(f"e{j}" for j in range(ring.nvars) if j != chart)
    yring = PolyRing(ynames, ring.field)
    images = []
    pos = 0
    for j in range(ring.nvars):
        if j == chart:
            images.append(yring.const(point[j]))
        else:
            images.append(yring.const(point[j]) + yring.var(ynames[pos]))
            pos += 1
    local = f.subst(images)
    if local.is_zero():
        raise NotHypersurface("generator vanishes identically on the chart")
    return min(sum(m) for m in local.terms)


def param_degree(X: VarietyHandle, rng, degree_cap: int = DEFAULT_DEGREE_CAP,
                 tries: int = 3) -> int:
    """Number of constraint-satisfying parameter points over the image of a
    random regular parameter point; normalizes every counting operation."""
    pm = X.param
    if pm is None:
        raise InvalidSpec("param_degree needs a parametrization")
    if pm.pdeg is not None:
        return pm.pdeg
    for attempt in range(tries):
        u0 = pm.sample_parameter_point(rng)
        x0 = pm.psi_at(u0)
        if all(v == 0 for v in x0):
            continue
        names = pm.ring.names + ("c__", "Y__", "Z__")
        ring = PolyRing(names, pm.field)
        umap = list(range(pm.ring.nvars))
        c = ring.var("c__")
        gens = []
        for k, p in enumerate(pm.psi):
            gens.append(p.map_ring(ring, umap) - c.scale(x0[k]))
        for g in pm.constraints:
            gens.append(g.map_ring(ring, umap))
        # base points of psi would sneak in with c = 0: force c nonzero
        gens.append(ring.one() - ring.var("Y__") * c)
        zform = random_linear_form(ring, umap, rng)
        gens.append(ring.var("Z__") - zform)
        gens = presolve_linear(gens, set(range(ring.nvars)) - {ring.index["Z__"]})
        gens, small, _ = compact_system(gens, ring, keep_names=["Z__"])
        try:
            total, distinct = count_zero_dim(Ideal(small, gens), "Z__", degree_cap)
        except NotZeroDimensional:
            raise FiberNotFinite(
                "parametrization has positive-dimensional fibers"
            )
        if distinct >= 1:
            pm.pdeg = distinct
            return distinct
    raise FiberNotFinite("could not certify a finite generic fiber")


def degree_via_points(X: VarietyHandle, rng,
                      degree_cap: int = DEFAULT_DEGREE_CAP,
                      tries: int = 3) -> int:
    """Degree of X by counting parameter solutions of a generic linear
    section of complementary dimension."""
    pm = X.param
    if pm is None:
        return X.hilbert_data(degree_cap).degree
    pdeg = param_degree(X, rng, degree_cap)
    for attempt in range(tries):
        names = pm.ring.names + ("Y__", "Z__")
        ring = PolyRing(names, pm.field)
        umap = list(range(pm.ring.nvars))
        psi = [p.map_ring(ring, umap) for p in pm.psi]
        gens = []
        for _ in range(pm.expected_dim):
            coefs = [ring.ops.rand(rng) for _ in psi]
            acc = ring.zero()
            for cc, p in zip(coefs, psi):
                if cc != 0:
                    acc = acc + p.scale(cc)
            gens.append(acc)
        for g in pm.constraints:
            gens.append(g.map_ring(ring, umap))
        # base points (psi = 0) satisfy the slices trivially: exclude them
        nonzero = ring.zero()
        for p in psi:
            cc = ring.ops.rand(rng)
            if cc != 0:
                nonzero = nonzero + p.scale(cc)
        gens.append(ring.one() - ring.var("Y__") * nonzero)
        gens.append(ring.var("Z__") - random_linear_form(ring, umap, rng))
        gens = presolve_linear(gens, set(range(len(umap))))
        gens, small, _ = compact_system(gens, ring, keep_names=["Z__"])
        try:
            total, distinct = count_zero_dim(Ideal(small, gens), "Z__", degree_cap)
        except NotZeroDimensional:
            continue
        if distinct % pdeg == 0 and distinct > 0:
            return distinct // pdeg
    raise NotZeroDimensional("generic linear section count failed")


# ---------------------------------------------------------------------------
# VarietySpec JSON
# ---------------------------------------------------------------------------


def make_variety(spec, field: FieldConfig, rng) -> VarietyHandle:
    """Build a variety from its JSON spec dict."""
    if not isinstance(spec, dict) or "type" not in spec:
        raise InvalidSpec("variety spec must be a dict with a 'type'")
    kind = spec["type"]
    if kind == "rnc":
        return rnc(int(spec["d"]), field)
    if kind == "scroll":
        return scroll([int(x) for x in spec["a"]], field, rng)
    if kind == "veronese":
        return veronese(int(spec.get("n", 2)), field, rng)
    if kind == "segre":
        return segre(int(spec["a"]), int(spec["b"]), field, rng)
    if kind == "osculating":
        curve = make_variety(spec["curve"], field, rng)
        return osculating_scroll(curve, int(spec["k"]), rng)
    if kind == "verra":
        return verra(int(spec["d"]), field, rng)
    if kind == "roth":
        return roth(int(spec["b"]), int(spec["N"]), field, rng)
    if kind == "custom":
        return custom(
            spec["vars"], spec["psi"], spec.get("constraints", []),
            int(spec.get("dim", len(spec["vars"]) - len(spec.get("constraints", [])))),
            field,
        )
    if kind == "project":
        X = make_variety(spec["of"], field, rng)
        center = spec.get("center", "random_point")
        ops = field.ops
        if center == "random_point":
            row = tuple(ops.rand(rng) for _ in range(X.ambient_dim + 1))
            L = LinearSpace((row,))
        elif center == "point_on_variety":
            pm = X.param
            if pm is None:
                raise InvalidSpec("point_on_variety needs a parametrization")
            u0 = pm.sample_parameter_point(rng)
            L = LinearSpace((pm.psi_at(u0),))
        else:
            rows = tuple(tuple(ops.from_int(int(c)) for c in row) for row in center)
            L = LinearSpace(rows)
        return project(X, L, rng)
    if kind == "cone":
        base = make_variety(spec["base"], field, rng)
        vspec = spec["vertex"]
        if isinstance(vspec, dict) and vspec.get("type") == "linear":
            ops = field.ops
            rows = tuple(
                tuple(ops.from_int(int(c)) for c in row) for row in vspec["rows"]
            )
            vertex = LinearSpace(rows)
        elif isinstance(vspec, dict):
            vertex = make_variety(vspec, field, rng)
        else:
            # integer: vertex_dim; canonical placement in the leading block
            vdim = int(vspec)
            base_n = base.ambient_dim
            new_n = base_n + vdim + 1
            ops = field.ops
            base = embed(base, new_n, vdim + 1)
            rows = tuple(
                tuple(ops.one if j == i else ops.zero for j in range(new_n + 1))
                for i in range(vdim + 1)
            )
            vertex = LinearSpace(rows)
        return cone_join(vertex, base, rng)
    raise InvalidSpec(f"unknown variety type {kind!r}")
