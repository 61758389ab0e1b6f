"""Tangent and secant varieties plus fast rank-based local dimension data.

Tangent spaces are handled on the affine cone: at a parameter point u0 the
lift of the embedded tangent space is spanned by psi(u0) together with the
Jacobian images of the constraint-kernel directions.  Second-order data
comes from chain-rule Hessians that include the implicit curvature of the
constraint locus, so constrained members (Roth surfaces, joins) get exact
second fundamental data without a local chart.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import (
    DegreeCapExceeded,
    DisagreementAcrossTrials,
    GenericityWarning,
    InvalidSpec,
    NoRegularPointFound,
)
from .groebner import (
    DEFAULT_DEGREE_CAP,
    Ideal,
    eliminate,
    hilbert_dim_degree,
)
from .linalg import kernel_basis, mat_vec, rank, solve, vec_add, vec_scale
from .poly import PolyRing, Polynomial, fresh_name
from .varieties import ParamMap, VarietyHandle


@dataclass
class TangentFrame:
    """Pointwise first and second order data of a parametrization.

    ``span_rows`` is [psi(u0)] followed by a basis of the tangent-direction
    lifts; ``second_rows`` are the second-derivative combination vectors at
    a random direction sample lambda0.  ``hess_vectors`` holds the full
    symmetric tensor (i <= j) used by the local-geometry module.
    """

    u0: tuple
    lambda0: tuple
    point: tuple
    span_rows: list
    second_rows: list
    hess_vectors: dict
    kernel: list

    @property
    def n(self) -> int:
        return len(self.span_rows) - 1


def _constraint_kernel(pm: ParamMap, u0, ops):
    m = pm.ring.nvars
    if not pm.constraints:
        return [tuple(ops.one if i == j else ops.zero for j in range(m))
                for i in range(m)], []
    cjac_polys = pm.constraint_jacobian()
    cjac = [[p.evaluate(u0) for p in row] for row in cjac_polys]
    return kernel_basis(cjac, ops, ncols=m), cjac


def frame_at(pm: ParamMap, u0, rng) -> TangentFrame:
    """Build the tangent frame at a given parameter point; raises
    NoRegularPointFound when the point is irregular."""
    ops = pm.ring.ops
    m = pm.ring.nvars
    n = pm.expected_dim
    kern, cjac = _constraint_kernel(pm, u0, ops)
    if len(kern) != n:
        raise NoRegularPointFound(
            f"constraint kernel has dimension {len(kern)}, expected {n}"
        )
    jac = [[p.evaluate(u0) for p in row] for row in pm.jacobian()]
    point = pm.psi_at(u0)
    dirs = [mat_vec(jac, v, ops) for v in kern]
    span = [point] + dirs
    if rank(span, ops) != n + 1:
        raise NoRegularPointFound("projective Jacobian rank below expected_dim")

    # chain-rule second derivatives along the constraint locus
    hess = pm.hessians()
    hess_at = [
        {ij: p.evaluate(u0) for ij, p in h.items()} for h in hess
    ]
    chess_at = None
    if pm.constraints:
        chess = pm.constraint_hessians()
        chess_at = [
            {ij: p.evaluate(u0) for ij, p in h.items()} for h in chess
        ]

    def quad(hmat, vi, vj):
        acc = ops.zero
        for a in range(m):
            va = vi[a]
            if va == 0:
                continue
            for b in range(m):
                vb = vj[b]
                if vb == 0:
                    continue
                key = (a, b) if a <= b else (b, a)
                hv = hmat.get(key, ops.zero)
                if hv != 0:
                    acc = ops.add(acc, ops.mul(va, ops.mul(hv, vb)))
        return acc

    hess_vectors = {}
    for i in range(n):
        for j in range(i, n):
            vec = tuple(quad(hess_at[k], kern[i], kern[j])
                        for k in range(len(pm.psi)))
            if pm.constraints:
                rhs = [ops.neg(quad(chess_at[l], kern[i], kern[j]))
                       for l in range(len(pm.constraints))]
                corr = solve(cjac, rhs, ops)
                if corr is None:
                    raise NoRegularPointFound("constraint Jacobian degenerate")
                vec = vec_add(vec, mat_vec(jac, corr, ops), ops)
            hess_vectors[(i, j)] = vec

    lam = tuple(ops.rand(rng) for _ in range(n))
    second = _combination_rows(hess_vectors, lam, n, ops)
    return TangentFrame(tuple(u0), lam, point, span, second, hess_vectors, kern)


def _combination_rows(hess_vectors, lam, n, ops):
    rows = []
    for j in range(n):
        acc = None
        for i in range(n):
            key = (i, j) if i <= j else (j, i)
            v = vec_scale(lam[i], hess_vectors[key], ops)
            acc = v if acc is None else vec_add(acc, v, ops)
        rows.append(acc)
    return rows


def regular_point(X, rng, tries: int = 10) -> TangentFrame:
    """Random regular frame: a constraint-satisfying parameter point whose
    projective Jacobian rank equals expected_dim."""
    pm = X.param if isinstance(X, VarietyHandle) else X
    if pm is None:
        raise InvalidSpec("regular_point needs a parametrization")
    last = None
    for _ in range(tries):
        try:
            u0 = pm.sample_parameter_point(rng)
            return frame_at(pm, u0, rng)
        except NoRegularPointFound as exc:
            last = exc
    raise NoRegularPointFound(
        f"no regular point after {tries} tries: {last}"
    )


def _majority(values, label: str):
    values = list(values)
    best = max(set(values), key=values.count)
    hits = values.count(best)
    if hits == len(values):
        return best
    if hits * 2 > len(values):
        warnings.warn(
            f"{label}: trials disagree {values}, taking majority {best}",
            GenericityWarning,
        )
        return best
    raise DisagreementAcrossTrials(f"{label}: no majority among {values}")


def tan_dim_fast(X: VarietyHandle, rng, trials: int = 3) -> int:
    """dim Tan(X) from ranks: span rows plus second-derivative combination
    rows at a random direction, majority over seeded trials."""
    pm = X.param
    if pm is None:
        raise InvalidSpec("tan_dim_fast needs a parametrization")
    ops = pm.ring.ops
    vals = []
    for _ in range(trials):
        fr = regular_point(pm, rng)
        rows = fr.span_rows + fr.second_rows
        vals.append(rank(rows, ops) - 1)
    return _majority(vals, f"tan_dim({X.name})")


def secant_dim_fast(X: VarietyHandle, rng, trials: int = 3) -> int:
    """dim Sec(X) via the span of two general tangent spaces (Terracini)."""
    pm = X.param
    if pm is None:
        raise InvalidSpec("secant_dim_fast needs a parametrization")
    ops = pm.ring.ops
    vals = []
    for _ in range(trials):
        f1 = regular_point(pm, rng)
        f2 = regular_point(pm, rng)
        vals.append(rank(f1.span_rows + f2.span_rows, ops) - 1)
    return _majority(vals, f"sec_dim({X.name})")


def gauss_defect(X: VarietyHandle, rng, trials: int = 3) -> int:
    """Gauss defect: dim X minus the rank of the differential of the Gauss
    map, computed from normal components of the second-derivative tensor."""
    pm = X.param
    if pm is None:
        raise InvalidSpec("gauss_defect needs a parametrization")
    ops = pm.ring.ops
    n = pm.expected_dim
    vals = []
    for _ in range(trials):
        fr = regular_point(pm, rng)
        proj = _normal_projector(fr.span_rows, ops)
        rows = []
        for i in range(n):
            flat = []
            for j in range(n):
                key = (i, j) if i <= j else (j, i)
                flat.extend(proj(fr.hess_vectors[key]))
            rows.append(tuple(flat))
        vals.append(n - rank(rows, ops))
    return _majority(vals, f"gauss_defect({X.name})")


def _normal_projector(span_rows, ops):
    """Map returning the coordinates of a vector in the normal directions
    completing span_rows to a full basis (deterministic completion)."""
    from .linalg import complete_to_basis, coords_in_basis

    width = len(span_rows[0])
    extra = complete_to_basis(span_rows, ops, width)
    basis = list(span_rows) + extra

    def proj(v):
        coords = coords_in_basis(basis, v, ops)
        return coords[len(span_rows):]

    return proj


def osculating_dim(X: VarietyHandle, k: int = 2, rng=None, trials: int = 3) -> int:
    """Dimension of the second osculating space at a random regular point."""
    if k != 2:
        raise InvalidSpec("only second osculating spaces are supported")
    pm = X.param
    if pm is None:
        raise InvalidSpec("osculating_dim needs a parametrization")
    ops = pm.ring.ops
    vals = []
    for _ in range(trials):
        fr = regular_point(pm, rng)
        rows = fr.span_rows + list(fr.hess_vectors.values())
        vals.append(rank(rows, ops) - 1)
    return _majority(vals, f"osc_dim({X.name})")


# ---------------------------------------------------------------------------
# Exact ideals of Tan(X) and Sec(X) by elimination
# ---------------------------------------------------------------------------


def _tangent_system(pm: ParamMap, target_consts=None):
    """Incidence generators for the tangent family on the affine cone.

    Returns (ring, gens, unames): x_k - a psi_k - (J v)_k together with the
    constraints and their directional derivatives; when ``target_consts``
    is given the x-block is replaced by those scalars (counting mode).
    """
    unames = pm.ring.names
    used = set(unames)
    vnames = tuple(fresh_name(f"v{j}", used) for j in range(pm.ring.nvars))
    used |= set(vnames)
    aname = fresh_name("a__", used)
    used.add(aname)
    if target_consts is None:
        xnames = tuple(f"x{k}" for k in range(pm.ambient_dim + 1))
        names = unames + vnames + (aname,) + xnames
    else:
        xnames = ()
        names = unames + vnames + (aname,)
    ring = PolyRing(names, pm.field)
    umap = list(range(len(unames)))
    jac = pm.jacobian()
    gens = []
    for k, p in enumerate(pm.psi):
        e = ring.var(aname) * p.map_ring(ring, umap)
        for j in range(pm.ring.nvars):
            dp = jac[k][j]
            if not dp.is_zero():
                e = e + ring.var(vnames[j]) * dp.map_ring(ring, umap)
        if target_consts is None:
            gens.append(ring.var(xnames[k]) - e)
        else:
            gens.append(ring.const(target_consts[k]) - e)
    for g in pm.constraints:
        gens.append(g.map_ring(ring, umap))
        e = ring.zero()
        for j in range(pm.ring.nvars):
            dg = g.derivative(j)
            if not dg.is_zero():
                e = e + ring.var(vnames[j]) * dg.map_ring(ring, umap)
        gens.append(e)
    return ring, gens, xnames


def tangent_variety(X: VarietyHandle, degree_cap: int = DEFAULT_DEGREE_CAP) -> VarietyHandle:
    """Tangent variety as a handle carrying its homogeneous ideal and
    Hilbert data; raises DegreeCapExceeded on intractable elimination (the
    caller can fall back to the counting route for the degree)."""
    if X._tan is not None:
        return X._tan
    pm = X.param
    if pm is None:
        raise InvalidSpec("tangent_variety needs a parametrization")
    ring, gens, xnames = _tangent_system(pm)
    ideal = eliminate(Ideal(ring, gens), xnames, degree_cap)
    out = VarietyHandle(f"Tan({X.name})", X.field, ideal=ideal)
    out.hilbert = hilbert_dim_degree(ideal, degree_cap)
    X._tan = out
    return out


def secant_variety(X: VarietyHandle, degree_cap: int = DEFAULT_DEGREE_CAP) -> VarietyHandle:
    """Secant variety ideal via elimination of the two-point chord system."""
    if X._sec is not None:
        return X._sec
    pm = X.param
    if pm is None:
        raise InvalidSpec("secant_variety needs a parametrization")
    unames = pm.ring.names
    wnames = tuple(f"W_{n}" for n in unames)
    used = set(unames) | set(wnames)
    aname = fresh_name("a__", used)
    bname = fresh_name("b__", used | {aname})
    xnames = tuple(f"x{k}" for k in range(pm.ambient_dim + 1))
    names = unames + wnames + (aname, bname) + xnames
    ring = PolyRing(names, pm.field)
    umap = [ring.index[n] for n in unames]
    wmap = [ring.index[w] for w in wnames]
    a, b = ring.var(aname), ring.var(bname)
    gens = []
    for k, p in enumerate(pm.psi):
        gens.append(
            ring.var(xnames[k])
            - a * p.map_ring(ring, umap)
            - b * p.map_ring(ring, wmap)
        )
    for g in pm.constraints:
        gens.append(g.map_ring(ring, umap))
        gens.append(g.map_ring(ring, wmap))
    ideal = eliminate(Ideal(ring, gens), xnames, degree_cap)
    out = VarietyHandle(f"Sec({X.name})", X.field, ideal=ideal)
    out.hilbert = hilbert_dim_degree(ideal, degree_cap)
    X._sec = out
    return out
