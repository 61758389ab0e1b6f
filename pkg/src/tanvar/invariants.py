"""Enumerative invariants by zero-dimensional counting.

tau (tangent degree), the cetos omega_i, the secant degree mu, and the
node count sigma are all counts of distinct solutions of seeded incidence
systems; distinctness is read off squarefree eliminants, so the counts are
geometric (multiplicity-free), while the multiplicity-weighted quotient
dimension is reported as a diagnostic.  Every count divides out the
parametrization degree.  Randomized counts repeat over independent seeded
trials and take the majority; disagreement is surfaced, never averaged.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field

from .errors import (
    DegreeCapExceeded,
    DisagreementAcrossTrials,
    GenericityWarning,
    InvalidSpec,
    NotFinite,
    NotZeroDimensional,
    OddOrderedCount,
    SliceSingularityHit,
)
from .groebner import (
    DEFAULT_DEGREE_CAP,
    Ideal,
    compact_system,
    count_zero_dim,
    normal_form,
    presolve_linear,
)
from .poly import GREVLEX, PolyRing, Polynomial, fresh_name
from .solve import random_linear_form
from .tangential import (
    _tangent_system,
    regular_point,
    secant_dim_fast,
    tan_dim_fast,
    tangent_variety,
    secant_variety,
)
from .varieties import (
    VarietyHandle,
    degree_via_points,
    implicitize,
    param_degree,
)


@dataclass
class IdentityRecord:
    name: str
    lhs: int
    rhs: int
    passed: bool
    operands: dict = dc_field(default_factory=dict)

    def to_json(self):
        out = {"name": self.name, "lhs": self.lhs, "rhs": self.rhs,
               "pass": self.passed}
        if self.operands:
            out["operands"] = self.operands
        return out


@dataclass
class InvariantReport:
    """Structured result record serialized by the CLI."""

    tau: int = None
    omega: dict = dc_field(default_factory=dict)
    mu: int = None
    sigma: int = None
    deg_tan: int = None
    dim_tan: int = None
    deg_sec: int = None
    dim_sec: int = None
    dim: int = None
    deg: int = None
    identities: list = dc_field(default_factory=list)
    trials: int = 3
    seed: int = 42
    notes: list = dc_field(default_factory=list)

    def to_json(self):
        out = {}
        for k in ("tau", "mu", "sigma", "deg_tan", "dim_tan", "deg_sec",
                  "dim_sec", "dim", "deg"):
            v = getattr(self, k)
            if v is not None:
                out[k] = v
        if self.omega:
            out["omega"] = {str(i): v for i, v in sorted(self.omega.items())}
        out["identities"] = [r.to_json() for r in self.identities]
        out["trials"] = self.trials
        out["seed"] = self.seed
        if self.notes:
            out["notes"] = self.notes
        return out


def _majority_count(fn, rng, trials, label):
    values = []
    for _ in range(trials):
        values.append(fn(rng))
    best = max(set(values), key=values.count)
    hits = values.count(best)
    if hits == len(values):
        return best
    if hits * 2 > len(values):
        warnings.warn(
            f"{label}: trials disagree {values}, majority {best}",
            GenericityWarning,
        )
        return best
    raise DisagreementAcrossTrials(f"{label}: no majority among {values}")


def _count_distinct(gens, ring: PolyRing, sep_idxs, rng,
                    degree_cap=DEFAULT_DEGREE_CAP, zname="Z__"):
    """Append a separating variable over the listed coordinates, presolve,
    and count (total, distinct-z)."""
    zidx = ring.index[zname]
    gens = list(gens)
    gens.append(ring.var(zname) - random_linear_form(ring, sep_idxs, rng))
    removable = set(range(ring.nvars)) - {zidx}
    gens = presolve_linear(gens, removable)
    gens, small, _ = compact_system(gens, ring, keep_names=[zname])
    return count_zero_dim(Ideal(small, gens), zname, degree_cap)


# ---------------------------------------------------------------------------
# tau and omega
# ---------------------------------------------------------------------------


def tau(X: VarietyHandle, rng, trials: int = 3,
        degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Number of tangent spaces at smooth points through a general point of
    the tangent variety; zero when dim Tan(X) < 2n."""
    pm = X.param
    if pm is None:
        raise InvalidSpec("tau needs a parametrization")
    n = pm.expected_dim
    if tan_dim_fast(X, rng, trials) < 2 * n:
        return 0
    pdeg = param_degree(X, rng, degree_cap)

    def one_trial(rng):
        ops = pm.ring.ops
        for attempt in range(3):
            fr = regular_point(pm, rng)
            a0 = ops.rand_nonzero(rng)
            w = list(tuple(ops.mul(a0, c) for c in fr.point))
            for lam, d in zip(fr.lambda0, fr.span_rows[1:]):
                if lam != 0:
                    w = [ops.add(x, ops.mul(lam, y)) for x, y in zip(w, d)]
            ring, gens, _ = _tangent_system(pm, target_consts=tuple(w))
            big = PolyRing(ring.names + ("Z__",), pm.field)
            vmap = list(range(ring.nvars))
            gens = [g.map_ring(big, vmap) for g in gens]
            u_idxs = [big.index[nm] for nm in pm.ring.names]
            try:
                total, distinct = _count_distinct(
                    gens, big, u_idxs, rng, degree_cap
                )
            except NotZeroDimensional:
                continue
            if distinct > 0 and distinct % pdeg == 0:
                return distinct // pdeg
        raise NotFinite("tau system stayed degenerate after reseeding")

    return _majority_count(one_trial, rng, trials, f"tau({X.name})")


def omega_top(X: VarietyHandle, rng, trials: int = 3,
              degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Top ceto omega_n: tangent spaces meeting a general linear subspace of
    codimension 2n."""
    pm = X.param
    if pm is None:
        raise InvalidSpec("omega_top needs a parametrization")
    n = pm.expected_dim
    if tan_dim_fast(X, rng, trials) < 2 * n:
        return 0
    pdeg = param_degree(X, rng, degree_cap)

    def one_trial(rng):
        for attempt in range(3):
            ring, gens, _ = _tangent_system(pm)
            # recover the tangent-point expressions from the x_k - expr_k block
            exprs = []
            for k, g in enumerate(gens[: pm.ambient_dim + 1]):
                xvar = ring.var(f"x{k}")
                exprs.append(xvar - g)
            rest = gens[pm.ambient_dim + 1:]
            new_gens = []
            # the tangent point must lie on 2n random hyperplanes
            for _ in range(2 * n):
                new_gens.append(_random_combination(ring, exprs, rng))
            new_gens.extend(rest)
            # chart on the tangent-space coefficients (a and the v's)
            coef_idxs = [
                i for i, nm in enumerate(ring.names)
                if nm not in pm.ring.index and not nm.startswith("x")
            ]
            new_gens.append(
                random_linear_form(ring, coef_idxs, rng) - ring.one()
            )
            small_names = tuple(nm for nm in ring.names if not nm.startswith("x"))
            small = PolyRing(small_names + ("Y__", "Z__"), pm.field)
            vmap = [small.index.get(nm) for nm in ring.names]
            new_gens = [g.map_ring(small, vmap) for g in new_gens]
            # exclude solutions whose incidence point collapses to zero
            new_gens.append(_nonvanishing(
                small,
                [_random_combination(small, [e.map_ring(small, vmap) for e in exprs], rng)],
            ))
            u_idxs = [small.index[nm] for nm in pm.ring.names]
            try:
                total, distinct = _count_distinct(
                    new_gens, small, u_idxs, rng, degree_cap
                )
            except NotZeroDimensional:
                continue
            if distinct > 0 and distinct % pdeg == 0:
                return distinct // pdeg
        raise NotFinite("omega system stayed degenerate after reseeding")

    return _majority_count(one_trial, rng, trials, f"omega_top({X.name})")


def omega_slice(X: VarietyHandle, i: int, rng, trials: int = 3,
                degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """i-th ceto: the top ceto of a general (n-i)-codimensional linear
    section, computed on the implicit ideal of the section."""
    pm = X.param
    n = pm.expected_dim if pm is not None else X.dim
    if not (1 <= i <= n):
        raise InvalidSpec(f"omega index must be in 1..{n}")
    if i == n:
        return omega_top(X, rng, trials, degree_cap)
    ideal = implicitize(X, degree_cap)

    def one_trial(rng):
        for attempt in range(3):
            try:
                sliced, ring = _slice_ideal(ideal, n - i, rng)
                return _omega_ideal_route(sliced, ring, i, rng, degree_cap)
            except (NotZeroDimensional, SliceSingularityHit):
                continue
        raise SliceSingularityHit("random slice kept meeting the singular locus")

    return _majority_count(one_trial, rng, trials, f"omega_{i}({X.name})")


def _slice_ideal(ideal: Ideal, codim: int, rng):
    """Cut by ``codim`` random hyperplanes and substitute them away, so the
    section lives in a smaller projective space."""
    ring = ideal.ring
    ops = ring.ops
    gens = list(ideal.gens)
    remaining = list(range(ring.nvars))
    for _ in range(codim):
        # random form solved for its last pivot variable
        pivot = remaining[-1]
        coefs = {j: ops.rand(rng) for j in remaining[:-1]}
        inv = ops.neg(ops.one)
        image_terms = {}
        for j, c in coefs.items():
            if c != 0:
                m = tuple(1 if t == j else 0 for t in range(ring.nvars))
                image_terms[m] = c
        image = Polynomial(ring, image_terms)
        new = []
        for g in gens:
            if g.degree_in(pivot) == 0:
                new.append(g)
                continue
            acc = ring.zero()
            # substitute x_pivot -> image via split by pivot powers
            by_pow = {}
            for m, c in g.terms.items():
                e = m[pivot]
                mm = m[:pivot] + (0,) + m[pivot + 1:]
                by_pow.setdefault(e, {})[mm] = c
            power = ring.one()
            for e in range(max(by_pow) + 1):
                if e in by_pow:
                    acc = acc + Polynomial(ring, by_pow[e]) * power
                power = power * image
            new.append(acc)
        gens = [g for g in new if not g.is_zero()]
        remaining.pop()
    small = PolyRing(tuple(ring.names[j] for j in remaining), ring.field)
    vmap = [None] * ring.nvars
    for newi, oldj in enumerate(remaining):
        vmap[oldj] = newi
    return [g.map_ring(small, vmap) for g in gens], small


def _omega_ideal_route(gens, ring: PolyRing, i: int, rng, degree_cap):
    """Tangent spaces of V(gens) meeting a codimension-2i subspace: the
    ideal-theoretic incidence system in point and direction coordinates."""
    sliced = Ideal(ring, gens)
    gb = sliced.gb(GREVLEX, degree_cap)
    ops = ring.ops
    width = ring.nvars
    vnames = tuple(f"V_{n}" for n in ring.names)
    names = ring.names + vnames + ("Z__",)
    big = PolyRing(names, ring.field)
    xmap = list(range(width))
    sys_gens = [g.map_ring(big, xmap) for g in gb]
    for g in gb:
        acc = big.zero()
        for j in range(width):
            dg = g.derivative(j)
            if not dg.is_zero():
                acc = acc + big.var(vnames[j]) * dg.map_ring(big, xmap)
        sys_gens.append(acc)
    v_idxs = [big.index[v] for v in vnames]
    for _ in range(2 * i):
        sys_gens.append(random_linear_form(big, v_idxs, rng))
    x_idxs = list(range(width))
    sys_gens.append(random_linear_form(big, x_idxs, rng) - big.one())
    sys_gens.append(random_linear_form(big, v_idxs, rng) - big.one())
    total, distinct = _count_distinct(sys_gens, big, x_idxs, rng, degree_cap)
    if distinct == 0:
        raise SliceSingularityHit("incidence count degenerated to zero")
    return distinct


# ---------------------------------------------------------------------------
# mu and sigma
# ---------------------------------------------------------------------------


def _separating_form(ring: PolyRing, umap, wmap, rng) -> Polynomial:
    """Random linear form l(u) - l(w) vanishing exactly on the diagonal."""
    ops = ring.ops
    form = ring.zero()
    for iu, iw in zip(umap, wmap):
        c = ops.rand(rng)
        if c != 0:
            m_u = tuple(1 if t == iu else 0 for t in range(ring.nvars))
            m_w = tuple(1 if t == iw else 0 for t in range(ring.nvars))
            form = form + Polynomial(ring, {m_u: c, m_w: ops.neg(c)})
    return form


def _nonvanishing(ring: PolyRing, factors, yname="Y__") -> Polynomial:
    """1 - Y * prod(factors): forces every factor nonzero (inverse trick),
    cutting away degenerate components such as tangential chords or
    collapsed incidence points."""
    y = ring.var(yname)
    prod = ring.one()
    for f in factors:
        prod = prod * f
    return ring.one() - y * prod


def _random_combination(ring: PolyRing, exprs, rng) -> Polynomial:
    ops = ring.ops
    acc = ring.zero()
    for e in exprs:
        c = ops.rand(rng)
        if c != 0:
            acc = acc + e.scale(c)
    return acc


def _chord_system(pm, rng, point_conditions):
    """Common scaffold for secant counting: chords a psi(u) + psi(w) subject
    to ``point_conditions`` (a callable producing generators from the chord
    point expressions)."""
    unames = pm.ring.names
    wnames = tuple(f"W_{n}" for n in unames)
    used = set(unames) | set(wnames)
    aname = fresh_name("a__", used)
    names = unames + wnames + (aname, "Y__", "Z__")
    ring = PolyRing(names, pm.field)
    umap = [ring.index[n] for n in unames]
    wmap = [ring.index[w] for w in wnames]
    a = ring.var(aname)
    chord = [
        a * p.map_ring(ring, umap) + p.map_ring(ring, wmap) for p in pm.psi
    ]
    gens = point_conditions(ring, chord)
    for g in pm.constraints:
        gens.append(g.map_ring(ring, umap))
        gens.append(g.map_ring(ring, wmap))
    # distinct feet, and the meeting point must not collapse to zero
    gens.append(_nonvanishing(
        ring,
        [_random_combination(ring, chord, rng),
         _separating_form(ring, umap, wmap, rng)],
    ))
    sep = [ring.index[n] for n in unames] + [ring.index[w] for w in wnames]
    return ring, gens, sep


def secant_mu(X: VarietyHandle, rng, trials: int = 3,
              degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Secant degree: secant lines through a general point of Sec(X),
    counted as unordered pairs."""
    pm = X.param
    if pm is None:
        raise InvalidSpec("secant_mu needs a parametrization")
    pdeg = param_degree(X, rng, degree_cap)

    def one_trial(rng):
        ops = pm.ring.ops
        for attempt in range(3):
            u0 = pm.sample_parameter_point(rng)
            w0 = pm.sample_parameter_point(rng)
            a0 = ops.rand_nonzero(rng)
            b0 = ops.rand_nonzero(rng)
            p = [
                ops.add(ops.mul(a0, x), ops.mul(b0, y))
                for x, y in zip(pm.psi_at(u0), pm.psi_at(w0))
            ]
            # chords through the sampled point: s*p_k = a*psi_k(u) + psi_k(w)
            unames = pm.ring.names
            wnames = tuple(f"W_{n}" for n in unames)
            used = set(unames) | set(wnames)
            aname = fresh_name("a__", used)
            sname = fresh_name("s__", used | {aname})
            names = unames + wnames + (aname, sname, "Y__", "Z__")
            ring = PolyRing(names, pm.field)
            umap = [ring.index[n] for n in unames]
            wmap = [ring.index[w] for w in wnames]
            a, s = ring.var(aname), ring.var(sname)
            gens = []
            for k, pk in enumerate(pm.psi):
                chord = a * pk.map_ring(ring, umap) + pk.map_ring(ring, wmap)
                gens.append(s.scale(p[k]) - chord)
            for g in pm.constraints:
                gens.append(g.map_ring(ring, umap))
                gens.append(g.map_ring(ring, wmap))
            # true chords have distinct feet and a nonzero scaling
            gens.append(_nonvanishing(
                ring, [s, _separating_form(ring, umap, wmap, rng)]
            ))
            sep = [ring.index[n] for n in unames] + [ring.index[w] for w in wnames]
            try:
                total, distinct = _count_distinct(gens, ring, sep, rng, degree_cap)
            except NotZeroDimensional:
                continue
            denom = 2 * pdeg * pdeg
            if distinct == 0:
                continue
            if distinct % 2 != 0:
                raise OddOrderedCount(
                    f"ordered chord count {distinct} is odd"
                )
            if distinct % denom == 0:
                return distinct // denom
        raise NotFinite("secant count stayed degenerate after reseeding")

    return _majority_count(one_trial, rng, trials, f"mu({X.name})")


def sigma_nodes(X: VarietyHandle, rng, trials: int = 3,
                degree_cap: int = DEFAULT_DEGREE_CAP) -> int:
    """Number of nodes of a general projection into P^(2n): secant lines
    meeting a general center of dimension N-2n-1."""
    pm = X.param
    if pm is None:
        raise InvalidSpec("sigma needs a parametrization")
    n = pm.expected_dim
    N = pm.ambient_dim
    if N < 2 * n:
        raise InvalidSpec("sigma needs N >= 2n")
    if N == 2 * n:
        return 0
    pdeg = param_degree(X, rng, degree_cap)

    def one_trial(rng):
        for attempt in range(3):
            def conds(ring, chord):
                ops = ring.ops
                out = []
                for _ in range(2 * n + 1):
                    coefs = [ops.rand(rng) for _ in chord]
                    acc = ring.zero()
                    for c, e in zip(coefs, chord):
                        if c != 0:
                            acc = acc + e.scale(c)
                    out.append(acc)
                return out

            ring, gens, sep = _chord_system(pm, rng, conds)
            try:
                total, distinct = _count_distinct(gens, ring, sep, rng, degree_cap)
            except NotZeroDimensional:
                continue
            denom = 2 * pdeg * pdeg
            if distinct == 0:
                continue
            if distinct % 2 != 0:
                raise OddOrderedCount(f"ordered count {distinct} is odd")
            if distinct % denom == 0:
                return distinct // denom
        raise NotFinite("sigma count stayed degenerate after reseeding")

    return _majority_count(one_trial, rng, trials, f"sigma({X.name})")


# ---------------------------------------------------------------------------
# Identity checkers and formula evaluators
# ---------------------------------------------------------------------------


def severi_check(X: VarietyHandle, rng, trials: int = 3,
                 degree_cap: int = DEFAULT_DEGREE_CAP) -> IdentityRecord:
    """Severi's double point formula: 2 sigma = d(d-1) - sum_i omega_i."""
    pm = X.param
    if pm is None:
        raise InvalidSpec("severi_check needs a parametrization")
    n = pm.expected_dim
    d = degree_via_points(X, rng, degree_cap)
    sg = sigma_nodes(X, rng, trials, degree_cap)
    omegas = {i: omega_slice(X, i, rng, trials, degree_cap) for i in range(1, n + 1)}
    lhs = 2 * sg
    rhs = d * (d - 1) - sum(omegas.values())
    return IdentityRecord(
        "severi", lhs, rhs, lhs == rhs,
        {"deg": d, "sigma": sg, "omega": {str(i): v for i, v in omegas.items()}},
    )


def surface_degtan_formula(d: int, HK: int, K2: int, chi: int) -> int:
    """Tangent-variety degree of a smooth linearly normal surface with
    birational tangential morphism: 6d + 4 H.K + 2 K^2 - 12 chi(O)."""
    return 6 * d + 4 * HK + 2 * K2 - 12 * chi


def tan_data(X: VarietyHandle, rng, trials: int = 3,
             degree_cap: int = DEFAULT_DEGREE_CAP):
    """(dim, deg, route) of Tan(X): exact elimination when it fits under
    the degree cap, else the counting identity deg = omega_n / tau."""
    try:
        T = tangent_variety(X, degree_cap)
        return (T.hilbert.projective_dimension, T.hilbert.degree, "elimination")
    except DegreeCapExceeded:
        pass
    dim = tan_dim_fast(X, rng, trials)
    t = tau(X, rng, trials, degree_cap)
    if t == 0:
        raise NotFinite(
            "tangent variety is degenerate; counting route needs dim Tan = 2n"
        )
    w = omega_top(X, rng, trials, degree_cap)
    if w % t != 0:
        raise NotFinite(f"omega_n = {w} not divisible by tau = {t}")
    return (dim, w // t, "counting")


def sec_data(X: VarietyHandle, rng, trials: int = 3,
             degree_cap: int = DEFAULT_DEGREE_CAP):
    """(dim, deg, route) of Sec(X) with the sigma/mu counting fallback."""
    try:
        S = secant_variety(X, degree_cap)
        return (S.hilbert.projective_dimension, S.hilbert.degree, "elimination")
    except DegreeCapExceeded:
        pass
    dim = secant_dim_fast(X, rng, trials)
    m = secant_mu(X, rng, trials, degree_cap)
    s = sigma_nodes(X, rng, trials, degree_cap)
    if s == 0 or s % m != 0:
        raise NotFinite(f"sigma = {s} not divisible by mu = {m}")
    return (dim, s // m, "counting")


def bounds_check(X: VarietyHandle, rng, trials: int = 3,
                 degree_cap: int = DEFAULT_DEGREE_CAP):
    """Degree lower bounds: the quadratic secant bound and, when Tan(X) is
    strictly inside Sec(X), the linear tangential bound with minimality
    flag."""
    pm = X.param
    N = X.ambient_dim
    dim_t, deg_t, route_t = tan_data(X, rng, trials, degree_cap)
    dim_s, deg_s, route_s = sec_data(X, rng, trials, degree_cap)
    records = []
    tan_proper = dim_t < N
    sec_proper = dim_s < N
    strict = (dim_t, deg_t) != (dim_s, deg_s)
    if sec_proper:
        codim = N - dim_s
        bound = (codim + 2) * (codim + 1) // 2
        records.append(IdentityRecord(
            "secant_lower_bound", deg_s, bound, deg_s >= bound,
            {"codim": codim, "tight": deg_s == bound},
        ))
    minimal = False
    if tan_proper and strict:
        bound = 2 * (N - dim_t + 1)
        minimal = deg_t == bound
        records.append(IdentityRecord(
            "tangent_lower_bound", deg_t, bound, deg_t >= bound,
            {"minimal_tangential_degree": minimal},
        ))
    return {
        "dim_tan": dim_t, "deg_tan": deg_t, "tan_route": route_t,
        "dim_sec": dim_s, "deg_sec": deg_s, "sec_route": route_s,
        "tan_strictly_inside_sec": strict,
        "minimal_tangential_degree": minimal,
        "identities": records,
    }


def report_all(X: VarietyHandle, rng, trials: int = 3,
               degree_cap: int = DEFAULT_DEGREE_CAP,
               seed: int = 42) -> InvariantReport:
    """Compose every applicable invariant and identity check."""
    pm = X.param
    rep = InvariantReport(trials=trials, seed=seed)
    if pm is None:
        hd = X.hilbert_data(degree_cap)
        rep.dim, rep.deg = hd.projective_dimension, hd.degree
        return rep
    n = pm.expected_dim
    N = pm.ambient_dim
    rep.dim = n
    rep.deg = degree_via_points(X, rng, degree_cap)
    rep.tau = tau(X, rng, trials, degree_cap)
    try:
        dim_t, deg_t, route = tan_data(X, rng, trials, degree_cap)
        rep.dim_tan, rep.deg_tan = dim_t, deg_t
        rep.notes.append(f"deg_tan via {route}")
    except (DegreeCapExceeded, NotFinite) as exc:
        rep.notes.append(f"tan data unavailable: {exc}")
    try:
        dim_s, deg_s, route = sec_data(X, rng, trials, degree_cap)
        rep.dim_sec, rep.deg_sec = dim_s, deg_s
        rep.notes.append(f"deg_sec via {route}")
    except (DegreeCapExceeded, NotFinite) as exc:
        rep.notes.append(f"sec data unavailable: {exc}")
    for i in range(1, n + 1):
        try:
            rep.omega[i] = omega_slice(X, i, rng, trials, degree_cap)
        except (NotFinite, SliceSingularityHit, DegreeCapExceeded) as exc:
            rep.notes.append(f"omega_{i} unavailable: {exc}")
    try:
        rep.mu = secant_mu(X, rng, trials, degree_cap)
    except (NotFinite, OddOrderedCount) as exc:
        rep.notes.append(f"mu unavailable: {exc}")
    if N >= 2 * n:
        try:
            rep.sigma = sigma_nodes(X, rng, trials, degree_cap)
        except (NotFinite, OddOrderedCount, InvalidSpec) as exc:
            rep.notes.append(f"sigma unavailable: {exc}")
    # identities
    if rep.tau is not None and rep.tau > 0 and rep.deg_tan is not None \
            and n in rep.omega:
        rep.identities.append(IdentityRecord(
            "omega_n=tau*deg_tan", rep.omega[n], rep.tau * rep.deg_tan,
            rep.omega[n] == rep.tau * rep.deg_tan,
        ))
    if rep.mu is not None and rep.sigma is not None and rep.deg_sec is not None \
            and N > 2 * n:
        rep.identities.append(IdentityRecord(
            "sigma=mu*deg_sec", rep.sigma, rep.mu * rep.deg_sec,
            rep.sigma == rep.mu * rep.deg_sec,
        ))
    if N >= 2 * n and rep.sigma is not None and len(rep.omega) == n:
        lhs = 2 * rep.sigma
        rhs = rep.deg * (rep.deg - 1) - sum(rep.omega.values())
        rep.identities.append(IdentityRecord("severi", lhs, rhs, lhs == rhs))
    return rep
