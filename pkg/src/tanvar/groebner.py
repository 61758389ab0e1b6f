"""Groebner bases, elimination, saturation, Hilbert data, zero-dimensional
counting.

The basis engine is Buchberger's algorithm with Gebauer-Moeller pair
pruning and sugar-degree pair selection.  A configurable degree cap aborts
intractable instances with a structured error instead of running
unboundedly.  All choices (pair selection, reducer scan, final sorting)
are deterministic, so a fixed ideal and order always produce the same
reduced basis.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .errors import (
    DegreeCapExceeded,
    FieldMismatch,
    NotHomogeneous,
    NotZeroDimensional,
    EliminantDegenerate,
    UnknownVariable,
)
from .poly import (
    GREVLEX,
    MonomialOrder,
    PolyRing,
    Polynomial,
    block_order,
    fresh_name,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

DEFAULT_DEGREE_CAP = 60


def _inv_key(order: MonomialOrder):
    """Key function whose min-heap order equals descending monomial order."""
    if order.kind == "lex":
        return lambda e: tuple(-x for x in e)
    if order.kind == "grevlex":
        return lambda e: (-sum(e), tuple(reversed(e)))
    b = order.block

    def k(e):
        head, tail = e[:b], e[b:]
        return (-sum(head), tuple(reversed(head)), -sum(tail), tuple(reversed(tail)))

    return k


def leading_monomial(p: Polynomial, order: MonomialOrder):
    key = order.key()
    return max(p.terms, key=key)


def prepare_reducers(basis, order: MonomialOrder):
    """Monic reducers sorted ascending; entries (lm, deg lm, terms)."""
    key = order.key()
    out = []
    for g in basis:
        lm = max(g.terms, key=key)
        out.append((lm, sum(lm), g.terms))
    out.sort(key=lambda t: (t[1], key(t[0])))
    return out


def _normal_form_terms(fterms: dict, reducers, order: MonomialOrder, ops):
    """Full division remainder of the term dict by monic reducers."""
    if not fterms:
        return {}
    ik = _inv_key(order)
    graded = order.kind == "grevlex"
    sub, mul, neg = ops.sub, ops.mul, ops.neg
    work = dict(fterms)
    heap = [(ik(m), m) for m in work]
    heapq.heapify(heap)
    queued = set(work)
    remainder: dict = {}
    while heap:
        _, m = heapq.heappop(heap)
        queued.discard(m)
        c = work.get(m)
        if not c:
            continue
        mdeg = sum(m)
        hit = None
        for lm, lmdeg, terms in reducers:
            if lmdeg > mdeg:
                if graded:
                    break
                continue
            if mono_divides(lm, m):
                hit = (lm, terms)
                break
        if hit is None:
            remainder[m] = c
            del work[m]
            continue
        lm, terms = hit
        shift = mono_div(m, lm)
        del work[m]
        for mg, cg in terms.items():
            if mg == lm:
                continue
            mm = mono_mul(mg, shift)
            prev = work.get(mm)
            if prev is None:
                nc = neg(mul(c, cg))
                if nc != 0:
                    work[mm] = nc
                    if mm not in queued:
                        heapq.heappush(heap, (ik(mm), mm))
                        queued.add(mm)
            else:
                nc = sub(prev, mul(c, cg))
                if nc == 0:
                    del work[mm]
                else:
                    work[mm] = nc
    return remainder


def normal_form(f: Polynomial, basis, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Remainder of f on full division by the (monic-normalized) basis."""
    ring = f.ring
    ops = ring.ops
    monic = []
    for g in basis:
        if g.is_zero():
            continue
        lm = leading_monomial(g, order)
        lc = g.terms[lm]
        monic.append(g if lc == ops.one else g.scale(ops.inv(lc)))
    reducers = prepare_reducers(monic, order)
    return Polynomial(ring, _normal_form_terms(f.terms, reducers, order, ops))


def _monic_terms(terms: dict, lm, ops):
    lc = terms[lm]
    if lc == ops.one:
        return terms
    inv = ops.inv(lc)
    mul = ops.mul
    return {m: mul(inv, c) for m, c in terms.items()}


def buchberger(gens, order: MonomialOrder, degree_cap: int = DEFAULT_DEGREE_CAP):
    """Reduced Groebner basis of the given generators.

    Raises DegreeCapExceeded when an S-polynomial (or a new basis element)
    would exceed ``degree_cap`` in total degree.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise FieldMismatch("generators live in different rings")
    ops = ring.ops
    key = order.key()

    G: list[dict] = []       # monic term dicts
    LM: list[tuple] = []
    SUG: list[int] = []
    pairs: dict = {}         # (i, j) -> (sugar, lcm)

    def pair_sugar(i, j, lcm):
        si = SUG[i] + sum(lcm) - sum(LM[i])
        sj = SUG[j] + sum(lcm) - sum(LM[j])
        return si if si > sj else sj

    def gm_update(fterms, flm, fsugar):
        """Gebauer-Moeller pair update for a new basis element."""
        t = len(G)
        # chain criterion on existing pairs
        stale = []
        for (i, j), (_, L) in pairs.items():
            if (
                mono_divides(flm, L)
                and mono_lcm(LM[i], flm) != L
                and mono_lcm(LM[j], flm) != L
            ):
                stale.append((i, j))
        for p in stale:
            del pairs[p]
        # candidate pairs with the newcomer, grouped by lcm
        groups: dict = {}
        for i in range(t):
            groups.setdefault(mono_lcm(LM[i], flm), []).append(i)
        kept_lcms: list[tuple] = []
        for L in sorted(groups, key=key):
            if any(mono_divides(Lk, L) for Lk in kept_lcms):
                continue
            kept_lcms.append(L)
            idxs = groups[L]
            # first Buchberger criterion: coprime leading monomials
            if any(mono_mul(LM[i], flm) == L for i in idxs):
                continue
            i = min(idxs)
            pairs[(i, t)] = (pair_sugar_new(i, flm, fsugar, L), L)
        G.append(fterms)
        LM.append(flm)
        SUG.append(fsugar)

    def pair_sugar_new(i, flm, fsugar, lcm):
        si = SUG[i] + sum(lcm) - sum(LM[i])
        sj = fsugar + sum(lcm) - sum(flm)
        return si if si > sj else sj

    # seed the basis, reducing each generator against the previous ones
    for g in sorted(gens, key=lambda h: (h.total_degree(), key(leading_monomial(h, order)))):
        reducers = prepare_reducers(
            [Polynomial(ring, t) for t in G], order
        )
        r = _normal_form_terms(g.terms, reducers, order, ops)
        if not r:
            continue
        lm = max(r, key=key)
        gm_update(_monic_terms(r, lm, ops), lm, max(sum(m) for m in r))

    while pairs:
        (i, j) = min(pairs, key=lambda p: (pairs[p][0], key(pairs[p][1]), p))
        sugar, L = pairs.pop((i, j))
        if sum(L) > degree_cap:
            raise DegreeCapExceeded(
                f"S-pair lcm degree {sum(L)} exceeds cap {degree_cap}"
            )
        # S-polynomial of the monic pair
        si = mono_div(L, LM[i])
        sj = mono_div(L, LM[j])
        s: dict = {}
        for m, c in G[i].items():
            s[mono_mul(m, si)] = c
        sub = ops.sub
        for m, c in G[j].items():
            mm = mono_mul(m, sj)
            acc = sub(s.get(mm, ops.zero), c)
            if acc == 0:
                s.pop(mm, None)
            else:
                s[mm] = acc
        if not s:
            continue
        reducers = prepare_reducers([Polynomial(ring, t) for t in G], order)
        r = _normal_form_terms(s, reducers, order, ops)
        if not r:
            continue
        rdeg = max(sum(m) for m in r)
        if rdeg > degree_cap:
            raise DegreeCapExceeded(
                f"reduced S-polynomial degree {rdeg} exceeds cap {degree_cap}"
            )
        lm = max(r, key=key)
        gm_update(_monic_terms(r, lm, ops), lm, max(sugar, rdeg))

    basis = [Polynomial(ring, t) for t in G]
    return interreduce(basis, order)


def interreduce(basis, order: MonomialOrder):
    """Minimal, auto-reduced, monic basis sorted by leading monomial."""
    if not basis:
        return []
    ring = basis[0].ring
    ops = ring.ops
    key = order.key()
    lead = [(leading_monomial(g, order), g) for g in basis if not g.is_zero()]
    lead.sort(key=lambda t: key(t[0]))
    minimal = []
    for lm, g in lead:
        if not any(mono_divides(lm2, lm) for lm2, _ in minimal):
            minimal.append((lm, g))
    out = []
    for i, (lm, g) in enumerate(minimal):
        others = [h for j, (_, h) in enumerate(minimal) if j != i]
        r = normal_form(g, others, order)
        lc = r.terms[leading_monomial(r, order)]
        if lc != ops.one:
            r = r.scale(ops.inv(lc))
        out.append(r)
    out.sort(key=lambda g: key(leading_monomial(g, order)))
    return out


# ---------------------------------------------------------------------------
# Ideals
# ---------------------------------------------------------------------------


class Ideal:
    """Finitely generated ideal with cached reduced Groebner bases."""

    __slots__ = ("ring", "gens", "homogeneous", "_gb_cache")

    def __init__(self, ring: PolyRing, gens, homogeneous=None):
        gens = tuple(g for g in gens if not g.is_zero())
        for g in gens:
            if g.ring != ring:
                raise FieldMismatch("generator ring mismatch")
        self.ring = ring
        self.gens = gens
        actual = all(g.is_homogeneous() for g in gens)
        if homogeneous is True and not actual:
            raise NotHomogeneous("a generator is not homogeneous")
        self.homogeneous = actual if homogeneous is None else homogeneous
        self._gb_cache = {}

    def __repr__(self):
        return f"Ideal({len(self.gens)} gens in {self.ring!r})"

    def gb(self, order: MonomialOrder = GREVLEX, degree_cap: int = DEFAULT_DEGREE_CAP):
        sig = (order.kind, order.block)
        cached = self._gb_cache.get(sig)
        if cached is None:
            cached = buchberger(list(self.gens), order, degree_cap)
            self._gb_cache[sig] = cached
        return cached

    def set_gb_cache(self, order: MonomialOrder, basis):
        self._gb_cache[(order.kind, order.block)] = list(basis)

    def is_zero(self) -> bool:
        return not self.gens

    def contains_poly(self, f: Polynomial, degree_cap: int = DEFAULT_DEGREE_CAP) -> bool:
        if f.is_zero():
            return True
        if not self.gens:
            return False
        return normal_form(f, self.gb(GREVLEX, degree_cap), GREVLEX).is_zero()

    def contains_ideal(self, other: "Ideal", degree_cap: int = DEFAULT_DEGREE_CAP) -> bool:
        return all(self.contains_poly(g, degree_cap) for g in other.gens)

    def equals(self, other: "Ideal", degree_cap: int = DEFAULT_DEGREE_CAP) -> bool:
        return self.contains_ideal(other, degree_cap) and other.contains_ideal(
            self, degree_cap
        )


# ---------------------------------------------------------------------------
# Linear pre-elimination of auxiliary variables
# ---------------------------------------------------------------------------


def split_linear(h: Polynomial, idx: int):
    """Write h = A*x_idx + B with deg_x(h) <= 1; returns (A, B)."""
    a: dict = {}
    b: dict = {}
    for m, c in h.terms.items():
        e = m[idx]
        if e == 0:
            b[m] = c
        elif e == 1:
            a[m[:idx] + (0,) + m[idx + 1:]] = c
        else:
            raise ValueError("not linear in pivot variable")
    return Polynomial(h.ring, a), Polynomial(h.ring, b)


def presolve_linear(gens, removable_idx):
    """Repeatedly substitute away removable variables that occur with a
    constant coefficient in some generator and at most linearly everywhere.

    Substitution is an isomorphism on solution sets (and quotient rings),
    so elimination ideals, solution counts, and quotient dimensions over
    the remaining variables are preserved exactly.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return gens
    ring = gens[0].ring
    ops = ring.ops
    zero_mono = (0,) * ring.nvars
    removable = set(removable_idx)
    changed = True
    while changed:
        changed = False
        for gi, g in enumerate(gens):
            pivot = None
            for m, c in g.terms.items():
                if sum(m) == 1:
                    (xi,) = [i for i, e in enumerate(m) if e]
                    if xi not in removable:
                        continue
                    # the pure linear term must be the only occurrence in g
                    if any(mm[xi] > 0 and mm != m for mm in g.terms):
                        continue
                    if all(h.degree_in(xi) <= 1 for h in gens):
                        pivot = (xi, c)
                        break
            if pivot is None:
                continue
            xi, c = pivot
            rest = Polynomial(
                ring,
                {m: v for m, v in g.terms.items() if m[xi] == 0},
            )
            image = rest.scale(ops.neg(ops.inv(c)))  # x_i = image
            new_gens = []
            for hj, h in enumerate(gens):
                if hj == gi:
                    continue
                if h.degree_in(xi) == 0:
                    new_gens.append(h)
                else:
                    a, b = split_linear(h, xi)
                    new_gens.append(a * image + b)
            gens = [h for h in new_gens if not h.is_zero()]
            removable.discard(xi)
            changed = True
            break
    return gens


def compact_system(gens, ring: PolyRing, keep_names=()):
    """Drop variables unused by ``gens`` (except ``keep_names``) and return
    (mapped_gens, new_ring, old_to_new_index)."""
    used = set()
    for g in gens:
        used |= g.variables_used()
    keep = set(keep_names)
    new_names = [
        n for i, n in enumerate(ring.names) if i in used or n in keep
    ]
    new_ring = PolyRing(new_names, ring.field)
    var_map = [
        new_ring.index.get(n) for n in ring.names
    ]
    return [g.map_ring(new_ring, var_map) for g in gens], new_ring, var_map


# ---------------------------------------------------------------------------
# Elimination and saturation
# ---------------------------------------------------------------------------


def eliminate(
    ideal: Ideal,
    keep,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    presolve: bool = True,
) -> Ideal:
    """Elimination ideal I n k[keep], computed with a block order whose
    leading block is the eliminated variables.  The result lives in the
    registry ``keep`` only."""
    ring = ideal.ring
    keep = list(keep)
    for n in keep:
        if n not in ring.index:
            raise UnknownVariable(f"{n!r} not in registry")
    keepset = set(keep)
    elim = [n for n in ring.names if n not in keepset]
    kept = [n for n in ring.names if n in keepset]

    gens = list(ideal.gens)
    if presolve and elim:
        gens = presolve_linear(gens, {ring.index[n] for n in elim})
        gens, ring2, _ = compact_system(gens, ring, keep_names=kept)
    else:
        ring2 = ring
    elim2 = [n for n in ring2.names if n not in keepset]

    perm_names = elim2 + [n for n in kept]
    perm_ring = PolyRing(perm_names, ring.field)
    var_map = [perm_ring.index[n] for n in ring2.names]
    mapped = [g.map_ring(perm_ring, var_map) for g in gens]

    basis = buchberger(mapped, block_order(len(elim2)), degree_cap)

    keep_ring = PolyRing(kept, ring.field)
    kmap = [keep_ring.index.get(n) for n in perm_ring.names]
    nelim = len(elim2)
    out = []
    for g in basis:
        if all(all(e == 0 for e in m[:nelim]) for m in g.terms):
            out.append(g.map_ring(keep_ring, kmap))
    result = Ideal(keep_ring, out)
    result.set_gb_cache(GREVLEX, out)
    return result


def saturate(ideal: Ideal, f: Polynomial, degree_cap: int = DEFAULT_DEGREE_CAP) -> Ideal:
    """(I : f^infinity) via the Rabinowitsch trick."""
    if f.is_zero():
        raise ValueError("cannot saturate by zero")
    ring = ideal.ring
    tname = fresh_name("T__", ring.names)
    big = PolyRing(ring.names + (tname,), ring.field)
    var_map = list(range(ring.nvars))
    gens = [g.map_ring(big, var_map) for g in ideal.gens]
    gens.append(big.one() - big.var(tname) * f.map_ring(big, var_map))
    sat = eliminate(Ideal(big, gens), ring.names, degree_cap, presolve=False)
    # rebuild in the original ring (eliminate preserved the name order)
    back = [g.map_ring(ring, [ring.index[n] for n in sat.ring.names]) for g in sat.gens]
    result = Ideal(ring, back)
    result.set_gb_cache(GREVLEX, back)
    return result


# ---------------------------------------------------------------------------
# Hilbert series: projective dimension and degree of homogeneous ideals
# ---------------------------------------------------------------------------


@dataclass
class HilbertData:
    """Projective dimension / degree extracted from the Hilbert series.

    ``hilbert_numerator`` is the numerator over (1-t)^nvars; dividing out
    (1-t)^(nvars - dim - 1) and summing the coefficients gives the degree.
    """

    projective_dimension: int
    degree: int
    hilbert_numerator: list

    def to_json(self):
        return {
            "dim": self.projective_dimension,
            "deg": self.degree,
            "hilbert_numerator": list(self.hilbert_numerator),
        }


def _zpoly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _zpoly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _minimal_monomials(monos):
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    out = []
    for m in monos:
        if not any(mono_divides(k, m) for k in out):
            out.append(m)
    return out


def _hilbert_numerator(monos, memo):
    """Numerator of the Hilbert series of S/I over (1-t)^nvars for the
    monomial ideal generated by ``monos`` (pivot-recursion)."""
    monos = _minimal_monomials(monos)
    key = frozenset(monos)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not monos:
        res = [1]
    elif any(sum(m) == 0 for m in monos):
        res = [0]
    else:
        nvars = len(monos[0])
        counts = [0] * nvars
        for m in monos:
            for i, e in enumerate(m):
                if e:
                    counts[i] += 1
        vmax = max(range(nvars), key=lambda i: counts[i])
        if counts[vmax] <= 1:
            # supports pairwise disjoint: product formula
            res = [1]
            for m in monos:
                factor = [0] * (sum(m) + 1)
                factor[0] = 1
                factor[sum(m)] = -1
                res = _zpoly_mul(res, factor)
        else:
            pivot = tuple(1 if i == vmax else 0 for i in range(nvars))
            plus = _hilbert_numerator(monos + [pivot], memo)
            quot = _hilbert_numerator(
                [m[:vmax] + (max(0, m[vmax] - 1),) + m[vmax + 1:] for m in monos],
                memo,
            )
            res = _zpoly_add(plus, [0] + quot)
    memo[key] = res
    return res


def hilbert_dim_degree(
    ideal: Ideal, degree_cap: int = DEFAULT_DEGREE_CAP
) -> HilbertData:
    """Projective dimension and degree of V(I) in P^(nvars-1)."""
    if not ideal.homogeneous:
        raise NotHomogeneous("Hilbert data requires a homogeneous ideal")
    nvars = ideal.ring.nvars
    gb = ideal.gb(GREVLEX, degree_cap)
    if any(g.is_constant() and not g.is_zero() for g in gb):
        return HilbertData(-1, 0, [0])
    lms = [leading_monomial(g, GREVLEX) for g in gb]
    num = _hilbert_numerator(lms, {})
    # strip trailing zeros
    while num and num[-1] == 0:
        num.pop()
    if not num:
        return HilbertData(-1, 0, [0])
    raw = list(num)
    # divide by (1-t) as many times as possible
    cancelled = 0
    while sum(num) == 0:
        # synthetic division by (1-t): q_i = sum of leading coefficients
        q = [0] * (len(num) - 1)
        acc = 0
        for i in range(len(num) - 1, 0, -1):
            acc -= num[i]
            q[i - 1] = acc
        num = q
        while num and num[-1] == 0:
            num.pop()
        cancelled += 1
        if not num:
            return HilbertData(-1, 0, raw)
    krull = nvars - cancelled
    degree = sum(num)
    return HilbertData(krull - 1, degree, raw)


# ---------------------------------------------------------------------------
# Zero-dimensional counting
# ---------------------------------------------------------------------------


def quotient_basis(gb, order: MonomialOrder, ring: PolyRing):
    """Standard monomials of the initial ideal; raises NotZeroDimensional
    when the quotient is infinite-dimensional."""
    lms = [leading_monomial(g, order) for g in gb]
    nvars = ring.nvars
    bounds = [None] * nvars
    for m in lms:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
        elif len(support) == 0:
            return []  # unit ideal
    if any(b is None for b in bounds):
        missing = [ring.names[i] for i, b in enumerate(bounds) if b is None]
        raise NotZeroDimensional(
            f"no pure power of {missing} in the initial ideal"
        )
    # bounded enumeration with a final divisibility filter
    out = []
    stack = [[]]
    while stack:
        prefix = stack.pop()
        i = len(prefix)
        if i == nvars:
            m = tuple(prefix)
            if not any(mono_divides(lm, m) for lm in lms):
                out.append(m)
            continue
        for e in range(bounds[i] - 1, -1, -1):
            stack.append(prefix + [e])
    out.sort(key=order.key())
    return out


def _upoly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def upoly_deg(c):
    return len(c) - 1


def upoly_monic(c, ops):
    lc = c[-1]
    if lc == ops.one:
        return c
    inv = ops.inv(lc)
    return [ops.mul(inv, x) for x in c]


def upoly_deriv(c, ops):
    return _upoly_trim([ops.mul(ops.from_int(i), c[i]) for i in range(1, len(c))])


def upoly_mod(a, b, ops):
    """Remainder of a mod b (b nonzero)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = ops.inv(lb)
    while len(a) - 1 >= db and a:
        f = ops.mul(a[-1], inv)
        shift = len(a) - 1 - db
        for i, x in enumerate(b):
            a[shift + i] = ops.sub(a[shift + i], ops.mul(f, x))
        _upoly_trim(a)
        if not a:
            break
    return a


def upoly_gcd(a, b, ops):
    a, b = _upoly_trim(list(a)), _upoly_trim(list(b))
    while b:
        a, b = b, upoly_mod(a, b, ops)
    return upoly_monic(a, ops) if a else []


def squarefree_degree(c, ops):
    """Number of distinct roots of c in the algebraic closure."""
    c = _upoly_trim(list(c))
    if len(c) <= 1:
        return 0
    d = upoly_deriv(c, ops)
    if not d:
        return 0
    g = upoly_gcd(c, d, ops)
    return (len(c) - 1) - (len(g) - 1 if g else 0)


def eliminant(gb, ring: PolyRing, var_name: str, order: MonomialOrder = GREVLEX):
    """Monic generator of I n k[var]: the minimal polynomial of the variable
    in the finite-dimensional quotient ring (coefficients ascending)."""
    if var_name not in ring.index:
        raise UnknownVariable(var_name)
    idx = ring.index[var_name]
    ops = ring.ops
    std = quotient_basis(gb, order, ring)
    if not std:
        return [ops.one]  # unit ideal: eliminant is 1
    pos = {m: i for i, m in enumerate(std)}
    reducers = prepare_reducers(gb, order)
    zmono = tuple(1 if i == idx else 0 for i in range(ring.nvars))

    # incremental echelon with combination tracking
    rows = []  # (pivot, vector, combo)
    cur = {(0,) * ring.nvars: ops.one}
    for k in range(len(std) + 1):
        vec = [ops.zero] * len(std)
        for m, c in cur.items():
            vec[pos[m]] = c
        combo = [ops.zero] * (k + 1)
        combo[k] = ops.one
        v = list(vec)
        cb = list(combo)
        for pivot, rv, rc in rows:
            f = v[pivot]
            if f != 0:
                v = [ops.sub(x, ops.mul(f, y)) for x, y in zip(v, rv)]
                cb = [
                    ops.sub(
                        cb[i] if i < len(cb) else ops.zero,
                        ops.mul(f, rc[i]) if i < len(rc) else ops.zero,
                    )
                    for i in range(max(len(cb), len(rc)))
                ]
        p = next((i for i, x in enumerate(v) if x != 0), None)
        if p is None:
            return upoly_monic(_upoly_trim(cb), ops)
        inv = ops.inv(v[p])
        rows.append(
            (p, [ops.mul(inv, x) for x in v], [ops.mul(inv, x) for x in cb])
        )
        # next power: NF(cur * z)
        shifted = {mono_mul(m, zmono): c for m, c in cur.items()}
        cur = _normal_form_terms(shifted, reducers, order, ops)
    raise EliminantDegenerate("no dependency found within quotient dimension")


def count_zero_dim(
    ideal: Ideal,
    distinguished: str,
    degree_cap: int = DEFAULT_DEGREE_CAP,
):
    """(total, distinct) solution counts of a zero-dimensional system.

    ``total`` is the k-dimension of the quotient ring (multiplicity count);
    ``distinct`` is the number of distinct values of the distinguished
    variable over the algebraic closure, read off the squarefree part of
    its eliminant.
    """
    ring = ideal.ring
    gb = ideal.gb(GREVLEX, degree_cap)
    if any(g.is_constant() for g in gb):
        return 0, 0
    std = quotient_basis(gb, GREVLEX, ring)
    total = len(std)
    elim = eliminant(gb, ring, distinguished, GREVLEX)
    if len(elim) <= 1:
        raise EliminantDegenerate(
            f"eliminant of {distinguished!r} is constant"
        )
    distinct = squarefree_degree(elim, ring.ops)
    return total, distinct
