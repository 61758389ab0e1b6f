"""Brute-force tangent-space oracle over a small prime field.

Deliberately independent of the main package: plain integer arithmetic
mod a small prime, dense univariate polynomials as coefficient lists, and
row reduction written inline.  Tangent spaces are enumerated from
parameter tuples and collected as row-reduced matrices; incidence counts
come from rank checks, and where a single sample would be rationality
biased the count is taken from the squarefree degree of an incidence
determinant instead.
"""

from __future__ import annotations

P = 101


def inv(a, p=P):
    return pow(a % p, p - 2, p)


def rref_rank(rows, p=P):
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(m)):
            if m[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        f = inv(m[rank][c], p)
        m[rank] = [x * f % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] % p:
                g = m[i][c]
                m[i] = [(x - g * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
    return [tuple(r) for r in m[:rank]], rank


# -- dense univariate helpers (coefficient lists, ascending) ---------------


def utrim(c):
    while c and c[-1] % P == 0:
        c.pop()
    return c


def uadd(a, b):
    n = max(len(a), len(b))
    return utrim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % P
                  for i in range(n)])


def usub(a, b):
    n = max(len(a), len(b))
    return utrim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % P
                  for i in range(n)])


def umul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % P
    return utrim(out)


def uderiv(a):
    return utrim([(i * a[i]) % P for i in range(1, len(a))])


def umod(a, b):
    a = list(a)
    db = len(b) - 1
    f = inv(b[-1])
    while len(a) - 1 >= db and a:
        g = a[-1] * f % P
        s = len(a) - 1 - db
        for i, x in enumerate(b):
            a[s + i] = (a[s + i] - g * x) % P
        utrim(a)
    return a


def ugcd(a, b):
    a, b = utrim(list(a)), utrim(list(b))
    while b:
        a, b = b, umod(a, b)
    return a


def squarefree_degree(a):
    a = utrim(list(a))
    if len(a) <= 1:
        return 0
    d = uderiv(a)
    if not d:
        return 0
    g = ugcd(a, d)
    return (len(a) - 1) - (len(g) - 1 if g else 0)


def udet(mat):
    """Determinant of a matrix of univariate polynomials (cofactors)."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    acc = []
    for j in range(n):
        if not mat[0][j]:
            continue
        sub = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = umul(mat[0][j], udet(sub))
        acc = uadd(acc, term) if j % 2 == 0 else usub(acc, term)
    return acc


# -- parametrized families --------------------------------------------------


def curve_rows(d, t):
    """Tangent line rows of the degree-d rational normal curve at t."""
    a = [pow(t, k, P) for k in range(d + 1)]
    da = [(k * pow(t, k - 1, P)) % P if k else 0 for k in range(d + 1)]
    return [tuple(a), tuple(da)]


def curve_symbolic(d):
    """a(t) and a'(t) as univariate coefficient vectors."""
    a = [[1 if i == k else 0 for i in range(k + 1)] for k in range(d + 1)]
    da = [uderiv(list(v)) for v in a]
    return a, da


def scroll12_rows(t, lam):
    """Tangent plane rows of S(1,2) in P^4 at (t, [lam])."""
    l1, l2 = lam
    psi = (l1, l1 * t % P, l2, l2 * t % P, l2 * t * t % P)
    dt = (0, l1, 0, l2, 2 * l2 * t % P)
    d1 = (1, t, 0, 0, 0)
    d2 = (0, 0, 1, t, t * t % P)
    return [psi, dt, d1, d2]


def all_tangent_spaces_scroll12():
    """Row-reduced tangent planes of S(1,2) over all (t, [l1:l2])."""
    spaces = {}
    rays = [(1, b) for b in range(P)] + [(0, 1)]
    for t in range(P):
        for lam in rays:
            reduced, rk = rref_rank(scroll12_rows(t, lam))
            if rk == 3:
                spaces[(t, lam)] = tuple(reduced)
    return spaces


def all_tangent_lines_curve(d):
    spaces = {}
    for t in range(P):
        reduced, rk = rref_rank(curve_rows(d, t))
        if rk == 2:
            spaces[t] = tuple(reduced)
    return spaces


def contains_point(space_rows, w):
    _, r0 = rref_rank(list(space_rows))
    _, r1 = rref_rank(list(space_rows) + [tuple(w)])
    return r0 == r1


def mode(values):
    values = list(values)
    return max(set(values), key=values.count)


# -- oracle counts -----------------------------------------------------------


def tau_curve(d, rng, samples=25):
    """Tangent lines through a general point of the tangent surface;
    the seeded point sits on a known tangent line, so for counts up to two
    every solution of the incidence eliminant is rational."""
    spaces = all_tangent_lines_curve(d)
    counts = []
    for _ in range(samples):
        t0 = rng.randrange(P)
        if t0 not in spaces:
            continue
        a, da = spaces[t0][0], spaces[t0][1]
        c1, c2 = rng.randrange(1, P), rng.randrange(1, P)
        w = tuple((c1 * x + c2 * y) % P for x, y in zip(a, da))
        counts.append(sum(1 for s in spaces.values() if contains_point(s, w)))
    return mode(counts)


def tau_scroll12(rng, samples=25):
    spaces = all_tangent_spaces_scroll12()
    keys = sorted(spaces)
    counts = []
    for _ in range(samples):
        key = keys[rng.randrange(len(keys))]
        rows = spaces[key]
        cs = [rng.randrange(1, P) for _ in range(3)]
        w = tuple(
            sum(c * row[k] for c, row in zip(cs, rows)) % P for k in range(5)
        )
        hits = set()
        for (t, lam), s in spaces.items():
            if contains_point(s, w):
                hits.add((t, lam))
        counts.append(len(hits))
    return mode(counts)


def omega1_curve(d, rng, samples=10):
    """Tangent lines of the degree-d curve meeting a general codimension-2
    subspace: the incidence determinant det[a(t); a'(t); M] is a univariate
    polynomial whose squarefree degree counts all solutions over the
    closure, so no rationality bias enters."""
    a, da = curve_symbolic(d)
    counts = []
    for _ in range(samples):
        mrows = [
            [[rng.randrange(P)] for _ in range(d + 1)] for _ in range(d - 1)
        ]
        mat = [[list(v) for v in a], [list(v) for v in da]] + mrows
        det = udet(mat)
        if det:
            counts.append(squarefree_degree(det))
    return mode(counts)


def omega2_scroll12(rng, samples=25):
    """Tangent planes of S(1,2) through a general point of P^4; the seed
    point lies on a known plane so the residual eliminant is forced
    rational for counts up to two."""
    return tau_scroll12(rng, samples)
