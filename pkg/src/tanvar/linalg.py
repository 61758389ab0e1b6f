"""Exact dense linear algebra over a coefficient field.

Matrices are lists of row tuples.  Pivoting is deterministic (first
nonzero entry scanning left to right), so downstream constructions like
normal-space completions are reproducible per seed.
"""

from __future__ import annotations


def rref(rows, ops):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_columns); zero rows are dropped.
    """
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ops.inv(m[r][c])
        m[r] = [ops.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [ops.sub(x, ops.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows, ops) -> int:
    if not rows:
        return 0
    reduced, _ = rref(rows, ops)
    return len(reduced)


def kernel_basis(rows, ops, ncols=None):
    """Basis of {v : A v = 0} for the matrix with the given rows."""
    if not rows:
        if ncols is None:
            raise ValueError("ncols required for empty matrix")
        return [tuple(ops.one if i == j else ops.zero for j in range(ncols))
                for i in range(ncols)]
    ncols = len(rows[0])
    reduced, pivots = rref(rows, ops)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [ops.zero] * ncols
        v[fc] = ops.one
        for r, pc in enumerate(pivots):
            v[pc] = ops.neg(reduced[r][fc])
        basis.append(tuple(v))
    return basis


def solve(rows, rhs, ops):
    """One particular solution of A x = b, or None when inconsistent."""
    if not rows:
        return None
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(aug, ops)
    ncols = len(rows[0])
    for row in reduced:
        if all(x == 0 for x in row[:ncols]) and row[ncols] != 0:
            return None
    x = [ops.zero] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None
        x[pc] = reduced[r][ncols]
    return tuple(x)


def mat_vec(rows, v, ops):
    out = []
    for r in rows:
        acc = ops.zero
        for a, b in zip(r, v):
            if a != 0 and b != 0:
                acc = ops.add(acc, ops.mul(a, b))
        out.append(acc)
    return tuple(out)


def vec_add(a, b, ops):
    return tuple(ops.add(x, y) for x, y in zip(a, b))


def vec_sub(a, b, ops):
    return tuple(ops.sub(x, y) for x, y in zip(a, b))


def vec_scale(c, v, ops):
    return tuple(ops.mul(c, x) for x in v)


def transpose(rows):
    return [tuple(col) for col in zip(*rows)]


def complete_to_basis(rows, ops, dim):
    """Standard unit vectors extending ``rows`` to a basis of the full space.

    Pivot columns of the row space are computed first; the returned vectors
    are e_j for non-pivot columns j, scanned in order.
    """
    if rows:
        _, pivots = rref(rows, ops)
    else:
        pivots = []
    pivset = set(pivots)
    extra = []
    for j in range(dim):
        if j not in pivset:
            extra.append(tuple(ops.one if i == j else ops.zero for i in range(dim)))
    return extra


def coords_in_basis(basis_rows, v, ops):
    """Coordinates of v in the given basis (None if v is outside the span)."""
    cols = transpose(list(basis_rows))
    return solve(cols, v, ops)
