import random

from tanvar.fields import prime_field
from tanvar.linalg import (
    complete_to_basis,
    coords_in_basis,
    kernel_basis,
    mat_vec,
    rank,
    rref,
    solve,
)

OPS = prime_field().ops


def test_rref_and_rank():
    rows = [(1, 2, 3), (2, 4, 6), (0, 1, 1)]
    reduced, pivots = rref(rows, OPS)
    assert len(reduced) == 2
    assert pivots == [0, 1]
    assert rank(rows, OPS) == 2


def test_kernel_basis_annihilates():
    rng = random.Random(5)
    rows = [tuple(OPS.rand(rng) for _ in range(5)) for _ in range(3)]
    kern = kernel_basis(rows, OPS)
    assert len(kern) == 5 - rank(rows, OPS)
    for v in kern:
        assert all(x == 0 for x in mat_vec(rows, v, OPS))


def test_solve_particular():
    rng = random.Random(9)
    rows = [tuple(OPS.rand(rng) for _ in range(4)) for _ in range(3)]
    x = tuple(OPS.rand(rng) for _ in range(4))
    b = mat_vec(rows, x, OPS)
    got = solve(rows, b, OPS)
    assert got is not None
    assert mat_vec(rows, got, OPS) == b


def test_solve_inconsistent():
    rows = [(1, 0), (1, 0)]
    assert solve(rows, (1, 2), OPS) is None


def test_complete_to_basis():
    rows = [(1, 2, 0, 0), (0, 0, 1, 5)]
    extra = complete_to_basis(rows, OPS, 4)
    assert rank(list(rows) + extra, OPS) == 4


def test_coords_in_basis_roundtrip():
    rng = random.Random(2)
    basis = [tuple(OPS.rand(rng) for _ in range(3)) for _ in range(3)]
    if rank(basis, OPS) == 3:
        v = tuple(OPS.rand(rng) for _ in range(3))
        coords = coords_in_basis(basis, v, OPS)
        rebuilt = [0, 0, 0]
        for c, row in zip(coords, basis):
            rebuilt = [OPS.add(x, OPS.mul(c, y)) for x, y in zip(rebuilt, row)]
        assert tuple(rebuilt) == v
