"""Tests for the exact integer linear algebra helpers."""

import random

from tess4.intlinalg import hnf_rows, kernel_basis, lattices_equal, solve_integer


def test_kernel_of_axis_plane():
    assert kernel_basis([(1, 0, 0, 0), (0, 1, 0, 0)]) == [(0, 0, 1, 0), (0, 0, 0, 1)]


def test_kernel_vectors_annihilate():
    rows = [(0, 2, 11, 2), (2, -4, 1, 0)]
    basis = kernel_basis(rows)
    assert len(basis) == 2
    for v in basis:
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) == 0


def test_hnf_is_canonical():
    b1 = [(2, 1, 0, -1), (-1, 0, 2, -11)]
    b2 = [(1, 0, -2, 11), (0, 1, 4, -23)]
    assert hnf_rows(b1) == hnf_rows(b2) == [(1, 0, -2, 11), (0, 1, 4, -23)]
    assert lattices_equal(b1, b2)
    assert not lattices_equal(b1, [(1, 0, 0, 0), (0, 1, 0, 0)])


def test_solve_integer_examples():
    sol = solve_integer([(22, 0, 0, 0)], [242])
    assert sol is not None
    x, ker = sol
    assert x[0] == 11
    assert len(ker) == 3
    assert solve_integer([(2, 0, 0, 0)], [1]) is None


def test_solve_integer_randomized():
    rng = random.Random(7)
    for _ in range(200):
        rows = [[rng.randint(-6, 6) for _ in range(4)] for _ in range(2)]
        target = [rng.randint(-4, 4) for _ in range(4)]
        rhs = [sum(r[i] * target[i] for i in range(4)) for r in rows]
        sol = solve_integer(rows, rhs)
        assert sol is not None  # solvable by construction
        x, ker = sol
        for r, b in zip(rows, rhs):
            assert sum(r[i] * x[i] for i in range(4)) == b
        for v in ker:
            for r in rows:
                assert sum(r[i] * v[i] for i in range(4)) == 0
        # kernel rank + row rank = 4
        rank = len(hnf_rows(rows))
        assert len(ker) == 4 - rank


def test_kernel_content_is_saturated():
    # kernel output is already in HNF, so re-normalizing is a no-op
    rows = [(0, 3, 4, 1), (1, -3, 2, 0)]
    basis = kernel_basis(rows)
    assert hnf_rows(basis) == list(basis)
