"""Tests for the Plücker characterization and plane reconstruction."""

from fractions import Fraction

import pytest

from tess4.characterize import (
    construct_triangle,
    ehrhart,
    fundamental_area_squared,
    gram_identity_check,
    interior_count,
    minimal_scale,
    normalize_corner,
    orthogonal_vectors,
    plane_from_reps,
    plane_lattice_basis,
    plane_quadratic_form,
    pluckers_from_triangle,
    reduce_pluckers,
    rep_vectors,
    representation_pair,
    reps_from_pluckers,
)
from tess4.errors import DomainError
from tess4.intlinalg import lattices_equal
from tess4.lattice import Triangle, canonical_form, dot, seed_triangle, triple_triangle

TRI_K11 = Triangle.from_vertices((8, 4, 2, -20), (21, 5, -3, -3))
TRI_K15 = Triangle.from_vertices((1, 1, 2, -12), (10, 5, 0, -5))
UNIT = Triangle.from_vertices((0, 0, 1, 1), (0, 1, 1, 0))


def test_minors_of_worked_triangle():
    ps = pluckers_from_triangle(TRI_K11)
    assert ps.minors() == (44, 66, -66, 88, -396, 22)
    assert ps.L == 242
    assert ps.sum_of_squares() == 3 * 242 ** 2


def test_minors_of_unit_triangle():
    ps = pluckers_from_triangle(UNIT)
    assert ps.sum_of_squares() == 3


def test_reduce_pluckers_examples():
    red = reduce_pluckers(pluckers_from_triangle(TRI_K11))
    assert (red.k, red.ell) == (11, 22)
    assert red.minors() == (2, 3, -3, 4, -18, 1)
    red = reduce_pluckers(pluckers_from_triangle(TRI_K15))
    assert (red.k, red.ell) == (15, 5)
    red = reduce_pluckers(pluckers_from_triangle(UNIT))
    assert (red.k, red.ell) == (1, 1)


def test_triple_family_reduces_to_k_equals_d():
    for (a, b, c, d, m, n) in ((5, 7, 17, 11, 1, 0), (1, 1, 5, 3, 2, 1), (1, 5, 7, 5, 3, -2)):
        t = triple_triangle(a, b, c, d, m, n)
        red = reduce_pluckers(pluckers_from_triangle(t))
        assert red.k == d
        assert red.ell == 2 * d * (m * m - m * n + n * n)


def test_rep_vectors_worked_example():
    red = reduce_pluckers(pluckers_from_triangle(TRI_K11))
    alpha, beta = rep_vectors(red)
    assert alpha == (5, 7, -17)
    assert beta == (-1, -1, -19)


def test_rep_vectors_are_signed_permutations_of_the_solution():
    t = triple_triangle(1, 1, 5, 3, 1, 0)
    alpha, beta = rep_vectors(reduce_pluckers(pluckers_from_triangle(t)))
    for vec in (alpha, beta):
        assert sorted(abs(x) for x in vec) == [1, 1, 5]


def test_orthogonal_vectors_worked_example():
    red = reduce_pluckers(pluckers_from_triangle(TRI_K11))
    v, w = orthogonal_vectors(red)
    assert v == (0, 6, 8, 2)
    assert w == (2, -6, 4, 0)
    for row in (v, w):
        assert dot(row, TRI_K11.A) == 0
        assert dot(row, TRI_K11.B) == 0
    gram = dot(v, v) * dot(w, w) - dot(v, w) ** 2
    assert gram == 5808 == 48 * 11 ** 2 * 1 ** 2


def test_gram_identity_on_seed_grid():
    for a in range(-6, 7, 2):
        for b in range(-6, 7, 3):
            for c in range(-6, 7, 2):
                for d in range(-6, 7, 3):
                    if (a, b, c, d) == (0, 0, 0, 0):
                        continue
                    t, _ = normalize_corner(seed_triangle(a, b, c, d))
                    assert gram_identity_check(reduce_pluckers(pluckers_from_triangle(t)))


def test_normalize_corner():
    t2, op = normalize_corner(TRI_K11)
    assert t2 == TRI_K11
    assert op.apply((1, 2, 3, 4)) == (1, 2, 3, 4)
    # the axis-aligned triple triangle has a zero corner minor
    t = triple_triangle(1, 1, 1, 1, 1, 0)
    assert pluckers_from_triangle(t).p23 == 0
    t2, op = normalize_corner(t)
    assert pluckers_from_triangle(t2).p23 != 0
    assert t2.A == op.apply(t.A) and t2.B == op.apply(t.B)


def test_representation_pair_normalization():
    pair = representation_pair((1, 1, -19), (5, 7, -17))
    assert pair.rep1 == (1, 1, -19) and pair.rep2 == (5, 7, -17) and pair.k == 11
    # reversed third components get both signs flipped
    pair = representation_pair((1, 7, 25), (3, 15, 21))
    assert pair.rep1 == (1, 7, -25) and pair.rep2 == (3, 15, -21) and pair.k == 15


def test_representation_pair_rejects_bad_input():
    with pytest.raises(DomainError):
        representation_pair((1, 1, 1), (1, 1, 1))  # equal third components
    with pytest.raises(DomainError):
        representation_pair((1, 1, -19), (5, 7, 17))  # different norms... same norm actually
    with pytest.raises(DomainError):
        representation_pair((2, 2, 2), (2, 2, 2))
    with pytest.raises(DomainError):
        representation_pair((3, 3, 3), (1, 1, 5))  # joint gcd is 1 but entries even? no: norms differ


def test_plane_from_reps_k11():
    ps = plane_from_reps(representation_pair((1, 1, -19), (5, 7, -17)))
    assert ps.pluckers.minors() == (2, 3, -3, 4, -18, 1)
    assert ps.rows == ((0, 3, 4, 1), (1, -3, 2, 0))
    for row in ps.rows:
        assert dot(row, TRI_K11.A) == 0
        assert dot(row, TRI_K11.B) == 0


def test_plane_from_reps_k15():
    ps = plane_from_reps(representation_pair((1, 7, 25), (3, 15, 21)))
    assert ps.pluckers.minors() == (1, 2, -4, 11, -23, 2)
    assert ps.rows == ((0, 2, 11, 2), (2, -4, 1, 0))
    for row in ps.rows:
        assert dot(row, TRI_K15.A) == 0
        assert dot(row, TRI_K15.B) == 0


def test_plane_from_reps_rejects_single_representation():
    # 3*1^2 = 3 has only [1,1,1]; no valid pair exists
    with pytest.raises(DomainError):
        representation_pair((1, 1, 1), (1, 1, -1))


def test_plane_lattice_k15():
    pl = plane_lattice_basis(plane_from_reps(representation_pair((1, 7, 25), (3, 15, 21))))
    assert lattices_equal([pl.b1, pl.b2], [(2, 1, 0, -1), (-1, 0, 2, -11)])
    assert fundamental_area_squared(pl) == 675


def test_plane_lattice_k11():
    pl = plane_lattice_basis(plane_from_reps(representation_pair((1, 1, -19), (5, 7, -17))))
    assert fundamental_area_squared(pl) == 363


def test_quadratic_form_k11():
    qf = plane_quadratic_form(plane_from_reps(representation_pair((1, 1, -19), (5, 7, -17))))
    assert (qf.qa, qf.qb, qf.qc) == (19, 12, 21)
    assert (qf.v0, qf.w0) == (-6, 19)
    assert qf.disc == -3 * (2 * 11 * 1) ** 2


def test_quadratic_form_k15():
    qf = plane_quadratic_form(plane_from_reps(representation_pair((1, 7, 25), (3, 15, 21))))
    assert qf.w0 == 24
    assert qf.disc == -3 * (2 * 15 * 2) ** 2


def test_minimal_scale_worked_examples():
    qf = plane_quadratic_form(plane_from_reps(representation_pair((1, 1, -19), (5, 7, -17))))
    assert minimal_scale(qf) == 22
    qf = plane_quadratic_form(plane_from_reps(representation_pair((1, 7, 25), (3, 15, 21))))
    assert minimal_scale(qf) == 5


def test_minimal_scale_unit_plane():
    # a squared-side-2 triangle exists in its own plane, so ell = 1
    t, _ = normalize_corner(UNIT)
    red = reduce_pluckers(pluckers_from_triangle(t))
    ps = plane_from_reps(reps_from_pluckers(red))
    assert minimal_scale(plane_quadratic_form(ps)) == 1


def test_construct_triangle_k11():
    ps = plane_from_reps(representation_pair((1, 1, -19), (5, 7, -17)))
    tri, vw, vpwp = construct_triangle(ps, 22)
    assert vw == (4, 2) and vpwp == (5, -3)
    assert tri.A == (8, 4, 2, -20)
    assert tri.B == (21, 5, -3, -3)
    assert tri.D == 2 * 11 * 22


def test_construct_triangle_k15():
    ps = plane_from_reps(representation_pair((1, 7, 25), (3, 15, 21)))
    tri, _vw, _vpwp = construct_triangle(ps, 5)
    assert tri.D == 150
    assert canonical_form(tri) == canonical_form(TRI_K15)


def test_construct_triangle_respects_explicit_parameters():
    ps = plane_from_reps(representation_pair((1, 1, -19), (5, 7, -17)))
    tri, vw, _ = construct_triangle(ps, 22, 4, 2)
    assert vw == (4, 2) and tri.A == (8, 4, 2, -20)


def test_round_trip_plane_contains_triangle():
    # triangle -> minors -> reduced -> representation pair -> plane
    for t in (TRI_K11, TRI_K15, seed_triangle(2, -1, 3, 0), seed_triangle(1, 2, 0, 2)):
        t2, _ = normalize_corner(t)
        red = reduce_pluckers(pluckers_from_triangle(t2))
        ps = plane_from_reps(reps_from_pluckers(red))
        for row in ps.rows:
            assert dot(row, t2.A) == 0
            assert dot(row, t2.B) == 0


def test_ehrhart_worked_triangle():
    poly = ehrhart(TRI_K11)
    assert (poly.c2, poly.c1, poly.c0) == (11, 2, 1)
    assert interior_count(TRI_K11, 1) == 10


def test_ehrhart_unit_triangle():
    poly = ehrhart(UNIT)
    assert (poly.c2, poly.c1, poly.c0) == (Fraction(1, 2), Fraction(3, 2), 1)
    assert poly(1) == 3
    assert interior_count(UNIT, 1) == 0
    assert interior_count(UNIT, 3) == 1


def test_ehrhart_second_triangle_counted_not_claimed():
    # direct counting gives (5/2, 7/2, 1); closed counts 7, 18 at t = 1, 2
    poly = ehrhart(TRI_K15)
    assert (poly.c2, poly.c1, poly.c0) == (Fraction(5, 2), Fraction(7, 2), 1)
    assert poly(1) == 7 and poly(2) == 18


def test_ehrhart_reciprocity():
    for t in (TRI_K11, TRI_K15, UNIT):
        poly = ehrhart(t)
        for s in (1, 2):
            assert poly.c2 * s * s - poly.c1 * s + 1 == interior_count(t, s)


def test_pick_consistency():
    for t in (TRI_K11, TRI_K15, UNIT):
        poly = ehrhart(t)
        assert poly.c2 == interior_count(t, 1) + poly.c1 - 1
