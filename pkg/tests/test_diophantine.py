"""Tests for the equation a^2+b^2+c^2 = 3d^2 and its companions."""

from fractions import Fraction
from math import gcd, isqrt

import pytest

from tess4.diophantine import (
    QuadrupleSeed,
    count_primitive,
    factorize,
    legendre_minus3,
    primitive_solutions,
    signed_rep_count,
    solution_from_seed,
    twin_count,
    two_one_brute_force,
    two_one_solutions,
)
from tess4.errors import DomainError

# Reference table of primitive solutions for odd d <= 19.
SOLUTION_TABLE = {
    1: [(1, 1, 1)],
    3: [(1, 1, 5)],
    5: [(1, 5, 7)],
    7: [(1, 5, 11)],
    9: [(1, 11, 11), (5, 7, 13)],
    11: [(1, 1, 19), (5, 7, 17), (5, 13, 13)],
    13: [(5, 11, 19), (7, 13, 17)],
    15: [(1, 7, 25), (5, 11, 23), (5, 17, 19)],
    17: [(1, 5, 29), (7, 17, 23), (11, 11, 25), (13, 13, 23)],
    19: [(1, 11, 31), (5, 23, 23), (11, 11, 29), (13, 17, 25)],
}


@pytest.mark.parametrize("d", sorted(SOLUTION_TABLE))
def test_solution_table(d):
    assert [s.triple for s in primitive_solutions(d)] == SOLUTION_TABLE[d]


def test_even_d_has_no_primitive_solutions():
    assert primitive_solutions(2) == []
    assert primitive_solutions(10) == []


def test_nonpositive_d_rejected():
    with pytest.raises(DomainError):
        primitive_solutions(0)
    with pytest.raises(DomainError):
        count_primitive(-1)


def test_solution_entries_are_plus_minus_one_mod_six():
    for d in range(1, 60, 2):
        for s in primitive_solutions(d):
            assert all(v % 6 in (1, 5) for v in s.triple)


def test_legendre_minus3():
    assert legendre_minus3(3) == 0
    assert legendre_minus3(13) == 1
    assert legendre_minus3(5) == -1
    assert legendre_minus3(7) == 1
    assert legendre_minus3(11) == -1
    with pytest.raises(DomainError):
        legendre_minus3(2)
    with pytest.raises(DomainError):
        legendre_minus3(9)


def test_factorize():
    assert factorize(1) == {}
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert factorize(97) == {97: 1}


def test_signed_rep_count_values():
    assert signed_rep_count(1) == 8
    assert signed_rep_count(11) == 96
    assert signed_rep_count(19) == 144


def test_signed_rep_count_is_the_signed_primitive_count():
    # brute-force oracle: all (x, y, z) with signs/order, gcd 1
    for d in range(1, 36, 2):
        n = 3 * d * d
        cnt = 0
        m = isqrt(n)
        for x in range(-m, m + 1):
            r1 = n - x * x
            for y in range(-isqrt(r1), isqrt(r1) + 1):
                r2 = r1 - y * y
                z = isqrt(r2)
                if z * z == r2:
                    for zz in {z, -z}:
                        if gcd(gcd(abs(x), abs(y)), abs(zz)) == 1:
                            cnt += 1
        assert signed_rep_count(d) == cnt


def test_twin_count_values():
    assert twin_count(3) == 1
    assert twin_count(5) == 0
    assert twin_count(11) == 2
    assert twin_count(1) == 0
    assert twin_count(9) == 1


def test_twin_count_matches_repeated_entry_count():
    for d in range(3, 120, 2):
        repeated = sum(
            1 for s in primitive_solutions(d) if s.a == s.b or s.b == s.c
        )
        assert twin_count(d) == repeated, d


def test_count_formula_examples():
    assert count_primitive(9).count == 2
    assert count_primitive(17).count == 4
    assert count_primitive(1).count == 1


def test_count_formula_matches_exhaustive_search():
    # the acceptance suite extends this sweep to d <= 199
    for d in range(1, 100, 2):
        bd = count_primitive(d)
        assert bd.count == len(primitive_solutions(d)), d
        assert bd.lam.denominator == 1


def test_seed_generator_examples():
    s = solution_from_seed(QuadrupleSeed(1, 0, 0, 0))
    assert (s.a, s.b, s.c, s.d) == (1, -1, -1, 1)
    s = solution_from_seed(QuadrupleSeed(1, 1, 0, 0))
    assert (s.a, s.b, s.c, s.d) == (2, -2, 2, 2)
    s = solution_from_seed(QuadrupleSeed(0, 0, 0, 0))
    assert (s.a, s.b, s.c, s.d) == (0, 0, 0, 0)


def test_seed_generator_identity_on_grid():
    for x in range(-8, 9):
        for y in range(-8, 9):
            for z in range(-8, 9):
                for t in range(-8, 9):
                    # TripleSolution validates a^2+b^2+c^2 = 3d^2 on construction
                    solution_from_seed(QuadrupleSeed(x, y, z, t))


def test_two_one_generator_examples():
    sols = two_one_solutions(1, 1)
    assert [(s.a, s.c, s.d) for s in sols] == [(1, 5, 3)]
    assert sols[0].branch == "minus"
    sols = two_one_solutions(1, 2)
    assert [(s.a, s.c, s.d) for s in sols] == [(11, 1, 9)]
    assert sols[0].branch == "plus"
    sols = two_one_solutions(3, 2)
    assert {s.d for s in sols} == {17}
    assert len(sols) == 2
    for s in sols:
        assert 2 * s.a ** 2 + s.c ** 2 == 3 * s.d ** 2


def test_two_one_generator_rejects_bad_input():
    with pytest.raises(DomainError):
        two_one_solutions(2, 1)
    with pytest.raises(DomainError):
        two_one_solutions(3, 6)
    with pytest.raises(DomainError):
        two_one_solutions(1, 0)


def test_two_one_brute_force_examples():
    assert [(s.a, s.c, s.d) for s in two_one_brute_force(1)] == [(1, 1, 1)]
    assert [(s.a, s.c, s.d) for s in two_one_brute_force(3)] == [(1, 5, 3)]
    assert two_one_brute_force(2) == []


def test_two_one_round_trip():
    # every generated solution appears in the brute-force list, and every
    # brute-force solution for odd d <= 99 except (1,1,1) is generated
    generated = set()
    for k in range(1, 31, 2):
        for ell in range(1, 31):
            if gcd(k, ell) == 1:
                for s in two_one_solutions(k, ell):
                    generated.add((s.a, s.c, s.d))
                    if s.d <= 99:
                        assert (s.a, s.c) in {
                            (b.a, b.c) for b in two_one_brute_force(s.d)
                        }
    for d in range(1, 100, 2):
        for s in two_one_brute_force(d):
            if (s.a, s.c, s.d) != (1, 1, 1):
                assert (s.a, s.c, s.d) in generated, (s.a, s.c, s.d)


def test_count_breakdown_is_exact_rational():
    bd = count_primitive(11)
    assert bd.lam == Fraction(96)
    assert bd.gamma2 == 2
    assert bd.count == 3
