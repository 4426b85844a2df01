"""Exact solvers and counting formulas for a^2 + b^2 + c^2 = 3d^2.

For odd d the equation has primitive solutions [a, b, c] with
0 < a <= b <= c and gcd(a, b, c) = 1; for even d none exist (all three
entries would have to be even).  The number of primitive solutions is
multiplicative data: with

    lam(d) = 8d * prod_{p | d} (1 - (-3/p)/p)        (Legendre symbol)

counting all primitive sign/order variants, and gamma2(d) counting the
primitive solutions with a repeated entry (a = b or b = c), the number
of primitive ordered triples is

    (lam(d) + 24*gamma2(d)) / 48

with the division exact.  d = 1 is degenerate: its unique solution
[1, 1, 1] has all three entries equal, so its variant orbit has 8
elements instead of 24, and the count needs a +40 correction (and
gamma2(1) = 0).  Everything here is plain integer arithmetic; rationals
are `fractions.Fraction`, never floats.

The companion equation 2a^2 + c^2 = 3d^2 (solutions of the main
equation with a repeated entry) has a two-parameter description over
coprime (k, ell) with k odd, d = 2*ell^2 + k^2; `two_one_solutions`
implements it and `two_one_brute_force` is the independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import DomainError, InternalConsistencyError

__all__ = [
    "TripleSolution",
    "TwoOneSolution",
    "CountBreakdown",
    "QuadrupleSeed",
    "factorize",
    "is_prime",
    "legendre_minus3",
    "signed_rep_count",
    "twin_count",
    "count_primitive",
    "primitive_solutions",
    "solution_from_seed",
    "two_one_solutions",
    "two_one_brute_force",
]


@dataclass(frozen=True)
class TripleSolution:
    """Ordered solution (a, b, c; d) of a^2 + b^2 + c^2 = 3d^2.

    `primitive` is true exactly when gcd(a, b, c) = 1 and 0 < a <= b <= c;
    primitive solutions force d odd and a, b, c = +-1 (mod 6).
    """

    a: int
    b: int
    c: int
    d: int
    primitive: bool

    def __post_init__(self) -> None:
        if self.a ** 2 + self.b ** 2 + self.c ** 2 != 3 * self.d ** 2:
            raise InternalConsistencyError(f"not a solution: {self}")
        if self.d < 0:
            raise InternalConsistencyError("d must be non-negative")
        ordered = 0 < self.a <= self.b <= self.c
        gcd_one = gcd(gcd(abs(self.a), abs(self.b)), abs(self.c)) == 1
        if self.primitive != (ordered and gcd_one):
            raise InternalConsistencyError(f"primitive flag wrong: {self}")
        if self.primitive:
            if self.d % 2 == 0:
                raise InternalConsistencyError("primitive solution with even d")
            for v in (self.a, self.b, self.c):
                if v % 6 not in (1, 5):
                    raise InternalConsistencyError(
                        f"primitive entry {v} is not +-1 (mod 6)"
                    )

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class TwoOneSolution:
    """Positive solution (a, c; d) of 2a^2 + c^2 = 3d^2.

    `branch` records which sign branch of the (k, ell) description
    produced it ("plus"/"minus"), or None for brute-force output.
    """

    a: int
    c: int
    d: int
    primitive: bool
    branch: str | None = None

    def __post_init__(self) -> None:
        if min(self.a, self.c, self.d) < 1:
            raise InternalConsistencyError(f"entries must be positive: {self}")
        if 2 * self.a ** 2 + self.c ** 2 != 3 * self.d ** 2:
            raise InternalConsistencyError(f"not a solution: {self}")
        if self.primitive != (gcd(self.a, self.c) == 1):
            raise InternalConsistencyError(f"primitive flag wrong: {self}")


@dataclass(frozen=True)
class CountBreakdown:
    """Primitive-solution count for one odd d, with its formula inputs.

    count = (lam + 24*gamma2) / 48 exactly, except d = 1 where the
    all-equal solution [1, 1, 1] adds a +40 orbit correction.
    """

    d: int
    lam: Fraction
    gamma2: int
    count: int

    def __post_init__(self) -> None:
        correction = 40 if self.d == 1 else 0
        total = self.lam + 24 * self.gamma2 + correction
        if total != 48 * self.count:
            raise InternalConsistencyError(
                f"count breakdown inconsistent for d={self.d}: {total} != 48*{self.count}"
            )


@dataclass(frozen=True)
class QuadrupleSeed:
    """Four integers feeding the quadratic solution generator."""

    x: int
    y: int
    z: int
    t: int


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale inputs)."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n > 1 and factorize(n) == {n: 1}


def legendre_minus3(p: int) -> int:
    """Legendre symbol (-3/p) for an odd prime p.

    0 if p = 3; +1 if p = 1, 7 (mod 12); -1 if p = 5, 11 (mod 12).
    """
    if p == 2 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    if p == 3:
        return 0
    return 1 if p % 12 in (1, 7) else -1


def _require_odd_positive(d: int) -> None:
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    if d % 2 == 0:
        raise DomainError(f"d must be odd, got {d}")


def signed_rep_count(d: int) -> Fraction:
    """Number of primitive representations of 3d^2 = x^2 + y^2 + z^2
    counted with signs and order: 8d * prod_{p | d} (1 - (-3/p)/p).

    Returned as an exact Fraction so callers can verify that downstream
    divisions are exact; the value itself is always an integer.
    """
    _require_odd_positive(d)
    out = Fraction(8 * d)
    for p in factorize(d):
        out *= 1 - Fraction(legendre_minus3(p), p)
    return out


def twin_count(d: int) -> int:
    """Number of primitive solutions of 3d^2 with a repeated entry.

    0 if some prime factor of d is 5 or 7 (mod 8); 1 for d = 3; else
    2^k where k counts the distinct prime factors that are 1 or 3
    (mod 8), excluding 3 itself.  d = 1 has no such solution ([1,1,1]
    has all three entries equal), so the count is 0.
    """
    _require_odd_positive(d)
    if d == 1:
        return 0
    factors = factorize(d)
    if any(p % 8 in (5, 7) for p in factors):
        return 0
    if d == 3:
        return 1
    k = sum(1 for p in factors if p % 8 in (1, 3) and p != 3)
    return 2 ** k


def count_primitive(d: int) -> CountBreakdown:
    """Count primitive solutions of a^2+b^2+c^2 = 3d^2 by formula.

    The division by 48 must be exact; inexactness signals a bug and
    raises InternalConsistencyError.
    """
    _require_odd_positive(d)
    lam = signed_rep_count(d)
    g2 = twin_count(d)
    total = lam + 24 * g2 + (40 if d == 1 else 0)
    count = total / 48
    if count.denominator != 1:
        raise InternalConsistencyError(
            f"count formula division inexact for d={d}: {total}/48"
        )
    return CountBreakdown(d=d, lam=lam, gamma2=g2, count=int(count))


def primitive_solutions(d: int) -> list[TripleSolution]:
    """All primitive solutions [a, b, c] for d, sorted lexicographically.

    Exhaustive bounded search: 0 < a <= b <= c <= d*ceil(sqrt(3)).
    Even d yields the empty list (no primitive solutions exist).
    """
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    if d % 2 == 0:
        return []
    n = 3 * d * d
    out = []
    a = 1
    while 3 * a * a <= n:
        b = a
        while a * a + 2 * b * b <= n:
            rem = n - a * a - b * b
            c = isqrt(rem)
            if c * c == rem and c >= b and gcd(gcd(a, b), c) == 1:
                out.append(TripleSolution(a, b, c, d, primitive=True))
            b += 1
        a += 1
    return out


def solution_from_seed(seed: QuadrupleSeed) -> TripleSolution:
    """Quadratic generator: four integers -> a solution of the equation.

    d = x^2+y^2+z^2+t^2 and (a, b, c) are quadratic forms in the seed;
    the identity a^2+b^2+c^2 = 3d^2 holds for every seed and is
    asserted.  The output is not necessarily primitive or ordered.
    """
    x, y, z, t = seed.x, seed.y, seed.z, seed.t
    a = x * x + y * y - z * z - t * t + 2 * (x * z - x * t - y * t - y * z)
    b = y * y + t * t - x * x - z * z + 2 * (y * z - x * y - x * t - z * t)
    c = z * z + y * y - x * x - t * t + 2 * (x * y + y * t + x * z - z * t)
    d = x * x + y * y + z * z + t * t
    ordered = 0 < a <= b <= c
    gcd_one = gcd(gcd(abs(a), abs(b)), abs(c)) == 1
    return TripleSolution(a, b, c, d, primitive=ordered and gcd_one)


def two_one_solutions(k: int, ell: int) -> list[TwoOneSolution]:
    """Solutions of 2a^2 + c^2 = 3d^2 from the (k, ell) description.

    Requires k odd, ell >= 1, gcd(k, ell) = 1; then d = 2*ell^2 + k^2
    and each congruence branch that applies contributes one solution
    (branches may coincide; duplicates are removed, first tag kept).
    """
    if k < 1 or ell < 1:
        raise DomainError("k and ell must be positive")
    if k % 2 == 0:
        raise DomainError(f"k must be odd, got {k}")
    if gcd(k, ell) != 1:
        raise DomainError(f"k and ell must be coprime, got ({k}, {ell})")
    d = 2 * ell * ell + k * k
    out: list[TwoOneSolution] = []
    seen = set()
    if (k - ell) % 3 != 0:
        a = abs(2 * ell * ell + 2 * k * ell - k * k)
        c = abs(k * k + 4 * k * ell - 2 * ell * ell)
        out.append(TwoOneSolution(a, c, d, primitive=True, branch="plus"))
        seen.add((a, c))
    if (k + ell) % 3 != 0:
        a = abs(2 * ell * ell - 2 * k * ell - k * k)
        c = abs(k * k - 4 * k * ell - 2 * ell * ell)
        if (a, c) not in seen:
            out.append(TwoOneSolution(a, c, d, primitive=True, branch="minus"))
    return out


def two_one_brute_force(d: int) -> list[TwoOneSolution]:
    """Exhaustive positive primitive solutions of 2a^2 + c^2 = 3d^2."""
    if d < 1:
        raise DomainError(f"d must be positive, got {d}")
    n = 3 * d * d
    out = []
    a = 1
    while 2 * a * a < n:
        rem = n - 2 * a * a
        c = isqrt(rem)
        if c * c == rem and c > 0 and gcd(a, c) == 1:
            out.append(TwoOneSolution(a, c, d, primitive=True))
        a += 1
    return out
