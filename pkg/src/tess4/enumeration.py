"""Exhaustive canonicalized triangle enumeration, census, conjecture scans.

`enumerate_triangles(L)` lists one canonical representative per orbit
of triangles with squared side D = 2L.  The anchor vertex A is first
restricted to its own canonical vector form (sorted non-negative
coordinates), which every orbit attains, then B is solved from
<A, B> = L and |B|^2 = 2L inside the coordinate box; pairs are then
canonicalized and deduplicated, so the output is independent of the
search partitioning.  `census` keeps only minimal triangles (no
smaller equilateral triangle in the same plane) and records the odd
scale k of each orbit.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd, isqrt

from .characterize import (
    pluckers_from_triangle,
    reduce_pluckers,
    triangle_plane_coords,
)
from .diophantine import QuadrupleSeed, primitive_solutions, solution_from_seed
from .errors import DomainError, check_memory_cap
from .intlinalg import solve_integer
from .lattice import Triangle, Vec4, canonical_key, dot

__all__ = [
    "CensusRow",
    "ConjectureReport",
    "CoverageRow",
    "enumerate_triangles",
    "is_minimal",
    "census",
    "count_side_orbits",
    "tetrahedron_completions",
    "conjecture_scan",
    "seed_coverage",
]


def _sorted_quads(n: int) -> list[Vec4]:
    """All 0 <= a1 <= a2 <= a3 <= a4 with squared norm n."""
    out = []
    for a1 in range(isqrt(n // 4) + 1):
        r1 = n - a1 * a1
        for a2 in range(a1, isqrt(r1 // 3) + 1):
            r2 = r1 - a2 * a2
            for a3 in range(a2, isqrt(r2 // 2) + 1):
                r3 = r2 - a3 * a3
                a4 = isqrt(r3)
                if a4 * a4 == r3 and a4 >= a3:
                    out.append((a1, a2, a3, a4))
    return out


def _keys_for_anchor(args: tuple[Vec4, int]) -> set[tuple[int, ...]]:
    """Canonical keys of all triangles whose anchor vertex is A."""
    A, L = args
    n = 2 * L
    M = isqrt(n)
    a1, a2, a3, a4 = A
    keys: set[tuple[int, ...]] = set()
    for b1 in range(-M, M + 1):
        r1 = n - b1 * b1
        for b2 in range(-isqrt(r1), isqrt(r1) + 1):
            r2 = r1 - b2 * b2
            s3 = isqrt(r2)
            for b3 in range(-s3, s3 + 1):
                num = L - a1 * b1 - a2 * b2 - a3 * b3
                if num % a4:
                    continue
                b4 = num // a4
                if b4 * b4 != r2 - b3 * b3:
                    continue
                keys.add(canonical_key(Triangle(A, (b1, b2, b3, b4), n)))
    return keys


def enumerate_triangles(L: int, threads: int = 1) -> list[Triangle]:
    """One canonical representative per orbit with squared side 2L, sorted."""
    if L < 1:
        raise DomainError(f"L must be positive, got {L}")
    anchors = [(A, L) for A in _sorted_quads(2 * L)]
    keys: set[tuple[int, ...]] = set()
    if threads > 1 and len(anchors) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_keys_for_anchor, anchors):
                keys |= part
    else:
        for item in anchors:
            check_memory_cap()
            keys |= _keys_for_anchor(item)
    return [Triangle(key[:4], key[4:], 2 * L) for key in sorted(keys)]


def is_minimal(t: Triangle) -> bool:
    """True iff no equilateral lattice triangle with smaller squared side
    exists in t's plane (exhaustive over plane vectors of norm < D)."""
    pl, _a, _b = triangle_plane_coords(t)
    g11, g12 = pl.gram[0]
    g22 = pl.gram[1][1]
    det = pl.det()
    by_norm: dict[int, list[tuple[int, int]]] = {}
    bound = t.D - 1
    xmax = isqrt((bound * g22) // det) + 1
    for x in range(-xmax, xmax + 1):
        disc = g22 * bound - det * x * x
        if disc < 0:
            continue
        r = isqrt(disc)
        lo = (-g12 * x - r) // g22 - 1
        hi = (-g12 * x + r) // g22 + 2
        for y in range(lo, hi + 1):
            q = pl.norm(x, y)
            if 0 < q < t.D and q % 2 == 0:
                by_norm.setdefault(q, []).append((x, y))
    for q, vecs in by_norm.items():
        half = q // 2
        for i in range(len(vecs)):
            for j in range(i + 1, len(vecs)):
                if pl.inner(vecs[i], vecs[j]) == half:
                    return False
    return True


@dataclass(frozen=True)
class CensusRow:
    """Minimal triangles of one squared side class D = 2L."""

    L: int
    count: int
    triangles: tuple[Triangle, ...]
    kvalues: tuple[int, ...]

    def __post_init__(self) -> None:
        assert self.count == len(self.triangles)


def _orbit_k(t: Triangle) -> int:
    return reduce_pluckers(pluckers_from_triangle(t)).k


def census(max_L: int, threads: int = 1) -> list[CensusRow]:
    """Minimal-triangle census for L = 1..max_L."""
    if max_L < 1:
        raise DomainError(f"max_L must be positive, got {max_L}")
    rows = []
    for L in range(1, max_L + 1):
        check_memory_cap()
        minimal = tuple(
            t for t in enumerate_triangles(L, threads=threads) if is_minimal(t)
        )
        kvalues = tuple(sorted({_orbit_k(t) for t in minimal}))
        rows.append(CensusRow(L=L, count=len(minimal), triangles=minimal, kvalues=kvalues))
    return rows


def count_side_orbits(L: int, threads: int = 1) -> int:
    """Number of canonical orbits of ALL triangles with squared side 2L."""
    return len(enumerate_triangles(L, threads=threads))


# ---------------------------------------------------------------------------
# tetrahedron-completion conjecture


def tetrahedron_completions(t: Triangle) -> list[Vec4]:
    """All lattice points C with |C|^2 = D and <C,A> = <C,B> = D/2,
    i.e. the apexes completing t to a regular tetrahedron; sorted."""
    L = t.L
    sol = solve_integer([list(t.A), list(t.B)], [L, L])
    if sol is None:
        return []
    C0, ker = sol
    if len(ker) != 2:
        return []
    u1, u2 = ker
    g11, g12, g22 = dot(u1, u1), dot(u1, u2), dot(u2, u2)
    c1, c2, c0 = dot(C0, u1), dot(C0, u2), dot(C0, C0)
    det = g11 * g22 - g12 * g12
    # |C0 + s u1 + r u2|^2 = D, solved as a quadratic in r per s
    beta = 2 * (g12 * c2 - g22 * c1)
    gamma = c2 * c2 - g22 * (c0 - t.D)
    d2 = beta * beta + 4 * det * gamma
    if d2 < 0:
        return []
    sq = isqrt(d2)
    out = set()
    for s in range((beta - sq) // (2 * det) - 1, (beta + sq) // (2 * det) + 2):
        fs = -det * s * s + beta * s + gamma
        if fs < 0:
            continue
        r0 = isqrt(fs)
        if r0 * r0 != fs:
            continue
        for pm in ([r0, -r0] if r0 else [0]):
            num = -(g12 * s + c2) + pm
            if num % g22:
                continue
            r = num // g22
            C = tuple(C0[i] + s * u1[i] + r * u2[i] for i in range(4))
            if dot(C, C) == t.D and dot(C, t.A) == L and dot(C, t.B) == L:
                out.add(C)
    return sorted(out)


@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of a completion scan over enumerated triangles."""

    tested: int
    witnesses: int
    counterexamples: tuple[Triangle, ...]

    def __post_init__(self) -> None:
        assert self.tested == self.witnesses + len(self.counterexamples)


def conjecture_scan(max_L: int, threads: int = 1) -> ConjectureReport:
    """Search a tetrahedron completion for every orbit with L <= max_L.

    A triangle without a completion is recorded as a counterexample
    candidate for review, never dropped.
    """
    tested = 0
    witnesses = 0
    counterexamples = []
    for L in range(1, max_L + 1):
        check_memory_cap()
        for t in enumerate_triangles(L, threads=threads):
            tested += 1
            if tetrahedron_completions(t):
                witnesses += 1
            else:
                counterexamples.append(t)
    return ConjectureReport(
        tested=tested, witnesses=witnesses, counterexamples=tuple(counterexamples)
    )


# ---------------------------------------------------------------------------
# coverage of the quadratic solution generator


@dataclass(frozen=True)
class CoverageRow:
    """Per-d coverage of the primitive solutions by the seed generator."""

    d: int
    covered: int
    total: int
    missing: tuple[tuple[int, int, int], ...]

    @property
    def complete(self) -> bool:
        return not self.missing


def seed_coverage(max_d: int, margin: int = 1) -> list[CoverageRow]:
    """Sweep all seeds for odd d <= max_d and report which primitive
    solutions the generator reaches.

    Any seed with x^2+y^2+z^2+t^2 = d has coordinates bounded by
    sqrt(d), so the swept grid (ceil(sqrt(d)) + margin per coordinate)
    is exhaustive for every d; `margin` only pads the documented grid.
    """
    if max_d < 1:
        raise DomainError(f"max_d must be positive, got {max_d}")
    bound = (isqrt(max_d - 1) + 1 if max_d > 1 else 1) + margin
    reached: dict[int, set[tuple[int, int, int]]] = {}
    for x in range(-bound, bound + 1):
        check_memory_cap()
        for y in range(-bound, bound + 1):
            for z in range(-bound, bound + 1):
                for t in range(-bound, bound + 1):
                    d = x * x + y * y + z * z + t * t
                    if d == 0 or d > max_d or d % 2 == 0:
                        continue
                    sol = solution_from_seed(QuadrupleSeed(x, y, z, t))
                    trip = tuple(sorted((abs(sol.a), abs(sol.b), abs(sol.c))))
                    if gcd(gcd(trip[0], trip[1]), trip[2]) == 1:
                        reached.setdefault(d, set()).add(trip)
    rows = []
    for d in range(1, max_d + 1, 2):
        want = [s.triple for s in primitive_solutions(d)]
        got = reached.get(d, set())
        missing = tuple(trip for trip in want if trip not in got)
        rows.append(
            CoverageRow(d=d, covered=len(want) - len(missing), total=len(want), missing=missing)
        )
    return rows
