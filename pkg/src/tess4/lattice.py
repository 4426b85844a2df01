"""Core 4D integer geometry: triangles, tetrahedra, symmetry, families.

Triangles are origin-anchored: a `Triangle` stores the two non-origin
vertices A, B and the common squared side D = |A|^2 = |B|^2 = |A-B|^2.
D is always even (the inner product <A, B> = D/2 must be an integer),
and we write L = D/2 throughout.

The box-symmetry group of the lattice (coordinate permutations and sign
changes, 384 elements) combined with the choice of which vertex sits at
the origin and the (A, B) labelling gives 2304 images per triangle;
`canonical_form` picks the lexicographically least one, which is the
unit of "essentially different" counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import gcd, isqrt

from .errors import DomainError, InternalConsistencyError, NotFoundError

__all__ = [
    "Vec4",
    "dot",
    "norm2",
    "vsub",
    "vneg",
    "coord_gcd",
    "Triangle",
    "Tetrahedron",
    "SymmetryOp",
    "PlaneFrame",
    "is_equilateral",
    "is_irreducible",
    "admissible_side_squared",
    "seed_triangle",
    "seed_tetrahedron",
    "triple_triangle",
    "triple_tetrahedron",
    "plane_frame",
    "complete_point",
    "generate_mn",
    "canonical_form",
    "canonical_key",
    "all_symmetry_ops",
]

Vec4 = tuple[int, int, int, int]


def dot(u: Vec4, v: Vec4) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3]


def norm2(v: Vec4) -> int:
    return dot(v, v)


def vsub(u: Vec4, v: Vec4) -> Vec4:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3])


def vneg(v: Vec4) -> Vec4:
    return (-v[0], -v[1], -v[2], -v[3])


def coord_gcd(*vecs: Vec4) -> int:
    g = 0
    for v in vecs:
        for x in v:
            g = gcd(g, x)
    return g


@dataclass(frozen=True)
class Triangle:
    """Equilateral lattice triangle {O, A, B} with cached squared side D."""

    A: Vec4
    B: Vec4
    D: int

    def __post_init__(self) -> None:
        if not (norm2(self.A) == norm2(self.B) == norm2(vsub(self.A, self.B)) == self.D):
            raise InternalConsistencyError(f"not equilateral: {self}")
        if self.D <= 0:
            raise InternalConsistencyError("degenerate triangle")
        if 2 * dot(self.A, self.B) != self.D:
            raise InternalConsistencyError("inner product is not D/2")
        # D even is forced: <A,B> = D/2 is an integer.

    @classmethod
    def from_vertices(cls, A: Vec4, B: Vec4) -> "Triangle":
        return cls(tuple(A), tuple(B), norm2(tuple(A)))

    @property
    def L(self) -> int:
        return self.D // 2


@dataclass(frozen=True)
class Tetrahedron:
    """Regular lattice tetrahedron {O, A, B, C} (fourth vertex at origin)."""

    A: Vec4
    B: Vec4
    C: Vec4

    def __post_init__(self) -> None:
        d = norm2(self.A)
        pairs = (
            norm2(self.B),
            norm2(self.C),
            norm2(vsub(self.A, self.B)),
            norm2(vsub(self.A, self.C)),
            norm2(vsub(self.B, self.C)),
        )
        if d <= 0 or any(p != d for p in pairs):
            raise InternalConsistencyError(f"not a regular tetrahedron: {self}")

    @property
    def D(self) -> int:
        return norm2(self.A)

    @property
    def base(self) -> Triangle:
        return Triangle(self.A, self.B, self.D)


def is_equilateral(A: Vec4, B: Vec4) -> Triangle | None:
    """Triangle {O, A, B} when the three squared sides agree, else None."""
    A = tuple(A)
    B = tuple(B)
    d = norm2(A)
    if d > 0 and norm2(B) == d and norm2(vsub(A, B)) == d:
        return Triangle(A, B, d)
    return None


def is_irreducible(t: Triangle) -> bool:
    """True iff the eight coordinates of A and B have gcd 1."""
    return coord_gcd(t.A, t.B) == 1


def admissible_side_squared(D: int) -> bool:
    """True iff an irreducible triangle with squared side D exists:
    D = 2^j * odd with j in {1, 2}."""
    if D < 1:
        raise DomainError(f"D must be positive, got {D}")
    if D % 2:
        return False
    D //= 2
    if D % 2 == 0:
        D //= 2
    return D % 2 == 1


# ---------------------------------------------------------------------------
# symmetry group


@dataclass(frozen=True)
class SymmetryOp:
    """Signed coordinate permutation: (op v)[i] = signs[i] * v[perm[i]]."""

    perm: tuple[int, int, int, int]
    signs: tuple[int, int, int, int]

    def apply(self, v: Vec4) -> Vec4:
        p, s = self.perm, self.signs
        return (s[0] * v[p[0]], s[1] * v[p[1]], s[2] * v[p[2]], s[3] * v[p[3]])

    def compose(self, other: "SymmetryOp") -> "SymmetryOp":
        """self after other: (self*other).apply(v) == self.apply(other.apply(v))."""
        perm = tuple(other.perm[self.perm[i]] for i in range(4))
        signs = tuple(self.signs[i] * other.signs[self.perm[i]] for i in range(4))
        return SymmetryOp(perm, signs)

    @classmethod
    def identity(cls) -> "SymmetryOp":
        return cls((0, 1, 2, 3), (1, 1, 1, 1))


_ALL_OPS: list[SymmetryOp] | None = None


def all_symmetry_ops() -> list[SymmetryOp]:
    """The 384 signed permutations, in a fixed deterministic order."""
    global _ALL_OPS
    if _ALL_OPS is None:
        _ALL_OPS = [
            SymmetryOp(perm, signs)
            for perm in permutations(range(4))
            for signs in product((1, -1), repeat=4)
        ]
    return _ALL_OPS


# ---------------------------------------------------------------------------
# constructive families


def seed_triangle(a: int, b: int, c: int, d: int) -> Triangle:
    """Triangle from an arbitrary integer 4-seed, squared side
    2(a^2+b^2+c^2+d^2): A = (a+b, a-b, c+d, c-d), B = (a+c, d-b, c-a, -b-d)."""
    if (a, b, c, d) == (0, 0, 0, 0):
        raise DomainError("zero seed gives a degenerate triangle")
    A = (a + b, a - b, c + d, c - d)
    B = (a + c, d - b, c - a, -b - d)
    t = is_equilateral(A, B)
    if t is None:
        raise InternalConsistencyError("seed triangle identity failed")
    if t.D != 2 * (a * a + b * b + c * c + d * d):
        raise InternalConsistencyError("seed triangle has wrong squared side")
    return t


def seed_tetrahedron(a: int, b: int, c: int, d: int) -> Tetrahedron:
    """seed_triangle completed by C = (b+c, a+d, d-a, c-b)."""
    t = seed_triangle(a, b, c, d)
    C = (b + c, a + d, d - a, c - b)
    return Tetrahedron(t.A, t.B, C)


def triple_triangle(a: int, b: int, c: int, d: int, m: int, n: int) -> Triangle:
    """Triangle from a solution of a^2+b^2+c^2 = 3d^2 and coprime (m, n):
    A = ((m-2n)d, ma, mb, mc), B = ((2m-n)d, na, nb, nc),
    squared side 4d^2(m^2 - mn + n^2)."""
    if a * a + b * b + c * c != 3 * d * d:
        raise DomainError(f"({a},{b},{c};{d}) does not solve the equation")
    if (m, n) == (0, 0):
        raise DomainError("(m, n) = (0, 0) is degenerate")
    if gcd(m, n) != 1:
        raise DomainError(f"(m, n) must be coprime, got ({m}, {n})")
    A = ((m - 2 * n) * d, m * a, m * b, m * c)
    B = ((2 * m - n) * d, n * a, n * b, n * c)
    t = is_equilateral(A, B)
    if t is None:
        raise InternalConsistencyError("triple triangle identity failed")
    if t.D != 4 * d * d * (m * m - m * n + n * n):
        raise InternalConsistencyError("triple triangle has wrong squared side")
    return t


# ---------------------------------------------------------------------------
# the orthogonal frame of the plane a*x + b*y + c*z = 0


@dataclass(frozen=True)
class PlaneFrame:
    """Integer frame of the 3-space plane a*x+b*y+c*z = 0 attached to a
    primitive solution (a, b, c; d).

    u and v are orthogonal plane vectors with |u|^2 = 2d^2 and
    |v|^2 = 6d^2; w = (u + v)/2 is integral.  r = u[2] and s = v[2]
    satisfy 2q = s^2 + 3r^2 with q = a^2 + b^2, and the sign of v is
    chosen so that s + c = 0 (mod 3) (which makes the tetrahedron
    completion formulas integral).
    """

    u: tuple[int, int, int]
    v: tuple[int, int, int]
    w: tuple[int, int, int]
    r: int
    s: int
    q: int
    d: int

    def __post_init__(self) -> None:
        u, v, w, d = self.u, self.v, self.w, self.d

        def d3(x, y):
            return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]

        if d3(u, u) != 2 * d * d or d3(v, v) != 6 * d * d or d3(u, v) != 0:
            raise InternalConsistencyError(f"frame norms wrong: {self}")
        if any(2 * w[i] != u[i] + v[i] for i in range(3)):
            raise InternalConsistencyError("w is not the integral midpoint")
        if 2 * self.q != self.s ** 2 + 3 * self.r ** 2:
            raise InternalConsistencyError("2q = s^2 + 3r^2 failed")


def _frame_candidates(a: int, b: int, c: int, d: int):
    """Yield integral (u, v) frames; r ascends from -rmax, s tries + first.

    The sign of v is flipped when needed so that s + c = 0 (mod 3);
    exactly one sign satisfies this because 3 never divides c for a
    primitive solution.
    """
    q = a * a + b * b
    rmax = isqrt(2 * q // 3)
    for r in range(-rmax, rmax + 1):
        s2 = 2 * q - 3 * r * r
        s0 = isqrt(s2)
        if s0 * s0 != s2:
            continue
        for s in ([s0, -s0] if s0 else [0]):
            nums = (
                -(r * a * c + d * b * s),
                d * a * s - b * c * r,
                3 * d * b * r - a * c * s,
                -(3 * d * a * r + b * c * s),
            )
            if any(x % q for x in nums):
                continue
            u = (nums[0] // q, nums[1] // q, r)
            v = (nums[2] // q, nums[3] // q, s)
            if any((u[i] + v[i]) % 2 for i in range(3)):
                continue
            if (v[2] + c) % 3 != 0:
                v = (-v[0], -v[1], -v[2])
            yield u, v


def plane_frame(a: int, b: int, c: int, d: int) -> PlaneFrame:
    """First integral frame for a primitive solution (a, b, c; d).

    Exhaustion of the bounded (r, s) search would contradict the frame
    existence theorem and raises NotFoundError as a bug signal.
    """
    if a * a + b * b + c * c != 3 * d * d:
        raise DomainError(f"({a},{b},{c};{d}) does not solve the equation")
    if gcd(gcd(abs(a), abs(b)), abs(c)) != 1:
        raise DomainError("solution must be primitive")
    if d < 1:
        raise DomainError("d must be positive")
    for u, v in _frame_candidates(a, b, c, d):
        w = tuple((u[i] + v[i]) // 2 for i in range(3))
        frame = PlaneFrame(u=u, v=v, w=w, r=u[2], s=v[2], q=a * a + b * b, d=d)
        # plane membership (holds identically; checked as a bug tripwire)
        if a * u[0] + b * u[1] + c * u[2] or a * v[0] + b * v[1] + c * v[2]:
            raise InternalConsistencyError("frame left the plane")
        return frame
    raise NotFoundError(f"no integral frame for ({a},{b},{c};{d})")


def triple_tetrahedron(a: int, b: int, c: int, d: int, m: int, n: int) -> Tetrahedron:
    """Regular tetrahedron on triple_triangle(a..d, m, n).

    The apex is R = ((m-n)d, x, y, z) with a x + b y + c z = (m+n)d^2
    and x^2+y^2+z^2 = d^2(3m^2-2mn+3n^2), built from a plane frame; if
    the preferred sign of v leaves non-integers the mirrored sign is
    tried, then further frames.  Exhaustion signals a bug.
    """
    t = triple_triangle(a, b, c, d, m, n)
    if gcd(gcd(abs(a), abs(b)), abs(c)) != 1:
        raise DomainError("solution must be primitive")
    coefs = (a, b, c)
    for u, v in _frame_candidates(a, b, c, d):
        for vv in (v, (-v[0], -v[1], -v[2])):
            xyz = []
            for i in range(3):
                num = (m + n) * (vv[i] + coefs[i])
                if num % 3:
                    break
                xyz.append((m - n) * u[i] + num // 3)
            else:
                x, y, z = xyz
                if a * x + b * y + c * z != (m + n) * d * d:
                    raise InternalConsistencyError("apex plane identity failed")
                if x * x + y * y + z * z != d * d * (3 * m * m - 2 * m * n + 3 * n * n):
                    raise InternalConsistencyError("apex norm identity failed")
                R = ((m - n) * d, x, y, z)
                return Tetrahedron(t.A, t.B, R)
    raise NotFoundError(
        f"no integral apex for ({a},{b},{c};{d}), (m,n)=({m},{n})"
    )


_PAIRINGS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def complete_point(A: Vec4) -> Tetrahedron:
    """Extend a point with even squared norm to a regular tetrahedron.

    Coordinates are paired by parity (even norm forces an even number
    of odd coordinates), the seed construction runs in paired order,
    and the result is un-permuted.  The first valid pairing in the
    fixed order (0,1)(2,3), (0,2)(1,3), (0,3)(1,2) is used.
    """
    A = tuple(A)
    if A == (0, 0, 0, 0):
        raise DomainError("cannot complete the origin")
    if norm2(A) % 2:
        raise DomainError(f"|A|^2 = {norm2(A)} is odd; no equilateral partner")
    for (i, j), (k, l) in _PAIRINGS:
        if (A[i] - A[j]) % 2 == 0 and (A[k] - A[l]) % 2 == 0:
            order = (i, j, k, l)
            break
    else:
        raise InternalConsistencyError("even norm without a parity pairing")
    y = [A[p] for p in order]
    a, b = (y[0] + y[1]) // 2, (y[0] - y[1]) // 2
    c, d = (y[2] + y[3]) // 2, (y[2] - y[3]) // 2
    tet = seed_tetrahedron(a, b, c, d)
    restore = [0, 0, 0, 0]
    for pos, p in enumerate(order):
        restore[p] = pos
    B = tuple(tet.B[restore[i]] for i in range(4))
    C = tuple(tet.C[restore[i]] for i in range(4))
    out = Tetrahedron(A, B, C)
    if out.A != A:
        raise InternalConsistencyError("completion moved the input point")
    return out


def generate_mn(t: Triangle, m: int, n: int) -> Triangle:
    """New triangle in the same plane: A' = mA - nB, B' = nA + (m-n)B;
    squared side scales by m^2 - mn + n^2."""
    if (m, n) == (0, 0):
        raise DomainError("(m, n) = (0, 0) is degenerate")
    A = tuple(m * t.A[i] - n * t.B[i] for i in range(4))
    B = tuple(n * t.A[i] + (m - n) * t.B[i] for i in range(4))
    out = is_equilateral(A, B)
    if out is None or out.D != t.D * (m * m - m * n + n * n):
        raise InternalConsistencyError("(m, n) action broke the triangle")
    return out


# ---------------------------------------------------------------------------
# canonical form


def _labelings(t: Triangle):
    A, B = t.A, t.B
    BA = vsub(B, A)
    yield A, B
    yield B, A
    yield vneg(A), BA
    yield BA, vneg(A)
    yield vneg(BA), vneg(B)
    yield vneg(B), vneg(BA)


def _lexmin_key(P: Vec4, Q: Vec4) -> tuple[int, ...]:
    """Lex-least (P', Q') concatenated 8-tuple over all 384 signed perms.

    Staged: P' is forced to sorted(-|p|); the leftover freedom (perms
    inside blocks of equal P'-values, free signs where P' = 0) is spent
    sorting the matching Q entries, which is exactly the lex optimum.
    """
    items = sorted((-abs(p), i) for i, p in enumerate(P))
    first = tuple(v for v, _ in items)
    second: list[int] = []
    i = 0
    while i < 4:
        j = i
        while j < 4 and items[j][0] == items[i][0]:
            j += 1
        block = []
        for v, idx in items[i:j]:
            if v == 0:
                block.append(-abs(Q[idx]))
            else:
                block.append(-Q[idx] if P[idx] > 0 else Q[idx])
        block.sort()
        second.extend(block)
        i = j
    return first + tuple(second)


def canonical_form(t: Triangle) -> Triangle:
    """Canonical representative of t's orbit under the 384 box symmetries,
    the three origin-vertex choices, and the (A, B) swap: the image whose
    concatenated (A, B) coordinate tuple is lexicographically least."""
    best = min(_lexmin_key(P, Q) for P, Q in _labelings(t))
    return Triangle(best[:4], best[4:], t.D)


def canonical_key(t: Triangle) -> tuple[int, ...]:
    """The canonical form as a flat 8-tuple (hash/dedup key)."""
    return min(_lexmin_key(P, Q) for P, Q in _labelings(t))
