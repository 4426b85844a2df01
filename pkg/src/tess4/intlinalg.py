"""Small exact integer linear algebra: kernels, Hermite forms, solving.

Everything here works on tiny matrices (2x4 in practice) with exact
Python integers, so the algorithms are plain Euclidean column/row
reduction with no size tricks.  `hnf_rows` output is the canonical
basis of a row lattice, which makes lattice equality and unimodular
equivalence a simple comparison.
"""

from __future__ import annotations

__all__ = ["kernel_basis", "hnf_rows", "lattices_equal", "solve_integer"]

Matrix = list[list[int]]


def _column_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Column-reduce a copy of `rows`; return (cols, transform_cols).

    Column operations are unimodular and mirrored on an identity, so
    `transform_cols[j]` always expresses reduced column j in terms of
    original columns.  Reduced columns are in echelon order: for each
    matrix row the pivot column (if any) is the next unused column.
    """
    m = len(rows)
    n = len(rows[0])
    cols = [[rows[i][j] for i in range(m)] for j in range(n)]
    tcols = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    col = 0
    for row in range(m):
        piv = None
        for j in range(col, n):
            if cols[j][row] != 0:
                piv = j
                break
        if piv is None:
            continue
        cols[col], cols[piv] = cols[piv], cols[col]
        tcols[col], tcols[piv] = tcols[piv], tcols[col]
        for j in range(col + 1, n):
            # Euclidean elimination of cols[j][row] against the pivot.
            while cols[j][row]:
                q = cols[j][row] // cols[col][row]
                if q:
                    for i in range(m):
                        cols[j][i] -= q * cols[col][i]
                    for i in range(n):
                        tcols[j][i] -= q * tcols[col][i]
                if cols[j][row]:
                    cols[col], cols[j] = cols[j], cols[col]
                    tcols[col], tcols[j] = tcols[j], tcols[col]
        col += 1
    return cols, tcols


def hnf_rows(vecs: list[tuple[int, ...]] | list[list[int]]) -> list[tuple[int, ...]]:
    """Row Hermite normal form of the lattice spanned by `vecs`.

    Pivots are positive, entries above a pivot are reduced into
    [0, pivot); the result is the canonical basis of the row lattice.
    """
    rows = [list(v) for v in vecs if any(v)]
    if not rows:
        return []
    n = len(rows[0])
    res: list[list[int]] = []
    col = 0
    while rows and col < n:
        live = [r for r in rows if r[col] != 0]
        if not live:
            col += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            r0 = live[0]
            for r in live[1:]:
                q = r[col] // r0[col]
                for i in range(n):
                    r[i] -= q * r0[i]
            live = [r for r in rows if r[col] != 0]
        piv = live[0]
        if piv[col] < 0:
            for i in range(n):
                piv[i] = -piv[i]
        res.append(piv)
        rows = [r for r in rows if r is not piv and any(r)]
        col += 1
    # reduce entries above each pivot
    for i in range(len(res)):
        for j in range(i + 1, len(res)):
            pcol = next(c for c in range(n) if res[j][c] != 0)
            q = res[i][pcol] // res[j][pcol]
            if q:
                for c in range(n):
                    res[i][c] -= q * res[j][c]
    return [tuple(r) for r in res]


def lattices_equal(basis1, basis2) -> bool:
    """True iff the two vector lists span the same integer lattice."""
    return hnf_rows(list(basis1)) == hnf_rows(list(basis2))


def kernel_basis(rows) -> list[tuple[int, ...]]:
    """HNF basis of the integer kernel {x : rows @ x = 0}."""
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0])
    cols, tcols = _column_echelon(rows)
    ker = [tuple(tcols[j]) for j in range(n) if all(cols[j][i] == 0 for i in range(m))]
    return hnf_rows(ker)


def solve_integer(rows, rhs):
    """Integer solutions of rows @ x = rhs.

    Returns (particular_solution, kernel_basis) or None when no integer
    solution exists.  The kernel basis is in HNF.
    """
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0])
    cols, tcols = _column_echelon(rows)
    y = [0] * n
    pc = 0
    for i in range(m):
        if pc < n and cols[pc][i] != 0:
            acc = sum(cols[j][i] * y[j] for j in range(pc))
            num = rhs[i] - acc
            if num % cols[pc][i]:
                return None
            y[pc] = num // cols[pc][i]
            pc += 1
        else:
            acc = sum(cols[j][i] * y[j] for j in range(n))
            if acc != rhs[i]:
                return None
    x = tuple(sum(tcols[j][i] * y[j] for j in range(n)) for i in range(n))
    ker = [tuple(tcols[j]) for j in range(n) if all(cols[j][i] == 0 for i in range(m))]
    return x, hnf_rows(ker)
