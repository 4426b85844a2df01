"""Command-line front end: one verb per library capability.

Every subcommand writes a single OutputRecord to stdout.  JSON (the
default and the golden-file format) serializes the record losslessly
with deterministic field order; csv/table render the record's tabular
part.  Identical argv yields byte-identical output, independent of
--threads.

Exit codes: 0 success, 2 domain error, 3 not found, 4 internal
consistency error, 5 memory cap exceeded, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from . import (
    census,
    complete_point,
    conjecture_scan,
    construct_triangle,
    count_primitive,
    count_side_orbits,
    ehrhart,
    enumerate_triangles,
    fundamental_area_squared,
    gram_identity_check,
    interior_count,
    is_equilateral,
    is_irreducible,
    is_minimal,
    minimal_scale,
    orthogonal_vectors,
    plane_from_reps,
    plane_lattice_basis,
    plane_quadratic_form,
    pluckers_from_triangle,
    primitive_solutions,
    reduce_pluckers,
    rep_vectors,
    representation_pair,
    seed_coverage,
    seed_tetrahedron,
    seed_triangle,
    solution_from_seed,
    tetrahedron_completions,
    triple_tetrahedron,
    triple_triangle,
    two_one_brute_force,
    two_one_solutions,
)
from .diophantine import QuadrupleSeed
from .errors import (
    DomainError,
    InternalConsistencyError,
    MemoryCapExceeded,
    NotFoundError,
    check_memory_cap,
)
from .lattice import Triangle, canonical_form, dot

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_NOT_FOUND = 3
EXIT_INTERNAL = 4
EXIT_MEMORY = 5
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 64 on usage errors
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _vec4(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected 4 comma-separated integers: {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _vec3(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected 3 comma-separated integers: {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 2 comma-separated integers: {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _frac(x: Fraction) -> str:
    return str(x)


def _tri_json(t: Triangle) -> dict[str, Any]:
    return {"A": list(t.A), "B": list(t.B), "D": t.D}


def _tri_str(t: Triangle) -> str:
    a = ",".join(str(x) for x in t.A)
    b = ",".join(str(x) for x in t.B)
    return f"[{a}]/[{b}]"


def _vec_str(v) -> str:
    return "[" + ",".join(str(x) for x in v) + "]"


@dataclass
class Output:
    """One subcommand's record plus its tabular rendering."""

    command: str
    inputs: dict[str, Any]
    results: dict[str, Any]
    headers: tuple[str, ...]
    rows: list[tuple]


def _emit(out: Output, fmt: str) -> None:
    if fmt == "json":
        record = {
            "schema_version": SCHEMA_VERSION,
            "command": out.command,
            "inputs": out.inputs,
            "results": out.results,
        }
        sys.stdout.write(json.dumps(record) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(out.headers)
        for row in out.rows:
            writer.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:  # table
        cells = [tuple(str(c) for c in row) for row in out.rows]
        widths = [len(h) for h in out.headers]
        for row in cells:
            for i, c in enumerate(row):
                widths[i] = max(widths[i], len(c))
        line = "  ".join(h.ljust(widths[i]) for i, h in enumerate(out.headers))
        sys.stdout.write(line.rstrip() + "\n")
        for row in cells:
            line = "  ".join(c.ljust(widths[i]) for i, c in enumerate(row))
            sys.stdout.write(line.rstrip() + "\n")


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_solutions(args) -> Output:
    sols = primitive_solutions(args.d)
    results = {
        "d": args.d,
        "count": len(sols),
        "solutions": [[s.a, s.b, s.c] for s in sols],
    }
    rows = [(s.a, s.b, s.c, s.d) for s in sols]
    return Output("solutions", {"d": args.d}, results, ("a", "b", "c", "d"), rows)


def _cmd_count(args) -> Output:
    ds = [args.d] if args.d is not None else list(range(1, args.max_d + 1, 2))
    breakdowns = [count_primitive(d) for d in ds]
    results = {
        "counts": [
            {"d": b.d, "lam": _frac(b.lam), "gamma2": b.gamma2, "count": b.count}
            for b in breakdowns
        ]
    }
    inputs = {"d": args.d} if args.d is not None else {"max_d": args.max_d}
    rows = [(b.d, _frac(b.lam), b.gamma2, b.count) for b in breakdowns]
    return Output("count", inputs, results, ("d", "lam", "gamma2", "count"), rows)


def _cmd_twoone(args) -> Output:
    if args.brute_d is not None:
        sols = two_one_brute_force(args.brute_d)
        inputs = {"brute_d": args.brute_d}
    else:
        if args.k is None or args.l is None:
            raise DomainError("either --k and --l or --brute-d is required")
        sols = two_one_solutions(args.k, args.l)
        inputs = {"k": args.k, "l": args.l}
    results = {
        "solutions": [
            {"a": s.a, "c": s.c, "d": s.d, "branch": s.branch, "primitive": s.primitive}
            for s in sols
        ]
    }
    rows = [(s.a, s.c, s.d, s.branch or "", s.primitive) for s in sols]
    return Output("twoone", inputs, results, ("a", "c", "d", "branch", "primitive"), rows)


def _cmd_seed(args) -> Output:
    x, y, z, t = args.seed
    sol = solution_from_seed(QuadrupleSeed(x, y, z, t))
    results = {"a": sol.a, "b": sol.b, "c": sol.c, "d": sol.d, "primitive": sol.primitive}
    rows = [(sol.a, sol.b, sol.c, sol.d, sol.primitive)]
    return Output(
        "seed", {"seed": list(args.seed)}, results, ("a", "b", "c", "d", "primitive"), rows
    )


def _family_triangle(args) -> Triangle:
    if args.seed is not None:
        return seed_triangle(*args.seed)
    if args.solution is None or args.mn is None:
        raise DomainError("need --seed, or --solution together with --mn")
    a, b, c, d = args.solution
    m, n = args.mn
    return triple_triangle(a, b, c, d, m, n)


def _cmd_triangle(args) -> Output:
    t = _family_triangle(args)
    can = canonical_form(t)
    results = {
        "triangle": _tri_json(t),
        "L": t.L,
        "irreducible": is_irreducible(t),
        "canonical": _tri_json(can),
    }
    inputs: dict[str, Any] = {}
    if args.seed is not None:
        inputs["seed"] = list(args.seed)
    else:
        inputs["solution"] = list(args.solution)
        inputs["mn"] = list(args.mn)
    rows = [(_tri_str(t), t.D, t.L, is_irreducible(t), _tri_str(can))]
    return Output(
        "triangle", inputs, results, ("triangle", "D", "L", "irreducible", "canonical"), rows
    )


def _cmd_complete(args) -> Output:
    inputs: dict[str, Any] = {}
    if args.point is not None:
        tet = complete_point(args.point)
        inputs["point"] = list(args.point)
    elif args.seed is not None:
        tet = seed_tetrahedron(*args.seed)
        inputs["seed"] = list(args.seed)
    else:
        if args.solution is None or args.mn is None:
            raise DomainError("need --point, --seed, or --solution with --mn")
        a, b, c, d = args.solution
        m, n = args.mn
        tet = triple_tetrahedron(a, b, c, d, m, n)
        inputs["solution"] = list(args.solution)
        inputs["mn"] = list(args.mn)
    results = {
        "A": list(tet.A),
        "B": list(tet.B),
        "C": list(tet.C),
        "D": tet.D,
    }
    rows = [(_vec_str(tet.A), _vec_str(tet.B), _vec_str(tet.C), tet.D)]
    return Output("complete", inputs, results, ("A", "B", "C", "D"), rows)


def _cmd_minors(args) -> Output:
    t = is_equilateral(args.A, args.B)
    if t is None:
        raise DomainError(f"{args.A} and {args.B} do not span an equilateral triangle")
    raw = pluckers_from_triangle(t)
    red = reduce_pluckers(raw)
    alpha, beta = rep_vectors(red)
    v, w = orthogonal_vectors(red) if red.p23 != 0 else (None, None)
    gram_ok = gram_identity_check(red) if red.p23 != 0 else None
    gram_det = None
    if v is not None:
        gram_det = dot(v, v) * dot(w, w) - dot(v, w) ** 2
    results = {
        "D": t.D,
        "L": t.L,
        "raw": list(raw.minors()),
        "reduced": {"minors": list(red.minors()), "k": red.k, "ell": red.ell},
        "alpha": list(alpha),
        "beta": list(beta),
        "normals": None if v is None else {"v": list(v), "w": list(w)},
        "gram_det": gram_det,
        "gram_identity": gram_ok,
        "irreducible": is_irreducible(t),
        "minimal": is_minimal(t),
        "canonical": _tri_json(canonical_form(t)),
    }
    rows = [(t.D, t.L, red.k, red.ell, _vec_str(alpha), _vec_str(beta), is_minimal(t))]
    return Output(
        "minors",
        {"A": list(args.A), "B": list(args.B)},
        results,
        ("D", "L", "k", "ell", "alpha", "beta", "minimal"),
        rows,
    )


def _cmd_construct(args) -> Output:
    pair = representation_pair(args.rep1, args.rep2)
    if args.k is not None and args.k != pair.k:
        raise DomainError(f"--k {args.k} does not match the representations (k={pair.k})")
    plane = plane_from_reps(pair)
    qf = plane_quadratic_form(plane)
    ell = args.ell if args.ell is not None else minimal_scale(qf)
    v, w = (args.vw if args.vw is not None else (None, None))
    tri, vw, vpwp = construct_triangle(plane, ell, v, w)
    pl = plane_lattice_basis(plane)
    nv, nw = orthogonal_vectors(plane.pluckers)
    gram_det = dot(nv, nv) * dot(nw, nw) - dot(nv, nw) ** 2
    results = {
        "k": pair.k,
        "rep1": list(pair.rep1),
        "rep2": list(pair.rep2),
        "minors": list(plane.pluckers.minors()),
        "rows": [list(r) for r in plane.rows],
        "qf": {"qa": qf.qa, "qb": qf.qb, "qc": qf.qc, "v0": qf.v0, "w0": qf.w0, "disc": qf.disc},
        "ell": ell,
        "vw": list(vw),
        "vpwp": list(vpwp),
        "triangle": _tri_json(tri),
        "canonical": _tri_json(canonical_form(tri)),
        "basis": [list(pl.b1), list(pl.b2)],
        "area_squared": fundamental_area_squared(pl),
        "gram_det_normals": gram_det,
    }
    inputs = {"k": args.k, "rep1": list(args.rep1), "rep2": list(args.rep2)}
    if args.ell is not None:
        inputs["ell"] = args.ell
    if args.vw is not None:
        inputs["vw"] = list(args.vw)
    rows = [
        (
            pair.k,
            ell,
            _vec_str(vw),
            _tri_str(tri),
            _vec_str(pl.b1),
            _vec_str(pl.b2),
            fundamental_area_squared(pl),
        )
    ]
    return Output(
        "construct",
        inputs,
        results,
        ("k", "ell", "vw", "triangle", "b1", "b2", "area_squared"),
        rows,
    )


def _cmd_ehrhart(args) -> Output:
    t = is_equilateral(args.A, args.B)
    if t is None:
        raise DomainError(f"{args.A} and {args.B} do not span an equilateral triangle")
    poly = ehrhart(t)
    tmax = args.max_dilation
    closed = [int(poly(s)) for s in range(tmax + 1)]
    interior = [interior_count(t, s) for s in range(1, min(tmax, 3) + 1)]
    results = {
        "poly": {"c2": _frac(poly.c2), "c1": _frac(poly.c1), "c0": _frac(poly.c0)},
        "closed_counts": closed,
        "interior_counts": interior,
        "boundary": int(2 * poly.c1),
    }
    rows = [(_frac(poly.c2), _frac(poly.c1), _frac(poly.c0), closed[1], interior[0])]
    return Output(
        "ehrhart",
        {"A": list(args.A), "B": list(args.B), "max_dilation": tmax},
        results,
        ("c2", "c1", "c0", "closed_t1", "interior_t1"),
        rows,
    )


def _cmd_census(args) -> Output:
    rows_data = census(args.max_L, threads=args.threads)
    results = {
        "max_L": args.max_L,
        "rows": [
            {
                "L": r.L,
                "count": r.count,
                "kvalues": list(r.kvalues),
                "triangles": [_tri_json(t) for t in r.triangles],
            }
            for r in rows_data
        ],
    }
    rows = [
        (
            r.L,
            r.count,
            ";".join(str(k) for k in r.kvalues),
            ";".join(_tri_str(t) for t in r.triangles),
        )
        for r in rows_data
    ]
    return Output(
        "census",
        {"max_L": args.max_L},
        results,
        ("L", "count", "kvalues", "triangles"),
        rows,
    )


def _cmd_orbits(args) -> Output:
    tris = enumerate_triangles(args.L, threads=args.threads)
    minimal = [t for t in tris if is_minimal(t)]
    results = {
        "L": args.L,
        "count_all": len(tris),
        "count_minimal": len(minimal),
        "representatives": [_tri_json(t) for t in tris],
    }
    rows = [(args.L, len(tris), len(minimal))]
    return Output(
        "orbits",
        {"L": args.L},
        results,
        ("L", "count_all", "count_minimal"),
        rows,
    )


def _cmd_conjectures(args) -> Output:
    if args.max_L is None and args.coverage_max_d is None:
        raise DomainError("need --max-L and/or --coverage-max-d")
    results: dict[str, Any] = {}
    rows: list[tuple] = []
    inputs: dict[str, Any] = {}
    if args.max_L is not None:
        report = conjecture_scan(args.max_L, threads=args.threads)
        results["tetrahedron"] = {
            "max_L": args.max_L,
            "tested": report.tested,
            "witnesses": report.witnesses,
            "counterexamples": [_tri_json(t) for t in report.counterexamples],
        }
        inputs["max_L"] = args.max_L
        rows.append(("tetrahedron", report.tested, report.witnesses, len(report.counterexamples)))
    if args.coverage_max_d is not None:
        cov = seed_coverage(args.coverage_max_d, margin=args.coverage_margin)
        results["coverage"] = {
            "max_d": args.coverage_max_d,
            "rows": [
                {"d": r.d, "covered": r.covered, "total": r.total,
                 "missing": [list(m) for m in r.missing]}
                for r in cov
            ],
            "all_complete": all(r.complete for r in cov),
        }
        inputs["coverage_max_d"] = args.coverage_max_d
        covered = sum(r.covered for r in cov)
        total = sum(r.total for r in cov)
        rows.append(("coverage", total, covered, total - covered))
    return Output(
        "conjectures",
        inputs,
        results,
        ("scan", "tested", "hit", "missed"),
        rows,
    )


# ---------------------------------------------------------------------------
# parser and dispatch


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "csv", "table"), default="json",
        help="output format (default: json)",
    )
    common.add_argument(
        "--threads", type=int, default=1,
        help="worker processes for enumeration commands (default: 1)",
    )

    parser = _Parser(prog="tess4", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solutions", parents=[common], help="primitive solutions of a^2+b^2+c^2=3d^2")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=_cmd_solutions)

    p = sub.add_parser("count", parents=[common], help="primitive-solution counting formula")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--d", type=int)
    g.add_argument("--max-d", type=int, dest="max_d")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("twoone", parents=[common], help="solutions of 2a^2+c^2=3d^2")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--brute-d", type=int, dest="brute_d")
    p.set_defaults(handler=_cmd_twoone)

    p = sub.add_parser("seed", parents=[common], help="quadratic generator from a 4-integer seed")
    p.add_argument("--seed", type=_vec4, required=True)
    p.set_defaults(handler=_cmd_seed)

    p = sub.add_parser("triangle", parents=[common], help="constructive triangle families")
    p.add_argument("--seed", type=_vec4)
    p.add_argument("--solution", type=_vec4, help="a,b,c,d solving a^2+b^2+c^2=3d^2")
    p.add_argument("--mn", type=_pair)
    p.set_defaults(handler=_cmd_triangle)

    p = sub.add_parser("complete", parents=[common], help="regular tetrahedron completions")
    p.add_argument("--seed", type=_vec4)
    p.add_argument("--solution", type=_vec4)
    p.add_argument("--mn", type=_pair)
    p.add_argument("--point", type=_vec4)
    p.set_defaults(handler=_cmd_complete)

    p = sub.add_parser("minors", parents=[common], help="signed-minor system of a triangle")
    p.add_argument("--A", type=_vec4, required=True)
    p.add_argument("--B", type=_vec4, required=True)
    p.set_defaults(handler=_cmd_minors)

    p = sub.add_parser("construct", parents=[common], help="triangle from two representations of 3k^2")
    p.add_argument("--k", type=int)
    p.add_argument("--rep1", type=_vec3, required=True)
    p.add_argument("--rep2", type=_vec3, required=True)
    p.add_argument("--ell", type=int)
    p.add_argument("--vw", type=_pair)
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("ehrhart", parents=[common], help="lattice-point counting polynomial")
    p.add_argument("--A", type=_vec4, required=True)
    p.add_argument("--B", type=_vec4, required=True)
    p.add_argument("--max-dilation", type=int, default=5, dest="max_dilation")
    p.set_defaults(handler=_cmd_ehrhart)

    p = sub.add_parser("census", parents=[common], help="minimal-triangle census")
    p.add_argument("--max-L", type=int, required=True, dest="max_L")
    p.set_defaults(handler=_cmd_census)

    p = sub.add_parser("orbits", parents=[common], help="orbit count for one squared side")
    p.add_argument("--L", type=int, required=True)
    p.set_defaults(handler=_cmd_orbits)

    p = sub.add_parser("conjectures", parents=[common], help="conjecture scans")
    p.add_argument("--max-L", type=int, dest="max_L")
    p.add_argument("--coverage-max-d", type=int, dest="coverage_max_d")
    p.add_argument("--coverage-margin", type=int, default=1, dest="coverage_margin")
    p.set_defaults(handler=_cmd_conjectures)

    return parser


def run(argv: list[str]) -> int:
    """Execute one CLI invocation; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        check_memory_cap()
        out = args.handler(args)
        _emit(out, args.format)
    except DomainError as exc:
        print(f"tess4: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NotFoundError as exc:
        print(f"tess4: not found: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except InternalConsistencyError as exc:
        print(f"tess4: internal consistency error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except MemoryCapExceeded as exc:
        print(f"tess4: memory cap exceeded: {exc}", file=sys.stderr)
        return EXIT_MEMORY
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
