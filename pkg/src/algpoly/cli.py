"""Command line driver.

Runs the requested computation goals on a Normaliz-style input file and
writes `<name>.out` (plus `<name>.aut` if automorphisms were requested),
or runs a benchmark family across arithmetic classes.

Exit codes: 0 success, 1 input error, 2 computation error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
import time
from itertools import permutations
from pathlib import Path

from . import io as nfio
from .combinat import automorphisms, f_vector
from .discrete import integer_hull, lattice_points, triangulate, volume
from .errors import AlgpolyError, InputSyntaxError
from .numfield import EmbeddingInterval, field_create, rational_field
from .polyhedron import PolyhedronModel, analyze

BENCH_CLASSES = ("int", "mpz", "rat", "sc2", "sc8", "p12")


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgumentError(message)


def _build_parser():
    p = _Parser(prog="algpoly", description=__doc__)
    p.add_argument("input", nargs="?", help="input file (<name>.in)")
    p.add_argument("--goals", help="comma separated goal overrides")
    p.add_argument("--workers", type=int, default=None, help="worker count")
    p.add_argument(
        "--order", choices=("input", "sorted"), default="input",
        help="generator insertion order",
    )
    p.add_argument(
        "--euclid-digits", type=int, default=12,
        help="significant digits of the Euclidean volume",
    )
    p.add_argument(
        "--project-order",
        help="comma separated coordinate permutation for project-and-lift",
    )
    p.add_argument("--bench", help="benchmark family, e.g. cyclic(8,14)")
    p.add_argument(
        "--class", dest="bench_class", default="all",
        help="arithmetic class: " + ", ".join(BENCH_CLASSES) + ", or all",
    )
    return p


def default_workers():
    cpus = os.cpu_count() or 1
    return min(8, cpus)


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    workers = args.workers if args.workers else default_workers()
    if workers < 1:
        print("error: --workers must be at least 1", file=sys.stderr)
        return 1
    try:
        if args.bench:
            return bench(args.bench, args.bench_class, order=args.order,
                         workers=workers)
        if not args.input:
            print("error: an input file or --bench is required", file=sys.stderr)
            return 1
        return run(args, workers)
    except (InputSyntaxError, FileNotFoundError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except AlgpolyError as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return 2


def run(args, workers):
    path = Path(args.input)
    text = path.read_text()
    spec = nfio.parse_input(text)
    goals = list(spec.goals)
    if args.goals:
        goals = []
        for token in args.goals.split(","):
            token = token.strip()
            if not token:
                continue
            goal = nfio.goal_from_token(token)
            if goal not in goals:
                goals.append(goal)
    project_order = None
    if args.project_order:
        project_order = [int(t) for t in args.project_order.split(",")]

    model = nfio.build_model(spec)
    analyzed = analyze(model, order=args.order, workers=workers)
    bundle = nfio.ResultBundle(
        analyzed=analyzed, goals=goals, euclid_digits=args.euclid_digits
    )
    if not analyzed.is_empty:
        _compute_goals(bundle, goals, args, project_order, workers)

    out_path = path.with_suffix(".out")
    out_path.write_text(nfio.write_results(bundle))
    print(f"wrote {out_path}")
    aut_texts = [
        nfio.write_automorphisms(bundle.automorphisms[kind])
        for goal, kind in nfio.AUT_GOALS.items()
        if kind in bundle.automorphisms
    ]
    if aut_texts:
        aut_path = path.with_suffix(".aut")
        aut_path.write_text("".join(aut_texts))
        print(f"wrote {aut_path}")
    return 0


def _compute_goals(bundle, goals, args, project_order, workers):
    # dependency order: hyperplanes (analyze) precede the face lattice and
    # automorphisms; the triangulation precedes the volume; lattice points
    # precede the integer hull
    analyzed = bundle.analyzed
    Goal = nfio.Goal
    if Goal.F_VECTOR in goals or Goal.FACE_LATTICE in goals:
        bundle.f_vector = f_vector(analyzed)
    if Goal.TRIANGULATION in goals:
        bundle.triangulation = triangulate(
            analyzed, order=args.order, workers=workers
        )
    if Goal.VOLUME in goals:
        bundle.volume = volume(analyzed, order=args.order, workers=workers)
    if Goal.LATTICE_POINTS in goals or Goal.INTEGER_HULL in goals:
        bundle.lattice_points = lattice_points(analyzed, project_order=project_order)
    if Goal.INTEGER_HULL in goals:
        bundle.integer_hull = integer_hull(
            analyzed, project_order=project_order, order=args.order, workers=workers
        )
    for goal, kind in nfio.AUT_GOALS.items():
        if goal in goals:
            bundle.automorphisms[kind] = automorphisms(analyzed, kind)


# ----------------------------------------------------------------------------
# benchmark mode

def bench(family_text, class_name, order="input", workers=1, out=None):
    out = out or sys.stdout
    family, params = _parse_family(family_text)
    classes = BENCH_CLASSES if class_name == "all" else (class_name,)
    for c in classes:
        if c not in BENCH_CLASSES:
            raise InputSyntaxError(f"unknown arithmetic class {c!r}")
    rows = []
    reference = None
    for cls in classes:
        t0 = time.perf_counter()
        counts = bench_instance(family, params, cls, order=order, workers=workers)
        elapsed = time.perf_counter() - t0
        rows.append((cls, elapsed, counts))
        if reference is None:
            reference = counts
        elif counts != reference:
            print(
                f"warning: class {cls} changed combinatorial counts {counts} "
                f"!= {reference}",
                file=sys.stderr,
            )
    print(f"benchmark {family}({', '.join(str(p) for p in params)})", file=out)
    print(f"{'class':<8}{'time[s]':>10}  {'ext rays':>8}  {'supp hyps':>9}  f-vector", file=out)
    for cls, elapsed, (ext, hyps, fvec) in rows:
        fstr = " ".join(str(x) for x in fvec)
        print(f"{cls:<8}{elapsed:>10.3f}  {ext:>8}  {hyps:>9}  {fstr}", file=out)
    print(
        "note: int and mpz coincide in this implementation "
        "(native arbitrary-precision integers)",
        file=out,
    )
    return 0


def _parse_family(text):
    m = re.fullmatch(r"\s*([a-z-]+)\s*\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)\s*", text)
    if not m:
        raise InputSyntaxError(f"cannot parse benchmark family {text!r}")
    family = m.group(1)
    params = tuple(int(t) for t in re.split(r"\s*,\s*", m.group(2)))
    expected = {"cyclic": 2, "scaled-cube": 1, "order-poly": 1}
    if family not in expected:
        raise InputSyntaxError(f"unknown benchmark family {family!r}")
    if len(params) != expected[family]:
        raise InputSyntaxError(
            f"family {family} takes {expected[family]} parameter(s)"
        )
    return family, params


def bench_field(cls):
    if cls in ("int", "mpz"):
        return rational_field()
    if cls in ("rat", "sc2"):
        return field_create([-5, 0, 1], EmbeddingInterval(2 - 1, 2 + 1))
    if cls == "sc8":
        return field_create([-5, 0, 0, 0, 0, 0, 0, 0, 1], EmbeddingInterval(1, 2))
    if cls == "p12":
        return field_create(
            [-5, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1], EmbeddingInterval(1, 2)
        )
    raise InputSyntaxError(f"unknown arithmetic class {cls!r}")


def bench_vertices(family, params):
    """Integer vertex lists of the benchmark families."""
    if family == "cyclic":
        d, n = params
        return [tuple(t ** k for k in range(1, d + 1)) for t in range(1, n + 1)], d
    if family == "scaled-cube":
        (d,) = params
        verts = []
        for mask in range(1 << d):
            verts.append(tuple((mask >> i) & 1 for i in range(d)))
        return verts, d
    if family == "order-poly":
        (k,) = params
        pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
        verts = []
        for perm in permutations(range(k)):
            position = {v: idx for idx, v in enumerate(perm)}
            verts.append(
                tuple(1 if position[i] < position[j] else 0 for i, j in pairs)
            )
        return verts, len(pairs)
    raise InputSyntaxError(f"unknown benchmark family {family!r}")


def scale_columns(vertices, field):
    """Scale coordinate j by gen**(j mod degree); preserves the combinatorics."""
    a = field.gen()
    scales = [a ** (j % field.degree) for j in range(len(vertices[0]))]
    return [
        tuple(x * s for x, s in zip(row, scales))
        for row in vertices
    ]


def bench_instance(family, params, cls, order="input", workers=1):
    """(extreme ray count, facet count, f-vector) of one class run."""
    int_vertices, dim = bench_vertices(family, params)
    field = bench_field(cls)
    vertices = [
        tuple(field.from_rational(x) for x in row) for row in int_vertices
    ]
    if cls in ("sc2", "sc8", "p12"):
        vertices = scale_columns(vertices, field)
    analyzed = analyze(
        PolyhedronModel(field, dim, vertices=vertices), order=order, workers=workers
    )
    fvec = f_vector(analyzed)
    return (
        len(analyzed.vertices) + len(analyzed.rays),
        len(analyzed.support_hyperplanes),
        fvec,
    )


if __name__ == "__main__":
    sys.exit(main())
