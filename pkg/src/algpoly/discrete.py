"""Triangulation, volume, lattice points, and integer hull of polytopes.

The volume of a full-dimensional polytope is the sum of the absolute
determinants of the simplices of a placing triangulation of the cone over
it, with each generator row rescaled to dehomogenized form; that sum is the
lattice normalized volume, an exact field element, and the Euclidean volume
is its value divided by d factorial.

Lattice points are enumerated by project-and-lift: the support hyperplane
system is projected one coordinate at a time (last coordinate first) by
Fourier-Motzkin elimination of the variable, and integer candidates are
lifted back level by level inside exact bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from . import linalg
from .dualize import ConeInput, dualize, normalize
from .errors import NotAPolytope, NotFullDimensional
from .numfield import sig_decimal_str
from .polyhedron import PolyhedronModel, analyze


@dataclass
class Triangulation:
    """Placing triangulation of the cone over a polytope.

    Each simplex is a tuple of vertex indices; its determinant is taken on
    the dehomogenized rows (last coordinate scaled to 1), so the absolute
    determinants add up to the lattice normalized volume.
    """

    simplices: list  # index tuples into the analyzed vertex list
    determinants: list  # NFElem per simplex

    def __len__(self):
        return len(self.simplices)


@dataclass
class VolumeResult:
    normalized: object  # NFElem: lattice normalized volume
    dim: int

    def euclidean_fraction(self, digits=14):
        value = self.normalized / factorial(self.dim)
        return value.approx(digits)

    def euclidean_str(self, sig=12):
        return sig_decimal_str(self.euclidean_fraction(sig + 4), sig)


@dataclass
class LatticePointSet:
    points: list  # integer tuples in homogenized coordinates, last entry 1

    def __len__(self):
        return len(self.points)

    def dehomogenized(self):
        return [p[:-1] for p in self.points]


def triangulate(analyzed, order="input", workers=1):
    """Placing triangulation of the homogenized vertex cone, insertion order."""
    if not analyzed.is_polytope:
        raise NotAPolytope("triangulation requires a bounded feasible polyhedron")
    if analyzed.affine_dim != analyzed.dim:
        raise NotFullDimensional(
            f"polytope has affine dimension {analyzed.affine_dim} "
            f"in {analyzed.dim}-space"
        )
    cone = ConeInput(
        analyzed.field, analyzed.dim + 1, generators=list(analyzed.vertices)
    )
    result = dualize(cone, track_triangulation=True, order=order, workers=workers)
    simplices = []
    determinants = []
    for simplex, raw_det in result.triangulation:
        scale = None
        for i in simplex:
            t = result.generators[i][-1]
            scale = t if scale is None else scale * t
        simplices.append(simplex)
        determinants.append(raw_det / scale)
    return Triangulation(simplices=simplices, determinants=determinants)


def volume(analyzed, order="input", workers=1):
    """Lattice normalized volume (exact) of a full-dimensional polytope."""
    tri = triangulate(analyzed, order=order, workers=workers)
    field = analyzed.field
    total = field.zero
    for d in tri.determinants:
        total = total + abs(d)
    return VolumeResult(normalized=total, dim=analyzed.dim)


# ----------------------------------------------------------------------------
# project-and-lift

def _project_once(rows, var, field):
    """Eliminate variable `var` from inequality rows (l, c): l.x + c >= 0."""
    kept = []
    pos, neg = [], []
    for row in rows:
        s = row[var].sign()
        if s == 0:
            kept.append(row[:var] + row[var + 1 :])
        elif s > 0:
            pos.append(row)
        else:
            neg.append(row)
    seen = set()
    out = []
    for row in kept:
        if any(x.sign() != 0 for x in row):
            v = normalize(row, field)
            if v not in seen:
                seen.add(v)
                out.append(v)
    for p in pos:
        for n in neg:
            comb = tuple(
                p[var] * n[k] - n[var] * p[k]
                for k in range(len(p))
                if k != var
            )
            if all(x.sign() == 0 for x in comb):
                continue
            v = normalize(comb, field)
            if v not in seen:
                seen.add(v)
                out.append(v)
    return out


def lattice_points(analyzed, project_order=None):
    """All integer points of a polytope, by project-and-lift.

    `project_order` optionally permutes the coordinates before projection;
    the default eliminates coordinates in reverse index order.
    """
    if not analyzed.is_polytope:
        raise NotAPolytope("lattice point enumeration requires a polytope")
    field = analyzed.field
    d = analyzed.dim
    if d == 0:
        return LatticePointSet(points=[(1,)])
    perm = list(project_order) if project_order is not None else list(range(d))
    if sorted(perm) != list(range(d)):
        raise ValueError(f"project order {perm!r} is not a permutation of 0..{d-1}")

    # hyperplane rows are (l, c) with l.x + c >= 0 for dehomogenized points;
    # apply the coordinate permutation to the l part
    constraints = list(analyzed.support_hyperplanes)
    if analyzed.affine_dim < d:
        # pin lower-dimensional polytopes to their affine hull
        for eq in linalg.null_space(analyzed.generator_rows()):
            constraints.append(eq)
            constraints.append(tuple(-x for x in eq))
    rows = []
    for h in constraints:
        rows.append(tuple(h[p] for p in perm) + (h[-1],))

    systems = {d: rows}
    for level in range(d, 1, -1):
        systems[level - 1] = _project_once(systems[level], level - 1, field)

    points = []
    prefix = []

    def lift(level):
        rows_here = systems[level]
        lower = None
        upper = None
        for row in rows_here:
            b = row[level - 1]
            s = b.sign()
            if s == 0:
                continue
            # value of the fixed part: constants + already chosen coordinates
            acc = row[-1]
            for k in range(level - 1):
                if prefix[k]:
                    acc = acc + row[k] * prefix[k]
            bound = -(acc / b)
            if s > 0:  # b*x >= -acc
                if lower is None or bound > lower:
                    lower = bound
            else:
                if upper is None or bound < upper:
                    upper = bound
        if lower is None or upper is None:
            raise NotAPolytope(
                f"projected system unbounded in coordinate {level - 1}"
            )
        lo = -((-lower).floor())  # ceil
        hi = upper.floor()
        for value in range(lo, hi + 1):
            prefix.append(value)
            if level == d:
                points.append(tuple(prefix))
            else:
                lift(level + 1)
            prefix.pop()

    lift(1)

    inv_perm = [0] * d
    for i, p in enumerate(perm):
        inv_perm[p] = i
    out = sorted(tuple(pt[inv_perm[k]] for k in range(d)) + (1,) for pt in points)
    return LatticePointSet(points=out)


def integer_hull(analyzed, project_order=None, order="input", workers=1):
    """Convex hull of the lattice points, as a new analyzed polyhedron."""
    pts = lattice_points(analyzed, project_order=project_order)
    field = analyzed.field
    vertices = [
        tuple(field.from_rational(c) for c in p[:-1]) for p in pts.points
    ]
    model = PolyhedronModel(field, analyzed.dim, vertices=vertices)
    return analyze(model, order=order, workers=workers)
