import random
from fractions import Fraction

import pytest

from algpoly import PolyhedronModel, analyze, integer_hull, lattice_points, triangulate, volume
from algpoly.errors import NotAPolytope, NotFullDimensional

from oracles import (
    box_scan_lattice,
    monte_carlo_volume,
    polygon_normalized_volume,
    random_polytope,
)


class TestTriangulate:
    def test_simplex_single(self, qq):
        q = qq.from_rational
        pts = [(q(0), q(0), q(0)), (q(1), q(0), q(0)), (q(0), q(1), q(0)), (q(0), q(0), q(1))]
        tri = triangulate(analyze(PolyhedronModel(qq, 3, vertices=pts)))
        assert len(tri) == 1
        assert abs(tri.determinants[0]) == qq.one

    def test_unit_square_two_triangles(self, unit_square):
        tri = triangulate(unit_square)
        assert len(tri) == 2
        assert all(not d.is_zero() for d in tri.determinants)

    def test_icosahedron_total(self, icosahedron, qsqrt5):
        tri = triangulate(icosahedron)
        a = qsqrt5.gen()
        total = qsqrt5.zero
        for d in tri.determinants:
            total = total + abs(d)
        assert total == (5 * a + 15) / 2

    def test_not_full_dimensional(self, qq):
        q = qq.from_rational
        flat = analyze(
            PolyhedronModel(qq, 3, vertices=[(q(0), q(0), q(0)), (q(1), q(0), q(0)), (q(0), q(1), q(0))])
        )
        with pytest.raises(NotFullDimensional):
            triangulate(flat)


class TestVolume:
    def test_unit_cube(self, unit_cube):
        v = volume(unit_cube)
        assert v.normalized == 6
        assert v.euclidean_str(10) == "1.000000000"

    def test_icosahedron(self, icosahedron, qsqrt5):
        v = volume(icosahedron)
        a = qsqrt5.gen()
        assert v.normalized == (5 * a + 15) / 2
        assert v.euclidean_str(12) == "2.18169499062"
        approx = v.euclidean_fraction(14)
        assert abs(approx - Fraction("2.18169499062")) < Fraction(1, 10 ** 9)

    def test_square_side_a(self, qsqrt5):
        a = qsqrt5.gen()
        z = qsqrt5.zero
        square = analyze(
            PolyhedronModel(qsqrt5, 2, vertices=[(z, z), (a, z), (z, a), (a, a)])
        )
        v = volume(square)
        assert v.normalized == 10
        assert v.euclidean_str(11) == "5.0000000000"

    def test_unbounded_refused(self, qq):
        q = qq.from_rational
        r = analyze(PolyhedronModel(qq, 1, inequalities=[(q(1), q(0))]))
        with pytest.raises(NotAPolytope):
            volume(r)

    def test_insertion_order_invariance(self, qsqrt5, icosahedron):
        rng = random.Random(7)
        reference = volume(icosahedron).normalized
        verts = [tuple(p) for p in icosahedron.vertex_points()]
        for _ in range(20):
            shuffled = verts[:]
            rng.shuffle(shuffled)
            r = analyze(PolyhedronModel(qsqrt5, 3, vertices=shuffled))
            assert volume(r).normalized == reference

    def test_against_polygon_oracle(self, qq, qsqrt5):
        rng = random.Random(8)
        for algebraic, field in ((False, qq), (True, qsqrt5)):
            for _ in range(6):
                pts = random_polytope(rng, field, 2, rng.randint(3, 7), algebraic)
                analyzed = analyze(PolyhedronModel(field, 2, vertices=pts))
                assert volume(analyzed).normalized == polygon_normalized_volume(analyzed)

    def test_against_monte_carlo_3d(self, qq):
        rng = random.Random(99)
        for _ in range(3):
            pts = random_polytope(rng, qq, 3, rng.randint(5, 8), False)
            analyzed = analyze(PolyhedronModel(qq, 3, vertices=pts))
            exact = float(Fraction(volume(analyzed).euclidean_fraction(12)))
            estimate = monte_carlo_volume(analyzed, rng, samples=120_000)
            assert abs(estimate - exact) <= 0.02 * max(exact, 1e-9) + 1e-9


class TestLatticePoints:
    def test_icosahedron_origin_only(self, icosahedron):
        assert lattice_points(icosahedron).points == [(0, 0, 0, 1)]

    def test_segment_zero_to_sqrt5(self, qsqrt5):
        a = qsqrt5.gen()
        seg = analyze(PolyhedronModel(qsqrt5, 1, vertices=[(qsqrt5.zero,), (a,)]))
        assert lattice_points(seg).points == [(0, 1), (1, 1), (2, 1)]

    def test_unit_cube_corners(self, unit_cube):
        assert len(lattice_points(unit_cube)) == 8

    def test_points_satisfy_hyperplanes(self, icosahedron):
        for p in lattice_points(icosahedron).points:
            for h in icosahedron.support_hyperplanes:
                acc = h[-1]
                for k, c in enumerate(p[:-1]):
                    if c:
                        acc = acc + h[k] * c
                assert acc.sign() >= 0

    def test_unbounded_refused(self, qq):
        q = qq.from_rational
        r = analyze(PolyhedronModel(qq, 1, inequalities=[(q(1), q(0))]))
        with pytest.raises(NotAPolytope):
            lattice_points(r)

    def test_project_order_override(self, unit_cube):
        default = lattice_points(unit_cube).points
        permuted = lattice_points(unit_cube, project_order=[2, 0, 1]).points
        assert default == permuted

    def test_lower_dimensional_polytope(self, qq):
        q = qq.from_rational
        flat = analyze(
            PolyhedronModel(
                qq, 3, vertices=[(q(0), q(0), q(0)), (q(2), q(0), q(0)), (q(0), q(2), q(0))]
            )
        )
        assert len(lattice_points(flat)) == 6

    @pytest.mark.parametrize("algebraic", [False, True])
    def test_box_scan_oracle(self, qq, qsqrt5, algebraic):
        field = qsqrt5 if algebraic else qq
        rng = random.Random(9 if algebraic else 10)
        for _ in range(8):
            d = rng.randint(2, 3)
            pts = random_polytope(rng, field, d, rng.randint(d + 1, d + 4), algebraic)
            analyzed = analyze(PolyhedronModel(field, d, vertices=pts))
            assert lattice_points(analyzed).points == box_scan_lattice(analyzed)


class TestIntegerHull:
    def test_icosahedron_single_point(self, icosahedron):
        hull = integer_hull(icosahedron)
        assert len(hull.vertices) == 1
        assert hull.affine_dim == 0

    def test_segment(self, qsqrt5):
        a = qsqrt5.gen()
        seg = analyze(PolyhedronModel(qsqrt5, 1, vertices=[(qsqrt5.zero,), (a,)]))
        hull = integer_hull(seg)
        points = sorted(p[0].is_rational() for p in hull.vertex_points())
        assert points == [0, 2]

    def test_square_side_a(self, qsqrt5):
        a = qsqrt5.gen()
        z = qsqrt5.zero
        square = analyze(
            PolyhedronModel(qsqrt5, 2, vertices=[(z, z), (a, z), (z, a), (a, a)])
        )
        hull = integer_hull(square)
        assert len(hull.vertices) == 4
        assert volume(hull).normalized == 8  # square of side 2

    def test_empty_hull(self, qq):
        q = qq.from_rational
        # tiny triangle strictly between lattice points
        tri = analyze(
            PolyhedronModel(
                qq,
                2,
                vertices=[
                    (q(Fraction(1, 3)), q(Fraction(1, 3))),
                    (q(Fraction(2, 3)), q(Fraction(1, 3))),
                    (q(Fraction(1, 2)), q(Fraction(2, 3))),
                ],
            )
        )
        hull = integer_hull(tri)
        assert hull.is_empty
