import shutil
import subprocess

import pytest

from algpoly.cli import bench_instance, bench_vertices, main

from conftest import INPUTS
from oracles import gale_facet_count, gale_facets


def run_cli(args):
    return main(args)


@pytest.fixture()
def workdir(tmp_path):
    for name in ("icosahedron.in", "cube.in", "empty.in"):
        shutil.copy(INPUTS / name, tmp_path / name)
    return tmp_path


class TestRun:
    def test_icosahedron_end_to_end(self, workdir):
        path = workdir / "icosahedron.in"
        assert run_cli([str(path)]) == 0
        out = (workdir / "icosahedron.out").read_text()
        aut = (workdir / "icosahedron.aut").read_text()
        assert "12 vertices of polyhedron" in out
        assert "20 support hyperplanes of polyhedron (homogenized)" in out
        assert "volume (Euclidean) = 2.18169499062" in out
        assert "Euclidean automorphism group of order 120" in aut

    def test_empty_input_exit_zero(self, workdir):
        path = workdir / "empty.in"
        assert run_cli([str(path)]) == 0
        assert "polyhedron is empty" in (workdir / "empty.out").read_text()

    def test_goal_override_volume_only(self, workdir):
        path = workdir / "cube.in"
        assert run_cli([str(path), "--goals", "Volume"]) == 0
        out = (workdir / "cube.out").read_text()
        assert "volume (lattice normalized) = 6" in out
        assert "lattice points in polytope" not in out
        assert "f-vector" not in out

    def test_missing_file_is_input_error(self, tmp_path):
        assert run_cli([str(tmp_path / "nope.in")]) == 1

    def test_parse_error_is_input_error(self, tmp_path):
        bad = tmp_path / "bad.in"
        bad.write_text("amb_space 1\nvertices 1\n0 0\n")
        assert run_cli([str(bad)]) == 1

    def test_unknown_goal_flag(self, workdir):
        assert run_cli([str(workdir / "cube.in"), "--goals", "Nonsense"]) == 1

    def test_computation_error_exit_two(self, tmp_path):
        unbounded = tmp_path / "ub.in"
        unbounded.write_text("amb_space 1\ninequalities 1\n1 0\nVolume\n")
        assert run_cli([str(unbounded)]) == 2

    def test_bad_flag_is_input_error(self):
        assert run_cli(["--workers", "not-a-number"]) == 1

    def test_euclid_digits_flag(self, workdir):
        path = workdir / "icosahedron.in"
        assert run_cli([str(path), "--goals", "Volume", "--euclid-digits", "6"]) == 0
        out = (workdir / "icosahedron.out").read_text()
        assert "volume (Euclidean) = 2.18169" in out
        assert "2.18169499062" not in out

    def test_project_order_flag(self, workdir):
        path = workdir / "icosahedron.in"
        assert run_cli([str(path), "--goals", "LatticePoints", "--project-order", "2,0,1"]) == 0
        out = (workdir / "icosahedron.out").read_text()
        assert "1 lattice points in polytope:\n0 0 0 1" in out

    def test_sorted_order_flag(self, workdir):
        path = workdir / "cube.in"
        assert run_cli([str(path), "--order", "sorted"]) == 0
        out = (workdir / "cube.out").read_text()
        assert "8 vertices of polyhedron" in out
        assert "6 support hyperplanes of polyhedron (homogenized)" in out

    def test_determinism_single_worker(self, workdir):
        path = workdir / "icosahedron.in"
        assert run_cli([str(path), "--workers", "1"]) == 0
        first_out = (workdir / "icosahedron.out").read_bytes()
        first_aut = (workdir / "icosahedron.aut").read_bytes()
        assert run_cli([str(path), "--workers", "1"]) == 0
        assert (workdir / "icosahedron.out").read_bytes() == first_out
        assert (workdir / "icosahedron.aut").read_bytes() == first_aut

    def test_console_script_installed(self, workdir):
        exe = shutil.which("algpoly")
        if exe is None:
            pytest.skip("console script not on PATH")
        proc = subprocess.run(
            [exe, str(workdir / "cube.in")], capture_output=True, text=True
        )
        assert proc.returncode == 0


class TestBench:
    def test_families(self):
        cyc, dim = bench_vertices("cyclic", (4, 8))
        assert len(cyc) == 8 and dim == 4
        cube, dim = bench_vertices("scaled-cube", (3,))
        assert len(cube) == 8 and dim == 3
        lo3, dim = bench_vertices("order-poly", (3,))
        assert len(lo3) == 6 and dim == 3

    def test_cyclic_matches_gale_oracle(self):
        for cls in ("int", "rat"):
            ext, hyps, fvec = bench_instance("cyclic", (4, 8), cls)
            assert ext == 8
            assert hyps == len(gale_facets(4, 8)) == gale_facet_count(4, 8) == 20

    def test_scaled_cube_sc2(self):
        ext, hyps, fvec = bench_instance("scaled-cube", (3,), "sc2")
        assert (ext, hyps) == (8, 6)
        assert fvec == [1, 8, 12, 6, 1]

    def test_counts_invariant_across_classes(self):
        reference = None
        for cls in ("int", "mpz", "rat", "sc2"):
            counts = bench_instance("scaled-cube", (3,), cls)
            if reference is None:
                reference = counts
            assert counts == reference

    def test_bench_cli(self, capsys):
        assert run_cli(["--bench", "cyclic(4,8)", "--class", "rat"]) == 0
        out = capsys.readouterr().out
        assert "benchmark cyclic(4, 8)" in out
        assert "rat" in out

    def test_bad_family(self):
        assert run_cli(["--bench", "moebius(3)"]) == 1

    def test_bad_class(self):
        assert run_cli(["--bench", "cyclic(4,8)", "--class", "q99"]) == 1


class TestGaleOracle:
    def test_formula_matches_enumeration(self):
        for d, n in [(2, 5), (3, 6), (4, 8), (5, 8), (6, 10)]:
            assert len(gale_facets(d, n)) == gale_facet_count(d, n)

    def test_paper_cyc15_30_count(self):
        assert gale_facet_count(15, 30) == 341088
