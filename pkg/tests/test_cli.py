"""End-to-end tests of the command-line interface and its exit-code contract."""

import json

import pytest

from nutforge.cli import main
from nutforge.graphs import (
    CirculantSpec,
    DihedralSpec,
    build_circulant,
    build_dihedral,
    to_adjacency_list,
    to_graph6,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExists:
    def test_positive(self, capsys):
        code, out, _ = run(capsys, "exists", "16", "6")
        assert code == 0
        assert "exists: true" in out and "d-2-mod-4" in out

    def test_negative(self, capsys):
        code, out, _ = run(capsys, "exists", "14", "6")
        assert code == 1
        assert "exists: false" in out

    def test_malformed(self, capsys):
        code, _, err = run(capsys, "exists", "-3", "4")
        assert code == 2
        assert "error" in err

    def test_usage_error_from_argparse(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["exists", "eight", "4"])
        assert exc.value.code == 2


class TestConstruct:
    def test_graph6_output(self, capsys):
        code, out, _ = run(capsys, "construct", "12", "6", "--format", "graph6")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("# recipe:")
        assert len(lines[-1]) > 0 and not lines[-1].startswith("#")

    def test_adjacency_list_output(self, capsys):
        code, out, _ = run(capsys, "construct", "20", "14",
                           "--format", "adjacency-list", "--no-recipe")
        assert code == 0
        rows = [l for l in out.strip().splitlines() if not l.startswith("#")]
        assert len(rows) == 20

    def test_jsonl_roundtrip(self, capsys):
        from nutforge.graphs import from_graph6
        from nutforge.verify import nut_check_direct

        code, out, _ = run(capsys, "construct", "16", "6", "--format", "jsonl")
        assert code == 0
        payload = json.loads(out.strip())
        g = from_graph6(payload["graph6"])
        assert g.order == 16
        assert nut_check_direct(g).is_nut
        assert payload["nullity"] == 1
        assert all(x != "0" for x in payload["kernel_vector"])

    def test_infeasible(self, capsys):
        code, _, err = run(capsys, "construct", "14", "6")
        assert code == 1
        assert "infeasible" in err

    def test_budget_exhaustion(self, capsys):
        code, _, err = run(capsys, "construct", "14", "8", "--budget", "0")
        assert code == 3
        assert "search exhausted" in err

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "w.g6"
        code, out, _ = run(capsys, "construct", "8", "4", "--no-recipe",
                           "--output", str(target))
        assert code == 0
        assert target.read_text().strip()


class TestVerify:
    def test_direct_nut(self, tmp_path, capsys):
        g6 = to_graph6(build_circulant(CirculantSpec(8, {1, 2})))
        f = tmp_path / "g.g6"
        f.write_text(g6 + "\n")
        code, out, _ = run(capsys, "verify", "--input", str(f), "--method", "direct")
        assert code == 0
        assert "nut: true, nullity: 1" in out

    def test_direct_path_kernel_zero(self, tmp_path, capsys):
        f = tmp_path / "p3.txt"
        f.write_text("0: 1\n1: 0 2\n2: 1\n")
        code, out, _ = run(capsys, "verify", "--input", str(f))
        assert code == 1
        assert "kernel vector has zero entry" in out

    def test_direct_shift_one(self, tmp_path, capsys):
        prism = build_dihedral(DihedralSpec(6, {1, 5}, {0}))
        f = tmp_path / "prism.txt"
        f.write_text(to_adjacency_list(prism))
        code, out, _ = run(capsys, "verify", "--input", str(f), "--shift", "1")
        assert code == 0
        assert "shifted nullity: 1" in out

    def test_spectral_spec(self, tmp_path, capsys):
        f = tmp_path / "spec.json"
        f.write_text(json.dumps({"m": 8, "rotations": [1, 7],
                                 "reflections": [0, 1, 4, 6]}))
        code, out, _ = run(capsys, "verify", "--input", str(f),
                           "--method", "spectral")
        assert code == 0
        assert "spectral nullity: 1" in out
        assert "nut: true" in out

    def test_both_agree(self, tmp_path, capsys):
        f = tmp_path / "spec.json"
        f.write_text(json.dumps({"m": 10, "rotations": [2, 8],
                                 "reflections": [0, 8, 9], "shift": 1}))
        code, out, _ = run(capsys, "verify", "--input", str(f), "--method", "both")
        assert code == 0
        assert "agreement: true" in out

    def test_both_defers_nut_verdict_to_direct(self, tmp_path, capsys):
        # Nullity one with a zero kernel entry: spectral and direct agree on
        # the nullity, but the graph is not a nut.
        f = tmp_path / "spec.json"
        f.write_text(json.dumps({"m": 4, "s0": [], "s1": [0, 1], "s2": [1, 3]}))
        code, out, _ = run(capsys, "verify", "--input", str(f), "--method", "both")
        assert code == 1
        assert "agreement: true" in out
        assert "nut: false (kernel vector has zero entry)" in out

    def test_method_input_mismatch(self, tmp_path, capsys):
        f = tmp_path / "g.g6"
        f.write_text(to_graph6(build_circulant(CirculantSpec(8, {1, 2}))))
        code, _, err = run(capsys, "verify", "--input", str(f),
                           "--method", "spectral")
        assert code == 2

    def test_parse_failure(self, tmp_path, capsys):
        f = tmp_path / "junk.txt"
        f.write_text("\x01\x02 not a graph")
        code, _, err = run(capsys, "verify", "--input", str(f))
        assert code == 2

    def test_forced_input_format(self, tmp_path, capsys):
        g = build_circulant(CirculantSpec(8, {1, 2}))
        f = tmp_path / "g.g6"
        f.write_text(to_graph6(g))
        code, out, _ = run(capsys, "verify", "--input", str(f),
                           "--input-format", "graph6")
        assert code == 0 and "nut: true" in out

    def test_missing_input_file(self, capsys):
        code, _, err = run(capsys, "verify", "--input", "/nonexistent/graph.g6")
        assert code == 2


class TestLemmas:
    def test_q_family(self, capsys):
        code, out, _ = run(capsys, "lemmas", "--family", "Q", "--t-max", "3",
                           "--beta-max", "40")
        assert code == 0
        assert "result: ok" in out

    def test_r_family_unique_range(self, capsys):
        code, out, _ = run(capsys, "lemmas", "--family", "R", "--t-max", "0",
                           "--beta-max", "100")
        assert code == 0
        assert "beta in [11, 100]" in out

    def test_jsonl_format(self, capsys):
        code, out, _ = run(capsys, "lemmas", "--family", "S", "--t-max", "1",
                           "--beta-max", "20", "--format", "jsonl")
        assert code == 0
        for line in out.strip().splitlines():
            obj = json.loads(line)
            assert obj["ok"] is True

    def test_full_case_analysis_single_family(self, capsys):
        code, out, _ = run(capsys, "lemmas", "--family", "Q", "--t-max", "0",
                           "--beta-max", "10", "--full-case-analysis")
        assert code == 0
        assert "finite-case-analysis" in out


class TestCensus:
    def test_circulant_unique(self, capsys):
        code, out, _ = run(capsys, "census", "--family", "circulant", "8", "4")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[-1] == "# classes: 1"

    def test_dihedral_contains_prism_complement(self, capsys):
        code, out, _ = run(capsys, "census", "--family", "dihedral", "12", "8")
        assert code == 0
        assert int(out.strip().splitlines()[-1].split(":")[1]) >= 1

    def test_no_dedup(self, capsys):
        code, out, _ = run(capsys, "census", "--family", "circulant", "10", "4",
                           "--no-dedup")
        assert code == 0
        assert "# witnesses:" in out

    def test_order_limit_requires_flag(self, capsys):
        code, _, err = run(capsys, "census", "--family", "circulant", "22", "4")
        assert code == 2
        assert "no-dedup" in err

    def test_budget_exceeded(self, capsys):
        code, _, err = run(capsys, "census", "--family", "circulant", "16", "4",
                           "--budget", "2")
        assert code == 3
        assert "budget exceeded" in err

    def test_jsonl(self, capsys):
        code, out, _ = run(capsys, "census", "--family", "circulant", "8", "4",
                           "--format", "jsonl")
        assert code == 0
        first = json.loads(out.strip().splitlines()[0])
        assert first["degree"] == 4 and first["order"] == 8
