import json
import subprocess
import sys

import pytest

from degree_ramsey.cli import main
from degree_ramsey.construct import parse_factorization, parse_supergraph
from degree_ramsey.graph import girth, parse_coloring, parse_graph

STAR5 = "n 6\nbip 1\n" + "".join(f"e 0 {i}\n" for i in range(1, 6))
C4 = "n 4\nbip 2\ne 0 2\ne 1 3\ne 0 3\ne 1 2\n"


@pytest.fixture
def files(tmp_path):
    (tmp_path / "star5.g").write_text(STAR5)
    (tmp_path / "c4.g").write_text(C4)
    (tmp_path / "p3.g").write_text("n 3\ne 0 1\ne 1 2\n")
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


class TestArrow:
    def test_star_arrows(self, files, capsys):
        code, out, _ = run(capsys, "arrow", "--host", files / "star5.g", "--pattern", "S3", "--colors", 2)
        assert code == 0 and out.startswith("ARROWS")

    def test_c4_certificate_round_trip(self, files, capsys):
        cert = files / "w.col"
        code, out, _ = run(capsys, "arrow", "--host", files / "c4.g", "--pattern", "S2", "--colors", 2,
                           "--cert-out", cert)
        assert code == 1 and out.startswith("NOT_ARROWS")
        col = parse_coloring(cert.read_text())
        assert col.color_count == 2 and len(col.assignment) == 4
        code, out, _ = run(capsys, "arrow", "--host", files / "c4.g", "--pattern", "S2", "--colors", 2,
                           "--verify-cert", cert)
        assert code == 1 and "CERTIFICATE VALID" in out

    def test_bad_certificate(self, files, capsys):
        bad = files / "bad.col"
        bad.write_text("s 2\nc 0 0\nc 1 0\nc 2 0\nc 3 0\n")
        code, out, _ = run(capsys, "arrow", "--host", files / "c4.g", "--pattern", "S2", "--colors", 2,
                           "--verify-cert", bad)
        assert code == 2 and "INVALID" in out

    def test_oracle_agrees(self, files, capsys):
        code, _, _ = run(capsys, "arrow", "--host", files / "c4.g", "--pattern", "S2", "--colors", 2, "--oracle")
        assert code == 1

    def test_budget_unknown(self, files, capsys):
        code, out, _ = run(capsys, "arrow", "--host", files / "star5.g", "--pattern", "S3", "--colors", 2,
                           "--budget-nodes", 1)
        assert code == 2 and out.startswith("UNKNOWN")

    def test_usage_errors(self, files, capsys):
        code, _, err = run(capsys, "arrow", "--host", files / "c4.g", "--pattern", "C2", "--colors", 2)
        assert code == 3 and "column" in err
        with pytest.raises(SystemExit) as info:
            main(["arrow", "--host", "x"])
        assert info.value.code == 3

    def test_io_errors(self, files, capsys):
        code, _, _ = run(capsys, "arrow", "--host", files / "missing.g", "--pattern", "S2", "--colors", 2)
        assert code == 4
        (files / "broken.g").write_text("n 3\ne 0 0\n")
        code, _, err = run(capsys, "arrow", "--host", files / "broken.g", "--pattern", "S2", "--colors", 2)
        assert code == 4 and "line 2" in err


class TestConstructCommands:
    def test_star_free(self, files, capsys):
        out = files / "sf.col"
        code, _, _ = run(capsys, "color", "star-free", "--host", files / "star5.g", "--colors", 3, "--star", 3,
                         "--out", out)
        assert code == 0
        code, _, _ = run(capsys, "arrow", "--host", files / "star5.g", "--pattern", "S3", "--colors", 3,
                         "--verify-cert", out)
        assert code == 1

    def test_star_free_impossible(self, files, capsys):
        code, _, err = run(capsys, "color", "star-free", "--host", files / "star5.g", "--colors", 2, "--star", 3)
        assert code == 3 and "exceeds" in err

    def test_high_girth(self, capsys):
        code, out, _ = run(capsys, "construct", "high-girth-regular", "--degree", 3, "--girth", 5, "--seed", 1)
        g = parse_graph(out)
        assert code == 0 and set(g.degrees()) == {3} and girth(g) >= 5

    def test_seed_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("RAMSEY_SEED", "7")
        _, a, _ = run(capsys, "construct", "high-girth-regular", "--degree", 3, "--girth", 5)
        _, b, _ = run(capsys, "construct", "high-girth-regular", "--degree", 3, "--girth", 5, "--seed", 7)
        assert a == b

    def test_double_cover(self, files, capsys):
        code, out, _ = run(capsys, "construct", "double-cover", "--in", files / "p3.g")
        g = parse_graph(out)
        assert code == 0 and g.vertex_count == 6 and g.edge_count == 4 and g.bipartition

    def test_supergraph_and_factorize(self, files, capsys):
        sup = files / "sup.txt"
        code, _, _ = run(capsys, "construct", "supergraph", "--in", files / "star5.g", "--degree", 5, "--out", sup)
        assert code == 0
        wit = parse_supergraph(sup.read_text())
        assert set(wit.supergraph.degrees()) == {5}
        code, out, _ = run(capsys, "construct", "factorize", "--in", sup)
        assert code == 0
        fact = parse_factorization(out)
        assert len(fact.factors) == 5


class TestAnalysisCommands:
    def test_embed(self, files, capsys):
        code, out, _ = run(capsys, "embed", "--host", files / "star5.g", "--tree", files / "p3.g")
        assert code == 0 and out.startswith("m ")

    def test_embed_failure(self, files, capsys):
        code, out, _ = run(capsys, "embed", "--host", files / "p3.g", "--tree", files / "star5.g")
        assert code == 1 and out.startswith("FAILURE")

    def test_peel(self, files, capsys):
        (files / "k4p.g").write_text("n 5\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\ne 3 4\n")
        code, out, _ = run(capsys, "peel", "--in", files / "k4p.g")
        lines = out.splitlines()
        assert code == 0 and lines[0] == "removed 4" and lines[1] == "kept 0 1 2 3"
        assert parse_graph("\n".join(lines[2:])).edge_count == 6

    def test_kst(self, files, capsys):
        code, out, _ = run(capsys, "kst", "--in", files / "c4.g", "-m", 2, "-n", 2)
        assert code == 0 and out.splitlines() == ["left 0 1", "right 2 3"]
        code, out, _ = run(capsys, "kst", "--in", files / "c4.g", "-m", 2, "-n", 3)
        assert code == 1 and out.strip() == "NONE"


class TestBoundsCommand:
    def test_star_line(self, capsys):
        code, out, _ = run(capsys, "bounds", "star", 3, 2)
        assert code == 0
        assert out.strip().split("\t") == ["star", "n=3 s=2", "5", "exact", "Lemma1"]

    def test_json_and_flags(self, capsys):
        code, out, err = run(capsys, "bounds", "kmn-constant", 4, 2, "--json")
        assert code == 0 and json.loads(out)["value"] == "256/5"
        assert "non-integral" in err

    def test_monte_carlo(self, capsys):
        code, out, _ = run(capsys, "bounds", "kmn-mc", 6, 2, 2, 2, 500, 3, "--json")
        d = json.loads(out)
        assert code == 0 and d["exact_expected_count"] == "45/8"

    def test_bad_arity(self, capsys):
        code, _, _ = run(capsys, "bounds", "star", 3)
        assert code == 3
        code, _, _ = run(capsys, "bounds", "nope", 1)
        assert code == 3


class TestVerifyTheorem:
    def test_kst_pipeline_deterministic(self, capsys):
        code, a, _ = run(capsys, "verify-theorem", "lemma6", "--seed", 5)
        _, b, _ = run(capsys, "verify-theorem", "lemma6", "--seed", 5)
        assert code == 0 and a == b
        assert all(line.startswith("CHECK ") and " PASS " in line + " " for line in a.splitlines())

    def test_star_pipeline_one_color_count(self, capsys):
        code, out, _ = run(capsys, "verify-theorem", "lemma1", "--colors", 2)
        assert code == 0 and "FAIL" not in out


def test_module_entry_point(files):
    res = subprocess.run(
        [sys.executable, "-m", "degree_ramsey", "bounds", "tree-upper", "2", "3"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and res.stdout.split("\t")[2] == "6"
