import json
from pathlib import Path

import pytest

from src.trifree_segments.cli import (
    EXIT_ASSERT_FAILED,
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFY_FAILED,
    main,
)

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def run(tmp_path):
    """以不存在的配置文件运行命令行（使用默认配置）"""

    def _run(*argv: str) -> int:
        return main(["--config", str(tmp_path / "absent.toml"), *argv])

    return _run


class TestSizes:
    def test_table_ends_with_level_five(self, run, capsys):
        assert run("sizes", "5") == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "k s_k p_k tilde"
        assert lines[-1] == "5 39733 32768 72501"

    def test_invalid_k_is_usage_error(self, run):
        assert run("sizes", "0") == EXIT_USAGE


class TestBuild:
    def test_level_one_matches_golden(self, run, tmp_path):
        out = tmp_path / "k1.json"
        assert run("build", "-k", "1", "-o", str(out)) == EXIT_OK
        assert out.read_text(encoding="utf-8") == (GOLDEN / "family_k1.json").read_text(encoding="utf-8")

    def test_custom_rect(self, run, tmp_path):
        out = tmp_path / "k2.json"
        assert run("build", "-k", "2", "--rect", "0", "0", "2", "1/2", "-o", str(out)) == EXIT_OK
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["rect"] == {"x0": "0", "y0": "0", "x1": "2", "y1": "1/2"}

    def test_degenerate_rect(self, run, tmp_path):
        assert run("build", "-k", "1", "--rect", "0", "0", "0", "1", "-o", str(tmp_path / "x.json")) == EXIT_USAGE

    def test_missing_output_is_usage_error(self, run):
        assert run("build", "-k", "1") == EXIT_USAGE


class TestChi:
    def test_tilde_level_three(self, run, tmp_path, capsys):
        family = tmp_path / "s3.json"
        assert run("build", "-k", "3", "--tilde", "-o", str(family)) == EXIT_OK
        capsys.readouterr()
        assert run("chi", str(family), "--assert-eq", "4") == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert out[:3] == ["omega=2", "chi=4", "deterministic=true"]

    def test_failed_assertion(self, run, tmp_path):
        family = tmp_path / "s2.json"
        run("build", "-k", "2", "--tilde", "-o", str(family))
        assert run("chi", str(family), "--assert-eq", "2") == EXIT_ASSERT_FAILED

    def test_reads_dimacs(self, run, capsys):
        assert run("chi", str(GOLDEN / "tilde_k2.dimacs")) == EXIT_OK
        assert "chi=3" in capsys.readouterr().out.splitlines()

    def test_budget_exhausted(self, tmp_path, capsys):
        config = tmp_path / "config.toml"
        config.write_text('[inner]\nversion = "0.1.0"\n\n[solver]\ncheck_interval = 1\n')
        family = tmp_path / "s3.json"
        main(["--config", str(config), "build", "-k", "3", "--tilde", "-o", str(family)])
        capsys.readouterr()
        code = main(["--config", str(config), "chi", str(family), "--budget", "1e-9"])
        assert code == EXIT_BUDGET
        assert capsys.readouterr().out.splitlines()[1].startswith("chi=[")


class TestVerify:
    def test_full_level_passes(self, run, tmp_path, capsys):
        family = tmp_path / "s2.json"
        run("build", "-k", "2", "-o", str(family))
        capsys.readouterr()
        assert run("verify", str(family), "--level", "full") == EXIT_OK
        out = capsys.readouterr().out
        assert "CHECK lemma-property PASS" in out
        assert "HEAVIEST probe=" in out

    def test_triangle_limit_from_config(self, tmp_path, capsys):
        config = tmp_path / "config.toml"
        config.write_text('[inner]\nversion = "0.1.0"\n\n[solver]\nexhaustive_triangle_limit = 1\n')
        family = tmp_path / "s2.json"
        main(["--config", str(config), "build", "-k", "2", "-o", str(family)])
        capsys.readouterr()
        assert main(["--config", str(config), "verify", str(family), "--level", "full"]) == EXIT_OK
        assert "CHECK triangle-free PASS method=neighborhood" in capsys.readouterr().out

    def test_relabelled_level_fails(self, run, tmp_path, capsys):
        data = json.loads((GOLDEN / "family_k1.json").read_text(encoding="utf-8"))
        data["k"] = 2
        family = tmp_path / "relabelled.json"
        family.write_text(json.dumps(data, indent=2))
        assert run("verify", str(family)) == EXIT_VERIFY_FAILED
        assert "CHECK family-size FAIL k=2 segments=1/3 probes=1/2" in capsys.readouterr().out

    @pytest.mark.slow
    def test_full_level_three(self, run, tmp_path):
        family = tmp_path / "s3.json"
        assert run("build", "-k", "3", "-o", str(family)) == EXIT_OK
        assert run("verify", str(family), "--level", "full") == EXIT_OK

    @pytest.mark.slow
    def test_axioms_level_four(self, run, tmp_path):
        family = tmp_path / "s4.json"
        assert run("build", "-k", "4", "-o", str(family)) == EXIT_OK
        assert run("verify", str(family), "--level", "axioms") == EXIT_OK

    def test_tampered_family(self, run, tmp_path, capsys):
        data = json.loads((GOLDEN / "family_k1.json").read_text(encoding="utf-8"))
        data["segments"][0]["q"] = {"x": "1/2", "y": "1/2"}
        family = tmp_path / "tampered.json"
        family.write_text(json.dumps(data, indent=2))
        assert run("verify", str(family), "--level", "full") == EXIT_VERIFY_FAILED
        assert "CHECK condition-3 FAIL probe=0 segment=0" in capsys.readouterr().out

    def test_non_canonical_file(self, run, tmp_path):
        text = (GOLDEN / "family_k1.json").read_text(encoding="utf-8").replace('"1/4"', '"2/8"', 1)
        family = tmp_path / "bad.json"
        family.write_text(text)
        assert run("verify", str(family)) == EXIT_USAGE

    def test_missing_file(self, run, tmp_path):
        assert run("verify", str(tmp_path / "nope.json")) == EXIT_USAGE


class TestGraphAndCritical:
    def test_dimacs_export(self, run, tmp_path):
        family = tmp_path / "s2.json"
        out = tmp_path / "s2.dimacs"
        run("build", "-k", "2", "--tilde", "-o", str(family))
        assert run("graph", str(family), "--dimacs", str(out)) == EXIT_OK
        assert out.read_text() == (GOLDEN / "tilde_k2.dimacs").read_text()

    def test_tilde_level_two_is_critical(self, run, tmp_path, capsys):
        family = tmp_path / "s2.json"
        run("build", "-k", "2", "--tilde", "-o", str(family))
        capsys.readouterr()
        assert run("critical", str(family), "-k", "2") == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert out == ["CHECK not-2-colorable PASS", "CHECK deletions PASS 5/5"]

    def test_isolated_vertex_is_not_critical(self, run, tmp_path, capsys):
        graph = tmp_path / "c5plus.col"
        graph.write_text("p edge 6 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n")
        assert run("critical", str(graph), "-k", "2") == EXIT_VERIFY_FAILED
        assert "failing=5" in capsys.readouterr().out


class TestRender:
    def test_writes_svg(self, run, tmp_path):
        family = tmp_path / "s1.json"
        svg = tmp_path / "s1.svg"
        run("build", "-k", "1", "-o", str(family))
        assert run("render", str(family), "-o", str(svg), "--show-probes", "--show-roots") == EXIT_OK
        text = svg.read_text(encoding="utf-8")
        assert text.count("<line") == 1
        assert 'class="probe"' in text and 'class="root"' in text
