import json
import subprocess
import sys

import pytest

from polarinv import harness
from polarinv.cli import main
from polarinv.fields import GF


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_snlead_json(capsys):
    code, out = run(capsys, "snlead", "--n", "3", "--json", "--no-timings")
    data = json.loads(out)
    assert code == 0
    assert data["lead_ideal"] == ["x1", "x2^2", "x3^3"]
    assert data["top_degree"] == 3
    assert set(data) == {"case", "inputs", "lead_ideal", "top_degree", "beta", "degrees",
                         "bounds", "pass", "details"}


def test_json_is_deterministic(capsys):
    outs = [run(capsys, "bound-check", "--group", "S2", "--m", "2", "--json",
                "--no-timings")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["beta"] == 2


def test_timings_present_by_default(capsys):
    _, out = run(capsys, "snlead", "--n", "2", "--json")
    assert "buchberger" in json.loads(out)["timings"]


def test_snlead_range():
    with pytest.raises(ValueError):
        harness.cmd_snlead(6)


def test_lemma_sweep(capsys):
    code, out = run(capsys, "lemma-sweep", "--n", "2", "--m", "2", "--max-deg", "3")
    assert code == 0 and "[PASS] oracle_equivalence" in out


def test_lemma_sweep_unrestricted_reports_only(capsys):
    code, out = run(capsys, "lemma-sweep", "--n", "3", "--m", "2", "--max-deg", "4",
                    "--field", "f2", "--unrestricted", "--json", "--no-timings")
    data = json.loads(out)
    assert code == 0 and data["details"]["counterexamples"] > 0


def test_bound_check_failure_exits_nonzero(capsys):
    code, out = run(capsys, "bound-check", "--group", "C3", "--m", "2",
                    "--strategy", "goebel", "--cross-check")
    assert code == 1
    assert "[FAIL] strategies_generate_same_ideal" in out


def test_bound_check_custom_group(capsys):
    code, out = run(capsys, "bound-check", "--group", "n=3; gens=(1 2 3)", "--m", "1")
    assert code == 0 and "beta: 3" in out


def test_polarize(capsys):
    code, out = run(capsys, "polarize", "--poly", "x1^2*x2", "--m", "2", "--k", "2,1",
                    "--json", "--no-timings")
    assert code == 0
    assert "x1_1^2*x2_2 + 2*x1_1*x1_2*x2_1" in out


def test_gb_file(tmp_path, capsys):
    path = tmp_path / "gens.txt"
    path.write_text("# two generators\nx1 + x2\nx1*x2\n")
    code, out = run(capsys, "gb", "--gens", str(path), "--json", "--no-timings")
    data = json.loads(out)
    assert code == 0 and data["lead_ideal"] == ["x1", "x2^2"]


def test_gb_polarize_test(capsys):
    code, out = run(capsys, "gb-polarize-test", "--group", "S3", "--m", "2",
                    "--json", "--no-timings")
    data = json.loads(out)
    assert data["details"]["polarized_is_groebner"] is False
    assert code == 0


def test_modular_search_needs_prime_field():
    from polarinv.fields import QQ
    with pytest.raises(ValueError):
        harness.cmd_modular_search(2, 2, 3, QQ)
    assert harness.cmd_modular_search(2, 2, 3, GF(3)).passed == {}


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "polarinv", "snlead", "--n", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "lead ideal: (x1, x2^2)" in res.stdout
