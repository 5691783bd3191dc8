import json
import os
import subprocess
import sys

import pytest

from reekit.cli import main

PKG_ENV = dict(os.environ)


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_verify_field_passes(capsys):
    code, out = run_cli(["verify", "field"], capsys)
    assert code == 0
    assert "field.theta_square_is_cube" in out
    assert "FAIL" not in out


def test_verify_identities_reports_known_failure(capsys):
    code, out = run_cli(["verify", "identities"], capsys)
    assert code == 1
    lines = out.splitlines()
    failing = [l for l in lines if " FAIL " in l]
    assert len(failing) == 1
    assert "identities.symbolic.commutator_display" in failing[0]
    assert "terms" in next(l for l in lines if "group_associativity" in l
                           and "symbolic" in l)


def test_json_format_mirrors_check_report(capsys):
    code, out = run_cli(["verify", "field", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert all(set(r) == {"name", "scope", "status", "witness", "wall_time",
                          "detail"} for r in payload)
    assert all(r["status"] == "pass" for r in payload)


def test_determinism_same_seed(capsys):
    _, out1 = run_cli(["verify", "field", "--seed", "5"], capsys)
    _, out2 = run_cli(["verify", "field", "--seed", "5"], capsys)
    assert out1 == out2  # text reports are byte-identical


def test_export_determinism(tmp_path):
    f1, f2 = tmp_path / "a.txt", tmp_path / "b.txt"
    assert main(["export", "--what", "ovoid", "--out", str(f1)]) == 0
    assert main(["export", "--what", "ovoid", "--out", str(f2)]) == 0
    assert f1.read_bytes() == f2.read_bytes()
    assert f1.read_text().splitlines()[0] == "O inf"
    assert len(f1.read_text().splitlines()) == 28


def test_hexagon_enumerate_output(capsys):
    code, out = run_cli(["hexagon", "enumerate"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert sum(1 for l in lines if l.startswith("P ")) == 364
    assert sum(1 for l in lines if l.startswith("L ")) == 364
    assert sum(1 for l in lines if l.startswith("I ")) == 4 * 364
    assert lines[0] == "P inf"


def test_geometry_blocks_output(capsys):
    code, out = run_cli(["geometry", "blocks", "--kind", "sphere"], capsys)
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 84
    assert all(l.startswith("S ") for l in lines)


def test_unital_blocks_output(capsys):
    code, out = run_cli(["unital", "blocks"], capsys)
    assert code == 0
    assert len([l for l in out.splitlines() if l.startswith("b ")]) == 63


def test_bad_field_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "field", "--field", "banana"])
    assert err.value.code == 2


def test_bad_suite_name_is_usage_error(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "nonsense"])


def test_threads_env_is_order_stable(capsys, monkeypatch):
    _, out1 = run_cli(["verify", "field"], capsys)
    monkeypatch.setenv("REEKIT_THREADS", "4")
    _, out2 = run_cli(["verify", "field"], capsys)
    names = lambda s: [l.split()[0] for l in s.splitlines()]
    assert names(out1) == names(out2)


def test_console_script_entrypoint():
    proc = subprocess.run([sys.executable, "-m", "reekit.cli", "verify",
                           "field"], capture_output=True, text=True,
                          env=PKG_ENV)
    assert proc.returncode == 0
    assert "4/4 checks passed" in proc.stdout
