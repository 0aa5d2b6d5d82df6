"""Command-line interface: subcommands, formats, exit codes."""

import json

from wzmahler.cli import main


def test_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "lalin-m1-m16" in out and "exact-symbolic" in out


def test_verify_pass(capsys):
    assert main(["verify", "log2-f3"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "log2-f3" in out


def test_verify_unknown(capsys):
    assert main(["verify", "no-such-id"]) == 2


def test_verify_json(capsys):
    assert main(["--format", "json", "verify", "wz-pair-1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == "wzmahler-report/1"
    assert data["reports"][0]["id"] == "wz-pair-1"
    assert data["reports"][0]["status"] == "PASS"


def test_verify_tol_override_fails(capsys):
    assert main(["--tol", "1e-60", "verify", "log2-f3"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_all_filtered(capsys):
    assert main(["--quiet", "all", "--filter", "torsion"]) == 0
    out = capsys.readouterr().out
    assert "torsion-orders" in out


def test_flags_after_subcommand(capsys):
    assert main(["all", "--filter", "torsion", "--quiet"]) == 0
    assert main(["verify", "log2-f3", "--bits", "192"]) == 0


def test_usage_error():
    assert main(["bogus-command"]) == 2
