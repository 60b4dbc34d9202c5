import json
import subprocess
import sys

import pytest

from gogroups.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_spec_examples(capsys):
    code, out = run(capsys, "wp", "--fixture", "P4", "a b a^-1 b^-1")
    assert code == 0 and "trivial" in out
    code, rep = run_json(capsys, "member", "--fixture", "P4", "--sub", "a,b,c", "d")
    assert code == 0 and rep["verdict"] == "no"
    assert rep["certificate"]["assignment"]["degree"] == 2
    code, out = run(capsys, "bs-h1", "2", "3", "[[0,1],[1,-1]]")
    assert code == 0 and "-3/6^1" in out


def test_exit_codes(capsys):
    assert run(capsys, "wp", "--fixture", "P4", "a e")[0] == 2
    assert run(capsys, "wp", "--fixture", "NOPE", "a")[0] == 2
    assert run(capsys, "bs-h1", "2", "4", "[[0,1]]")[0] == 2
    assert run(capsys, "bs-power-in-n", "2", "2", "1", "1")[0] == 2
    code, rep = run_json(capsys, "member", "--fixture", "P4", "--sub", "a,b,c", "d c d^-1", "--budget-steps", "1")
    assert code == 3 and rep["verdict"] == "unknown"
    assert run(capsys, "bs-power-identity", "2", "3", "5", "1")[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_malformed_json_reports_error(capsys):
    code, out = run(capsys, "wp", "--group", "{not json", "a", "--json")
    assert code == 2 and "error" in json.loads(out)


COMMANDS = [
    ["nf", "--fixture", "P4", "b a c b^-1"],
    ["nf", "--bs", "2,3", "t^-1 x^2 t"],
    ["wp", "--fixture", "BS(2,3)", "t^-1 x^2 t x^-3"],
    ["wp", "--bs", "2,3", "x"],
    ["conj", "--fixture", "P4", "a b", "b a"],
    ["multi-conj", "--fixture", "P4", "a | a", "c | c", "--budget-length", "2"],
    ["member", "--fixture", "P4", "--sub", "a,b,c", "d c d^-1"],
    ["member", "--fixture", "P4", "--sub", "a,b,c", "d"],
    ["fiber", "--fixture", "bb_kernel_p4xp4", "--budget-length", "1"],
    ["classify", "--fixture", "z_kernel_p4xp4", "--budget-length", "2", "--budget-steps", "2000"],
    ["coset-cover", "--fixture", "Z", "--sub", "a^2", "--cosets", "1,a"],
    ["bs-h1", "2", "3", "[[0,1],[1,-1]]"],
    ["bs-power-identity", "-2", "3", "2", "2"],
    ["bs-power-in-n", "2", "3", "2", "1"],
    ["tc", "--fixture", "P4", "--sub", "a^2,a b,a c,a d"],
    ["rs", "--fixture", "P4", "--sub", "a^2,a b,a c,a d"],
    ["homs", "--fixture", "P4", "--budget-degree", "2"],
    ["separate", "--fixture", "P4", "--sub", "a,b,c", "d"],
    ["wpd", "--fixture", "P4_SPLITTING", "--radius", "2"],
    ["kernel-of-action", "--fixture", "BS(2,2)"],
    ["kernel-of-action", "--fixture", "P4_SPLITTING"],
    ["check-class", "--fixture", "P4"],
    ["check-class", "--fixture", "BS(2,3)"],
    ["fixtures"],
]


@pytest.mark.parametrize("argv", COMMANDS, ids=[" ".join(a[:3]) for a in COMMANDS])
def test_json_is_deterministic(capsys, argv):
    c1, o1 = run(capsys, *argv, "--json")
    c2, o2 = run(capsys, *argv, "--json")
    assert c1 == c2 and c1 in (0, 3)
    assert o1 == o2
    rep = json.loads(o1)
    assert {"command", "inputs", "inputs_digest", "verdict"} <= set(rep)
    assert "wall_time" not in rep


VERIFIABLE = [a for a in COMMANDS if a[0] in {
    "member", "separate", "multi-conj", "tc", "homs", "kernel-of-action", "bs-power-in-n",
    "bs-power-identity", "bs-h1", "wp", "classify"}]


@pytest.mark.parametrize("argv", VERIFIABLE, ids=[" ".join(a[:3]) for a in VERIFIABLE])
def test_verify_round_trip(capsys, argv):
    code, out = run(capsys, *argv, "--json")
    if code == 3:
        pytest.skip("unknown verdict carries no certificate")
    code, rep = run_json(capsys, "verify", out)
    assert code == 0 and rep["verdict"] == "verified"


def test_verify_rejects_tampered_certificate(capsys):
    _, out = run(capsys, "member", "--fixture", "P4", "--sub", "a,b,c", "d", "--json")
    rep = json.loads(out)
    rep["certificate"]["assignment"]["perms"][3] = [0, 1]
    code, res = run_json(capsys, "verify", json.dumps(rep))
    assert code == 1 and res["verdict"] == "rejected"


def test_timing_flag(capsys):
    _, rep = run_json(capsys, "wp", "--fixture", "P4", "a", "--timing")
    assert rep["wall_time"] >= 0


def test_tc_writes_csv(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, _ = run(capsys, "tc", "--fixture", "P4", "--sub", "a^2,a b,a c,a d", "--csv", str(path))
    assert code == 0 and path.read_text().startswith("coset,")


def test_console_module_entry():
    r = subprocess.run([sys.executable, "-m", "gogroups", "wp", "--fixture", "P4", "a a^-1"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "trivial" in r.stdout
