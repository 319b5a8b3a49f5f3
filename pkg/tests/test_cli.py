import json
import shlex
import subprocess
import sys
from pathlib import Path

import pytest

from artinlab.cli import main, run

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = [
    ("colength --d 3 --n 3 --field q", "colength_d3_n3_q.txt"),
    ("colength --d 3 --n 3 --field f:2", "colength_d3_n3_f2.txt"),
    ("trace --d 2 --n 3", "trace_d2_n3.txt"),
    ("codim2 report --gens x^3,y^2", "codim2_report_x3y2.txt"),
    ("codim2 reduce --gens x^2,x*y,y^2 --format json", "codim2_reduce_m2.json"),
    ("hilbert --gens x^2,y^2,z^2 --format json", "hilbert_ci_222.json"),
]


def invoke(cmd: str, capsys):
    code = main(shlex.split(cmd))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("cmd, name", GOLDEN_CASES)
def test_golden(cmd, name, capsys):
    code, out, _ = invoke(cmd, capsys)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_table_layout(capsys):
    _, out, _ = invoke("colength --d 3 --n 3", capsys)
    lines = out.splitlines()
    i = lines.index("Hilbert functions")
    assert lines[i + 1].split() == ["degree", "0", "1", "2", "3", "4"]
    assert lines[i + 2].split() == ["h_R", "1", "3", "6", "0", "0"]
    assert lines[i + 3].split() == ["h_S", "1", "3", "6", "3", "1"]


def test_json_is_byte_stable(capsys):
    cmd = "codim2 reduce --gens x^4,x*y,y^4 --seed 7 --format json"
    _, first, _ = invoke(cmd, capsys)
    _, second, _ = invoke(cmd, capsys)
    assert first == second
    data = json.loads(first)
    assert data["status"] == "pass"
    assert data["values"]["colength"] == data["values"]["multiplicity"]


def test_seed_changes_reduction(capsys):
    _, a, _ = invoke("codim2 reduce --gens x^2,x*y,y^2 --seed 1", capsys)
    _, b, _ = invoke("codim2 reduce --gens x^2,x*y,y^2 --seed 2", capsys)
    assert a != b


def test_timing_is_opt_in(capsys):
    _, plain, _ = invoke("hilbert --d 2 --n 2 --format json", capsys)
    assert "timing" not in json.loads(plain)
    _, timed, _ = invoke("hilbert --d 2 --n 2 --format json --timing", capsys)
    assert "timing" in json.loads(timed)


def test_codim2_hd(capsys):
    code, out, _ = invoke("codim2 hd --gens x^3,y^2", capsys)
    assert code == 0
    assert "hd_length: 5" in out
    assert "multiplicity: 6" in out


def test_closure_output(capsys):
    _, out, _ = invoke("codim2 closure --gens x^3,y^2", capsys)
    assert "closure: (x^3, x^2*y, y^2)" in out


def test_positive_characteristic_is_flagged_not_failed(capsys):
    code, out, _ = invoke("witness --d 3 --n 3 --field f:2", capsys)
    assert code == 0
    assert "flag:" in out


@pytest.mark.parametrize("cmd", [
    "link --d 3 --n 2 --s 1",
    "selflink --d 3 --n 2",
    "chain --d 3 --n 2",
    "sop --exponents 2,3",
    "rrr --exponents 3,3,3 --m 2",
    "witness --d 3 --n 3",
    "hilbert --d 3 --n 3",
])
def test_commands_pass(cmd, capsys):
    code, out, _ = invoke(cmd, capsys)
    assert code == 0, out
    assert out.rstrip().endswith("status: pass")


def test_assertion_failure_exits_1(capsys):
    code, out, _ = invoke("colength --d 3 --n 3 --witness x^2,y^2,z^2", capsys)
    assert code == 1
    assert "status: FAIL (witness-inside-ideal)" in out


@pytest.mark.parametrize("cmd, fragment", [
    ("hilbert", "missing --d, --n"),
    ("hilbert --gens x^2+y", "not homogeneous"),
    ("hilbert --gens x^2,q", "unknown variable"),
    ("colength --d 3 --n 3 --field f:4", "not prime"),
    ("codim2 hd --gens x*y", "primary monomial ideal"),
])
def test_usage_errors_exit_2(cmd, fragment, capsys):
    code, out, err = invoke(cmd, capsys)
    assert code == 2
    assert fragment in err
    assert out == ""


def test_argparse_errors_exit_2(capsys):
    assert main(["nope"]) == 2
    assert "invalid choice" in capsys.readouterr().err


def test_run_returns_report():
    rep, code, err = run(["codim2", "hd", "--gens", "x^2,y^2"])
    assert code == 0 and err == ""
    assert rep.values["hd_length"] == 3


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "artinlab.cli", "codim2", "hd", "--gens", "x^3,y^2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "hd_length: 5" in proc.stdout
