import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from semisym.cli import run
from semisym.tablefile import load

FIX = Path(__file__).resolve().parent.parent / "fixtures"


def cli(*args):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in args], out, err)
    return code, out.getvalue(), err.getvalue()


def cli_json(*args):
    code, out, _ = cli(*args, "--json")
    return code, json.loads(out)


def test_check_n2eq4():
    code, out, _ = cli("check", FIX / "n2eq4.sr")
    assert code == 1
    assert "frobenius        : holds" in out
    assert "upper_bound      : fails, witness a=[2], b=[3]" in out
    code, data = cli_json("check", FIX / "n2eq4.sr")
    assert data["exit"] == code == 1
    assert data["properties"]["upper_bound"]["witness"] == {"a": "[2]", "b": "[3]"}


def test_check_exit_codes():
    assert cli("check", "@boolean")[0] == 0
    code, data = cli_json("check", "@super:2")
    failed = [k for k, v in data["properties"].items() if v["status"] != "holds"]
    assert code == 1 and failed == ["idempotent"]


def test_expand_worked_example():
    code, data = cli_json("expand", FIX / "nat.sr", "3,2,0,0", 2)
    assert code == 0 and data["raw_products"] == 72
    assert [t["multiplicity"] for t in data["terms"]] == [1, 1, 2, 1]
    assert [t["profile"] for t in data["terms"]] == [[4, 3, 0, 0], [4, 2, 1, 0], [3, 3, 1, 0], [3, 2, 1, 1]]


def test_expand_collapse_over_symhomomorphic():
    code, data = cli_json("expand", "@super:2", "3,2,0,0", 2)
    assert code == 0
    assert data["frobenius_collapse"]["combination"] == "sigma(4,3,0,0)"
    assert data["frobenius_collapse"]["check"]["status"] == "holds"


def test_enumerate():
    code, out, _ = cli("enumerate", 2, "--classify")
    assert code == 0 and out.startswith("2 uc-semiring(s) of order 2")
    code, data = cli_json("enumerate", 3)
    assert data["classes"] == 6


def test_elementarize_exit_codes():
    code, data = cli_json("elementarize", "@boolean", "x1^2 + x2^2")
    assert code == 0 and data["elementary"] == "e1^2"
    code, data = cli_json("elementarize", "@sat:3", "x1^2 + x2^2")
    assert code == 1 and data["verification"]["witness"]["point"] == ["1", "1"]
    code, data = cli_json("elementarize", "@boolean", "x1^2*x2")
    assert code == 1 and data["symmetric"]["status"] == "fails"
    code, data = cli_json("elementarize", "@super:4", "x1+x2+x3+x4+x5+x6", "--budget", 1000)
    assert code == 3 and data["verification"]["status"] == "inconclusive"


def test_sampling_seed_reproducible():
    a = cli("elementarize", FIX / "nat.sr", "x1^2+x2^2", "--seed", 5)
    b = cli("elementarize", FIX / "nat.sr", "x1^2+x2^2", "--seed", 5)
    assert a == b and a[0] == 1


def test_verify_and_suite():
    code, data = cli_json("verify", "@super:2", "--lemma", "fibers")
    assert code == 0 and data["transcripts"][0]["statement"]["status"] == "holds"
    code, data = cli_json("verify", "@sat:3", "--lemma", "variant-frobenius")
    assert code == 1
    assert cli("suite", "@sat:3", "--linear")[0] == 0
    assert cli("suite", "@sat:3")[0] == 0
    assert cli("suite", "@nq:2:4")[0] == 1


def test_quotient_reloads(tmp_path):
    target = tmp_path / "q.sr"
    code, _, _ = cli("quotient", FIX / "n2eq4.sr", "-o", target)
    assert code == 0
    q = load(target)
    assert q.tokens == ("[0]", "[1]", "[2]")
    code, out, _ = cli("quotient", "@zn:3")
    assert code == 0 and "order 1" in out


@pytest.mark.parametrize("args", [
    ("check", FIX / "bad_assoc.sr"),
    ("check", "missing.sr"),
    ("check", "@nosuch"),
    ("elementarize", "@boolean", "x1 + y"),
    ("expand", "@boolean", "3,x", 1),
    ("expand", "@boolean", "1,2", 1),
    ("enumerate", 9),
    ("suite", FIX / "nat.sr"),
    ("frobnicate",),
])
def test_input_errors_exit_two(args):
    code, _, err = cli(*args)
    assert code == 2


def test_diagnostic_position_printed():
    _, _, err = cli("check", FIX / "bad_assoc.sr")
    assert "bad_assoc.sr:10:3" in err and "(b, b, c)" in err


def test_report_file_matches_exit(tmp_path):
    rep = tmp_path / "r.json"
    code, out, _ = cli("check", "@sat:3", "--report", rep)
    data = json.loads(rep.read_text())
    assert data["exit"] == code == 1 and "semiring satN3" in out


def test_console_script_module():
    r = subprocess.run([sys.executable, "-m", "semisym.cli", "check", "@boolean"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "symhomomorphic" in r.stdout
