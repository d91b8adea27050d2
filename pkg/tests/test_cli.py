import csv
import hashlib
import json
from pathlib import Path

import pytest

from arithdeg.cli import (
    EXIT_COMPUTATION,
    EXIT_OK,
    EXIT_VALIDATION,
    EXIT_VIOLATED,
    SpecError,
    main,
    parse_spec,
)

SPECS = Path(__file__).resolve().parent.parent / "gallery" / "specs"
FIB = "[map]\nP2 vars X,Y,Z\n2*Y*Z\nX*Y\nZ^2\n"


def run(tmp_path, *args, spec_text=None, name="run"):
    out = tmp_path / name
    argv = list(args) + ["--out", str(out)]
    if spec_text is not None:
        p = tmp_path / f"{name}.spec"
        p.write_text(spec_text)
        argv += ["--spec", str(p)]
    return main(argv), out


def digests(out):
    return {p.name: hashlib.sha256(p.read_bytes()).hexdigest() for p in sorted(out.glob("*")) if p.is_file()
            and p.name != "manifest.json"}


# ---- spec parsing


def test_parse_gallery_specs():
    for path in SPECS.glob("*.spec"):
        spec = parse_spec(path.read_text(), SPECS)
        assert spec.map is not None


def test_parse_sections():
    spec = parse_spec(FIB + "[points]\n[1:1:1]\n[cycles]\nhypersurface: X + Y - Z\ncurve: t, u, t\n"
                      "[checks]\npolarized q=2\n[options]\nhorizon = 7\ntol = 0.01\n")
    assert spec.horizon == 7 and spec.tol == 0.01
    assert [c.kind for c in spec.cycles] == ["hypersurface", "curve"]
    assert spec.checks[0].params == {"q": 2}


def test_monomial_inverse_auto():
    spec = parse_spec("[map]\nA = [[0,1],[1,1]]; c = (2,1)\n[inverse]\nauto\n")
    assert str(spec.inverse) == "[4*Y*Z : X^2 : 2*X*Z]"


@pytest.mark.parametrize(
    "text",
    [
        "[bogus]\nx\n",
        "horizon = 3\n",
        FIB + "[map]\nX\n",
        FIB + "[checks]\nmagic\n",
        FIB + "[checks]\npolarized\n",
        FIB + "[options]\nhorizon = 0\n",
        FIB + "[options]\ncolour = red\n",
        FIB + "[points]\n[1:1]\n",
        FIB + "[cycles]\nsurface: X\n",
        FIB + "[options]\nstrategy = inverse-pullback\n[cycles]\nhypersurface: X\n",
        "[map]\nA = [[1,1],[1,1]]\n",
        "[map]\nfile = missing.map\n",
        "[inverse]\nauto\n" + FIB,
    ],
)
def test_spec_errors(text):
    with pytest.raises(SpecError):
        parse_spec(text)


def test_map_file_reference(tmp_path):
    (tmp_path / "f.map").write_text("P2 vars X,Y,Z\n2*Y*Z\nX*Y\nZ^2\n")
    spec = parse_spec("[map]\nfile = f.map\n", tmp_path)
    assert str(spec.map) == "[2*Y*Z : X*Y : Z^2]"


# ---- exit codes


def test_exit_codes(tmp_path):
    assert run(tmp_path, "degrees")[0] == EXIT_VALIDATION  # no spec
    assert run(tmp_path, "degrees", spec_text="[map]\nX\n", name="bad")[0] == EXIT_VALIDATION
    assert run(tmp_path, "monomial", spec_text=FIB, name="nomono")[0] == EXIT_VALIDATION
    code, _ = run(tmp_path, "conjectures", spec_text=FIB + "[checks]\nproduct-formula\n", name="noseed")
    assert code == EXIT_VALIDATION
    assert run(tmp_path, "plotdata", name="empty")[0] == EXIT_VALIDATION
    assert EXIT_COMPUTATION == 3


def test_conjectures_violated_exit(tmp_path):
    text = "[map]\nA = [[2,0],[0,2]]\n[checks]\npolarized q=3\n"
    code, out = run(tmp_path, "conjectures", spec_text=text)
    assert code == EXIT_VIOLATED
    report = json.loads((out / "conjectures.json").read_text())
    assert any(r["verdict"] == "violated" for r in report["reports"])


def test_conjectures_consistent(tmp_path):
    code, out = run(tmp_path, "conjectures", "--spec", str(SPECS / "fibonacci.spec"))
    assert code == EXIT_OK
    report = json.loads((out / "conjectures.json").read_text())
    assert {r["claim"] for r in report["reports"]} == {"product-formula", "log-concavity", "ks-point",
                                                       "birational-duality"}


# ---- outputs


def test_degrees_and_plotdata(tmp_path):
    code, out = run(tmp_path, "degrees", "--spec", str(SPECS / "fibonacci.spec"), "--horizon", "10")
    assert code == EXIT_OK
    rows = list(csv.DictReader((out / "degrees.csv").open()))
    assert [int(r["degree"]) for r in rows] == [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
    assert main(["plotdata", "--out", str(out)]) == EXIT_OK
    series = list(csv.DictReader((out / "plotdata" / "degrees.csv").open()))
    assert len(series) == 10 and series[0]["n"] == "1"


def test_manifest_inventory(tmp_path):
    _, out = run(tmp_path, "degrees", "--spec", str(SPECS / "fibonacci.spec"))
    main(["orbit", "--spec", str(SPECS / "fibonacci.spec"), "--out", str(out)])
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["tool"] == "arithdeg" and manifest["options"]["horizon"] == 14
    listed = {e["path"]: e["sha256"] for e in manifest["outputs"]}
    assert {"degrees.csv", "point_1.csv", "cycle_1.csv"} <= set(listed)
    for path, sha in listed.items():
        assert hashlib.sha256((out / path).read_bytes()).hexdigest() == sha


def test_global_flags_after_subcommand(tmp_path):
    code, out = run(tmp_path, "monomial", "--spec", str(SPECS / "fibonacci_monomial.spec"))
    assert code == EXIT_OK
    data = json.loads((out / "monomial.json").read_text())
    assert all(r["certified"] for r in data["lambdas"])


def test_determinism(tmp_path):
    spec = str(SPECS / "fibonacci.spec")
    _, a = run(tmp_path, "orbit", "--spec", spec, "--horizon", "8", name="a")
    _, b = run(tmp_path, "orbit", "--spec", spec, "--horizon", "8", name="b")
    assert digests(a) == digests(b) and digests(a)
