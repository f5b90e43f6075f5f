import io
import json
import os
import subprocess
import sys

import pytest

from fibredim.cli import main, run
from fibredim.spectra import EffectiveSpectrum

FILES = {
    "z4x": {"base": {"kind": "Zmod", "n": 4}, "vars": ["x"], "relations": []},
    "z6y": {"base": {"kind": "Zmod", "n": 6}, "vars": ["y"], "relations": []},
    "zx": {"base": {"kind": "Z"}, "vars": ["x"], "relations": []},
    "zy": {"base": {"kind": "Z"}, "vars": ["y"], "relations": []},
    "zinv2": {"base": {"kind": "Z"}, "vars": ["x"], "relations": ["2*x - 1"]},
    "bool2": {"boolean_atoms": 2},
    "zcurve": {"base": {"kind": "Z"}, "vars": ["x", "y"], "relations": ["x^2 - y^3", "12"]},
    "z3": {"base": {"kind": "Z"}, "vars": [], "relations": ["3"]},
    "f2xy": {"base": {"kind": "Fp", "n": 2}, "vars": ["x", "y"], "relations": ["x*y"]},
    "q": {"base": {"kind": "Q"}, "vars": ["x"], "relations": []},
}
WITNESSES = {
    "w_ok": {"fibre": 2, "prime": ["x", "y"], "components": [["x"], ["y"]]},
    "w_outside": {"fibre": 2, "prime": ["x - 1", "y - 1"], "components": [["x"]]},
    "w_improper": {"fibre": 2, "prime": ["x", "x + 1"], "components": [["x"]]},
    "w_nested": {"fibre": 2, "prime": ["x", "y"], "components": [["x"], ["x", "y"]]},
    "w_badpoint": {"fibre": 3, "prime": ["x"], "components": [["x"]]},
}


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    d = tmp_path_factory.mktemp("inputs")
    paths = {}
    for name, obj in {**FILES, **WITNESSES}.items():
        p = d / f"{name}.json"
        p.write_text(json.dumps(obj))
        paths[name] = str(p)
    bad = d / "bad.json"
    bad.write_text('{"base": {"kind": "Z"}, "vars": ["x"],\n "relations": ["x^-1"]}')
    paths["bad"] = str(bad)
    paths["badjson"] = str(d / "badjson.json")
    (d / "badjson.json").write_text("{not json")
    paths["badprime"] = str(d / "badprime.json")
    (d / "badprime.json").write_text('{"base": {"kind": "Fp", "n": 9}, "vars": []}')
    paths["missing"] = str(d / "nope.json")
    return paths


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code, _ = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(argv):
    code, out, err = call(argv + ["--json"])
    return code, json.loads(out), err


def test_dim_at_point(files):
    code, obj, _ = call_json(["dim", files["z4x"], "--at", "2"])
    assert code == 0 and obj["result"] == {"point": 2, "dim": 1}


def test_dim_absolute_when_effective_dim_zero(files):
    code, obj, _ = call_json(["dim", files["zcurve"]])
    assert code == 0 and obj["result"]["dim"] == 1


def test_dim_unsupported(files):
    code, out, err = call(["dim", files["zx"]])
    assert code == 3 and out == "" and "effective dimension 0" in err
    code, out, err = call(["dim", files["zx"], files["zy"]])
    assert code == 3 and "characteristic 0" in err


def test_dim_of_tensor(files):
    code, obj, _ = call_json(["dim", files["z4x"], files["z6y"]])
    assert code == 0 and obj["result"] == {"dim": 2, "path": "nonzero-characteristic"}
    code, obj, _ = call_json(["dim", files["zx"], files["zy"], "--at", "5"])
    assert code == 0 and obj["result"]["dim"] == 2


def test_tensor_check_boolean(files):
    code, obj, _ = call_json(["tensor", files["bool2"], files["zcurve"], "--check"])
    r = obj["result"]
    assert code == 0 and r["agreement"] is True and r["path"] == "boolean"
    assert r["formula"] == r["oracle"] == 1


def test_tensor_without_check_has_no_oracle(files):
    code, obj, _ = call_json(["tensor", files["z4x"], files["z6y"]])
    assert code == 0 and obj["result"]["oracle"] is None


def test_tensor_witnessed(files):
    code, obj, _ = call_json(["tensor", files["f2xy"], files["f2xy"],
                              "--witness", files["w_ok"]])
    assert code == 0 and obj["result"]["witnessed"] == {"point": 2, "dim": 2}


def test_effspec_roundtrip(files):
    code, obj, _ = call_json(["effspec", files["zinv2"]])
    assert code == 0
    spec = EffectiveSpectrum.from_json(obj["result"])
    assert spec == EffectiveSpectrum(True, {2}, cofinite=True)
    assert spec.to_json() == obj["result"]
    code, obj, _ = call_json(["effspec", files["z4x"], files["z6y"]])
    assert EffectiveSpectrum.from_json(obj["result"]) == EffectiveSpectrum(False, {2})


def test_fibre(files):
    code, obj, _ = call_json(["fibre", files["zcurve"], "--at", "3"])
    assert code == 0
    assert obj["result"]["fibre"]["relations"] == ["2*y^3 + x^2"]
    assert obj["result"]["effective"] is True and obj["result"]["dim"] == 1
    code, obj, _ = call_json(["fibre", files["zx"]])
    assert obj["result"]["point"] == "generic"


def test_bounds(files):
    code, obj, _ = call_json(["bounds", files["zx"]])
    r = obj["result"]
    assert code == 0 and (r["lower"], r["upper"], r["dim"]) == (1, 3, None)
    assert r["polynomial_lower"] == 2


def test_af(files):
    code, obj, _ = call_json(["af", files["f2xy"], "--witness", files["w_ok"]])
    assert code == 0 and obj["result"]["holds"] is True and obj["result"]["height"] == 1


@pytest.mark.parametrize("name", ["w_outside", "w_improper", "w_nested"])
def test_inconsistent_witness_exit_code(files, name):
    code, obj, err = call_json(["af", files["f2xy"], "--witness", files[name]])
    assert code == 4 and obj["error"]["kind"] == "InconsistentWitnessError" and err


def test_check(files):
    code, obj, _ = call_json(["check", files["z4x"], files["z6y"], "--random", "6",
                              "--seed", "9"])
    r = obj["result"]
    assert code == 0 and r["seed"] == 9 and r["count"] == 7 and r["failures"] == 0


@pytest.mark.parametrize("argv", [
    ["dim", "{bad}"],
    ["dim", "{badjson}"],
    ["dim", "{badprime}"],
    ["dim", "{missing}"],
    ["tensor", "{zx}"],
    ["check", "{zx}"],
    ["bounds", "{zx}", "{zy}"],
    ["dim", "{z4x}", "--at", "3"],
    ["dim", "{z4x}", "--at", "4"],
    ["dim", "{q}", "--at", "2"],
    ["dim", "{z4x}", "--generic"],
    ["fibre", "{z4x}", "--at", "2", "--generic"],
    ["frobnicate", "{zx}"],
    ["dim", "{zx}", "--order", "weird"],
    ["tensor", "{q}", "{zx}"],
    ["af", "{f2xy}"],
    ["af", "{f2xy}", "--witness", "{w_badpoint}"],
    ["af", "{f2xy}", "--witness", "{w_ok}", "--at", "3"],
])
def test_invalid_inputs_exit_2(files, argv):
    code, out, err = call([a.format(**files) for a in argv])
    assert code == 2 and out == "" and err.startswith("fibredim: error:")


@pytest.mark.parametrize("argv", [
    ["tensor", "{bool2}", "{z3}"],
    ["dim", "{zx}"],
])
def test_unsupported_exit_3(files, argv):
    assert call([a.format(**files) for a in argv])[0] == 3


def test_parse_error_reports_position(files):
    code, out, err = call(["dim", files["bad"]])
    assert "line 2" in err and "column" in err


def test_json_error_is_single_object(files):
    code, out, err = call(["dim", files["bad"], "--json"])
    obj = json.loads(out)
    assert code == 2 and obj["exit_code"] == 2 and obj["error"]["kind"] == "ParseError"


def test_deterministic_json(files):
    argv = ["check", files["zcurve"], files["z4x"], "--random", "4", "--seed", "1", "--json"]
    assert call(argv)[1] == call(argv)[1]


def test_order_flag_does_not_change_answers(files):
    for verb, args in (("dim", [files["zcurve"]]), ("effspec", [files["zinv2"]]),
                       ("tensor", [files["z4x"], files["z6y"], "--check"])):
        a = call_json([verb, *args])[1]["result"]
        b = call_json([verb, *args, "--order", "lex"])[1]["result"]
        assert a == b


def test_help(capsys):
    assert main([]) == 2
    assert main(["--help"]) == 0
    assert "dim" in capsys.readouterr().out


def test_console_entry_point_no_color(files):
    env = dict(os.environ, NO_COLOR="1")
    argv = [sys.executable, "-m", "fibredim", "tensor", files["bool2"], files["zcurve"],
            "--check"]
    one = subprocess.run(argv, capture_output=True, env=env, check=True)
    two = subprocess.run(argv, capture_output=True, env=env, check=True)
    assert one.stdout == two.stdout
    assert b"\x1b[" not in one.stdout and b"agreement: true" in one.stdout
