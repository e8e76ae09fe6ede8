import subprocess

import jsonschema
import pytest

import folichar
from conftest import GOLDEN

LINEAR = "vars: x1 x2\nxi: x1*d1 + 2*x2*d2\n"


def test_commands_are_exposed():
    names = folichar.command_names()
    assert "classify" in names and "gb" in names
    assert callable(folichar.torus_fiber)


def test_session_roundtrip():
    s = folichar.Session("vars: x1 x2\nxi: x2*d1 - x1*d2\nf: (1/2)*x1^2\n")
    assert s.n == 2
    assert s.names() == ["xi", "f"]
    assert s.kind("f") == "polynomial"
    assert s.get("f") == "1/2*x1^2"
    assert s.evaluate("(x1 + x2)*(x1 - x2)") == "x1^2 - x2^2"
    again = folichar.Session(str(s))
    assert again.get("xi") == s.get("xi")


def test_parse_error_is_raised():
    with pytest.raises(folichar.FolicharError, match="SyntaxError at line 2, column 8"):
        folichar.Session("vars: x1 x2\ng: x1 + * 2\n")


@pytest.mark.parametrize(
    "ideal,tag",
    [
        ("(y1, y2)", "ZeroSection"),
        ("(x1, x2)", "FiberOverSingularPoint"),
        ("(x1*y1 + 2*x2*y2)", "WholeCharVariety"),
        ("(x2, y1)", "QuasiMinimalityViolation"),
    ],
)
def test_classify(ideal, tag):
    r = folichar.classify(LINEAR, ideal)
    assert r.exit_code == 0
    assert r["tag"] == tag
    assert r["certificate_verified"] is True


def test_darboux_and_gb():
    r = folichar.darboux("vars: x1 x2\nxi: x2*d1 - x1*d2\n", max_deg=2)
    assert r["results"] == [{"g": "x1^2 + x2^2", "cofactor": "0"}]
    assert folichar.gb("vars: x1\nU: (x1, x1 + 1)\n", "U")["basis"] == ["1"]


def test_exit_codes():
    assert folichar.invariant("vars: x1 x2\nxi: x2*d1 - x1*d2\n", "(x2)").exit_code == 1
    bad = folichar.run("vars: x1 x2\ng: x1 + * 2\n", "ch")
    assert bad.exit_code == 2 and bad["error"]["kind"] == "SyntaxError"
    tight = folichar.gb("vars: x1 x2 x3\nJ: (x1^2 + x2*x3 - 1, x2^2 + x1*x3 - 1, x3^2 + x1*x2 - 1)\n",
                        "J", budget=2)
    assert tight.exit_code == 3


def test_reports_validate(schema, golden_cases):
    for case in golden_cases:
        text = (GOLDEN / case["file"]).read_text()
        r = folichar.run(text, case["command"], *case["args"], **case.get("options", {}))
        jsonschema.validate(dict(r), schema)
        assert r.exit_code == case["exit"], case


def _cli_args(case):
    args = [case["command"], str(GOLDEN / case["file"]), *case["args"]]
    opts = case.get("options", {})
    if "max_deg" in opts:
        args += ["--max-deg", str(opts["max_deg"])]
    if opts.get("prolonged"):
        args.append("--prolonged")
    return args


def test_cli_json_and_human_agree(cli, schema, golden_cases):
    import json

    for case in golden_cases:
        j = subprocess.run([cli, *_cli_args(case), "--json"], capture_output=True, text=True)
        h = subprocess.run([cli, *_cli_args(case)], capture_output=True, text=True)
        assert j.returncode == case["exit"] == h.returncode, (case, j.stdout, j.stderr)
        report = json.loads(j.stdout)
        jsonschema.validate(report, schema)
        for key, value in report.items():
            if isinstance(value, bool):
                assert f"{key}: {'true' if value else 'false'}" in h.stdout
