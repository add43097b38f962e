import json
from importlib import resources

import jsonschema
import pytest

from freecurve.cli import EXIT_INCONSISTENT, EXIT_INPUT, EXIT_OK, main


def _schema(name):
    return json.loads(resources.files("freecurve").joinpath(f"schemas/{name}.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_poly(capsys):
    code, out, _ = run(capsys, "analyze", "--poly", "(y*z+x^2)^2*y - x^5")
    assert code == EXIT_OK
    rep = json.loads(out)
    jsonschema.validate(rep, _schema("analyze"))
    assert rep["report"]["free"] is True
    assert (rep["report"]["d1"], rep["report"]["d2"], rep["report"]["tau"]) == (2, 2, 12)


def test_analyze_family_with_direct_defects(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "prop2i", "--d", "6", "--saturation", "direct", "--json")
    rep = json.loads(out)
    jsonschema.validate(rep, _schema("analyze"))
    assert code == EXIT_OK and rep["report"]["free"] and rep["report"]["tau"] == 19
    assert "uncomputed" not in rep["report"]["defects"]
    assert rep["report"]["rigid"] is True


def test_analyze_exact_field(capsys):
    code, out, _ = run(capsys, "analyze", "--poly", "y*z^2 - x^3", "--field", "qq", "--saturation", "both")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["profile"]["m"][:4] == [1, 3, 3, 2] and rep["primes"] == []
    assert rep["report"]["defects"] == [0, 1, 1, 0]


def test_analyze_kmax_override(capsys):
    code, out, _ = run(capsys, "analyze", "--poly", "x^4+y^4+z^4", "--kmax", "10")
    assert code == EXIT_OK and len(json.loads(out)["profile"]["m"]) == 11


def test_inhomogeneous_input(capsys):
    code, _, err = run(capsys, "analyze", "--poly", "x^2+y")
    assert code == EXIT_INPUT and "homogeneous" in err
    code, out, _ = run(capsys, "analyze", "--poly", "y - x^3", "--affine-degree", "3")
    assert code == EXIT_OK and json.loads(out)["curve"]["polynomial"] == "-x^3 + y*z^2"


def test_parse_error_points_at_the_offender(capsys):
    code, _, err = run(capsys, "analyze", "--poly", "x^3 + y^-3 + z^3")
    assert code == EXIT_INPUT
    assert "negative exponent at position 8" in err
    assert err.splitlines()[-1].index("^") == 2 + 8


def test_bad_family_arguments(capsys):
    assert run(capsys, "analyze", "--family", "nope")[0] == EXIT_INPUT
    assert run(capsys, "analyze", "--family", "thm2ii", "--d", "5")[0] == EXIT_INPUT
    assert run(capsys, "analyze", "--family", "stfam", "--d", "7", "--a", "0")[0] == EXIT_INPUT
    assert run(capsys, "analyze", "--poly", "x*y")[0] == EXIT_INPUT


def test_inconsistency_exit_code(capsys, monkeypatch):
    from freecurve import freeness

    monkeypatch.setattr(freeness, "freeness_by_balance", lambda p: not freeness.freeness_by_midpoint(p))
    code, out, _ = run(capsys, "analyze", "--poly", "(y*z+x^2)^2*y - x^5")
    assert code == EXIT_INCONSISTENT
    assert json.loads(out)["inconsistencies"]


def test_syzygies(capsys):
    code, out, _ = run(capsys, "syzygies", "--family", "thm2ii", "--k", "3", "--degree", "3")
    rel = json.loads(out)
    assert code == EXIT_OK and rel["dimension"] == 2
    code, out, _ = run(capsys, "syzygies", "--family", "stfam", "--d", "7", "--degree", "2")
    assert json.loads(out)["dimension"] == 1
    code, out, _ = run(capsys, "syzygies", "--poly", "x^5+y^5+z^5", "--degree", "3")
    assert json.loads(out)["relations"] == []
    assert run(capsys, "syzygies", "--poly", "x^3+y^3+z^3", "--degree", "-1")[0] == EXIT_INPUT


def test_families_list(capsys):
    code, out, _ = run(capsys, "families", "list")
    cat = json.loads(out)
    jsonschema.validate(cat, _schema("families"))
    assert code == EXIT_OK and len(cat) >= 10


def test_families_gen(capsys, tmp_path):
    target = tmp_path / "c13.txt"
    code, _, _ = run(capsys, "families", "gen", "prop4ii", "--k", "1", "--out", str(target))
    assert code == EXIT_OK
    from freecurve.parser import parse_expression

    assert parse_expression(target.read_text()).homogeneous_degree == 13
    meta = json.loads((tmp_path / "c13.txt.json").read_text())
    assert meta["degree"] == 13 and meta["expected"]["tau"] == 108
    code, out, _ = run(capsys, "families", "gen", "prop3", "--a", "2", "--b", "1")
    meta = json.loads(out)
    assert meta["degree"] == 5 and "/" in meta["polynomial"]
    code, _, err = run(capsys, "families", "gen", "nope")
    assert code == EXIT_INPUT and "known:" in err


def test_verify_paper_subset(capsys, tmp_path):
    target = tmp_path / "verify.json"
    code, out, _ = run(capsys, "verify-paper", "thm2ii", "arrangements", "--out", str(target))
    res = json.loads(out)
    jsonschema.validate(res, _schema("verify"))
    assert code == EXIT_OK and res["summary"]["failed"] == 0
    assert json.loads(target.read_text())["summary"] == res["summary"]
    taus = sorted(c["computed"]["tau"] for c in res["claims"] if c["id"].startswith("arrangement"))
    assert taus == [27, 37, 49]
    assert run(capsys, "verify-paper", "bogus")[0] == EXIT_INPUT


def test_verify_paper_is_deterministic(capsys):
    first = json.loads(run(capsys, "verify-paper", "thm2ii")[1])
    second = json.loads(run(capsys, "verify-paper", "thm2ii")[1])
    strip = lambda r: [{k: v for k, v in c.items() if k != "runtime_s"} for c in r["claims"]]  # noqa: E731
    assert strip(first) == strip(second)


def test_table_output(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdout.isatty", lambda: True)
    code, out, _ = run(capsys, "analyze", "--poly", "y*z^2 - x^3")
    assert code == EXIT_OK and out.startswith("curve") and "tau          2" in out
    code, out, _ = run(capsys, "verify-paper", "arrangements")
    assert "PASS" in out and "3/3 claims passed" in out


def test_help_exits_cleanly():
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0
