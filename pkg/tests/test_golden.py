import json
from pathlib import Path

from freecurve.analysis import analyze
from freecurve.families import gen_valles_pencil
from freecurve.parser import parse_expression
from freecurve.verify import load_golden

GOLDEN = Path(__file__).parent / "golden"


def test_valles_values_are_pinned():
    pinned = json.loads((GOLDEN / "valles.json").read_text())
    assert {k: load_golden()["valles"][k] for k in ("tau", "d1", "d2", "free")} == \
        {k: pinned[k] for k in ("tau", "d1", "d2", "free")}
    a = analyze(gen_valles_pencil(), saturation="both")
    rep = a.report
    assert a.profile.d == pinned["degree"]
    assert (rep.free, rep.tau, rep.d1, rep.d2) == (pinned["free"], pinned["tau"], pinned["d1"], pinned["d2"])
    assert rep.criterion_ii and rep.criterion_iii and not rep.inconsistencies
    assert all(m == "both-agree" for j, m in enumerate(rep.defects.method) if m != "direct-oracle")


def test_analyze_report_matches_golden():
    want = json.loads((GOLDEN / "analyze_quintic.json").read_text())
    got = analyze(parse_expression("(y*z+x^2)^2*y - x^5"), saturation="both").to_json()
    got.pop("runtime_s")
    assert got == want
