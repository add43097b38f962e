from freecurve.analysis import (Analysis, ProbeSummary, analyze, ct_st_probe, family_freeness_probe,
                                identity_violations)
from freecurve.families import gen_prop2i, gen_prop4i, gen_stfam, gen_thm2ii
from freecurve.poly import X, Y, Z
from freecurve.verify import random_nonfree_curves


def test_identities_hold_on_free_and_non_free_curves():
    for spec in (gen_thm2ii(3), gen_stfam(6), gen_prop4i(2)):
        a = analyze(spec, saturation="both")
        assert identity_violations(a) == [], spec.id


def test_identities_catch_a_broken_profile():
    a = analyze(gen_thm2ii(2), saturation="both")
    a.profile.m[3] += 1  # corrupt one Hilbert value
    assert identity_violations(a)


def test_random_curves_are_singular_and_not_free():
    curves = random_nonfree_curves(4, seed=11)
    assert [cid.split(",")[0] for cid, _ in curves] == ["random:d=5", "random:d=6", "random:d=5", "random:d=6"]
    for cid, f in curves:
        a = analyze(f, curve_id=cid, saturation="both")
        assert a.profile.tau > 0 and not a.report.free
        assert identity_violations(a) == []
    assert random_nonfree_curves(4, seed=11) == curves


def test_probes():
    free = analyze(gen_prop2i(6))
    assert ct_st_probe(free) == {"id": free.curve_id, "ct_plus_st_eq_T": True, "free": True,
                                 "counterexample": False}
    assert family_freeness_probe(free)["counterexample"] is False
    quartic = analyze(gen_prop4i(2))
    assert family_freeness_probe(quartic) is None  # degree 4 is outside the conjecture
    s = ProbeSummary()
    s.add(ct_st_probe(free))
    s.add(None)
    assert s.to_json() == {"checked": 1, "counterexamples": []}


def test_analysis_json_and_polynomial_input():
    a = analyze(Y * Z**2 - X**3, curve_id="cusp", saturation="direct")
    assert isinstance(a, Analysis) and not a.inconsistent
    js = a.to_json()
    assert js["curve"] == {"id": "cusp", "degree": 3, "polynomial": "-x^3 + y*z^2"}
    assert js["report"]["defects"] == [0, 1, 1, 0]
    assert js["saturation"]["method"] == ["direct-oracle"] * 4
