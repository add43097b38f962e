from types import SimpleNamespace

import pytest

from freecurve.families import gen_line_arrangement, gen_prop2i, gen_prop4i, gen_stfam, gen_thm2ii, smooth_fermat
from freecurve.freeness import (UNCOMPUTED, conjecture_probe, euler_and_cuspidal_check, exponent_roots,
                                formula_range, freeness_by_balance, freeness_by_midpoint, freeness_report,
                                rigidity_check, saturation_defect_formula, saturation_defect_stacked_exact,
                                saturation_defects, saturation_defects_direct, wh_structural_checks)
from freecurve.milnor import CurveInput, InconsistencyError, full_profile
from freecurve.poly import X, Y, Z


def _profile(f):
    c = CurveInput(f)
    return c, full_profile(c)


def test_exponent_roots():
    assert exponent_roots(5, 12) == (2, 2)
    assert exponent_roots(9, 49) == (3, 5)
    assert exponent_roots(6, 20) is None  # delta = 5, not a square
    assert exponent_roots(6, 10) is None  # delta < 0
    for d1 in range(1, 8):
        for d2 in range(d1, 10):
            d = d1 + d2 + 1
            assert exponent_roots(d, (d - 1) ** 2 - d1 * d2) == (d1, d2)


@pytest.mark.parametrize("spec, free", [(gen_thm2ii(2), True), (gen_stfam(7), True), (gen_prop4i(2), False),
                                        (gen_line_arrangement("d7"), True)], ids=lambda s: getattr(s, "id", s))
def test_criteria_agree(spec, free):
    _, p = _profile(spec.f)
    assert freeness_by_balance(p) is free
    assert freeness_by_midpoint(p) is free


@pytest.mark.parametrize("f, defects", [
    (Y * Z**2 - X**3, [0, 1, 1, 0]),
    (Y**2 * Z - X**2 * (X + Z), [0, 2, 2, 0]),
    (gen_prop4i(2).f, [0, 0, 0, 1, 0, 0, 0]),
    (smooth_fermat(4), [1, 3, 6, 7, 6, 3, 1]),
])
def test_direct_defects_match_the_stacked_oracle(f, defects):
    c, p = _profile(f)
    assert saturation_defects_direct(c) == defects
    assert [saturation_defect_stacked_exact(c, j) for j in range(p.T + 1)] == defects


def test_smooth_curve_defect_is_the_whole_milnor_algebra():
    # the saturation of J_f is S itself when C is smooth, so n_j = m_j
    c, p = _profile(smooth_fermat(5))
    d = saturation_defects(p, c, "direct")
    assert d.n == p.m[: p.T + 1]
    assert rigidity_check(d, 5) is False


def test_formula_agrees_with_direct_oracle():
    for f in (gen_prop4i(2).f, gen_stfam(6).f, Y * Z**3 - X**4 + X**2 * Y**2):
        c, p = _profile(f)
        both = saturation_defects(p, c, "both")
        for j in formula_range(p.d):
            assert both.method[j] == "both-agree"
            assert both.n[j] == saturation_defect_formula(p, j)


def test_formula_mode_leaves_gaps():
    c, p = _profile(gen_prop2i(9).f)
    d = saturation_defects(p, c, "formula")
    assert UNCOMPUTED in d.n
    with pytest.raises(ValueError):
        saturation_defect_formula(p, 0)
    with pytest.raises(ValueError):
        saturation_defects(p, None, "direct")


def test_free_report_and_json_shape():
    spec = gen_thm2ii(3)
    c, p = _profile(spec.f)
    rep = freeness_report(p, c, spec.singularities, True, "both")
    assert rep.free and (rep.d1, rep.d2) == (3, 3) and rep.tau == 27
    assert rep.inconsistencies == [] and rep.hp_identities_ok and rep.wh_bounds_ok
    assert rep.euler.mu == 30 and rep.euler.cuspidal_consistent
    js = rep.to_json()
    assert set(js) == {"free", "d1", "d2", "tau", "delta", "criteria", "defects", "rigid", "conj10", "euler",
                       "cuspidal_consistent"}
    assert js["delta"] == 0 and js["defects"] == [0] * (p.T + 1) and js["rigid"] is True


def test_non_free_report():
    spec = gen_prop4i(2)
    c, p = _profile(spec.f)
    rep = freeness_report(p, c, spec.singularities, True, "direct")
    assert not rep.free and rep.d1 is None and rep.inconsistencies == []
    assert conjecture_probe(p, False)["consistent"]


def test_structural_bounds_raise_only_for_irreducible_inputs():
    fake = SimpleNamespace(d=6, tau=30)
    with pytest.raises(InconsistencyError):
        wh_structural_checks(fake, True, 2, 3)
    out = wh_structural_checks(fake, False, 2, 3)
    assert not out.ok and out.notes


def test_euler_check_without_metadata():
    _, p = _profile(gen_thm2ii(2).f)
    assert euler_and_cuspidal_check(p, 2, 2, None).EC is None
