import pytest

from freecurve.families import gen_prop4i, gen_stfam, gen_thm2ii, smooth_fermat
from freecurve.milnor import (INFINITE, CurveInput, annihilates, ar_dim, er_dim, full_profile,
                              koszul_image_rank, koszul_rank_formula, milnor_dim, smooth_reference_dim,
                              syzygy_basis_in_degree)
from freecurve.poly import X, Y, Z, dim_s

CUSP = Y * Z**2 - X**3
NODE = Y**2 * Z - X**2 * (X + Z)


def test_smooth_reference_is_the_fermat_profile():
    for d in (3, 4, 5, 6):
        p = full_profile(CurveInput(smooth_fermat(d)), engine="matrix")
        assert p.m == [smooth_reference_dim(d, k) for k in range(p.K + 1)]
        assert p.tau == 0 and p.ct == INFINITE and p.mdr == INFINITE
        # the socle sits in degree T and is one-dimensional
        assert smooth_reference_dim(d, 3 * (d - 2)) == 1
        assert smooth_reference_dim(d, 3 * (d - 2) + 1) == 0


def test_reference_symmetry():
    for d in range(3, 9):
        T = 3 * (d - 2)
        assert all(smooth_reference_dim(d, k) == smooth_reference_dim(d, T - k) for k in range(T + 1))


@pytest.mark.parametrize("f, m, tau, ct, st, mdr", [
    (CUSP, [1, 3, 3, 2, 2, 2], 2, 2, 3, 1),
    (NODE, [1, 3, 3, 1, 1, 1], 1, 3, 3, 2),
])
def test_cubic_profiles(f, m, tau, ct, st, mdr):
    p = full_profile(CurveInput(f))
    assert (p.m, p.tau, p.ct, p.st, p.mdr) == (m, tau, ct, st, mdr)
    assert p.plateau_verified and p.ct_mdr_consistent
    assert len(p.primes) >= 2


@pytest.mark.parametrize("spec", [gen_thm2ii(2), gen_stfam(6), gen_prop4i(2)], ids=lambda s: s.id)
def test_engines_agree(spec):
    c = CurveInput(spec.f)
    gb = full_profile(c, engine="gb")
    mat = full_profile(c, engine="matrix")
    qq = full_profile(c, engine="qq")
    assert gb.m == mat.m == qq.m
    assert gb.ar == mat.ar == qq.ar
    assert gb.er == mat.er == qq.er


def test_single_degree_ranks():
    c = CurveInput(gen_thm2ii(2).f)
    p = full_profile(c)
    for k in range(p.K + 1):
        assert milnor_dim(c, k) == p.m[k]
        assert ar_dim(c, k) == p.ar[k]
        assert koszul_image_rank(c, k) == koszul_rank_formula(c.d, k)
        assert er_dim(c, k) == p.er[k]


def test_relation_counts_follow_from_m():
    c = CurveInput(gen_stfam(7).f)
    p = full_profile(c)
    d = c.d
    for k in range(p.K + 1):
        assert p.ar[k] == 3 * dim_s(k) - dim_s(k + d - 1) + p.m_at(k + d - 1)


def test_syzygy_bases():
    c = CurveInput(gen_stfam(7).f)
    basis = syzygy_basis_in_degree(c, 2)
    assert len(basis) == 1 and annihilates(c, basis[0])
    assert syzygy_basis_in_degree(CurveInput(smooth_fermat(5)), 3) == []
    # the Koszul relation (f_y, -f_x, 0) appears in degree d - 1
    fermat = CurveInput(smooth_fermat(4))
    assert len(syzygy_basis_in_degree(fermat, 3)) == 3


def test_non_reduced_curve_has_no_plateau():
    p = full_profile(CurveInput(X**2 * (Y**2 - X * Z)))
    assert not p.plateau_verified
    assert any("non-reduced" in w for w in p.warnings)
    with pytest.raises(ValueError):
        p.m_at(p.K + 1)


def test_profile_guards():
    with pytest.raises(ValueError):
        full_profile(CurveInput(CUSP), engine="magic")
    with pytest.raises(ValueError):
        full_profile(CurveInput(X**2 + Y * Z))
    with pytest.raises(ValueError):
        CurveInput(X**3 + Y)


def test_profile_json_fields():
    js = full_profile(CurveInput(CUSP)).to_json()
    assert set(js) == {"d", "T", "tau", "ct", "st", "mdr", "plateau_verified", "m", "m_smooth", "ar", "er"}
