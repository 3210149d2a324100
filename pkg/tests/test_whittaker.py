import pytest

from qagt.exactfield import symbolic
from qagt.fock import vacuum
from qagt.levelm import LevelM
from qagt.symfunc import specQ_formula
from qagt.whittaker import (
    C_coefficient,
    C_coefficient_nekrasov,
    e_k,
    g_level1,
    g_levelm,
    gg_pairing,
    level1_as_levelm,
    m1_reduction_check,
    permutation_identity_check,
    solve_whittaker,
    whittaker_equals_phi,
)

F1 = symbolic("u", "v", "alpha", "beta", "Lambda")
a, b = F1.var("alpha"), F1.var("beta")
u, v, Lam = F1.var("u"), F1.var("v"), F1.var("Lambda")

DUAL_FINDING = ("solved dual Whittaker coefficients carry an extra t^{|lam|} relative to the "
                "conjectured product; see the decisions ledger")
GG_FINDING = "pairing differs from the instanton sum by (t/q)^d at order d >= 1; see the decisions ledger"


def _levelm_field(Fspec, m=2):
    uvec = tuple(Fspec.var(f"u{i}") for i in range(1, m + 1))
    avec = tuple(Fspec.var(f"alpha{i}") for i in range(1, m + 1))
    bvec = tuple(Fspec.var(f"beta{i}") for i in range(1, m + 1))
    return uvec, avec, bvec, Fspec.var("Lambda")


def test_level1_factorized_coefficients():
    _, _, coeffs = g_level1(F1, a, b, 4)
    bad = [lam for lam, (_, _, ok) in coeffs.items() if not ok]
    assert len(coeffs) == 1 + 1 + 2 + 3 + 5
    assert not bad


def test_level1_coefficient_negative_control():
    _, _, coeffs = g_level1(F1, a, b, 2)
    got, _, _ = coeffs[(2,)]
    assert got != specQ_formula(F1, (2,), a, F1.q * b)


def test_level1_conditions_to_degree_three():
    _, conds, _ = g_level1(F1, a, b, 3)
    assert [c["n"] for c in conds] == [0, 1, 2]
    assert all(c["ok"] for c in conds)


def test_permutation_identity():
    checked, failures = permutation_identity_check(F1, a, b, 2, (-3, 3))
    assert checked and not failures


def test_whittaker_is_phi_on_vacuum():
    assert whittaker_equals_phi(F1, u, v, 3)


def test_m1_reduction():
    assert all(ok for _, ok in m1_reduction_check(F1, u, Lam, a, 3))
    same, dims = level1_as_levelm(F1, u, Lam, a, 3)
    assert same and not any(dims.values())


def test_e_k():
    xs = (u, v, a)
    assert e_k(F1, xs, 0) == 1
    assert e_k(F1, xs, 2) == u * v + u * a + v * a
    assert e_k(F1, xs, 4) == 0


def test_solve_m1_unique():
    wv = solve_whittaker(F1, LevelM(F1, (u,)), Lam, (a,), 3)
    assert wv.dims == {0: 0, 1: 0, 2: 0, 3: 0}
    assert not wv.inconsistent
    assert wv.slices[0] == vacuum(F1)


def test_levelm_ket_coefficients(Fspec):
    uvec, avec, _, L = _levelm_field(Fspec)
    wv, report = g_levelm(Fspec, uvec, L, avec, 2, "ket")
    assert not any(wv.dims.values()) and not wv.inconsistent
    assert len(report) == 1 + 2 + 5
    for e in report:
        assert e["verdicts"]["C"], e["lam"]
        assert e["verdicts"]["nekrasov_form"], e["lam"]


def test_C_forms_agree_symbolic():
    F = symbolic("u1", "u2", "alpha1", "alpha2", "Lambda")
    uvec = (F.var("u1"), F.var("u2"))
    avec = (F.var("alpha1"), F.var("alpha2"))
    for lam in [((1,), ()), ((), (1,)), ((1,), (1,)), ((2,), ())]:
        assert C_coefficient(F, lam, F.var("Lambda"), uvec, avec) == \
            C_coefficient_nekrasov(F, lam, F.var("Lambda"), uvec, avec)


def _bra_report(Fspec):
    uvec, _, bvec, L = _levelm_field(Fspec)
    wv, report = g_levelm(Fspec, uvec, L, bvec, 2, "bra")
    assert not any(wv.dims.values()) and not wv.inconsistent
    return report


def test_levelm_bra_forms_consistent(Fspec):
    # the three conjectured forms of the dual coefficient agree with each other
    for e in _bra_report(Fspec):
        assert e["verdicts"]["product_forms_equal"], e["lam"]
        assert e["verdicts"]["reversed_C"] == e["verdicts"]["product"] == e["verdicts"]["inverted_C"]


def test_levelm_bra_t_rescaled(Fspec):
    for e in _bra_report(Fspec):
        assert e["diagnostic"]["matches_t_rescaled"], e["lam"]


@pytest.mark.xfail(strict=True, reason=DUAL_FINDING)
def test_levelm_bra_coefficients(Fspec):
    for e in _bra_report(Fspec):
        assert e["verdicts"]["product"], e["lam"]


def _gg_m1(order):
    F = symbolic("u1", "alpha1", "beta1", "Lambda")
    return gg_pairing(F, (F.var("u1"),), F.var("Lambda"), (F.var("alpha1"),), (F.var("beta1"),), order)


def test_gg_m1_order_zero_and_rescaled():
    res, info = _gg_m1(3)
    assert res[0]["ok"]
    assert all(r["rescaled_ok"] for r in res)
    assert not info["inconsistent"]


@pytest.mark.xfail(strict=True, reason=GG_FINDING)
def test_gg_m1_order_three():
    res, _ = _gg_m1(3)
    assert all(r["ok"] for r in res)


def test_gg_m2_rescaled(Fspec):
    uvec, avec, bvec, L = _levelm_field(Fspec)
    res, _ = gg_pairing(Fspec, uvec, L, avec, bvec, 1)
    assert res[0]["ok"] and all(r["rescaled_ok"] for r in res)


@pytest.mark.xfail(strict=True, reason=GG_FINDING)
def test_gg_m2_order_one(Fspec):
    uvec, avec, bvec, L = _levelm_field(Fspec)
    res, _ = gg_pairing(Fspec, uvec, L, avec, bvec, 1)
    assert all(r["ok"] for r in res)
