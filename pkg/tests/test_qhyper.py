import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qagt.exactfield import symbolic
from qagt.qhyper import (
    FAMILIES,
    compat_constraint_check,
    phi32,
    psi_generating_vs_direct,
    q_binomial_check,
    qpoch,
    saalschutz_check,
    section6_closed_forms,
)

Fabc = symbolic("a", "b", "c")
Fuvw = symbolic("u", "v", "w")
Fpsi = symbolic("alpha", "beta", "kappa", "delta", "w")


@settings(max_examples=30, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3))
def test_qpoch_splitting(m, n):
    x, q = Fabc.var("a"), Fabc.q
    assert qpoch(Fabc, x, m + n) == qpoch(Fabc, x, m) * qpoch(Fabc, x * q**m, n)


def test_qpoch_small():
    x, q = Fabc.var("a"), Fabc.q
    assert qpoch(Fabc, x, 0) == 1
    assert qpoch(Fabc, x, 2) == (1 - x) * (1 - q * x)
    assert qpoch(Fabc, x, -1) == 1 / (1 - x / q)


def test_phi32_terminates():
    q = Fabc.q
    a, b, c = (Fabc.var(x) for x in "abc")
    s = phi32(Fabc, (a, b, q**-2), (c, a * b / c), q, 3)
    assert s == phi32(Fabc, (a, b, q**-2), (c, a * b / c), q, 6)


@pytest.mark.parametrize("k", range(5))
def test_saalschutz(k):
    a, b, c = (Fabc.var(x) for x in "abc")
    _, _, ok = saalschutz_check(Fabc, a, b, c, k)
    assert ok


def test_q_binomial():
    assert q_binomial_check(Fabc, Fabc.var("a"), 6)
    assert q_binomial_check(Fabc, Fabc.var("a"), 4, base=Fabc.t)


@pytest.mark.parametrize("family", sorted(FAMILIES))
@pytest.mark.parametrize("j", range(4))
@pytest.mark.parametrize("k", range(4))
def test_closed_forms_three_way(family, j, k):
    u, v, w = (Fuvw.var(x) for x in "uvw")
    r = section6_closed_forms(Fuvw, family, j, k, u, v, w)
    assert r["gen_eq_direct"] and r["direct_eq_closed"]


def test_closed_form_anchors():
    u, v, w = (Fuvw.var(x) for x in "uvw")
    q, t = Fuvw.q, Fuvw.t
    assert section6_closed_forms(Fuvw, "col_col", 0, 0, u, v, w)["closed"] == 1
    assert section6_closed_forms(Fuvw, "row_row", 1, 0, u, v, w)["closed"] == w * (t * u / q - v)


@pytest.mark.parametrize("j,k", [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)])
def test_generic_psi(j, k):
    ps = [Fpsi.var(x) for x in ("alpha", "beta", "kappa", "delta")]
    d, g, p = psi_generating_vs_direct(Fpsi, j, k, *ps, Fpsi.var("w"))
    assert d == g == p


def test_compat_constraint():
    r = compat_constraint_check(Fuvw, Fuvw.var("u"), Fuvw.var("v"))
    assert r["constraint_holds"]
    assert not r["residual_phi"]
    assert r["residual_perturbed"]
    assert r["verdict"]


def test_compat_constraint_higher():
    r = compat_constraint_check(Fuvw, Fuvw.var("u"), Fuvw.var("v"), j=2, k=2)
    assert r["verdict"]
