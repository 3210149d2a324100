import json
from pathlib import Path

import pytest

from qagt.exactfield import symbolic, to_text
from qagt.partitions import compare, partition_text, partitions, partitions_upto
from qagt.symfunc import (
    SymFunc,
    c_lambda,
    c_prime_lambda,
    cauchy_check,
    eps_tilde,
    eps_u,
    inner,
    m_to_p,
    macdonald,
    p_inner,
    p_to_m,
    specialize_eps,
    specP_formula,
    specQ_formula,
)

GOLDEN = Path(__file__).parent / "golden" / "macdonald_P_m_basis.json"


def test_p_inner_examples(Fq):
    r = (1 - Fq.q) / (1 - Fq.t)
    assert p_inner(Fq, (1,), (1,)) == r
    assert p_inner(Fq, (2,), (1, 1)) == 0
    assert p_inner(Fq, (1, 1), (1, 1)) == 2 * r**2


def test_m_to_p_examples(Fq):
    assert m_to_p(Fq, (1,)) == SymFunc.p(Fq, (1,))
    half = Fq.const(1) / 2
    assert m_to_p(Fq, (1, 1)) == (SymFunc.p(Fq, (1, 1)) - SymFunc.p(Fq, (2,))).scale(half)


def test_m_p_round_trip(Fq):
    for lam in partitions_upto(6):
        assert p_to_m(m_to_p(Fq, lam), sum(lam)) == {lam: Fq.one}


def test_macdonald_small(Fq):
    q, t = Fq.q, Fq.t
    d = macdonald(Fq, (1,))
    assert d.P == SymFunc.p(Fq, (1,)) and d.c == 1 - t and d.c_prime == 1 - q
    assert d.J == SymFunc.p(Fq, (1,)).scale(1 - t)
    assert macdonald(Fq, (2,)).P_m[(1, 1)] == (1 + q) * (1 - t) / (1 - q * t)


def test_unitriangular_in_m_basis(Fq):
    for lam in partitions_upto(5):
        Pm = macdonald(Fq, lam).P_m
        assert Pm[lam] == 1
        for mu in Pm:
            assert compare("dominance", mu, lam) in ("less", "equal")


def test_orthogonality_norms_duality(Fq):
    for n in range(6):
        lams = partitions(n)
        for lam in lams:
            a = macdonald(Fq, lam)
            for mu in lams:
                b = macdonald(Fq, mu)
                if lam == mu:
                    assert inner(a.P, a.P) == c_prime_lambda(Fq, lam) / c_lambda(Fq, lam)
                    assert inner(a.J, a.J) == a.c * a.c_prime
                    assert inner(a.P, b.Q) == 1
                else:
                    assert inner(a.P, b.P) == 0
                    assert inner(a.P, b.Q) == 0


def test_specializations():
    F = symbolic("u", "alpha", "beta")
    u, a, b = F.var("u"), F.var("alpha"), F.var("beta")
    assert specialize_eps(SymFunc.p(F, (1,)), eps_u(F, u)) == (1 - u) / (1 - F.t)
    for lam in partitions_upto(4):
        d = macdonald(F, lam)
        assert specialize_eps(d.P, eps_u(F, u)) == specP_formula(F, lam, u)
        assert specialize_eps(d.Q, eps_tilde(F, a, b)) == specQ_formula(F, lam, a, b)


def test_specialization_negative_control():
    F = symbolic("u")
    u = F.var("u")
    d = macdonald(F, (2, 1))
    assert specialize_eps(d.P, eps_u(F, u)) != specP_formula(F, (2, 1), u * F.q)


@pytest.mark.parametrize("d", range(5))
def test_cauchy(Fq, d):
    assert cauchy_check(Fq, d)


def test_golden_m_basis(Fq):
    want = json.loads(GOLDEN.read_text())
    got = {partition_text(lam): {partition_text(mu): to_text(c) for mu, c in macdonald(Fq, lam).P_m.items()}
           for lam in partitions_upto(4)}
    assert got == want
