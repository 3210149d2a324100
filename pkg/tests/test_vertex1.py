import pytest

from qagt.exactfield import Symbolic, symbolic
from qagt.fock import from_symfunc, vacuum
from qagt.partitions import partitions_upto
from qagt.symfunc import macdonald
from qagt.vertex1 import (
    intertwine_check,
    phi_op,
    phi_psi_agreement,
    two_point_series,
    verify_factorization,
    verify_k_factorization,
    vo_matrix_element,
    worked_examples,
)

F = symbolic("u", "v", "w")
u, v, w = F.var("u"), F.var("v"), F.var("w")
LAMS = partitions_upto(3)


def test_vacuum_element():
    assert vo_matrix_element(F, vacuum(F), phi_op(F, u, v), vacuum(F), w) == 1


def test_worked_examples():
    for label, got, want in worked_examples(F, u, v, w):
        assert got == want, label


def test_factorization_single_box():
    lhs, rhs, ok = verify_factorization(F, (1,), (), u, v, w)
    assert ok and lhs == w * (F.t * u / F.q - v)
    assert verify_factorization(F, (), (), u, v, w)[:2] == (1, 1)


@pytest.mark.parametrize("lam", LAMS, ids=str)
def test_factorization(lam):
    for mu in LAMS:
        assert verify_factorization(F, lam, mu, u, v, w)[2]
        assert verify_k_factorization(F, lam, mu, u, v, w)[2]


def test_factorization_negative_control():
    # swapping u and v in the operator breaks the formula
    op = phi_op(F, v, u)
    J = from_symfunc(macdonald(F, (1,)).J)
    lhs = vo_matrix_element(F, J, op, vacuum(F), w)
    assert lhs != verify_factorization(F, (1,), (), u, v, w)[1]


def test_w_grading():
    op = phi_op(F, u, v)
    for lam in LAMS:
        for mu in LAMS:
            bra, ket = from_symfunc(macdonald(F, lam).J), from_symfunc(macdonald(F, mu).J)
            el = vo_matrix_element(F, bra, op, ket)
            assert set(el) <= {sum(lam) - sum(mu)}


@pytest.mark.parametrize("tag,modes,window", [
    ("eta", (1, 1), 1), ("phi_plus", (0, 0), 0), ("xi", (-2, 2), 2),
    ("eta", (-3, 3), 2), ("xi", (-3, 3), 2), ("phi_plus", (-3, 3), 2), ("phi_minus", (-3, 3), 2),
])
def test_intertwining(tag, modes, window):
    r = intertwine_check(F, tag, modes, window, u, v, w)
    assert r.verdict == "pass", r.witness


def test_intertwining_negative_control():
    # a private field whose cached Phi_u^v is really Phi_u^{qv}
    G = Symbolic(("u", "v", "w"))
    gu, gv, gw = G.var("u"), G.var("v"), G.var("w")
    G.cache[("phi", gu, gv)] = phi_op(G, gu, G.q * gv)
    r = intertwine_check(G, "eta", (0, 1), 1, gu, gv, gw)
    assert r.verdict == "fail"


def test_two_point():
    lhs, rhs, oks = two_point_series(F, 3, u, v, w)
    assert lhs[0] == rhs[0] == 1
    assert all(oks)


def test_phi_is_psi():
    ok, info = phi_psi_agreement(F, u, v, 3)
    assert ok, info
