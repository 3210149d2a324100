import pytest

from qagt.exactfield import symbolic
from qagt.fock import LevelOne, pairing, vacuum, vscale, vsub
from qagt.levelm import (
    IndexOutOfRange,
    LevelM,
    eig_P,
    eigenvalue,
    four_point_check,
    k_vec,
    levelm_mode_apply,
    m_vector,
    matrix_check,
    norm_check,
    p_norm_formula,
    phi_m_solve,
    pp_expansion,
    x0_matrix,
)
from qagt.oracles import levelm_p_expansions
from qagt.partitions import partition_tuples, partitions_upto
from qagt.vertex1 import phi_op, vo_matrix_element

F2 = symbolic("u1", "u2")
U2 = (F2.var("u1"), F2.var("u2"))
REP2 = LevelM(F2, U2)


def _uvw(F, m):
    return tuple(tuple(F.var(f"{p}{i}") for i in range(1, m + 1)) for p in "uvw")


def test_m1_currents_match_level_one(Fu):
    u = Fu.var("u")
    rep, one = LevelM(Fu, (u,)), LevelOne(Fu, u)
    for lam in partitions_upto(2):
        vec = m_vector(Fu, (lam,))
        for name in ("x_plus", "x_minus", "psi_plus", "psi_minus"):
            for n in (-2, -1, 0, 1, 2):
                assert rep.op(name, n, vec) == one.op(name, n, vec), (name, n, lam)


def test_X_vanishes_beyond_m():
    assert REP2.X_terms(3) == []
    assert REP2.X(3, -1, vacuum(F2, 2)) == {}


def test_X_index_errors():
    with pytest.raises(IndexOutOfRange):
        REP2.X_terms(0)
    with pytest.raises(IndexOutOfRange):
        REP2.lambda_tilde(3)


def test_X1_zero_mode_on_vacuum():
    vac = vacuum(F2, 2)
    assert levelm_mode_apply(REP2, "X", 1, 0, vac) == vscale(vac, U2[0] + U2[1])


def test_X2_zero_mode_on_vacuum():
    # the vacuum is an eigenvector of every X^(k)_0
    vac = vacuum(F2, 2)
    img = REP2.X(2, 0, vac)
    assert set(img) <= set(vac)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
@pytest.mark.parametrize("side", ["ket", "bra"])
def test_triangularity(n, side):
    _, report = x0_matrix(REP2, n, side)
    assert report.verdict == "pass", report.violations[:3]


def test_p_examples_coefficientwise():
    for (side, lam), want in levelm_p_expansions(F2, *U2).items():
        got = pp_expansion(F2, eig_P(REP2, lam, side), 2, sum(map(sum, lam)))
        assert got == {k: c for k, c in want.items() if c}, (side, lam)


def test_p_example_negative_control():
    table = levelm_p_expansions(F2, *U2)
    lam = ((), (1,))
    want = dict(table[("ket", lam)])
    want[((1,), ())] = -want[((1,), ())]
    assert pp_expansion(F2, eig_P(REP2, lam, "ket"), 2, 1) != want


@pytest.mark.parametrize("n", [1, 2])
def test_p_norms(n):
    for lam in partition_tuples(2, n):
        bra, ket = eig_P(REP2, lam, "bra"), eig_P(REP2, lam, "ket")
        assert pairing(F2, bra, ket) == p_norm_formula(F2, lam)


def test_eig_P_is_eigenvector():
    for lam in partition_tuples(2, 2):
        P = eig_P(REP2, lam)
        assert not vsub(REP2.X(1, 0, P), vscale(P, eigenvalue(REP2, lam)))


def test_k_vec_normalization():
    lam = ((1,), (1,))
    _, coeffs = k_vec(REP2, lam)
    assert coeffs[((1, 1), ())] == 1


def test_norm_conjecture_weight_one_symbolic():
    for lam in partition_tuples(2, 1):
        lhs, rhs, ok = norm_check(F2, REP2, lam)
        assert ok, (lam, lhs, rhs)


def test_norm_conjecture_weight_two(Fspec):
    rep = LevelM(Fspec, (Fspec.var("u1"), Fspec.var("u2")))
    for lam in partition_tuples(2, 2):
        lhs, rhs, ok = norm_check(Fspec, rep, lam)
        assert ok, lam


def test_phi_m1_matches_level_one(Fuvw):
    u, v = Fuvw.var("u"), Fuvw.var("v")
    phi = phi_m_solve(Fuvw, (u,), (v,), 2)
    assert not any(phi.dims.values()) and phi.inconsistent is None
    op = phi_op(Fuvw, u, v)
    for a in partitions_upto(2):
        for b in partitions_upto(2):
            bra, ket = m_vector(Fuvw, (a,)), m_vector(Fuvw, (b,))
            assert phi.element(Fuvw, bra, ket) == vo_matrix_element(Fuvw, bra, op, ket, Fuvw.one), (a, b)


def test_phi_m2_matrix_conjecture(Fspec):
    uvec, vvec, _ = _uvw(Fspec, 2)
    phi, results = matrix_check(Fspec, uvec, vvec, 2)
    assert not any(phi.dims.values())
    assert phi.inconsistent is None
    assert all(v["failures"] == 0 and v["checked"] for v in phi.validation.values())
    bad = [(lam, mu) for lam, mu, _, _, ok in results if not ok]
    assert not bad


def test_four_point_order_one(Fspec):
    uvec, vvec, wvec = _uvw(Fspec, 2)
    results, norms_agree = four_point_check(Fspec, 1, uvec, vvec, wvec)
    assert norms_agree
    assert all(ok for _, _, ok in results)
