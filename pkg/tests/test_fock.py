import pytest

from qagt.exactfield import symbolic
from qagt.fock import (
    RELATIONS,
    DegreeCapExceeded,
    EigenvalueCollision,
    LevelOne,
    eigen_collisions,
    eta,
    f_coeff,
    from_symfunc,
    g_identity_check,
    heisenberg,
    k_basis,
    k_norm_formula,
    k_to_j_scalar,
    pairing,
    pbw_rank,
    pbw_vector,
    relation_check,
    vacuum,
    vscale,
    vsub,
)
from qagt.oracles import level1_k_examples, level1_k_examples_printed
from qagt.partitions import partitions, partitions_upto
from qagt.symfunc import c_ratio, epsilon, macdonald, p_inner


@pytest.fixture(scope="module")
def rep(Fu):
    return LevelOne(Fu, Fu.var("u"))


def _basis(F, d):
    return [{(lam,): F.one} for lam in partitions_upto(d)]


def test_heisenberg_bracket(Fq):
    for vec in _basis(Fq, 4):
        for m in range(-4, 5):
            for n in range(-4, 5):
                ab = heisenberg(Fq, m, heisenberg(Fq, n, vec))
                ba = heisenberg(Fq, n, heisenberg(Fq, m, vec))
                want = vscale(vec, m * c_ratio(Fq, abs(m))) if m + n == 0 and m else {}
                assert not vsub(vsub(ab, ba), want)


def test_a1_on_p1(Fq):
    assert heisenberg(Fq, 1, {((1,),): Fq.one}) == {((),): (1 - Fq.q) / (1 - Fq.t)}


def test_pairing_matches_p_inner(Fq):
    lams = partitions_upto(5)
    for lam in lams:
        for mu in lams:
            assert pairing(Fq, {(lam,): Fq.one}, {(mu,): Fq.one}) == p_inner(Fq, lam, mu)


def test_eta_zero_on_vacuum(Fq):
    assert eta(Fq).mode(0, vacuum(Fq)) == vacuum(Fq)


def test_degree_cap(Fq):
    with pytest.raises(DegreeCapExceeded):
        eta(Fq).mode(-3, vacuum(Fq), degree_cap=2)


def test_x0_eigen(rep, Fu):
    u = Fu.var("u")
    for lam in partitions_upto(4):
        P = from_symfunc(macdonald(Fu, lam).P)
        assert not vsub(rep.x_plus(0, P), vscale(P, u * epsilon(Fu, lam)))


def test_x0_not_diagonal_on_power_sums(rep, Fu):
    v = {((2,),): Fu.one}
    img = rep.x_plus(0, v)
    assert set(img) != {((2,),)}


def test_pbw_small(rep, Fu):
    u, t = Fu.var("u"), Fu.t
    assert pbw_vector(rep, ()) == vacuum(Fu)
    J1 = from_symfunc(macdonald(Fu, (1,)).J)
    assert not vsub(pbw_vector(rep, (1,)), vscale(J1, -u / t))


@pytest.mark.parametrize("n", range(5))
def test_pbw_independent(rep, n):
    fam = [pbw_vector(rep, lam) for lam in partitions(n)]
    assert pbw_rank(rep.F, fam) == len(fam)


def test_k_examples(rep, Fu):
    u = Fu.var("u")
    got = {lam: xc for n in (1, 2) for lam, _, xc in k_basis(rep, n)}
    want = level1_k_examples(Fu, u)
    for lam in want:
        assert got[lam] == want[lam]
    # the opposite sign on the (1,1) entry does not give an eigenvector
    assert got[(1, 1)] != level1_k_examples_printed(Fu, u)[(1, 1)]
    printed = level1_k_examples_printed(Fu, u)[(1, 1)]
    vec = {}
    for mu, c in printed.items():
        for k, x in pbw_vector(rep, mu).items():
            vec[k] = vec.get(k, Fu.zero) + c * x
    assert vsub(rep.x_plus(0, vec), vscale(vec, u * epsilon(Fu, (1, 1))))


@pytest.mark.parametrize("n", range(1, 5))
def test_k_to_j(rep, Fu, n):
    u = Fu.var("u")
    kets = {lam: v for lam, v, _ in k_basis(rep, n, "ket")}
    bras = {lam: v for lam, v, _ in k_basis(rep, n, "bra")}
    for lam in partitions(n):
        J = from_symfunc(macdonald(Fu, lam).J)
        assert not vsub(kets[lam], vscale(J, k_to_j_scalar(Fu, lam, u, "ket")))
        assert not vsub(bras[lam], vscale(J, k_to_j_scalar(Fu, lam, u, "bra")))
        if n <= 3:
            assert pairing(Fu, bras[lam], kets[lam]) == k_norm_formula(Fu, lam, u)


def test_eigen_collision_raised(Fq):
    with pytest.raises(EigenvalueCollision):
        eigen_collisions(Fq, {"a": Fq.q, "b": Fq.q})


def test_fxx_examples():
    F = symbolic("v")
    v = F.var("v")
    rv = LevelOne(F, v)
    b1 = rv.op("x_plus", 1, vacuum(F), "bra")
    f1 = f_coeff(F, 1)
    assert not vsub(rv.op("x_plus", 0, b1, "bra"), vscale(b1, v * (1 - f1)))
    assert not vsub(rv.op("x_plus", -1, b1, "bra"), vscale(vacuum(F), -v * v * f1))


@pytest.mark.parametrize("rel", RELATIONS)
def test_relations(rep, rel):
    r = relation_check(rep, rel, 2, (-3, 3))
    assert r.verdict == "pass", r.witness
    assert r.checked > 0


def test_relation_negative_control(Fu):
    """A rescaled x^- breaks the commutator relation."""

    class Twisted(LevelOne):
        def x_minus(self, n, vec, cap=None):
            return vscale(super().x_minus(n, vec, cap), 2)

    r = relation_check(Twisted(Fu, Fu.var("u")), "commutator_xpxm", 1, (-1, 1))
    assert r.verdict == "fail" and r.witness is not None


def test_g_identity(Fq):
    assert g_identity_check(Fq, 8)
