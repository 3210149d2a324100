from qagt.exactfield import Specialized, symbolic
from qagt.nekrasov import NekrasovCache, nekrasov_factor, nekrasov_factor_armleg, two_point_rhs, z_5d_Um, z_su2_K
from qagt.partitions import partitions_upto
from qagt.vertex1 import two_point_series

F = symbolic("x", "Q")
x, Q = F.var("x"), F.var("Q")


def test_small_factors():
    assert nekrasov_factor(F, (), (), x) == 1
    assert nekrasov_factor(F, (1,), (), x) == 1 - x
    assert nekrasov_factor(F, (1,), (1,), x) == (1 - x / F.q) * (1 - x * F.t)


def test_two_forms_agree():
    lams = partitions_upto(4)
    for lam in lams:
        for mu in lams:
            assert nekrasov_factor(F, lam, mu, x) == nekrasov_factor_armleg(F, lam, mu, x)


def test_self_factor_nonzero():
    for lam in partitions_upto(4):
        assert nekrasov_factor(F, lam, lam, F.one) != 0


def test_cache_transparent():
    c = NekrasovCache(F)
    for lam in partitions_upto(3):
        assert c(lam, (1,), "x", x) == nekrasov_factor(F, lam, (1,), x)
        assert c(lam, (1,), "x", x) == nekrasov_factor(F, lam, (1,), x)


def test_su2():
    q, t = F.q, F.t
    z = z_su2_K(F, 2, Q)
    assert z[0] == 1
    z10 = 1 / ((1 - 1 / q) * (1 - t) * (1 - Q) * (1 - t / (q * Q)))
    z01 = 1 / ((1 - 1 / q) * (1 - t) * (1 - 1 / Q) * (1 - Q * t / q))
    assert z[1] == z10 + z01
    assert z_su2_K(F, 2, 1 / Q) == z


def test_u5d_m1_vs_two_point():
    G = symbolic("u", "v", "w")
    u, v, w = G.var("u"), G.var("v"), G.var("w")
    lhs, _, _ = two_point_series(G, 2, u, v, w)
    assert z_5d_Um(G, 1, 2, (u,), (v,), (w,)) == lhs
    assert two_point_rhs(G, 2, u, v, w) == lhs


def test_u5d_denominator_forms():
    S = Specialized(4)
    vecs = [tuple(S.var(f"{p}{i}") for i in (1, 2)) for p in "uvw"]
    assert z_5d_Um(S, 2, 1, *vecs, form="q") == z_5d_Um(S, 2, 1, *vecs, form="plain")
    assert z_5d_Um(S, 2, 0, *vecs) == [1]
