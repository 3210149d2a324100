"""Nekrasov factors N_{lam,mu}(u) and the 5D instanton sums built from them."""

from __future__ import annotations

from .partitions import arm, boxes, conjugate, leg, part, partition_tuples, partitions


def _qt(F, a, b):
    return F.qt(4 * a, 4 * b)


def nekrasov_factor(F, lam, mu, u):
    """Coordinate form: prod over (i,j) in lam and (k,l) in mu of the two hook-type factors."""
    lam, mu = tuple(lam), tuple(mu)
    lamc, muc = conjugate(lam), conjugate(mu)
    r = F.one
    for i, j in boxes(lam):
        r = r * (1 - u * _qt(F, -part(mu, i) + j - 1, -part(lamc, j) + i))
    for k, l in boxes(mu):
        r = r * (1 - u * _qt(F, part(lam, k) - l, part(muc, l) - k + 1))
    return r


def nekrasov_factor_armleg(F, lam, mu, u):
    """Arm/leg form, with arms and legs taken relative to the other partition."""
    r = F.one
    for b in boxes(lam):
        r = r * (1 - u * _qt(F, -arm(mu, b) - 1, -leg(lam, b)))
    for b in boxes(mu):
        r = r * (1 - u * _qt(F, arm(lam, b), leg(mu, b) + 1))
    return r


class NekrasovCache:
    """Memo keyed by (lam, mu, label); ``label`` names the argument expression."""

    def __init__(self, F):
        self.F = F
        self.table = {}

    def __call__(self, lam, mu, label, u):
        key = (tuple(lam), tuple(mu), label)
        v = self.table.get(key)
        if v is None:
            v = nekrasov_factor(self.F, lam, mu, u)
            self.table[key] = v
        return v


def z_su2_term(F, lam, mu, Q):
    """[N_{lam,lam}(1) N_{mu,mu}(1) N_{lam,mu}(Q) N_{mu,lam}(1/Q)]^{-1}."""
    one = F.one
    den = (nekrasov_factor(F, lam, lam, one) * nekrasov_factor(F, mu, mu, one)
           * nekrasov_factor(F, lam, mu, Q) * nekrasov_factor(F, mu, lam, 1 / Q))
    return 1 / den


def z_su2_K(F, order, Q=None):
    """Coefficients c_k of sum_k (Lambda^4 t/q)^k c_k, pure SU(2), k <= order."""
    if Q is None:
        Q = F.var("Q")
    out = []
    for k in range(order + 1):
        s = F.zero
        for a in range(k + 1):
            for lam in partitions(a):
                for mu in partitions(k - a):
                    s = s + z_su2_term(F, lam, mu, Q)
        out.append(s)
    return out


def e_m(F, vec):
    r = F.one
    for x in vec:
        r = r * x
    return r


def z_5d_Um(F, m, order, uvec, vvec, wvec, form="q"):
    """Per-order coefficients of the U(m), N_f = 2m instanton sum in (e_m(u) z1 / e_m(w) z2).

    ``form="q"``: denominators N_{lam_i,lam_j}(q v_i / t v_j).
    ``form="plain"``: extra (t/q)^{m|lam|} and denominators N_{lam_i,lam_j}(v_i/v_j).
    """
    q, t = F.q, F.t
    out = []
    for k in range(order + 1):
        s = F.zero
        for lv in partition_tuples(m, k):
            term = F.one
            for i in range(m):
                for j in range(m):
                    term = term * nekrasov_factor(F, (), lv[j], q * wvec[i] / (t * vvec[j]))
                    term = term * nekrasov_factor(F, lv[i], (), q * vvec[i] / (t * uvec[j]))
                    if form == "q":
                        term = term / nekrasov_factor(F, lv[i], lv[j], q * vvec[i] / (t * vvec[j]))
                    else:
                        term = term / nekrasov_factor(F, lv[i], lv[j], vvec[i] / vvec[j])
            s = s + term
        if form != "q":
            s = s * (t / q) ** (m * k)
        out.append(s)
    return out


def two_point_rhs(F, order, u, v, w):
    """Coefficients of (u z2 / w z1)^k in the level-one two-point function."""
    q, t = F.q, F.t
    out = []
    for k in range(order + 1):
        s = F.zero
        for lam in partitions(k):
            s = s + (nekrasov_factor(F, (), lam, q * w / (t * v)) * nekrasov_factor(F, lam, (), q * v / (t * u))
                     / nekrasov_factor(F, lam, lam, q / t))
        out.append(s)
    return out


def series_text(coeffs, var="x"):
    from .exactfield import to_text

    return "\n".join(f"[{var}^{k}] {to_text(c)}" for k, c in enumerate(coeffs))
