"""Whittaker vectors: the level-one exponential state and the level-m states by linear solve.

At level m the ket is written as sum_d Lambda_alpha^d |G_d> with |G_d> homogeneous
of degree d; the defining conditions become, for 1 <= k <= m and n >= 1,

    X^(k)_n G_d - X^(k)_{n-1} G_{d-1} + e_k(alpha/v) [n = 1] G_{d-1} = 0,

which is solved one slice at a time.  The dual state is handled the same way
with bra actions.  k = 0 gives an empty condition and X^(k) vanishes for k > m.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fock import (
    Series,
    VertexOp,
    eta,
    expand_in,
    from_symfunc,
    pairing,
    vacuum,
    vadd,
    vscale,
    vsub,
)
from .levelm import LevelM, eig_P, p_norm_formula
from .linalg import Eliminator
from .nekrasov import nekrasov_factor
from .partitions import arm, boxes, leg, partition_tuples, partitions, size, tuple_size
from .symfunc import macdonald, specQ_formula


# ---------------------------------------------------------------------------
# level one
# ---------------------------------------------------------------------------


def whittaker_exponential(F, alpha, beta):
    """exp(sum_n (1/n) (beta^n - alpha^n)/(1 - q^n) a_{-n}) as a creation-only operator."""
    q = F.q
    A = Series(F, fn=lambda n: (beta**n - alpha**n) / (n * (1 - q**n)))
    return VertexOp(F, [(A, None)])


def g_level1(F, alpha, beta, D):
    """|G> to degree D with its Whittaker conditions and its P-expansion report."""
    G = whittaker_exponential(F, alpha, beta).full(vacuum(F), D)
    et = eta(F)
    conditions = []
    # (eta_{n+1} - alpha eta_n) G = -beta [n = 0] G, exact on output degrees <= D - n - 1
    for n in range(D):
        lhs = vsub(et.mode(n + 1, G), vscale(et.mode(n, G), alpha))
        rhs = vscale(G, -beta) if n == 0 else {}
        diff = {k: x for k, x in vsub(lhs, rhs).items() if sum(map(sum, k)) <= D - n - 1}
        conditions.append({"n": n, "degrees": D - n - 1, "ok": not diff})
    coefficients = {}
    for d in range(D + 1):
        for lam in partitions(d):
            c = pairing(F, from_symfunc(macdonald(F, lam).Q), G)
            f = specQ_formula(F, lam, alpha, beta)
            coefficients[lam] = (c, f, c == f)
    return G, conditions, coefficients


def permutation_identity_check(F, alpha, beta, window, modes):
    """(1 - alpha/z) eta(z) E = (1 - beta/z) E eta(z) on matrix elements of degree <= window."""
    E = whittaker_exponential(F, alpha, beta)
    et = eta(F)
    basis = [{(lam,): F.one} for d in range(window + 1) for lam in partitions(d)]
    checked, failures = 0, []
    for k in range(modes[0], modes[1] + 1):
        for ket in basis:
            top = window + abs(k) + 1
            Eket = E.full(ket, top)
            lhs = vsub(et.mode(k, Eket), vscale(et.mode(k - 1, Eket), alpha))
            rhs = vsub(E.full(et.mode(k, ket), top), vscale(E.full(et.mode(k - 1, ket), top), beta))
            diff = {key: x for key, x in vsub(lhs, rhs).items() if sum(map(sum, key)) <= window}
            checked += 1
            if diff:
                failures.append((k, next(iter(ket))))
    return checked, failures


def whittaker_equals_phi(F, u, v, D):
    """|G> at alpha = v, beta = tu/q against Phi(1)|0> from the vertex operator."""
    from .vertex1 import phi_op

    G = whittaker_exponential(F, v, F.t * u / F.q).full(vacuum(F), D)
    P = phi_op(F, u, v).full(vacuum(F), D)
    return not vsub(G, P)


# ---------------------------------------------------------------------------
# level m: conjectured coefficients
# ---------------------------------------------------------------------------


def _qtv(F, q4, t4):
    return q4**4, t4**4, q4**2 / t4**2


def C_coefficient(F, lamvec, Lam, uvec, avec, q4=None, t4=None):
    """The conjectured C_lam(Lambda, u, alpha; q, t), box-product form.

    ``q4``, ``t4`` are the quarter powers standing for q and t, so that the
    inverted pair (q^-1, t^-1) is passed as (1/q4, 1/t4); v = sqrt(q/t).
    """
    q4 = F.var("q4") if q4 is None else q4
    t4 = F.var("t4") if t4 is None else t4
    q, t, v = _qtv(F, q4, t4)
    m = len(uvec)
    r = F.one
    for k in range(m):
        lk = lamvec[k]
        for l in range(k + 1, m):
            r = r * (uvec[k] / uvec[l]) ** size(lamvec[l])
        for box in boxes(lk):
            i, j = box
            a, ell = arm(lk, box), leg(lk, box)
            x = -Lam * q ** (-j) * (-(q ** (1 - j)) * t ** (i - 1)) ** k / (1 - q ** (-a - 1) * t ** (-ell))
            for l in range(m):
                x = x * (1 - v * uvec[k] / avec[l] * q ** (j - 1) * t ** (1 - i))
            for l in range(k):
                x = x / (1 - uvec[l] / uvec[k] * q ** arm(lamvec[l], box) * t ** (ell + 1))
            for l in range(k + 1, m):
                x = x / (1 - uvec[k] / uvec[l] * q ** (-arm(lamvec[l], box) - 1) * t ** (-ell))
            r = r * x
    return r


def _box_prefactor(F, lamvec, Lam, power):
    """prod_k prod_box -Lambda q^{-j} (-q^{1-j} t^{i-1})^{power(k)} / (1 - q^{-a-1} t^{-l})."""
    q, t = F.q, F.t
    r = F.one
    for k, lk in enumerate(lamvec):
        for box in boxes(lk):
            i, j = box
            r = r * (-Lam * q ** (-j) * (-(q ** (1 - j)) * t ** (i - 1)) ** power(k)
                     / (1 - q ** (-arm(lk, box) - 1) * t ** (-leg(lk, box))))
    return r


def C_coefficient_nekrasov(F, lamvec, Lam, uvec, avec):
    """The same conjecture written with Nekrasov factors."""
    m = len(uvec)
    v = F.tq(-2)
    r = _box_prefactor(F, lamvec, Lam, lambda k: k)
    for k in range(m):
        for l in range(m):
            r = r * nekrasov_factor(F, lamvec[k], (), v * uvec[k] / avec[l])
    for k in range(m):
        for l in range(k + 1, m):
            r = r / ((uvec[k] / uvec[l]) ** (-size(lamvec[l]))
                     * nekrasov_factor(F, lamvec[k], lamvec[l], uvec[k] / uvec[l]))
    return r


def Cbar_product(F, lamvec, Lam, uvec, bvec):
    """First explicit product for the dual coefficients."""
    m = len(uvec)
    v = F.tq(-2)
    r = _box_prefactor(F, lamvec, Lam, lambda k: m - 1 - k)
    for k in range(m):
        for l in range(m):
            r = r * nekrasov_factor(F, lamvec[k], (), v * uvec[k] / bvec[l])
    for k in range(m):
        for l in range(k + 1, m):
            r = r / ((uvec[l] / uvec[k]) ** (-size(lamvec[k]))
                     * nekrasov_factor(F, lamvec[l], lamvec[k], uvec[l] / uvec[k]))
    return r


def Cbar_product_dual(F, lamvec, Lam, uvec, bvec):
    """Second explicit product, in Lambda_beta and N_{0, lam}."""
    m = len(uvec)
    q, t = F.q, F.t
    v = F.tq(-2)
    Lb = Lambda_of(F, Lam, uvec, bvec)
    r = F.one
    for k, lk in enumerate(lamvec):
        for box in boxes(lk):
            i, j = box
            r = r * (-Lb * q ** (j - 1) * (-(q ** (1 - j)) * t ** (i - 1)) ** (-k)
                     / (1 - q ** (arm(lk, box) + 1) * t ** leg(lk, box)))
    for k in range(m):
        for l in range(m):
            r = r * nekrasov_factor(F, (), lamvec[k], v * bvec[l] / uvec[k])
    for k in range(m):
        for l in range(k + 1, m):
            r = r / ((uvec[l] / uvec[k]) ** (-size(lamvec[l]))
                     * nekrasov_factor(F, lamvec[l], lamvec[k], uvec[l] / uvec[k]))
    return r


def Lambda_of(F, Lam, uvec, avec):
    """Lambda prod_i v u_i / alpha_i."""
    v = F.tq(-2)
    r = Lam
    for u, a in zip(uvec, avec):
        r = r * v * u / a
    return r


def e_k(F, xs, k):
    """Elementary symmetric polynomial e_k."""
    c = [F.one] + [F.zero] * len(xs)
    for x in xs:
        for i in range(len(xs), 0, -1):
            c[i] = c[i] + c[i - 1] * x
    return c[k] if k <= len(xs) else F.zero


# ---------------------------------------------------------------------------
# level m: solving for the states
# ---------------------------------------------------------------------------


@dataclass
class WhittakerVec:
    level: int
    D: int
    side: str
    slices: dict  # degree -> vector (without the Lambda_alpha^d weight)
    weight: object  # Lambda_alpha or Lambda_beta
    dims: dict = field(default_factory=dict)
    inconsistent: list = field(default_factory=list)
    conditions: list = field(default_factory=list)

    def weighted(self, d):
        return vscale(self.slices[d], self.weight**d)


def solve_whittaker(F, rep, Lam, params, D, side="ket"):
    """Slice-by-slice solve of the level-m Whittaker conditions."""
    m = rep.m
    v = F.tq(-2)
    ek = [e_k(F, [a / v for a in params], k) for k in range(m + 1)]
    pref = [F.tq(-4) ** (1 - k) for k in range(m + 1)]  # (q/t)^{1-k}
    wv = WhittakerVec(m, D, side, {0: vacuum(F, m)}, Lambda_of(F, Lam, rep.u, params))
    wv.dims[0] = 0
    conds = [(k, n) for k in range(1, m + 1) for n in range(1, D + 1)]
    wv.conditions = conds
    for d in range(1, D + 1):
        keys = list(partition_tuples(m, d))
        el = Eliminator(order={c: (0, i) for i, c in enumerate(keys)})
        for k, n in conds:
            if n > d:
                continue
            # known part: - X_{n-1} G_{d-1} + e_k [n=1] G_{d-1}  (kets)
            if side == "ket":
                known = rep.X(k, n - 1, wv.slices[d - 1])
                if n == 1:
                    known = vsub(known, vscale(wv.slices[d - 1], ek[k]))
                cols = {c: rep.X(k, n, {c: F.one}) for c in keys}
                scale = F.one
            else:
                known = rep.X(k, 1 - n, wv.slices[d - 1], "bra")
                if n == 1:
                    known = vsub(known, vscale(wv.slices[d - 1], ek[k]))
                cols = {c: rep.X(k, -n, {c: F.one}, "bra") for c in keys}
                scale = pref[k]
            rows = {}
            for c, img in cols.items():
                for key, x in img.items():
                    rows.setdefault(key, {})[c] = x * scale
            for key in set(rows) | set(known):
                el.add(rows.get(key, {}), known.get(key, F.zero), label=(k, n, key))
        if el.inconsistent is not None:
            wv.inconsistent.append((d, repr(el.inconsistent[0])))
        values, free, undetermined = el.solution(keys)
        wv.dims[d] = len(undetermined)
        wv.slices[d] = {c: x for c, x in values.items() if x}
    return wv


def _p_expansion(F, rep, vec, n, side):
    labels = list(partition_tuples(rep.m, n))
    family = [eig_P(rep, lam, side) for lam in labels]
    return expand_in(F, vec, family, labels)


def g_levelm(F, uvec, Lam, params, D, side="ket"):
    """Solve for |G; Lambda, alpha> (or the dual) and compare its P-coefficients to the conjecture."""
    rep = F.memo(("levelm", tuple(uvec)), lambda: LevelM(F, uvec))
    wv = solve_whittaker(F, rep, Lam, params, D, side)
    m = rep.m
    report = []
    for d in range(D + 1):
        if wv.dims.get(d) or any(x[0] == d for x in wv.inconsistent):
            continue
        coeffs = _p_expansion(F, rep, wv.weighted(d), d, side)
        for lam in partition_tuples(m, d):
            got = coeffs.get(lam, F.zero)
            expo = sum((k - 1) * size(l) for k, l in enumerate(lam, 1))
            # kets carry (q/t)^{sum (1-k)|lam_k|/2}, bras the inverse power
            pre = F.tq(2) ** expo if side == "ket" else F.tq(-2) ** expo
            entry = {"lam": lam, "computed": got / pre}
            if side == "ket":
                c = C_coefficient(F, lam, Lam, rep.u, params)
                entry["formula"] = c
                entry["verdicts"] = {"C": got == pre * c,
                                     "nekrasov_form": c == C_coefficient_nekrasov(F, lam, Lam, rep.u, params)}
            else:
                entry.update(_cbar_verdicts(F, lam, Lam, rep.u, params, got / pre))
            report.append(entry)
    return wv, report


def _cbar_verdicts(F, lam, Lam, uvec, bvec, computed):
    q4, t4 = F.var("q4"), F.var("t4")
    v = F.tq(-2)
    lbar, ubar = tuple(reversed(lam)), tuple(reversed(uvec))
    c1 = C_coefficient(F, lbar, Lam, ubar, bvec)
    c2 = C_coefficient(F, lbar, Lambda_of(F, Lam, uvec, bvec), tuple(1 / u for u in ubar),
                       tuple(v**2 / b for b in bvec), 1 / q4, 1 / t4)
    c3 = Cbar_product(F, lam, Lam, uvec, bvec)
    c4 = Cbar_product_dual(F, lam, Lam, uvec, bvec)
    # diagnostic only: the solved dual state has been observed to carry t^{|lam|}
    diag = {"computed_over_formula": computed / c3 if c3 else None,
            "matches_t_rescaled": computed == F.t ** tuple_size(lam) * c3}
    return {"formula": c3, "diagnostic": diag, "verdicts": {
        "reversed_C": computed == c1,
        "inverted_C": computed == c2,
        "product": computed == c3,
        "product_forms_equal": c3 == c4,
    }}


def gg_rhs(F, order, uvec, Lam, avec, bvec):
    m = len(uvec)
    v = F.tq(-2)
    Lb = Lambda_of(F, Lam, uvec, bvec)
    out = []
    for d in range(order + 1):
        s = F.zero
        for lam in partition_tuples(m, d):
            term = (Lam * Lb) ** d
            for k in range(m):
                for l in range(m):
                    term = term * (nekrasov_factor(F, lam[k], (), v * uvec[k] / avec[l])
                                   * nekrasov_factor(F, (), lam[k], v * bvec[l] / uvec[k])
                                   / nekrasov_factor(F, lam[k], lam[l], uvec[k] / uvec[l]))
            s = s + term
        out.append(s)
    return out


def gg_pairing(F, uvec, Lam, avec, bvec, order):
    """Per-order <G;beta|G;alpha> from the solved states against the U(m) instanton sum.

    Also returns the sum of conjectured coefficients C Cbar prod c'/c as a third route.
    """
    rep = F.memo(("levelm", tuple(uvec)), lambda: LevelM(F, uvec))
    ket = solve_whittaker(F, rep, Lam, avec, order, "ket")
    bra = solve_whittaker(F, rep, Lam, bvec, order, "bra")
    rhs = gg_rhs(F, order, rep.u, Lam, avec, bvec)
    out = []
    for d in range(order + 1):
        lhs = pairing(F, bra.weighted(d), ket.weighted(d))
        via = F.zero
        for lam in partition_tuples(rep.m, d):
            via = via + (C_coefficient(F, lam, Lam, rep.u, avec) * Cbar_product(F, lam, Lam, rep.u, bvec)
                         * p_norm_formula(F, lam))
        tq = (F.t / F.q) ** d
        out.append({"order": d, "lhs": lhs, "rhs": rhs[d], "via_coefficients": via,
                    "ok": lhs == rhs[d], "coefficients_ok": via == rhs[d],
                    # diagnostic: instanton sum with Lambda Lambda_beta -> (t/q) Lambda Lambda_beta
                    "rescaled_ok": lhs == tq * rhs[d],
                    "lhs_over_rhs": lhs / rhs[d] if rhs[d] else None,
                    "via_over_rhs": via / rhs[d] if rhs[d] else None})
    return out, {"ket_dims": ket.dims, "bra_dims": bra.dims,
                 "inconsistent": ket.inconsistent + bra.inconsistent}


def level1_dictionary(F, u, Lam, alpha):
    """Level-one (alpha', beta') reproducing the m = 1 state: (Lambda v u/alpha, Lambda)."""
    return Lambda_of(F, Lam, (u,), (alpha,)), Lam


def m1_reduction_check(F, u, Lam, alpha, D):
    """At m = 1 the conjectured C agrees with the level-one factorized coefficients."""
    a1, b1 = level1_dictionary(F, u, Lam, alpha)
    out = []
    for d in range(D + 1):
        for lam in partitions(d):
            c = C_coefficient(F, (lam,), Lam, (u,), (alpha,))
            out.append((lam, c == specQ_formula(F, lam, a1, b1)))
    return out


def level1_as_levelm(F, u, Lam, alpha, D):
    """The m = 1 solved slices against the closed-form exponential state."""
    rep = LevelM(F, (u,))
    wv = solve_whittaker(F, rep, Lam, (alpha,), D)
    a1, b1 = level1_dictionary(F, u, Lam, alpha)
    G = whittaker_exponential(F, a1, b1).full(vacuum(F), D)
    total = {}
    for d in range(D + 1):
        for k, x in wv.weighted(d).items():
            vadd(total, k, x)
    return not vsub(total, G), wv.dims


