"""The level-one vertex operator Phi(w): F_u -> F_v, its generalization psi, and checks.

Matrix elements are computed at argument 1 and multiplied by
``w^(deg bra - deg ket)``; every term of a homogeneous matrix element carries
exactly that power, so this is bookkeeping rather than an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fock import (
    LevelOne,
    RelationReport,
    Series,
    VertexOp,
    degree_slices,
    eta,
    from_symfunc,
    k_basis,
    pairing,
    phi_minus,
    phi_plus,
    vacuum,
    vadd,
    vscale,
    xi,
)
from .nekrasov import nekrasov_factor, two_point_rhs
from .partitions import conjugate, n_stat, partitions
from .symfunc import c_ratio, macdonald


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------


def vo_from_coefficients(F, A, B):
    """Single-slot normal-ordered exponential from A_n (of a_{-n} w^n) and B_n (of a_n w^{-n})."""
    creation = Series(F, fn=A)
    annihilation = Series(F, fn=lambda n: n * c_ratio(F, n) * B(n))
    return VertexOp(F, [(creation, annihilation)])


def phi_op(F, u, v):
    """Phi_u^v(w) at w = 1."""
    q, t = F.q, F.t

    def A(n):
        return -(v**n - (t / q) ** n * u**n) / (n * (1 - q**n))

    def B(n):
        return (v ** (-n) - u ** (-n)) / (n * (1 - q ** (-n)))

    return vo_from_coefficients(F, A, B)


def psi_op(F, alpha, beta, kappa, delta):
    """psi(w; alpha, beta, kappa, delta) at w = 1."""
    q = F.q

    def A(n):
        return (beta**n - alpha**n) / (n * (1 - q**n))

    def B(n):
        return (delta**n - kappa**n) / (n * (1 - q**n))

    return vo_from_coefficients(F, A, B)


def _creation_adjoint(F, op):
    """exp(sum A_n a_{-n}) acting on bras, i.e. exp(sum A_n a_n) as an annihilation operator."""
    return F.memo(("creation_adjoint", id(op)), lambda: VertexOp(
        F, [(None, None if A is None else A.map(lambda n, x: x * n * c_ratio(F, n)))
            for A, _ in op.slots]))


def _annihilation_only(F, op):
    return F.memo(("annihilation_only", id(op)), lambda: VertexOp(F, [(None, N) for _, N in op.slots]))


def vo_matrix_element(F, bra, op, ket, w=None):
    """<bra| op(w) |ket> for a normal-ordered exponential ``op`` given at argument 1.

    The annihilation exponential is expanded on the ket, the creation
    exponential on the bra side, and the results paired degree by degree.
    ``w=None`` returns ``{power of w: value}``.
    """
    left = _creation_adjoint(F, op)
    right = _annihilation_only(F, op)
    out = {}
    bra_slices, ket_slices = degree_slices(bra), degree_slices(ket)
    for b, fb in bra_slices.items():
        fpieces = left.annihilate_graded(fb)
        for k, gk in ket_slices.items():
            gpieces = right.annihilate_graded(gk)
            s = F.zero
            for jb, fp in fpieces.items():
                jk = k - (b - jb)
                gp = gpieces.get(jk)
                if gp:
                    s = s + pairing(F, fp, gp)
            if s:
                x = out.get(b - k)
                out[b - k] = s if x is None else x + s
    if op.prefactor != 1:
        out = {p: x * op.prefactor for p, x in out.items()}
    if w is None:
        return out
    total = F.zero
    for p, x in out.items():
        total = total + x * w**p
    return total


# ---------------------------------------------------------------------------
# factorization of matrix elements
# ---------------------------------------------------------------------------


def factorization_rhs(F, lam, mu, u, v, w):
    q, t = F.q, F.t
    return (nekrasov_factor(F, lam, mu, q * v / (t * u)) * w ** (sum(lam) - sum(mu))
            * (t * u / q) ** sum(lam) * (-v / q) ** (-sum(mu))
            * t ** n_stat(lam) * q ** n_stat(conjugate(mu)))


def k_factorization_rhs(F, lam, mu, u, v, w):
    q, t = F.q, F.t
    return (nekrasov_factor(F, lam, mu, q * v / (t * u)) * (-t * u * v * w / q) ** sum(lam)
            * (t * v * w / q) ** (-sum(mu)) * u ** sum(mu) * t ** (-n_stat(mu))
            * q ** n_stat(conjugate(mu)))


def verify_factorization(F, lam, mu, u, v, w):
    """(lhs, rhs, verdict) for <J_lam|Phi(w)|J_mu>."""
    op = F.memo(("phi", u, v), lambda: phi_op(F, u, v))
    Jl = from_symfunc(macdonald(F, lam).J)
    Jm = from_symfunc(macdonald(F, mu).J)
    lhs = vo_matrix_element(F, Jl, op, Jm, w)
    rhs = factorization_rhs(F, lam, mu, u, v, w)
    return lhs, rhs, lhs == rhs


def k_vectors(F, param, n, side):
    rep = LevelOne(F, param)
    return F.memo(("k_basis", param, n, side), lambda: {lam: vec for lam, vec, _ in k_basis(rep, n, side)})


def verify_k_factorization(F, lam, mu, u, v, w):
    """<K_lam|Phi|K_mu> with K from eigen-solving (bra in F_v, ket in F_u)."""
    op = F.memo(("phi", u, v), lambda: phi_op(F, u, v))
    Kl = k_vectors(F, v, sum(lam), "bra")[tuple(lam)]
    Km = k_vectors(F, u, sum(mu), "ket")[tuple(mu)]
    lhs = vo_matrix_element(F, Kl, op, Km, w)
    rhs = k_factorization_rhs(F, lam, mu, u, v, w)
    return lhs, rhs, lhs == rhs


def worked_examples(F, u, v, w):
    """The two explicit level-one matrix elements <X_(1)|Phi|X_0> and <X_(1)|Phi|X_(1)>."""
    from .fock import pbw_vector

    q, t = F.q, F.t
    op = F.memo(("phi", u, v), lambda: phi_op(F, u, v))
    bra = pbw_vector(LevelOne(F, v), (1,), "bra")
    ket0 = vacuum(F)
    ket1 = pbw_vector(LevelOne(F, u), (1,), "ket")
    e1 = vo_matrix_element(F, bra, op, ket0, w)
    e2 = vo_matrix_element(F, bra, op, ket1, w)
    expected1 = v * w * (v - t * u / q)
    expected2 = -(u**2) * (1 - q * v / u) * (1 - v / (t * u))
    return [("<X_(1)|Phi|X_0>", e1, expected1), ("<X_(1)|Phi|X_(1)>", e2, expected2)]


# ---------------------------------------------------------------------------
# the endomorphism T(u, v) and intertwining relations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TTransform:
    """T(tu, tv) on Fourier modes; ``gamma_half`` is the value of the central gamma^{1/2}."""

    tu: object
    tv: object
    gamma_half: object

    def terms(self, name, n):
        g = self.gamma_half**2
        gh = self.gamma_half
        if name == "x_plus":
            return [(1, (name, n)), (-self.tu, (name, n - 1))]
        if name == "x_minus":
            return [(1, (name, n)), (-g * self.tv, (name, n - 1))]
        if name in ("psi_plus", "psi_minus"):
            s = 1 if name == "psi_plus" else -1
            c1 = gh ** (-s) * self.tu + g * gh**s * self.tv
            return [(1, (name, n)), (-c1, (name, n - 1)), (g * self.tu * self.tv, (name, n - 2))]
        raise ValueError(name)


def intertwiner_transforms(F, eu, ev, w, gamma_half):
    """T on the target side and on the source side for Phi_u^v(w) (e_m products eu, ev)."""
    q, t = F.q, F.t
    left = TTransform(ev * w, t * eu * w / q, gamma_half)
    right = TTransform(t * ev * w / q, eu * w, gamma_half)
    return left, right


def explicit_current_terms(F, tag, n, u, v, w):
    """Both sides of the mode-n permutation relation written with eta, xi, phi^pm.

    Returns (left terms, right terms) as lists of (coefficient, current, mode) where
    the left ones act on the bra side (target space) and the right ones on the ket.
    """
    q, t = F.q, F.t
    tq = F.tq  # (t/q)^{k/4}
    if tag == "eta":
        return ([(v, n), (-v * v * w, n - 1)], [(u, n), (-u * t * v * w / q, n - 1)])
    if tag == "xi":
        return ([(1 / v, n), (-tq(6) * u * w / v, n - 1)], [(1 / u, n), (-tq(2) * w, n - 1)])
    if tag == "phi_plus":
        a1, a2 = tq(-1) * v * w, tq(7) * u * w
        b1, b2 = tq(3) * v * w, tq(3) * u * w
    elif tag == "phi_minus":
        a1, a2 = tq(1) * v * w, tq(5) * u * w
        b1, b2 = tq(5) * v * w, tq(1) * u * w
    else:
        raise ValueError(tag)
    lhs = [(F.one, n), (-(a1 + a2), n - 1), (a1 * a2, n - 2)]
    rhs = [(F.one, n), (-(b1 + b2), n - 1), (b1 * b2, n - 2)]
    return lhs, rhs


_CURRENT = {"eta": eta, "xi": xi, "phi_plus": phi_plus, "phi_minus": phi_minus}


def _current_mode(F, tag, k, vec, side):
    if tag == "phi_plus" and k < 0 or tag == "phi_minus" and k > 0:
        return {}
    op = _CURRENT[tag](F)
    if side == "ket":
        return op.mode(k, vec)
    adj = F.memo((tag, "adjoint"), op.adjoint)
    return adj.mode(-k, vec)


def _basis_vectors(F, window):
    return [{(lam,): F.one} for d in range(window + 1) for lam in partitions(d)]


def intertwine_check(F, tag, n_range, window, u, v, w):
    """Permutation relation of one current with Phi, on all basis bra/ket pairs of degree <= window."""
    op = F.memo(("phi", u, v), lambda: phi_op(F, u, v))
    lo, hi = n_range
    report = RelationReport(f"intertwine_{tag}", window, (lo, hi))
    basis = _basis_vectors(F, window)
    for n in range(lo, hi + 1):
        lterms, rterms = explicit_current_terms(F, tag, n, u, v, w)
        for bra in basis:
            # <bra| O Phi |ket> with O acting on the bra
            moved = {}
            for c, k in lterms:
                for key, x in _current_mode(F, tag, k, bra, "bra").items():
                    vadd(moved, key, c * x)
            for ket in basis:
                lhs = vo_matrix_element(F, moved, op, ket, w) if moved else F.zero
                rhs = F.zero
                for c, k in rterms:
                    img = _current_mode(F, tag, k, ket, "ket")
                    if img:
                        rhs = rhs + c * vo_matrix_element(F, bra, op, img, w)
                report.record(lhs == rhs, {"mode": n, "bra": repr(next(iter(bra))),
                                           "ket": repr(next(iter(ket)))})
    return report


def t_relation_check(F, rep_u, rep_v, phi_element, names, n_range, window, eu, ev, w, basis_u, basis_v):
    """T(e(v)w, q^{-1}t e(u)w)(a) Phi = Phi T(q^{-1}t e(v)w, e(u)w)(a) on matrix elements.

    ``phi_element(bra, ket)`` returns the matrix element of Phi (including w powers).
    ``rep_u``/``rep_v`` provide ``op(name, n, vec, side)``.
    """
    left, right = intertwiner_transforms(F, eu, ev, w, rep_u.gamma_half)
    report = RelationReport("T_intertwine", window, tuple(n_range))
    for name in names:
        for n in range(n_range[0], n_range[1] + 1):
            lt, rt = left.terms(name, n), right.terms(name, n)
            for bra in basis_v:
                moved = {}
                for c, (nm, k) in lt:
                    for key, x in rep_v.op(nm, k, bra, "bra").items():
                        vadd(moved, key, c * x)
                for ket in basis_u:
                    lhs = phi_element(moved, ket) if moved else F.zero
                    rhs = F.zero
                    for c, (nm, k) in rt:
                        img = rep_u.op(nm, k, ket, "ket")
                        if img:
                            rhs = rhs + c * phi_element(bra, img)
                    report.record(lhs == rhs, {"current": name, "mode": n})
    return report


# ---------------------------------------------------------------------------
# two-point function
# ---------------------------------------------------------------------------


def two_point_series(F, order, u, v, w):
    """Coefficients of (u z2 / w z1)^k of <0|Phi_v^w(z1) Phi_u^v(z2)|0>, both sides.

    The lhs inserts the K-basis of F_v with norms computed from the vectors.
    """
    op_uv = F.memo(("phi", u, v), lambda: phi_op(F, u, v))
    op_vw = F.memo(("phi", v, w), lambda: phi_op(F, v, w))
    vac = vacuum(F)
    lhs = []
    for k in range(order + 1):
        kets = k_vectors(F, v, k, "ket")
        bras = k_vectors(F, v, k, "bra")
        s = F.zero
        for lam in partitions(k):
            # <0|Phi(z1)|K_lam> carries z1^{-k}; <K_lam|Phi(z2)|0> carries z2^{k}
            m1 = vo_matrix_element(F, vac, op_vw, kets[lam]).get(-k, F.zero)
            m2 = vo_matrix_element(F, bras[lam], op_uv, vac).get(k, F.zero)
            s = s + m1 * m2 / pairing(F, bras[lam], kets[lam])
        lhs.append(s * (w / u) ** k)
    rhs = two_point_rhs(F, order, u, v, w)
    return lhs, rhs, [a == b for a, b in zip(lhs, rhs)]


def phi_psi_agreement(F, u, v, degree):
    """Phi(w) = psi(w; v, tu/q, q/v, q/u): compare all matrix elements of degree <= ``degree``."""
    q, t = F.q, F.t
    a = F.memo(("phi", u, v), lambda: phi_op(F, u, v))
    b = psi_op(F, v, t * u / q, q / v, q / u)
    basis = _basis_vectors(F, degree)
    count = 0
    for bra in basis:
        for ket in basis:
            if vo_matrix_element(F, bra, a, ket) != vo_matrix_element(F, bra, b, ket):
                return False, {"bra": repr(next(iter(bra))), "ket": repr(next(iter(ket)))}
            count += 1
    return True, {"pairs": count}


def vscale_dict(d, c):
    return vscale(d, c)
