"""The level-m representation on the m-fold tensor Fock space.

Currents are finite sums of m-slot normal-ordered exponentials, obtained by
iterating the coproduct one slot at a time:

    psi^pm(z) -> phi^pm(g2^{pm 1/2} z) (x) psi^pm(g1^{-+1/2} z)
    x^+(z)    -> eta(z) (x) 1 + phi^-(g1^{1/2} z) (x) x^+(g1 z)
    x^-(z)    -> xi(g2 z) (x) psi^+(g2^{1/2} z) + 1 (x) x^-(z)

with g1^{1/2} = (t/q)^{1/4} on the first slot and g2^{1/2} = (t/q)^{(m-1)/4}
on the remaining ones.  The x^+ terms are the u_i Lambda_i.

Vectors use the fock conventions (p-basis keys per slot, bras stored as kets).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .fock import (
    DegreeCapExceeded,
    EigenvalueCollision,
    IDENTITY_SLOT,
    VertexOp,
    contraction_data,
    ContractionPole,
    eta_slot,
    expand_in,
    normal_product,
    pairing,
    phi_minus_slot,
    phi_plus_slot,
    tensor_of,
    vacuum,
    vadd,
    vscale,
    vsub,
    xi_slot,
)
from .linalg import Eliminator
from .nekrasov import nekrasov_factor, z_5d_Um
from .partitions import compare, conjugate, cumulative_vector, n_stat, partition_tuples, size, tuple_size
from .symfunc import _p_in_m, c_lambda, c_prime_lambda, epsilon, m_to_p, macdonald


class IndexOutOfRange(ValueError):
    pass


def _scale_slot(slot, s):
    """A slot of V(z) -> the slot of V(s z)."""
    A, N = slot
    return (None if A is None else A.scaled(s), None if N is None else N.scaled(1 / s))


def _scale_term(slots, s):
    return [_scale_slot(x, s) for x in slots]


def _currents(F, uvec):
    """name -> list of (coefficient, slots) for the m = len(uvec) representation."""
    m = len(uvec)
    u1 = uvec[0]
    if m == 1:
        return {
            "x_plus": [(u1, [eta_slot(F)])],
            "x_minus": [(1 / u1, [xi_slot(F)])],
            "psi_plus": [(F.one, [phi_plus_slot(F)])],
            "psi_minus": [(F.one, [phi_minus_slot(F)])],
        }
    rest = _currents(F, uvec[1:])
    g1h, g1 = F.tq(1), F.tq(2)
    g2h, g2 = F.tq(m - 1), F.tq(2 * (m - 1))
    ident = [IDENTITY_SLOT] * (m - 1)
    out = {}
    out["x_plus"] = [(u1, [eta_slot(F)] + ident)] + [
        (c, [_scale_slot(phi_minus_slot(F), g1h)] + _scale_term(sl, g1)) for c, sl in rest["x_plus"]
    ]
    (_, pp), = rest["psi_plus"]
    (_, pm), = rest["psi_minus"]
    out["psi_plus"] = [(F.one, [_scale_slot(phi_plus_slot(F), g2h)] + _scale_term(pp, 1 / g1h))]
    out["psi_minus"] = [(F.one, [_scale_slot(phi_minus_slot(F), 1 / g2h)] + _scale_term(pm, g1h))]
    out["x_minus"] = [(1 / u1, [_scale_slot(xi_slot(F), g2)] + _scale_term(pp, g2h))] + [
        (c, [IDENTITY_SLOT] + sl) for c, sl in rest["x_minus"]
    ]
    return out


def _product_terms(F, lambdas, k):
    """X^(k)(z) = X^(1)(p^{k-1} z) ... X^(1)(z) as a list of (coefficient, op, index tuple).

    ``lambdas`` is the list of (u_i, Lambda_i(z)).  Each ordered product is
    rewritten as its contraction scalar times the normal-ordered product; the
    orders of vanishing of all pair contractions are summed before deciding
    whether the term drops.
    """
    p = F.tq(-4)  # q/t
    m = len(lambdas)
    out = []
    for idx in product(range(m), repeat=k):
        ops = [lambdas[i][1].scaled(p ** (k - 1 - a)) for a, i in enumerate(idx)]
        scalar, order = F.one, 0
        for a in range(k):
            for b in range(a + 1, k):
                c, o = contraction_data(F, ops[a], ops[b])
                scalar = scalar * c
                order += o
        if order > 0:
            continue
        if order < 0:
            raise ContractionPole(f"pole in X^({k}) term {idx}")
        coef = scalar
        for i in idx:
            coef = coef * lambdas[i][0]
        out.append((coef, normal_product(F, ops), tuple(i + 1 for i in idx)))
    return out


class LevelM:
    """rho_u^(m) on the tensor Fock space; ``op`` has the LevelOne signature."""

    def __init__(self, F, uvec):
        self.F = F
        self.u = tuple(uvec)
        self.m = len(self.u)
        self.level = self.m
        self.level_slots = self.m
        self.gamma_half = F.tq(self.m)
        self.terms = {name: [(c, VertexOp(F, sl)) for c, sl in terms]
                      for name, terms in _currents(F, self.u).items()}
        self._adj = {}
        self.x_products = {}

    # -- currents ---------------------------------------------------------
    def lambda_tilde(self, i):
        if not 1 <= i <= self.m:
            raise IndexOutOfRange(f"Lambda_{i} for m = {self.m}")
        return self.terms["x_plus"][i - 1][1]

    def X_terms(self, k):
        """The (coefficient, op) terms of X^(k); an empty list means X^(k) = 0."""
        if k < 1:
            raise IndexOutOfRange(f"X^({k})")
        if k == 1:
            return self.terms["x_plus"]
        key = "X%d" % k
        if key not in self.terms:
            lambdas = [(self.u[i], self.lambda_tilde(i + 1)) for i in range(self.m)]
            prod_terms = _product_terms(self.F, lambdas, k)
            self.x_products[k] = [idx for _, _, idx in prod_terms]
            self.terms[key] = [(c, op) for c, op, _ in prod_terms]
        return self.terms[key]

    def _adjoint(self, op):
        a = self._adj.get(id(op))
        if a is None:
            a = self._adj[id(op)] = (op, op.adjoint())
        return a[1]

    def apply_terms(self, terms, n, vec, side="ket", cap=None):
        out = {}
        for c, op in terms:
            img = op.mode(n, vec, cap) if side == "ket" else self._adjoint(op).mode(-n, vec, cap)
            for key, x in img.items():
                vadd(out, key, c * x)
        return out

    def op(self, name, n, vec, side="ket"):
        """Mode n of x_plus, x_minus, psi_plus, psi_minus or X<k> on a ket (or a bra)."""
        if name.startswith("X"):
            terms = self.X_terms(int(name[1:]))
        else:
            if name == "psi_plus" and n < 0 or name == "psi_minus" and n > 0:
                return {}
            terms = self.terms[name]
        return self.apply_terms(terms, n, vec, side)

    def X(self, k, n, vec, side="ket", cap=None):
        return self.apply_terms(self.X_terms(k), n, vec, side, cap)

    def lambda_mode(self, i, n, vec, cap=None):
        return self.lambda_tilde(i).mode(n, vec, cap)


def levelm_mode_apply(rep, tag, index, n, vec, degree_cap=None):
    """Mode n of Lambda_i (tag ``lambda_tilde``) or X^(k) (tag ``X``) on a ket."""
    if tag == "lambda_tilde":
        return rep.lambda_mode(index, n, vec, degree_cap)
    if tag == "X":
        return rep.X(index, n, vec, "ket", degree_cap)
    raise ValueError(tag)


def e_m(F, vec):
    r = F.one
    for x in vec:
        r = r * x
    return r


# ---------------------------------------------------------------------------
# PBW vectors, m-basis and X^(1)_0
# ---------------------------------------------------------------------------


def pbw_vector(rep, lamvec, side="ket"):
    """|X_lam> = X^(1)_{-lam1_1} ... X^(m)_{-lamm_1} ... |0>, and the prefactored bra."""
    F = rep.F
    v = vacuum(F, rep.m)
    if side == "ket":
        for k in range(rep.m, 0, -1):
            for p in reversed(lamvec[k - 1]):
                v = rep.X(k, -p, v)
        return v
    # <0| ... X^(m)_{l2} X^(m)_{l1} ... X^(1)_{l1}: the leftmost factor acts first
    for k in range(rep.m, 0, -1):
        for p in reversed(lamvec[k - 1]):
            v = rep.X(k, p, v, "bra")
    pref = F.tq(-4) ** sum((k - 1) * size(lam) for k, lam in enumerate(lamvec, 1))
    return vscale(v, pref)


def m_vector(F, lamvec):
    return tensor_of(F, [m_to_p(F, lam) for lam in lamvec])


def m_coefficients(F, vec):
    """Coefficients of a p-basis vector in the m_lam tensor basis."""
    out = {}
    for key, x in vec.items():
        acc = [((), x)]
        for lam in key:
            row = _p_in_m(size(lam))[lam]
            acc = [(k + (nu,), c * F.const(r)) for k, c in acc for nu, r in row.items()]
        for k, c in acc:
            vadd(out, k, c)
    return out


def eigenvalue(rep, lamvec):
    F = rep.F
    s = F.zero
    for u, lam in zip(rep.u, lamvec):
        s = s + u * epsilon(F, lam)
    return s


@dataclass
class TriangularityReport:
    m: int
    n: int
    side: str
    order: str
    entries: int = 0
    violations: list = field(default_factory=list)

    @property
    def verdict(self):
        return "pass" if not self.violations else "fail"


def x0_matrix(rep, n, side="ket"):
    """X^(1)_0 on the weight-n slice in the m-basis: {lam: {mu: coefficient}} plus triangularity."""
    F = rep.F

    def build():
        kind = "L" if side == "ket" else "R"
        report = TriangularityReport(rep.m, n, side, kind)
        mat = {}
        for lam in partition_tuples(rep.m, n):
            img = rep.X(1, 0, m_vector(F, lam), side)
            row = m_coefficients(F, img)
            mat[lam] = row
            for mu, c in row.items():
                report.entries += 1
                if compare(kind, mu, lam) not in ("less", "equal"):
                    report.violations.append((lam, mu))
        return mat, report

    return F.memo(("x0_matrix", rep.u, n, side), build)


def _linear_extension(m, n, kind):
    """Tuples of weight n, greatest first in a linear extension of ``kind``."""
    width = max(1, n)
    return sorted(partition_tuples(m, n), key=lambda lv: cumulative_vector(kind, lv, width), reverse=True)


def eig_P(rep, lamvec, side="ket", check=True):
    """The unitriangular X^(1)_0 eigenvector m_lam + lower terms (L order on kets, R on bras)."""
    F = rep.F
    lamvec = tuple(tuple(x) for x in lamvec)

    def build():
        n = tuple_size(lamvec)
        mat, _ = x0_matrix(rep, n, side)
        eps = eigenvalue(rep, lamvec)
        if mat[lamvec].get(lamvec, F.zero) != eps:
            raise ValueError(f"diagonal entry of {lamvec} is not its eigenvalue")
        order = _linear_extension(rep.m, n, "L" if side == "ket" else "R")
        coeffs = {lamvec: F.one}
        for nu in order[order.index(lamvec) + 1:]:
            s = F.zero
            for mu, a in coeffs.items():
                x = mat[mu].get(nu)
                if x:
                    s = s + a * x
            if not s:
                continue
            gap = eps - mat[nu].get(nu, F.zero)
            if not gap:
                raise EigenvalueCollision(f"eigenvalues of {lamvec} and {nu} coincide")
            coeffs[nu] = s / gap
        vec = {}
        for mu, a in coeffs.items():
            for key, x in m_vector(F, mu).items():
                vadd(vec, key, a * x)
        if check and vsub(rep.X(1, 0, vec, side), vscale(vec, eps)):
            raise ValueError(f"P_{lamvec} ({side}) is not an eigenvector")
        return vec

    return F.memo(("eig_P", rep.u, lamvec, side), build)


def pp_expansion(F, vec, m, n):
    """Coefficients of vec on the P_lam1 (x) ... (x) P_lamm basis (pairing with Q tensors)."""
    out = {}
    for mu in partition_tuples(m, n):
        c = pairing(F, tensor_of(F, [macdonald(F, lam).Q for lam in mu]), vec)
        if c:
            out[mu] = c
    return out


def p_norm_formula(F, lamvec):
    r = F.one
    for lam in lamvec:
        r = r * c_prime_lambda(F, lam) / c_lambda(F, lam)
    return r


# ---------------------------------------------------------------------------
# integral basis and its norm
# ---------------------------------------------------------------------------


def k_vec(rep, lamvec, side="ket"):
    """(K vector, its PBW coefficients): P rescaled to unit coefficient on X_((1^n), 0, ..., 0)."""
    F = rep.F
    lamvec = tuple(tuple(x) for x in lamvec)

    def build():
        n = tuple_size(lamvec)
        if n == 0:
            v = vacuum(F, rep.m)
            return v, {lamvec: F.one}
        labels = list(partition_tuples(rep.m, n))
        family = F.memo(("pbw_family", rep.u, n, side), lambda: [pbw_vector(rep, mu, side) for mu in labels])
        P = eig_P(rep, lamvec, side)
        coeffs = expand_in(F, P, family, labels)
        ones = ((1,) * n,) + ((),) * (rep.m - 1)
        c1 = coeffs.get(ones, F.zero)
        if not c1:
            raise ValueError(f"P_{lamvec} has no X_{ones} component")
        inv = 1 / c1
        return vscale(P, inv), {mu: c * inv for mu, c in coeffs.items() if c}

    return F.memo(("k_vec", rep.u, lamvec, side), build)


def k_norm_conjecture(F, uvec, lamvec):
    """The conjectured <K|K>."""
    m = len(uvec)
    q, t = F.q, F.t
    r = ((-1) ** m * (t / q) ** (m - 1) * e_m(F, uvec)) ** tuple_size(lamvec)
    for u, lam in zip(uvec, lamvec):
        r = r * u ** (-(m - 2) * size(lam)) * q ** (-(m - 2) * n_stat(conjugate(lam))) * t ** ((m - 2) * n_stat(lam))
    for i in range(m):
        for j in range(m):
            r = r * nekrasov_factor(F, lamvec[i], lamvec[j], q * uvec[i] / (t * uvec[j]))
    return r


def norm_check(F, uvec, lamvec):
    rep = LevelM(F, uvec) if not isinstance(uvec, LevelM) else uvec
    lhs = pairing(F, k_vec(rep, lamvec, "bra")[0], k_vec(rep, lamvec, "ket")[0])
    rhs = k_norm_conjecture(F, rep.u, lamvec)
    return lhs, rhs, lhs == rhs


# ---------------------------------------------------------------------------
# the vertex operator by linear solve
# ---------------------------------------------------------------------------


@dataclass
class LevelMPhi:
    uvec: tuple
    vvec: tuple
    D: int
    matrix: dict  # (bra key, ket key) -> value at w = 1
    dims: dict  # (bra degree, ket degree) -> number of undetermined entries
    equations: int
    inconsistent: object = None
    validation: dict = field(default_factory=dict)

    def element(self, F, bra, ket, w=None):
        """<bra|Phi(w)|ket>; raises DegreeCapExceeded outside the solved window."""
        s = F.zero
        for b, x in bra.items():
            for k, y in ket.items():
                v = self.matrix.get((b, k))
                if v is None:
                    if _deg(b) > self.D or _deg(k) > self.D:
                        raise DegreeCapExceeded(f"entry ({b}, {k}) outside degree {self.D}")
                    continue
                term = x * y * v
                if w is not None:
                    term = term * w ** (_deg(b) - _deg(k))
                s = s + term
        return s


def _deg(key):
    return sum(size(lam) for lam in key)


def _keys(m, D):
    return [lv for d in range(D + 1) for lv in partition_tuples(m, d)]


def _t_equations(F, rep_u, rep_v, names, n_range, D, cache):
    """Rows of the permutation relations, restricted to entries of degree <= D."""
    from .vertex1 import intertwiner_transforms

    eu, ev = e_m(F, rep_u.u), e_m(F, rep_v.u)
    left, right = intertwiner_transforms(F, eu, ev, F.one, rep_u.gamma_half)
    keys = _keys(rep_u.m, D)

    def act(rep, name, n, key, side):
        ck = (id(rep), name, n, key, side)
        r = cache.get(ck)
        if r is None:
            r = cache[ck] = rep.op(name, n, {key: F.one}, side)
        return r

    for name in names:
        for n in range(n_range[0], n_range[1] + 1):
            lt, rt = left.terms(name, n), right.terms(name, n)
            for b in keys:
                moved = {}
                for c, (nm, k) in lt:
                    for key, x in act(rep_v, nm, k, b, "bra").items():
                        vadd(moved, key, c * x)
                for kk in keys:
                    row = {}
                    for key, x in moved.items():
                        vadd(row, (key, kk), x)
                    for c, (nm, k) in rt:
                        for key, x in act(rep_u, nm, k, kk, "ket").items():
                            vadd(row, (b, key), -c * x)
                    if not row:
                        continue
                    if any(_deg(bb) > D or _deg(k2) > D for bb, k2 in row):
                        continue
                    yield (name, n, b, kk), row


def phi_m_solve(F, uvec, vvec, D, names=("x_plus", "psi_plus", "psi_minus"), validate=True):
    """Matrix of Phi_u^v at w = 1 on bra/ket degrees <= D, from the permutation relations."""
    uvec, vvec = tuple(uvec), tuple(vvec)

    def build():
        rep_u = F.memo(("levelm", uvec), lambda: LevelM(F, uvec))
        rep_v = F.memo(("levelm", vvec), lambda: LevelM(F, vvec))
        m = len(uvec)
        keys = _keys(m, D)
        unknowns = [(b, k) for b in keys for k in keys]
        order = {u: (_deg(u[0]) + _deg(u[1]), i) for i, u in enumerate(unknowns)}
        el = Eliminator(order=order)
        vac = ((),) * m
        el.add({(vac, vac): F.one}, F.one, label="normalization")
        cache = {}
        n_eq = 1
        for name in names:
            rng = (-D - 1, D + 1) if name.startswith("x") else (-D - 2, D + 2)
            for label, row in _t_equations(F, rep_u, rep_v, (name,), rng, D, cache):
                el.add(row, F.zero, label=label)
                n_eq += 1
        values, free, undetermined = el.solution(unknowns)
        dims = {}
        for b, k in undetermined:
            dk = (_deg(b), _deg(k))
            dims[dk] = dims.get(dk, 0) + 1
        for b in range(D + 1):
            for k in range(D + 1):
                dims.setdefault((b, k), 0)
        phi = LevelMPhi(uvec, vvec, D, values, dict(sorted(dims.items())), n_eq, el.inconsistent)
        if validate and not undetermined and el.inconsistent is None:
            phi.validation = validate_phi(F, phi, rep_u, rep_v, ("x_minus",), cache)
        return phi

    return F.memo(("phi_m", uvec, vvec, D, tuple(names)), build)


def validate_phi(F, phi, rep_u, rep_v, names, cache=None):
    """Residuals of further permutation relations on a solved matrix."""
    cache = {} if cache is None else cache
    out = {}
    for name in names:
        checked, failures, witness = 0, 0, None
        for label, row in _t_equations(F, rep_u, rep_v, (name,), (-phi.D - 1, phi.D + 1), phi.D, cache):
            s = F.zero
            for key, x in row.items():
                s = s + x * phi.matrix.get(key, F.zero)
            checked += 1
            if s:
                failures += 1
                if witness is None:
                    witness = repr(label)
        out[name] = {"checked": checked, "failures": failures, "witness": witness}
    return out


def matrix_conjecture(F, uvec, vvec, lamvec, muvec, w):
    """The conjectured <K_lam|Phi(w)|K_mu>."""
    m = len(uvec)
    q, t = F.q, F.t
    eu, ev = e_m(F, uvec), e_m(F, vvec)
    r = ((-1) ** m * (t / q) ** m * eu * ev * w) ** tuple_size(lamvec) * ((t / q) * ev * w) ** (-tuple_size(muvec))
    for k in range(m):
        lam, mu = lamvec[k], muvec[k]
        r = (r * vvec[k] ** (-(m - 1) * size(lam)) * uvec[k] ** size(mu)
             * q ** (-(m - 1) * n_stat(conjugate(lam)) + n_stat(conjugate(mu)))
             * t ** ((m - 1) * n_stat(lam) - n_stat(mu)))
    for i in range(m):
        for j in range(m):
            r = r * nekrasov_factor(F, lamvec[i], muvec[j], q * vvec[i] / (t * uvec[j]))
    return r


def matrix_check(F, uvec, vvec, D, w=None):
    """Solved <K_lam|Phi|K_mu> against the conjecture for |lam|, |mu| <= D."""
    w = F.one if w is None else w
    phi = phi_m_solve(F, uvec, vvec, D)
    rep_u = F.memo(("levelm", tuple(uvec)), lambda: LevelM(F, uvec))
    rep_v = F.memo(("levelm", tuple(vvec)), lambda: LevelM(F, vvec))
    m = len(uvec)
    results = []
    for nb in range(D + 1):
        for lam in partition_tuples(m, nb):
            bra = k_vec(rep_v, lam, "bra")[0]
            for nk in range(D + 1):
                for mu in partition_tuples(m, nk):
                    ket = k_vec(rep_u, mu, "ket")[0]
                    lhs = phi.element(F, bra, ket, w)
                    rhs = matrix_conjecture(F, uvec, vvec, lam, mu, w)
                    results.append((lam, mu, lhs, rhs, lhs == rhs))
    return phi, results


def four_point_check(F, order, uvec, vvec, wvec):
    """<0|Phi_v^w(z2) Phi_u^v(z1)|0> through the K basis of F_v against the U(m) instanton sum.

    Returns per-order (lhs, rhs, verdict) for the coefficient of (e(u) z1 / e(w) z2)^n.
    The norms <K|K> are the conjectured ones; ``norms_agree`` records whether
    they match the vectors.
    """
    uvec, vvec, wvec = tuple(uvec), tuple(vvec), tuple(wvec)
    m = len(uvec)
    phi1 = phi_m_solve(F, uvec, vvec, order)
    phi2 = phi_m_solve(F, vvec, wvec, order)
    rep_v = F.memo(("levelm", vvec), lambda: LevelM(F, vvec))
    vac = vacuum(F, m)
    rhs = z_5d_Um(F, m, order, uvec, vvec, wvec, form="q")
    results, norms_agree = [], True
    scale = e_m(F, uvec) / e_m(F, wvec)
    for n in range(order + 1):
        s = F.zero
        for lam in partition_tuples(m, n):
            ket = k_vec(rep_v, lam, "ket")[0]
            bra = k_vec(rep_v, lam, "bra")[0]
            norm = k_norm_conjecture(F, vvec, lam)
            norms_agree = norms_agree and pairing(F, bra, ket) == norm
            s = s + phi2.element(F, vac, ket) * phi1.element(F, bra, vac) / norm
        lhs = s / scale**n
        results.append((lhs, rhs[n], lhs == rhs[n]))
    return results, norms_agree
