"""Symmetric functions in the power-sum basis and Macdonald polynomials.

A :class:`SymFunc` is a finite map ``partition -> scalar`` read as
``sum coeff * p_lambda``.  All (q, t)-dependent data is cached per
:class:`~qagt.exactfield.FieldMode` via ``F.memo``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import arm, boxes, dominates, leg, partitions, z_lambda


def merge(lam, mu):
    """p_lam * p_mu as a partition."""
    if not mu:
        return lam
    if not lam:
        return mu
    return tuple(sorted(lam + mu, reverse=True))


class SymFunc:
    __slots__ = ("F", "coeffs")

    def __init__(self, F, coeffs=None):
        self.F = F
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def p(cls, F, lam):
        return cls(F, {tuple(lam): F.one})

    @classmethod
    def one(cls, F):
        return cls(F, {(): F.one})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            x = out.get(k)
            x = v if x is None else x + v
            if x:
                out[k] = x
            else:
                out.pop(k, None)
        return SymFunc(self.F, out)

    def __neg__(self):
        return SymFunc(self.F, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not c:
            return SymFunc(self.F)
        return SymFunc(self.F, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            return self.scale(other)
        out = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = merge(k1, k2)
                x = out.get(k)
                out[k] = v1 * v2 if x is None else x + v1 * v2
        return SymFunc(self.F, out)

    __rmul__ = scale

    def degree_slice(self, d):
        return SymFunc(self.F, {k: v for k, v in self.coeffs.items() if sum(k) == d})

    def degree(self):
        return max((sum(k) for k in self.coeffs), default=-1)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, SymFunc) and (self - other).is_zero()

    def __repr__(self):
        from .exactfield import to_text

        terms = [f"({to_text(v)})*p{list(k)}" for k, v in sorted(self.coeffs.items())]
        return " + ".join(terms) or "0"


# ---------------------------------------------------------------------------
# scalar product
# ---------------------------------------------------------------------------


def c_ratio(F, n):
    """(1 - q^n)/(1 - t^n)."""
    return F.memo(("c_ratio", n), lambda: (1 - F.q**n) / (1 - F.t**n))


def p_inner(F, lam, mu):
    if tuple(lam) != tuple(mu):
        return F.zero
    return F.memo(
        ("p_inner", tuple(lam)),
        lambda: F.const(z_lambda(tuple(lam))) * _prod(F, (c_ratio(F, k) for k in lam)),
    )


def inner(f: SymFunc, g: SymFunc):
    F = f.F
    s = F.zero
    for k, v in f.coeffs.items():
        w = g.coeffs.get(k)
        if w:
            s = s + v * w * p_inner(F, k, k)
    return s


def _prod(F, it):
    r = F.one
    for x in it:
        r = r * x
    return r


# ---------------------------------------------------------------------------
# monomial <-> power sum (rational, field independent)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _p_in_m(d):
    """R[mu][lam] = coefficient of m_lam in p_mu, computed by expanding in d variables."""
    table = {}
    for mu in partitions(d):
        poly = {(0,) * d: 1}
        for k in mu:
            nxt = {}
            for e, c in poly.items():
                for i in range(d):
                    e2 = e[:i] + (e[i] + k,) + e[i + 1:]
                    nxt[e2] = nxt.get(e2, 0) + c
            poly = nxt
        row = {}
        for lam in partitions(d):
            e = tuple(lam) + (0,) * (d - len(lam))
            c = poly.get(e, 0)
            if c:
                row[lam] = c
        table[mu] = row
    return table


@lru_cache(maxsize=None)
def _m_in_p(d):
    """M[lam][mu] = coefficient of p_mu in m_lam; inverse of the triangular R."""
    R = _p_in_m(d)
    parts = partitions(d)  # reverse lex: every lam dominating mu comes before it
    M = {}
    # m_lam = (p_lam - sum_{nu > lam} R[lam][nu] m_nu) / R[lam][lam]
    for lam in parts:
        acc = {lam: Fraction(1)}
        for nu, c in R[lam].items():
            if nu == lam:
                continue
            for rho, x in M[nu].items():
                acc[rho] = acc.get(rho, 0) - c * x
        diag = R[lam][lam]
        M[lam] = {k: Fraction(v) / diag for k, v in acc.items() if v}
    return M


def m_to_p(F, lam) -> SymFunc:
    lam = tuple(lam)
    return F.memo(
        ("m_to_p", lam),
        lambda: SymFunc(F, {mu: F.const(c) for mu, c in _m_in_p(sum(lam))[lam].items()}),
    )


def p_to_m(f: SymFunc, d):
    """Monomial coefficients of the degree-d slice of ``f``."""
    F = f.F
    R = _p_in_m(d)
    out = {}
    for mu, v in f.coeffs.items():
        if sum(mu) != d:
            continue
        for lam, c in R[mu].items():
            x = out.get(lam)
            y = v * F.const(c)
            out[lam] = y if x is None else x + y
    return {k: v for k, v in out.items() if v}


# ---------------------------------------------------------------------------
# Macdonald polynomials
# ---------------------------------------------------------------------------


def qt_mono(F, a, b):
    """q^a t^b for integer a, b."""
    return F.qt(4 * a, 4 * b)


def c_lambda(F, lam):
    return _prod(F, (1 - qt_mono(F, arm(lam, b), leg(lam, b) + 1) for b in boxes(lam)))


def c_prime_lambda(F, lam):
    return _prod(F, (1 - qt_mono(F, arm(lam, b) + 1, leg(lam, b)) for b in boxes(lam)))


@dataclass(frozen=True)
class MacdonaldData:
    lam: tuple
    P: SymFunc
    Q: SymFunc
    J: SymFunc
    c: object
    c_prime: object
    P_m: dict  # monomial coefficients of P


def _build_macdonald(F, d):
    """Gram-Schmidt against strictly dominated partitions, bottom of dominance first."""
    out = {}
    order = list(reversed(partitions(d)))  # increasing lex, a linear extension of dominance
    norms = {}
    for lam in order:
        v = m_to_p(F, lam)
        for mu in order:
            if mu == lam:
                break
            if dominates(lam, mu):
                Pm = out[mu]
                a = inner(v, Pm)
                if a:
                    v = v - Pm.scale(a / norms[mu])
        out[lam] = v
        norms[lam] = inner(v, v)
    return out


def macdonald(F, lam) -> MacdonaldData:
    lam = tuple(lam)

    def build():
        Ps = F.memo(("macdonald_P", sum(lam)), lambda: _build_macdonald(F, sum(lam)))
        P = Ps[lam]
        c, cp = c_lambda(F, lam), c_prime_lambda(F, lam)
        return MacdonaldData(lam, P, P.scale(c / cp), P.scale(c), c, cp, p_to_m(P, sum(lam)))

    return F.memo(("macdonald", lam), build)


def P_(F, lam):
    return macdonald(F, lam).P


def Q_(F, lam):
    return macdonald(F, lam).Q


def J_(F, lam):
    return macdonald(F, lam).J


def epsilon(F, lam):
    """1 + (t-1) sum_i (q^{lam_i} - 1) t^{-i}, the x^+_0 eigenvalue divided by u."""
    s = F.zero
    for i, p in enumerate(lam, 1):
        s = s + (F.q**p - 1) * F.t ** (-i)
    return 1 + (F.t - 1) * s


# ---------------------------------------------------------------------------
# specializations
# ---------------------------------------------------------------------------


def specialize_eps(f: SymFunc, images):
    """Ring homomorphism p_n -> images(n)."""
    F = f.F
    cache = {}
    s = F.zero
    for lam, v in f.coeffs.items():
        term = v
        for k in lam:
            if k not in cache:
                cache[k] = images(k)
            term = term * cache[k]
        s = s + term
    return s


def eps_u(F, u):
    """p_n -> (1 - u^n)/(1 - t^n)."""
    return lambda n: (1 - u**n) / (1 - F.t**n)


def eps_tilde(F, alpha, beta):
    """p_n -> (beta^n - alpha^n)/(1 - t^n)."""
    return lambda n: (beta**n - alpha**n) / (1 - F.t**n)


def specP_formula(F, lam, u):
    return _prod(
        F,
        ((F.t ** (i - 1) - F.q ** (j - 1) * u) / (1 - qt_mono(F, arm(lam, (i, j)), leg(lam, (i, j)) + 1))
         for i, j in boxes(lam)),
    )


def specQ_formula(F, lam, alpha, beta):
    return _prod(
        F,
        ((F.t ** (i - 1) * beta - F.q ** (j - 1) * alpha)
         / (1 - qt_mono(F, arm(lam, (i, j)) + 1, leg(lam, (i, j))))
         for i, j in boxes(lam)),
    )


# ---------------------------------------------------------------------------
# Cauchy kernel
# ---------------------------------------------------------------------------


def tensor_add(acc, key, val):
    x = acc.get(key)
    x = val if x is None else x + val
    if x:
        acc[key] = x
    else:
        acc.pop(key, None)


def kernel_slice(F, d):
    """Degree (d, d) part of exp(sum_n (1/n)(1-t^n)/(1-q^n) p_n(x) p_n(y)) as {(rho, rho): c}."""
    out = {}
    for rho in partitions(d):
        c = F.const(Fraction(1, z_lambda(rho)))
        for k in rho:
            c = c / c_ratio(F, k)
        out[(rho, rho)] = c
    return out


def cauchy_check(F, d):
    lhs = kernel_slice(F, d)
    rhs = {}
    for lam in partitions(d):
        data = macdonald(F, lam)
        for r1, a in data.P.coeffs.items():
            for r2, b in data.Q.coeffs.items():
                tensor_add(rhs, (r1, r2), a * b)
    keys = set(lhs) | set(rhs)
    return all(lhs.get(k, F.zero) == rhs.get(k, F.zero) for k in keys)
