"""Heisenberg Fock spaces, free-field vertex operators and the level-one currents.

Vectors live in an m-fold tensor Fock space and are plain dicts mapping an
m-tuple of partitions (the power-sum label in each slot) to a scalar.  The
level-one space is the case m = 1, with keys ``(lam,)``.

A bra is stored as the ket that represents it under the Fock pairing: the bra
``<a_lam|`` is the key ``lam`` and ``a_n`` acts on bras as ``a_{-n}`` does on
kets.  So ``<f| O`` is ``O.adjoint()`` applied to ``f``.

A :class:`VertexOp` is a normal-ordered exponential

    :exp(sum_n A_n z^n a_{-n}) exp(sum_n B_n z^{-n} a_n):

per slot, times a scalar prefactor.  Annihilation data is stored as
``N_n = n (1-q^n)/(1-t^n) B_n``, the scalar by which ``B_n a_n`` lowers ``p_n``.
Modes ``V_k`` (coefficient of ``z^{-k}``) act exactly on finite-degree vectors
and lower the degree by ``k``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import comb, factorial

from .partitions import partitions, n_stat, conjugate
from .symfunc import SymFunc, c_ratio, epsilon, merge, p_inner, macdonald


class DegreeCapExceeded(ValueError):
    pass


class EigenvalueCollision(ZeroDivisionError):
    pass


class PBWRankDefect(ValueError):
    pass


# ---------------------------------------------------------------------------
# coefficient sequences
# ---------------------------------------------------------------------------


class Series:
    """A sequence n -> scalar (n >= 1).

    ``geo`` is an optional list of ``(c, base)`` with integer ``c`` such that
    the value is ``sum c base^n`` (divided by n if ``div_n``).  It is kept
    through scaling and addition so contractions can be taken in closed form.
    """

    __slots__ = ("F", "fn", "geo", "div_n", "_cache")

    def __init__(self, F, fn=None, geo=None, div_n=False):
        self.F = F
        self.geo = tuple(geo) if geo is not None else None
        self.div_n = div_n
        self.fn = fn
        self._cache = {}

    def __call__(self, n):
        v = self._cache.get(n)
        if v is None:
            if self.geo is not None:
                v = self.F.zero
                for c, b in self.geo:
                    v = v + c * b**n
                if self.div_n:
                    v = v / n
            else:
                v = self.fn(n)
            self._cache[n] = v
        return v

    def scaled(self, s):
        """n -> value(n) * s^n."""
        if self.geo is not None:
            return Series(self.F, geo=[(c, b * s) for c, b in self.geo], div_n=self.div_n)
        return Series(self.F, fn=lambda n: self(n) * s**n)

    def __add__(self, other):
        if other is None:
            return self
        if self.geo is not None and other.geo is not None and self.div_n == other.div_n:
            return Series(self.F, geo=self.geo + other.geo, div_n=self.div_n)
        return Series(self.F, fn=lambda n: self(n) + other(n))

    __radd__ = __add__

    def __neg__(self):
        if self.geo is not None:
            return Series(self.F, geo=[(-c, b) for c, b in self.geo], div_n=self.div_n)
        return Series(self.F, fn=lambda n: -self(n))

    def map(self, f):
        return Series(self.F, fn=lambda n: f(n, self(n)))


def geo_creation(F, terms):
    """A_n = (1/n) sum c base^n."""
    return Series(F, geo=terms, div_n=True)


def geo_annihilation(F, terms):
    """N_n = sum c base^n."""
    return Series(F, geo=terms, div_n=False)


# ---------------------------------------------------------------------------
# vector helpers
# ---------------------------------------------------------------------------


def vadd(acc, key, val):
    x = acc.get(key)
    x = val if x is None else x + val
    if x:
        acc[key] = x
    else:
        acc.pop(key, None)


def vsum(*vecs):
    out = {}
    for v in vecs:
        for k, x in v.items():
            vadd(out, k, x)
    return out


def vscale(v, c):
    if not c:
        return {}
    return {k: x * c for k, x in v.items()}


def vsub(a, b):
    return vsum(a, vscale(b, -1))


def vdegree(v):
    return max((sum(sum(p) for p in k) for k in v), default=-1)


def degree_slices(v):
    out = {}
    for k, x in v.items():
        out.setdefault(sum(sum(p) for p in k), {})[k] = x
    return out


def pairing(F, a, b):
    """Bilinear Fock pairing, the product of slot-wise Macdonald scalar products."""
    if len(a) > len(b):
        a, b = b, a
    s = F.zero
    for k, x in a.items():
        y = b.get(k)
        if y:
            w = x * y
            for lam in k:
                if lam:
                    w = w * p_inner(F, lam, lam)
            s = s + w
    return s


def vacuum(F, m=1):
    return {((),) * m: F.one}


def tensor_of(F, sfs):
    """Tensor product of SymFuncs as a vector."""
    out = {(): F.one}
    for f in sfs:
        nxt = {}
        for k, x in out.items():
            for lam, y in f.coeffs.items():
                vadd(nxt, k + (lam,), x * y)
        out = nxt
    return out


def as_symfunc(F, v):
    """Level-one vector -> SymFunc."""
    return SymFunc(F, {k[0]: x for k, x in v.items()})


def from_symfunc(f):
    return {(lam,): x for lam, x in f.coeffs.items()}


# ---------------------------------------------------------------------------
# vertex operators
# ---------------------------------------------------------------------------


class VertexOp:
    """Normal-ordered exponential of Heisenberg modes on an m-slot Fock space."""

    def __init__(self, F, slots, prefactor=None):
        self.F = F
        self.slots = tuple(slots)  # per slot (A: Series|None, N: Series|None)
        self.prefactor = F.one if prefactor is None else prefactor
        self._ann = {}
        self._cre = {}
        self._multi_cre = {}

    @property
    def m(self):
        return len(self.slots)

    def scaled(self, s):
        """V(s z)."""
        inv = 1 / s
        return VertexOp(
            self.F,
            [(None if A is None else A.scaled(s), None if N is None else N.scaled(inv))
             for A, N in self.slots],
            self.prefactor,
        )

    def times_scalar(self, c):
        return VertexOp(self.F, self.slots, self.prefactor * c)

    def adjoint(self):
        """The transpose with respect to the Fock pairing: a_n <-> a_{-n}.

        If V(z) = sum V_k z^{-k} then <f| V_k = (V'_{-k} f) with V' returned here.
        """
        F = self.F
        out = []
        for A, N in self.slots:
            A2 = None if N is None else N.map(lambda n, x: x / (n * c_ratio(F, n)))
            N2 = None if A is None else A.map(lambda n, x: x * n * c_ratio(F, n))
            out.append((A2, N2))
        return VertexOp(F, out, self.prefactor)

    # -- slot actions -------------------------------------------------------
    def _annihilate(self, s, lam):
        """List of (lowered degree, new partition, coefficient)."""
        key = (s, lam)
        res = self._ann.get(key)
        if res is not None:
            return res
        N = self.slots[s][1]
        if N is None or not lam:
            res = [(0, lam, self.F.one)]
        else:
            mult = sorted(Counter(lam).items())
            res = []

            def rec(i, removed, rest, coef):
                if i == len(mult):
                    newlam = tuple(sorted(rest, reverse=True))
                    res.append((removed, newlam, coef))
                    return
                n, mcount = mult[i]
                Nn = N(n)
                for k in range(mcount + 1):
                    c = coef if k == 0 else coef * comb(mcount, k) * Nn**k
                    if not c:
                        continue
                    rec(i + 1, removed + n * k, rest + [n] * (mcount - k), c)

            rec(0, 0, [], self.F.one)
        self._ann[key] = res
        return res

    def _creation(self, s, i):
        """Degree-i part of exp(sum A_n p_n) in slot s, as {rho: coefficient}."""
        key = (s, i)
        res = self._cre.get(key)
        if res is not None:
            return res
        A = self.slots[s][0]
        if i == 0:
            res = {(): self.F.one}
        elif A is None:
            res = {}
        else:
            res = {}
            for rho in partitions(i):
                c = self.F.one
                for n, mcount in Counter(rho).items():
                    c = c * A(n) ** mcount / factorial(mcount)
                if c:
                    res[rho] = c
        self._cre[key] = res
        return res

    def _multi_creation(self, i):
        """Degree-i part of the creation exponential over all slots: list of (rhos, coef)."""
        res = self._multi_cre.get(i)
        if res is not None:
            return res
        combos = [((), self.F.one, 0)]
        for s in range(self.m):
            nxt = []
            for rhos, c, used in combos:
                for d in range(i - used + 1):
                    if s == self.m - 1 and used + d != i:
                        continue
                    for rho, x in self._creation(s, d).items():
                        nxt.append((rhos + (rho,), c * x, used + d))
            combos = nxt
        res = [(rhos, c) for rhos, c, used in combos if used == i]
        self._multi_cre[i] = res
        return res

    def annihilate_graded(self, vec):
        """exp(annihilation part) applied to vec, split by the total lowered degree."""
        out = {}
        for key, x in vec.items():
            partial = [(0, (), x)]
            for s, lam in enumerate(key):
                nxt = []
                for j, k, c in partial:
                    for dj, newlam, cc in self._annihilate(s, lam):
                        nxt.append((j + dj, k + (newlam,), c * cc))
                partial = nxt
            for j, k, c in partial:
                vadd(out.setdefault(j, {}), k, c)
        return out

    def create(self, vec, i):
        """Degree-i part of the creation exponential times vec."""
        out = {}
        for rhos, c in self._multi_creation(i):
            for key, x in vec.items():
                newkey = tuple(merge(lam, rho) for lam, rho in zip(key, rhos))
                vadd(out, newkey, c * x)
        return out

    def mode(self, k, vec, degree_cap=None):
        """V_k vec, the coefficient of z^{-k}."""
        if not vec:
            return {}
        d = vdegree(vec)
        if degree_cap is not None and d - k > degree_cap:
            raise DegreeCapExceeded(f"mode {k} on degree {d} exceeds cap {degree_cap}")
        graded = self.annihilate_graded(vec)
        out = {}
        for j, piece in graded.items():
            i = j - k
            if i < 0 or not piece:
                continue
            for key, x in self.create(piece, i).items():
                vadd(out, key, x)
        if self.prefactor != 1:
            out = vscale(out, self.prefactor)
        return out

    def full(self, vec, max_degree):
        """The whole operator at z = 1, truncated to output degree <= max_degree."""
        graded = self.annihilate_graded(vec)
        out = {}
        for j, piece in graded.items():
            if not piece:
                continue
            dpiece = vdegree(piece)
            for i in range(max_degree - dpiece + 1):
                for key, x in self.create(piece, i).items():
                    vadd(out, key, x)
        return vscale(out, self.prefactor)


def normal_product(F, ops, prefactor=None):
    """:V_1 V_2 ... V_r: (exponents added slot-wise), without contraction factors."""
    m = ops[0].m
    slots = []
    for s in range(m):
        A = N = None
        for op in ops:
            a, n = op.slots[s]
            if a is not None:
                A = a if A is None else A + a
            if n is not None:
                N = n if N is None else N + n
        slots.append((A, N))
    pf = F.one if prefactor is None else prefactor
    for op in ops:
        pf = pf * op.prefactor
    return VertexOp(F, slots, pf)


class ContractionPole(ZeroDivisionError):
    pass


def contraction_data(F, left, right):
    """(regular part, order of vanishing) of the scalar c with left(z) right(w) = c :left right:.

    Slot-wise the scalar is prod_{r,s} (1 - alpha_r beta_s)^{-a_r b_s}.  Factors
    with alpha beta = 1 are left out of the regular part and counted in the
    order instead (positive: a zero, negative: a pole).
    """
    total = F.one
    singular = 0
    for (_, NL), (AR, _) in zip(left.slots, right.slots):
        if NL is None or AR is None:
            continue
        if NL.geo is None or AR.geo is None or NL.div_n or not AR.div_n:
            raise ValueError("contraction needs geometric coefficient data")
        for a, alpha in AR.geo:
            for b, beta in NL.geo:
                x = alpha * beta
                e = -a * b
                if x == 1:
                    singular += e
                else:
                    total = total * (1 - x) ** e
    return total, singular


def contraction(F, left, right):
    """The contraction scalar; 0 on a net zero, ContractionPole on a net pole."""
    total, singular = contraction_data(F, left, right)
    if singular > 0:
        return F.zero
    if singular < 0:
        raise ContractionPole("contraction has a pole at this argument ratio")
    return total


# ---------------------------------------------------------------------------
# level-one currents
# ---------------------------------------------------------------------------


def _tq(F, k):
    return F.tq(k)


def eta_slot(F):
    t, q = F.t, F.q
    return (geo_creation(F, [(1, F.one), (-1, 1 / t)]), geo_annihilation(F, [(-1, F.one), (1, q)]))


def xi_slot(F):
    t, q = F.t, F.q
    r = F.tq(2)  # (t/q)^{1/2}
    return (geo_creation(F, [(-1, r), (1, r / t)]), geo_annihilation(F, [(1, r), (-1, q * r)]))


def phi_plus_slot(F):
    t, q = F.t, F.q
    s = F.tq(-1)  # (t/q)^{-1/4}
    return (None, geo_annihilation(F, [(-1, s), (1, q * s), (1, s * t / q), (-1, s * t)]))


def phi_minus_slot(F):
    t, q = F.t, F.q
    s = F.tq(-1)
    return (geo_creation(F, [(1, s), (-1, s / t), (-1, s * t / q), (1, s / q)]), None)


IDENTITY_SLOT = (None, None)


def _single(F, slot, prefactor=None):
    return VertexOp(F, [slot], prefactor)


def eta(F):
    return F.memo("eta", lambda: _single(F, eta_slot(F)))


def xi(F):
    return F.memo("xi", lambda: _single(F, xi_slot(F)))


def phi_plus(F):
    return F.memo("phi_plus", lambda: _single(F, phi_plus_slot(F)))


def phi_minus(F):
    return F.memo("phi_minus", lambda: _single(F, phi_minus_slot(F)))


def heisenberg(F, n, vec, slot=0):
    """a_n on a vector (n > 0 lowers, n < 0 raises, a_0 = 1)."""
    if n == 0:
        return dict(vec)
    out = {}
    if n < 0:
        for key, x in vec.items():
            k = list(key)
            k[slot] = merge(key[slot], (-n,))
            vadd(out, tuple(k), x)
        return out
    cn = n * c_ratio(F, n)
    for key, x in vec.items():
        lam = key[slot]
        mult = lam.count(n)
        if not mult:
            continue
        lst = list(lam)
        lst.remove(n)
        k = list(key)
        k[slot] = tuple(lst)
        vadd(out, tuple(k), x * mult * cn)
    return out


class LevelOne:
    """The level-one representation F_u: x^+ = u eta, x^- = u^{-1} xi, psi^pm = phi^pm."""

    def __init__(self, F, u):
        self.F = F
        self.u = u
        self.gamma_half = F.tq(1)
        self.level = 1
        self.level_slots = 1

    def x_plus(self, n, vec, cap=None):
        return vscale(eta(self.F).mode(n, vec, cap), self.u)

    def x_minus(self, n, vec, cap=None):
        return vscale(xi(self.F).mode(n, vec, cap), 1 / self.u)

    def psi_plus(self, n, vec, cap=None):
        if n < 0:
            return {}
        return phi_plus(self.F).mode(n, vec, cap)

    def psi_minus(self, n, vec, cap=None):
        if n > 0:
            return {}
        return phi_minus(self.F).mode(n, vec, cap)

    # bras: <f| O_n  ==  O'_{-n} f
    def bra_x_plus(self, n, vec):
        return vscale(self.F.memo("eta_adj", lambda: eta(self.F).adjoint()).mode(-n, vec), self.u)

    def bra_x_minus(self, n, vec):
        return vscale(self.F.memo("xi_adj", lambda: xi(self.F).adjoint()).mode(-n, vec), 1 / self.u)

    def bra_psi_plus(self, n, vec):
        if n < 0:
            return {}
        return self.F.memo("phi_plus_adj", lambda: phi_plus(self.F).adjoint()).mode(-n, vec)

    def bra_psi_minus(self, n, vec):
        if n > 0:
            return {}
        return self.F.memo("phi_minus_adj", lambda: phi_minus(self.F).adjoint()).mode(-n, vec)

    def op(self, name, n, vec, side="ket"):
        fn = getattr(self, name if side == "ket" else "bra_" + name)
        return fn(n, vec)


# ---------------------------------------------------------------------------
# PBW and integral bases (level one)
# ---------------------------------------------------------------------------


def pbw_vector(rep, lam, side="ket"):
    """|X_lam> = x^+_{-lam_1} ... x^+_{-lam_l}|0>, <X_lam| = <0| x^+_{lam_l} ... x^+_{lam_1}."""
    F = rep.F
    v = vacuum(F)
    if side == "ket":
        for p in reversed(lam):
            v = rep.x_plus(-p, v)
    else:
        for p in reversed(lam):
            v = rep.bra_x_plus(p, v)
    return v


def symfunc_vec(f):
    return from_symfunc(f)


def expand_in(F, target, family, labels):
    """Coefficients c with target = sum c_l family[l]; raises PBWRankDefect if not spanned."""
    from .linalg import Eliminator, InconsistentSystem

    keys = sorted({k for v in family for k in v} | set(target))
    el = Eliminator(order={l: (0, i) for i, l in enumerate(labels)})
    for key in keys:
        row = {l: v[key] for l, v in zip(labels, family) if key in v}
        el.add(row, target.get(key, F.zero), label=key)
    if el.inconsistent is not None:
        raise InconsistentSystem("target not in span", el.inconsistent)
    values, free, undetermined = el.solution(labels)
    if undetermined:
        raise PBWRankDefect(f"family is rank deficient ({len(undetermined)} undetermined)")
    return values


def pbw_rank(F, family):
    from .linalg import rank

    return rank([dict(v) for v in family])


def eigen_collisions(F, values):
    seen = {}
    for lab, e in values.items():
        for other, e2 in seen.items():
            if e == e2:
                raise EigenvalueCollision(f"equal eigenvalues for {lab} and {other}")
        seen[lab] = e


def k_basis(rep, n, side="ket"):
    """Integral basis: x^+_0 eigenvectors with unit coefficient on X_{(1^n)}.

    Returns a list of (lam, vector, X-coefficients).  The eigenvectors are found
    from the Macdonald basis (x^+_0 P_lam = u eps_lam P_lam, itself checked in
    the tests), then rescaled through the PBW expansion.
    """
    F = rep.F
    lams = partitions(n)
    eigen_collisions(F, {lam: epsilon(F, lam) for lam in lams})
    family = [pbw_vector(rep, mu, side) for mu in lams]
    ones = (1,) * n
    out = []
    for lam in lams:
        v = from_symfunc(macdonald(F, lam).P)
        coeffs = expand_in(F, v, family, lams)
        c1 = coeffs[ones] if n else F.one
        if not c1:
            raise PBWRankDefect(f"P_{lam} has no X_(1^n) component")
        inv = 1 / c1
        out.append((lam, vscale(v, inv), {mu: c * inv for mu, c in coeffs.items() if c}))
    return out


def k_to_j_scalar(F, lam, u, side="ket"):
    """K_lam = scalar * J_lam: (-u/t)^{|lam|} t^{-n(lam)} for kets, (-u)^{|lam|} t^{-n(lam)} for bras."""
    base = -u / F.t if side == "ket" else -u
    return base ** sum(lam) * F.t ** (-n_stat(lam))


def k_norm_formula(F, lam, u):
    from .nekrasov import nekrasov_factor

    return (-(u**2)) ** sum(lam) * F.q ** n_stat(conjugate(lam)) * F.t ** (-n_stat(lam)) * \
        nekrasov_factor(F, lam, lam, F.q / F.t)


# ---------------------------------------------------------------------------
# relation kernels
# ---------------------------------------------------------------------------


def poly_coeffs(F, roots):
    """Coefficients of prod (1 - r y) as a list indexed by the power of y."""
    c = [F.one]
    for r in roots:
        nxt = c + [F.zero]
        for i in range(len(c)):
            nxt[i + 1] = nxt[i + 1] - r * c[i]
        c = nxt
    return c


def G_plus(F):
    q, t = F.q, F.t
    return poly_coeffs(F, [q, 1 / t, t / q])


def G_minus(F):
    q, t = F.q, F.t
    return poly_coeffs(F, [1 / q, t, q / t])


def series_div(F, num, den, order):
    """Power-series quotient num/den to the given order (den[0] != 0)."""
    out = []
    num = list(num) + [F.zero] * (order + 1)
    inv0 = 1 / den[0]
    for i in range(order + 1):
        s = num[i]
        for j in range(1, min(i, len(den) - 1) + 1):
            s = s - den[j] * out[i - j]
        out.append(s * inv0)
    return out


def g_series(F, order):
    return series_div(F, G_plus(F), G_minus(F), order)


def g_inverse_series(F, order):
    return series_div(F, G_minus(F), G_plus(F), order)


def f_coeff(F, l):
    if l == 0:
        return F.one
    q, t = F.q, F.t
    return (1 - q) * (1 - 1 / t) * (1 - q**l * t ** (-l)) / (1 - q / t)


# ---------------------------------------------------------------------------
# truncated checks of the defining relations
# ---------------------------------------------------------------------------


@dataclass
class RelationReport:
    relation: str
    window: int
    modes: tuple
    checked: int = 0
    verdict: str = "pass"
    witness: dict | None = None
    notes: list = field(default_factory=list)

    def record(self, ok, witness):
        self.checked += 1
        if not ok and self.verdict == "pass":
            self.verdict = "fail"
            self.witness = witness


def apply_word(rep, word, vec):
    """Apply an operator product (leftmost first in ``word``) to a ket."""
    for name, n in reversed(word):
        if not vec:
            return {}
        vec = rep.op(name, n, vec)
    return vec


def apply_combination(rep, terms, vec):
    """sum_i c_i word_i vec for terms = [(c, word), ...]."""
    out = {}
    for c, word in terms:
        if not c:
            continue
        for k, x in apply_word(rep, word, vec).items():
            vadd(out, k, c * x)
    return out


def basis_keys(m, window):
    from .partitions import partition_tuples

    return [lv for d in range(window + 1) for lv in partition_tuples(m, d)]


def check_identity(rep, report, lhs, rhs, window, label):
    F = rep.F
    for key in basis_keys(rep.level_slots, window):
        vec = {key: F.one}
        diff = vsub(apply_combination(rep, lhs, vec), apply_combination(rep, rhs, vec))
        report.record(not diff, {"instance": label, "basis": repr(key),
                                 "nonzero_components": len(diff)})


def relation_terms(rep, rel, a, b, truncation):
    """Both sides of one Fourier component of a defining relation, as operator words."""
    F = rep.F
    gh = rep.gamma_half  # gamma^{1/2}
    if rel == "fxx":
        # sum_l f_l x_{a-l} x_{b+l} = sum_l f_l x_{b-l} x_{a+l}
        lhs = [(f_coeff(F, l), [("x_plus", a - l), ("x_plus", b + l)]) for l in range(truncation + 1)]
        rhs = [(f_coeff(F, l), [("x_plus", b - l), ("x_plus", a + l)]) for l in range(truncation + 1)]
        return lhs, rhs
    if rel in ("quadratic_xpxp", "quadratic_xmxm"):
        gp, gm = G_plus(F), G_minus(F)
        name = "x_plus" if rel == "quadratic_xpxp" else "x_minus"
        left, right = (gm, gp) if name == "x_plus" else (gp, gm)
        lhs = [(left[r], [(name, a + r), (name, b - r)]) for r in range(4)]
        rhs = [(right[r], [(name, b - r), (name, a + r)]) for r in range(4)]
        return lhs, rhs
    if rel == "commutator_xpxm":
        C = (1 - F.q) * (1 - 1 / F.t) / (1 - F.q / F.t)
        lhs = [(F.one, [("x_plus", a), ("x_minus", b)]), (-F.one, [("x_minus", b), ("x_plus", a)])]
        rhs = [(C * gh ** (a - b), [("psi_plus", a + b)]), (-C * gh ** (b - a), [("psi_minus", a + b)])]
        return lhs, rhs
    if rel.startswith("psi"):
        # psi_xp / psi_xm / psim_xp / psim_xm
        plus_psi = rel.startswith("psi_")
        sign = 1 if rel.endswith("xp") else -1
        xname = "x_plus" if sign == 1 else "x_minus"
        order = max(abs(a), 0) + 1
        if plus_psi:
            # psi^+_a x_b = sum_{r=0}^{a} c_r gamma^{-+ r/2} x_{b+r} psi^+_{a-r},  c = g^{-+1}
            c = g_inverse_series(F, order) if sign == 1 else g_series(F, order)
            lhs = [(F.one, [("psi_plus", a), (xname, b)])]
            rhs = [(c[r] * gh ** (-sign * r), [(xname, b + r), ("psi_plus", a - r)]) for r in range(a + 1)]
        else:
            # psi^-_a x_b = sum_{r=0}^{-a} c_r gamma^{-+ r/2} x_{b-r} psi^-_{a+r},  c = g^{+-1}
            c = g_series(F, order) if sign == 1 else g_inverse_series(F, order)
            lhs = [(F.one, [("psi_minus", a), (xname, b)])]
            rhs = [(c[r] * gh ** (-sign * r), [(xname, b - r), ("psi_minus", a + r)]) for r in range(-a + 1)]
        return lhs, rhs
    raise ValueError(f"unknown relation {rel!r}")


RELATIONS = ("fxx", "quadratic_xpxp", "quadratic_xmxm", "commutator_xpxm",
             "psi_xp", "psi_xm", "psim_xp", "psim_xm")


def relation_check(rep, rel, window, modes=None):
    """Check one defining relation on all basis kets of degree <= window.

    ``modes`` is the inclusive range of the two Fourier indices; by default
    [-window-1, window+1].  For psi relations the psi index is restricted to its
    half-line.  The fxx sum is truncated at l = window + |mode| + 1, beyond
    which every term annihilates the degree window by grading.
    """
    lo, hi = modes if modes is not None else (-window - 1, window + 1)
    report = RelationReport(rel, window, (lo, hi))
    for a in range(lo, hi + 1):
        if rel.startswith("psi_") and a < 0 or rel.startswith("psim") and a > 0:
            continue
        for b in range(lo, hi + 1):
            trunc = window + abs(a) + abs(b) + 1
            lhs, rhs = relation_terms(rep, rel, a, b, trunc)
            check_identity(rep, report, lhs, rhs, window, f"{rel}[{a},{b}]")
    return report


def monic_poly(F, roots):
    """Coefficients (ascending) of prod (z - r)."""
    c = [F.one]
    for r in roots:
        nxt = [F.zero] + c
        for i in range(len(c)):
            nxt[i] = nxt[i] - r * c[i]
        c = nxt
    return c


def g_identity_check(F, order):
    """g(z) g(1/z) = 1 as an identity of z-series to the given order.

    g(1/z) = prod (z - c_+) / prod (z - c_-) after clearing z^3, with c_pm the
    roots data of G^pm; its Taylor series must equal that of 1/g(z) = G^-(z)/G^+(z).
    """
    q, t = F.q, F.t
    g_at_inverse = series_div(F, monic_poly(F, [q, 1 / t, t / q]), monic_poly(F, [1 / q, t, q / t]), order)
    ginv = g_inverse_series(F, order)
    return all(a == b for a, b in zip(g_at_inverse, ginv))
