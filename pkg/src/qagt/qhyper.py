"""q-Pochhammer symbols, terminating 3phi2 sums and the one-row/one-column matrix elements.

Three families of level-one matrix elements are computed three ways each:
coefficient extraction from the coherent-state generating products,
:func:`qagt.vertex1.vo_matrix_element` on J vectors, and closed product forms.
"""

from __future__ import annotations

from .fock import from_symfunc
from .vertex1 import phi_op, psi_op, vo_matrix_element
from .symfunc import macdonald


def qpoch(F, x, n, base=None):
    """(x; base)_n; for n < 0 uses (x; b)_{-n} = 1 / (x b^{-n}; b)_n."""
    b = F.q if base is None else base
    if n < 0:
        return 1 / qpoch(F, x * b**n, -n, b)
    r = F.one
    for i in range(n):
        r = r * (1 - x * b**i)
    return r


def qpoch_multi(F, xs, n, base=None):
    r = F.one
    for x in xs:
        r = r * qpoch(F, x, n, base)
    return r


def phi32(F, a, b, z, nterms, base=None):
    """sum_{n < nterms} (a1,a2,a3;q)_n / (q,b1,b2;q)_n z^n."""
    bb = F.q if base is None else base
    s = F.zero
    for n in range(nterms):
        s = s + (qpoch_multi(F, a, n, bb) / qpoch_multi(F, (bb,) + tuple(b), n, bb)) * z**n
    return s


def saalschutz_check(F, a, b, c, k):
    """Terminating balanced 3phi2(a, b, q^-k; c, ab q^{1-k}/c; q, q) against its product."""
    q = F.q
    lhs = phi32(F, (a, b, q ** (-k)), (c, a * b * q ** (1 - k) / c), q, k + 1)
    rhs = qpoch_multi(F, (c / a, c / b), k) / qpoch_multi(F, (c, c / (a * b)), k)
    return lhs, rhs, lhs == rhs


def exp_series(F, log_coeffs, order):
    """Coefficients of exp(sum_{n>=1} L_n z^n) to the given order."""
    out = [F.one]
    # n c_n = sum_{k=1}^n k L_k c_{n-k}
    for n in range(1, order + 1):
        s = F.zero
        for k in range(1, n + 1):
            s = s + k * log_coeffs(k) * out[n - k]
        out.append(s / n)
    return out


def q_binomial_check(F, a, order, base=None):
    """(az;q)_inf/(z;q)_inf = sum z^n (a;q)_n/(q;q)_n, via the logarithm sum (1-a^n)z^n/(n(1-q^n))."""
    b = F.q if base is None else base
    lhs = exp_series(F, lambda n: (1 - a**n) / (n * (1 - b**n)), order)
    rhs = [qpoch(F, a, n, b) / qpoch(F, b, n, b) for n in range(order + 1)]
    return all(x == y for x, y in zip(lhs, rhs))


# ---------------------------------------------------------------------------
# generating-function coefficients
# ---------------------------------------------------------------------------


def psi_QQ_generating(F, j, k, alpha, beta, kappa, delta, w):
    """<Q_(j)|psi(w)|Q_(k)> from the triple q-binomial expansion."""
    q, t = F.q, F.t
    s = F.zero
    for m in range(min(j, k) + 1):
        s = s + (beta ** (j - m) * delta ** (k - m)
                 * qpoch(F, alpha / beta, j - m) * qpoch(F, t, m) * qpoch(F, kappa / delta, k - m)
                 / (qpoch(F, q, j - m) * qpoch(F, q, m) * qpoch(F, q, k - m)))
    return s * w ** (j - k)


def psi_QQ_phi32(F, j, k, alpha, beta, kappa, delta, w):
    """The same element written as a prefactor times a terminating 3phi2 in base q."""
    q, t = F.q, F.t
    pre = (w ** (j - k) * beta**j * delta**k * qpoch(F, alpha / beta, j) * qpoch(F, kappa / delta, k)
           / (qpoch(F, q, j) * qpoch(F, q, k)))
    series = phi32(F, (q ** (-j), t, q ** (-k)),
                   (q ** (1 - j) * beta / alpha, q ** (1 - k) * delta / kappa),
                   q**2 / (alpha * kappa), min(j, k) + 1)
    return pre * series


def row_row_generating(F, j, k, u, v, w):
    q, t = F.q, F.t
    QQ = psi_QQ_generating(F, j, k, v, t * u / q, q / v, q / u, w)
    return QQ * qpoch(F, q, j) * qpoch(F, q, k)  # J_(r) = (q;q)_r Q_(r)


def col_row_generating(F, j, k, u, v, w):
    q, t = F.q, F.t

    def A(m):
        if m < 0:
            return F.zero
        return qpoch(F, t * u / (q * v), m, t) / qpoch(F, t, m, t) * (-v * w) ** m

    def B(n):
        if n < 0:
            return F.zero
        return qpoch(F, u / v, n) / qpoch(F, q, n) * (q / (u * w)) ** n

    PQ = A(j) * B(k) + A(j - 1) * B(k - 1)  # the (1 + y/x) factor
    return PQ * qpoch(F, t, j, t) * qpoch(F, q, k)  # J_(1^j) = (t;t)_j P, J_(k) = (q;q)_k Q


def col_col_generating(F, j, k, u, v, w):
    q, t = F.q, F.t
    s = F.zero
    for m in range(min(j, k) + 1):
        l, n = j - m, k - m
        s = s + (qpoch(F, t * u / (q * v), l, t) / qpoch(F, t, l, t) * (-v * w) ** l
                 * qpoch(F, q, m, t) / qpoch(F, t, m, t)
                 * qpoch(F, v / u, n, t) / qpoch(F, t, n, t) * (-q / (v * w)) ** n)
    return s * qpoch(F, t, j, t) * qpoch(F, t, k, t)


def row_row_closed(F, j, k, u, v, w):
    q, t = F.q, F.t
    return (qpoch(F, q ** (1 - k) * v / (t * u), j) * qpoch(F, q ** (1 + j - k) * v / u, k)
            * w ** (j - k) * (t * u / q) ** j * (-v / q) ** (-k) * q ** (k * (k - 1) // 2))


def col_row_closed(F, j, k, u, v, w):
    q, t = F.q, F.t
    return ((1 - q ** (1 - k) * t ** (-j) * v / u) * qpoch(F, q * t ** (1 - j) * v / u, j - 1, t)
            * qpoch(F, q ** (2 - k) * v / u, k)
            * w ** (j - k) * (t * u / q) ** j * (-v / q) ** (-k)
            * t ** (j * (j - 1) // 2) * q ** (k * (k - 1) // 2))


def col_col_closed(F, j, k, u, v, w):
    q, t = F.q, F.t
    return (qpoch(F, t ** (-j) * v / u, k, t) * qpoch(F, q * t ** (k - j) * v / u, j, t)
            * w ** (j - k) * (t * u / q) ** j * (-v / q) ** (-k) * t ** (j * (j - 1) // 2))


FAMILIES = {
    "row_row": (row_row_generating, row_row_closed, lambda j, k: ((j,) if j else (), (k,) if k else ())),
    "col_row": (col_row_generating, col_row_closed, lambda j, k: ((1,) * j, (k,) if k else ())),
    "col_col": (col_col_generating, col_col_closed, lambda j, k: ((1,) * j, (1,) * k)),
}


def section6_closed_forms(F, family, j, k, u, v, w):
    """Generating-function value, direct matrix element and closed form of <J_lam|Phi(w)|J_mu>."""
    gen_fn, closed_fn, shapes = FAMILIES[family]
    lam, mu = shapes(j, k)
    op = F.memo(("phi", u, v), lambda: phi_op(F, u, v))
    direct = vo_matrix_element(F, from_symfunc(macdonald(F, lam).J), op,
                               from_symfunc(macdonald(F, mu).J), w)
    gen = gen_fn(F, j, k, u, v, w)
    closed = closed_fn(F, j, k, u, v, w)
    return {
        "lam": lam, "mu": mu, "generating": gen, "direct": direct, "closed": closed,
        "gen_eq_direct": gen == direct, "direct_eq_closed": direct == closed,
    }


def psi_generating_vs_direct(F, j, k, alpha, beta, kappa, delta, w):
    """Generic psi: triple-sum coefficient, 3phi2 form and direct element of <Q_(j)|psi|Q_(k)>."""
    lam, mu = ((j,) if j else ()), ((k,) if k else ())
    op = psi_op(F, alpha, beta, kappa, delta)
    direct = vo_matrix_element(F, from_symfunc(macdonald(F, lam).Q), op, from_symfunc(macdonald(F, mu).Q), w)
    return direct, psi_QQ_generating(F, j, k, alpha, beta, kappa, delta, w), \
        psi_QQ_phi32(F, j, k, alpha, beta, kappa, delta, w)


def saalschutz_residual(F, j, k, alpha, beta, kappa, delta):
    """3phi2 of the one-row element minus the balanced-sum product with a = q^-j, b = t, c = q^{1-j} beta/alpha.

    Zero whenever alpha kappa = q and beta delta = t (the series is then balanced
    with argument q); generically nonzero otherwise.
    """
    q, t = F.q, F.t
    series = phi32(F, (q ** (-j), t, q ** (-k)),
                   (q ** (1 - j) * beta / alpha, q ** (1 - k) * delta / kappa),
                   q**2 / (alpha * kappa), min(j, k) + 1)
    a, b, c = q ** (-j), t, q ** (1 - j) * beta / alpha
    product = qpoch_multi(F, (c / a, c / b), k) / qpoch_multi(F, (c, c / (a * b)), k)
    return series - product


def compat_constraint_check(F, u, v, j=1, k=1, perturb=None):
    """Constraint alpha kappa = q, beta delta = t: residual vanishes for Phi and not for a perturbed delta."""
    q, t = F.q, F.t
    alpha, beta, kappa, delta = v, t * u / q, q / v, q / u
    holds = alpha * kappa == q and beta * delta == t
    r0 = saalschutz_residual(F, j, k, alpha, beta, kappa, delta)
    sigma = perturb if perturb is not None else F.const(1) / 7
    r1 = saalschutz_residual(F, j, k, alpha, beta, kappa, delta * (1 + sigma))
    return {"constraint_holds": holds, "residual_phi": r0, "residual_perturbed": r1,
            "verdict": holds and not r0 and bool(r1)}
