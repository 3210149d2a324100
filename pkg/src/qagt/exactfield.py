"""Exact scalars: rational functions over Q and seeded rational evaluation points.

Two interchangeable scalar types are used by every algorithm in the package:

* :class:`RatFunc` -- a reduced quotient of two multivariate polynomials with
  rational coefficients (python-flint ``fmpq_mpoly`` underneath).  Negative
  (Laurent) exponents live in the denominator as monomial factors.
* ``gmpy2.mpq`` -- an exact rational, used when a :class:`FieldMode` is
  *specialized* to a random point.

Algorithms never branch on the scalar type; they ask a :class:`FieldMode` for
generators (``F.var("u")``, ``F.q``, ``F.qt(a, b)``) and use ``+ - * / **``.

``q`` and ``t`` are never generators.  The field is Q(q4, t4, ...) with
``q = q4**4`` and ``t = t4**4`` so that every quarter power of ``q`` and ``t``
is a monomial.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

import flint
import gmpy2

__all__ = [
    "ZeroDenominator",
    "PoleAtPoint",
    "RatFunc",
    "PolyContext",
    "FieldMode",
    "Symbolic",
    "Specialized",
    "symbolic",
    "normalize",
    "specialize",
    "eq_check",
    "to_text",
    "is_zero",
]

# Standard names.  Any other identifier is accepted too (aux variables).
REGISTRY = (
    "q4", "t4", "u", "v", "w", "z1", "z2", "Lambda", "Q", "x", "y",
    *(f"u_{i}" for i in range(1, 7)),
    *(f"v_{i}" for i in range(1, 7)),
    *(f"w_{i}" for i in range(1, 7)),
    *(f"alpha_{i}" for i in range(1, 7)),
    *(f"beta_{i}" for i in range(1, 7)),
)


class ZeroDenominator(ZeroDivisionError):
    pass


class PoleAtPoint(ZeroDivisionError):
    """A denominator vanished at the chosen evaluation point."""


def _to_fmpq(c):
    if isinstance(c, flint.fmpq):
        return c
    if isinstance(c, int):
        return flint.fmpq(c)
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    if type(c).__name__ == "mpq":
        return flint.fmpq(int(c.numerator), int(c.denominator))
    raise TypeError(f"cannot coerce {type(c).__name__} to a rational")


class PolyContext:
    """Polynomial ring Q[names] in graded-lex order; shared by all RatFuncs of a mode."""

    def __init__(self, names):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be unique")
        self.ctx = flint.fmpq_mpoly_ctx.get(self.names, "deglex")
        self._one = self.ctx.from_dict({(0,) * len(self.names): 1})
        self._zero = self.ctx.from_dict({})
        self._gens = dict(zip(self.names, self.ctx.gens()))

    def poly_const(self, c):
        c = _to_fmpq(c)
        if c == 0:
            return self._zero
        return self.ctx.from_dict({(0,) * len(self.names): c})

    def const(self, c) -> RatFunc:
        return RatFunc._raw(self, self.poly_const(c), self._one)

    def gen(self, name) -> RatFunc:
        try:
            g = self._gens[name]
        except KeyError:
            raise KeyError(f"{name!r} is not an active variable of {self.names}") from None
        return RatFunc._raw(self, g, self._one)

    def __repr__(self):
        return f"PolyContext({self.names})"


class RatFunc:
    """Canonical num/den: gcd removed, den monic in deglex order, zero is 0/1."""

    __slots__ = ("pc", "num", "den", "_hash")

    def __init__(self, pc: PolyContext, num, den=None):
        if den is None:
            den = pc._one
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        self.pc = pc
        self.num, self.den = _canon(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, pc, num, den):
        self = object.__new__(cls)
        self.pc, self.num, self.den, self._hash = pc, num, den, None
        return self

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.pc is not self.pc:
                raise ValueError("RatFuncs from different variable contexts")
            return other
        return RatFunc._raw(self.pc, self.pc.poly_const(other), self.pc._one)

    # -- arithmetic (Henrici-style, so gcds stay small) ---------------------
    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        a, b, c, d = self.num, self.den, o.num, o.den
        if b == d:
            n = a + c
            if n.is_zero():
                return RatFunc._raw(self.pc, n, self.pc._one)
            if b.is_one():
                return RatFunc._raw(self.pc, n, b)
            return RatFunc(self.pc, n, b)
        if b.is_one():
            return RatFunc._raw(self.pc, a * d + c, d)
        if d.is_one():
            return RatFunc._raw(self.pc, a + c * b, b)
        g = b.gcd(d)
        if g.is_one():
            n = a * d + b * c
            if n.is_zero():
                return RatFunc._raw(self.pc, n, self.pc._one)
            return RatFunc._raw(self.pc, n, b * d)
        b1, d1 = b / g, d / g
        n = a * d1 + c * b1
        if n.is_zero():
            return RatFunc._raw(self.pc, n, self.pc._one)
        h = n.gcd(g)
        if not h.is_one():
            n, g = n / h, g / h
        den = b1 * d1 * g
        lc = den.leading_coefficient()
        if lc != 1:
            n, den = n / lc, den / lc
        return RatFunc._raw(self.pc, n, den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(self.pc, -self.num, self.den)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RatFunc._raw(self.pc, self.pc._zero, self.pc._one)
        a, b, c, d = self.num, self.den, o.num, o.den
        if b.is_one() and d.is_one():
            return RatFunc._raw(self.pc, a * c, b)
        g1 = a.gcd(d) if not d.is_one() else d
        g2 = c.gcd(b) if not b.is_one() else b
        if not g1.is_one():
            a, d = a / g1, d / g1
        if not g2.is_one():
            c, b = c / g2, b / g2
        n, den = a * c, b * d
        lc = den.leading_coefficient()
        if lc != 1:
            n, den = n / lc, den / lc
        return RatFunc._raw(self.pc, n, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDenominator("inverse of zero")
        n, d = self.den, self.num
        lc = d.leading_coefficient()
        if lc != 1:
            n, d = n / lc, d / lc
        return RatFunc._raw(self.pc, n, d)

    def __truediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return RatFunc._raw(self.pc, self.pc._one, self.pc._one)
        return RatFunc._raw(self.pc, self.num**k, self.den**k)

    # -- comparison --------------------------------------------------------
    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((str(self.num), str(self.den)))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    # -- inspection --------------------------------------------------------
    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        c = self.num.leading_coefficient() if not self.num.is_zero() else flint.fmpq(0)
        c = c / self.den.leading_coefficient()
        return Fraction(int(c.p), int(c.q))

    def variables(self):
        used = set()
        for poly in (self.num, self.den):
            for mono in poly.monoms():
                used.update(n for n, e in zip(self.pc.names, mono) if e)
        return tuple(n for n in self.pc.names if n in used)

    def evaluate(self, assignment):
        """Exact value at ``assignment`` (name -> rational); ``PoleAtPoint`` on a vanishing denominator."""
        vals = [_to_fmpq(assignment.get(n, 1)) if n in self.variables() else flint.fmpq(0)
                for n in self.pc.names]
        den = self.den(*vals)
        if den == 0:
            raise PoleAtPoint(f"denominator {self.den} vanishes at the point")
        r = self.num(*vals) / den
        return gmpy2.mpq(int(r.p), int(r.q))

    def degree_in(self, name):
        """(num degree, den degree) in one variable; Laurent degree is their difference."""
        i = self.pc.names.index(name)
        dn = max((m[i] for m in self.num.monoms()), default=0)
        dd = max((m[i] for m in self.den.monoms()), default=0)
        return dn, dd

    def laurent_terms(self):
        """Terms with signed exponents when the denominator is a single monomial."""
        dterms = list(self.den.terms())
        if len(dterms) != 1:
            raise ValueError("not a Laurent polynomial")
        dmono, dc = dterms[0]
        out = {}
        for mono, c in self.num.terms():
            e = tuple(a - b for a, b in zip(mono, dmono))
            out[e] = Fraction(int((c / dc).p), int((c / dc).q))
        return out

    def to_text(self):
        n = _poly_text(self.num, self.pc.names)
        if self.den.is_one():
            return n
        return f"({n})/({_poly_text(self.den, self.pc.names)})"

    def __repr__(self):
        return self.to_text()

    __str__ = __repr__


def _canon(num, den):
    if num.is_zero():
        return num, den.context().from_dict({(0,) * den.context().nvars(): 1})
    g = num.gcd(den)
    if not g.is_one():
        num, den = num / g, den / g
    lc = den.leading_coefficient()
    if lc != 1:
        num, den = num / lc, den / lc
    return num, den


def _grlex_key(mono):
    return (sum(mono), mono)


def _poly_text(poly, names):
    if poly.is_zero():
        return "0"
    terms = sorted(poly.terms(), key=lambda tc: _grlex_key(tc[0]), reverse=True)
    parts = []
    for mono, c in terms:
        factors = [f"{n}^{e}" if e != 1 else n for n, e in zip(names, mono) if e]
        cs = str(c)
        if not factors:
            parts.append(cs)
        elif c == 1:
            parts.append("*".join(factors))
        elif c == -1:
            parts.append("-" + "*".join(factors))
        else:
            parts.append(cs + "*" + "*".join(factors))
    s = " + ".join(parts)
    return s.replace("+ -", "- ")


# ---------------------------------------------------------------------------
# Field modes
# ---------------------------------------------------------------------------


class FieldMode:
    """Common interface of the symbolic and specialized scalar fields.

    Subclasses provide ``var``, ``const`` and ``is_symbolic``.  The ``cache``
    dict is the per-mode memo used by downstream modules (Macdonald data etc.).
    """

    is_symbolic = False

    def __init__(self):
        self.cache = {}
        self._pow = {}

    def var(self, name):
        raise NotImplementedError

    def const(self, c):
        raise NotImplementedError

    @property
    def one(self):
        return self.const(1)

    @property
    def zero(self):
        return self.const(0)

    def qt(self, a, b=0):
        """q^(a/4) * t^(b/4)."""
        key = (a, b)
        r = self._pow.get(key)
        if r is None:
            r = self.var("q4") ** a * self.var("t4") ** b
            self._pow[key] = r
        return r

    @property
    def q(self):
        return self.qt(4, 0)

    @property
    def t(self):
        return self.qt(0, 4)

    def tq(self, k):
        """(t/q)^(k/4)."""
        return self.qt(-k, k)

    def memo(self, key, builder):
        """Once-per-key initialization of a cached value."""
        try:
            return self.cache[key]
        except KeyError:
            val = builder()
            return self.cache.setdefault(key, val)

    def describe(self):
        raise NotImplementedError


class Symbolic(FieldMode):
    is_symbolic = True

    def __init__(self, names=("q4", "t4")):
        super().__init__()
        # q4, t4 always present and first, for readable output
        rest = tuple(n for n in names if n not in ("q4", "t4"))
        self.pc = PolyContext(("q4", "t4") + rest)
        self.names = self.pc.names

    def var(self, name):
        return self.pc.gen(name)

    def const(self, c):
        return self.pc.const(c)

    def describe(self):
        return {"mode": "symbolic", "variables": list(self.names)}

    def __repr__(self):
        return f"Symbolic({self.names})"


@lru_cache(maxsize=None)
def symbolic(*names) -> Symbolic:
    """Shared Symbolic mode per variable set (so memo tables are reused)."""
    return Symbolic(names)


def _draw(rng):
    while True:
        a = rng.randint(2, 97)
        b = rng.randint(2, 97)
        if a != b:
            return gmpy2.mpq(a, b)


class Specialized(FieldMode):
    """Every variable is a seeded random rational with numerator, denominator in [2, 97].

    Values are drawn per variable name from ``random.Random(f"{seed}/{attempt}/{name}")``,
    so a value does not depend on which other variables were requested first.
    """

    def __init__(self, seed, attempt=0, overrides=None):
        super().__init__()
        self.seed = seed
        self.attempt = attempt
        self.assignment = {}
        self.overrides = dict(overrides or {})

    def var(self, name):
        val = self.assignment.get(name)
        if val is None:
            if name in self.overrides:
                val = gmpy2.mpq(self.overrides[name])
            else:
                val = _draw(random.Random(f"{self.seed}/{self.attempt}/{name}"))
            self.assignment[name] = val
        return val

    def const(self, c):
        if isinstance(c, Fraction):
            return gmpy2.mpq(c.numerator, c.denominator)
        return gmpy2.mpq(c)

    def retry(self):
        return Specialized(self.seed, self.attempt + 1, self.overrides)

    def describe(self):
        return {
            "mode": "specialized",
            "seed": self.seed,
            "attempt": self.attempt,
            "assignment": {k: str(v) for k, v in sorted(self.assignment.items())},
        }

    def __repr__(self):
        return f"Specialized(seed={self.seed}, attempt={self.attempt})"


# ---------------------------------------------------------------------------
# Free-function surface
# ---------------------------------------------------------------------------


def normalize(f):
    if isinstance(f, RatFunc):
        return RatFunc(f.pc, f.num, f.den)
    return f


def specialize(f, mode: FieldMode):
    """Identity in symbolic mode; exact evaluation at the mode's point otherwise."""
    if mode.is_symbolic or not isinstance(f, RatFunc):
        return f
    assignment = {n: mode.var(n) for n in f.variables()}
    return f.evaluate(assignment)


def eq_check(f, g, mode: FieldMode) -> bool:
    if mode.is_symbolic:
        return f == g
    return specialize(f, mode) == specialize(g, mode)


def is_zero(x) -> bool:
    return not x


def to_text(x) -> str:
    if isinstance(x, RatFunc):
        return x.to_text()
    if type(x).__name__ == "mpq":
        return str(Fraction(int(x.numerator), int(x.denominator)))
    return str(x)
