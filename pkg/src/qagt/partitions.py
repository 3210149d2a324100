"""Partitions and m-tuples of partitions.

A partition is a plain tuple of positive ints in weakly decreasing order,
``()`` being the empty partition.  A partition tuple is a tuple of partitions.
Boxes are 1-based ``(row, column)`` pairs.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod

LESS, GREATER, EQUAL, INCOMPARABLE = "less", "greater", "equal", "incomparable"


class BoxOutsideDiagram(ValueError):
    pass


class MixedTupleLength(ValueError):
    pass


def check_partition(lam):
    lam = tuple(lam)
    if any(p <= 0 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"not a partition: {lam}")
    return lam


def size(lam):
    return sum(lam)


def tuple_size(lamvec):
    return sum(sum(x) for x in lamvec)


@lru_cache(maxsize=None)
def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def n_stat(lam):
    """n(lambda) = sum (i-1) lambda_i."""
    return sum(i * p for i, p in enumerate(lam))


def boxes(lam):
    return [(i, j) for i, row in enumerate(lam, 1) for j in range(1, row + 1)]


def part(lam, i):
    """lambda_i with lambda_i = 0 beyond the length."""
    return lam[i - 1] if i <= len(lam) else 0


def arm(lam, box):
    i, j = box
    return part(lam, i) - j


def leg(lam, box):
    i, j = box
    return part(conjugate(lam), j) - i


def box_stats(lam, box):
    """(arm, leg, n(lam), conjugate) for a box inside the diagram of ``lam``."""
    i, j = box
    if i < 1 or j < 1 or j > part(lam, i):
        raise BoxOutsideDiagram(f"box {box} not in {lam}")
    return arm(lam, box), leg(lam, box), n_stat(lam), conjugate(lam)


def multiplicities(lam):
    return Counter(lam)


@lru_cache(maxsize=None)
def z_lambda(lam):
    """prod_i i^{m_i} m_i!"""
    return prod(i**m * factorial(m) for i, m in Counter(lam).items())


@lru_cache(maxsize=None)
def partitions(n, max_part=None):
    """All partitions of n in reverse lexicographic order: (n), (n-1,1), ..."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n):
    return [lam for d in range(n + 1) for lam in partitions(d)]


def dominates(lam, mu):
    """lam >= mu in dominance order (same size assumed by caller)."""
    s1 = s2 = 0
    for i in range(max(len(lam), len(mu))):
        s1 += part(lam, i + 1)
        s2 += part(mu, i + 1)
        if s1 < s2:
            return False
    return True


# ---------------------------------------------------------------------------
# m-tuples
# ---------------------------------------------------------------------------


def _prefix_sums(lam, base, width):
    out, s = [], base
    for i in range(width):
        s += part(lam, i + 1)
        out.append(s)
    return out


def cumulative_vector(kind, lamvec, width=None):
    """The list of partial sums whose componentwise order defines ``kind``.

    For ``L`` the slots are visited from the last to the first, each slot
    offset by the sizes of the slots after it; ``R`` visits first to last.
    """
    if width is None:
        width = max(1, tuple_size(lamvec))
    m = len(lamvec)
    order = range(m - 1, -1, -1) if kind == "L" else range(m)
    vec, base = [], 0
    for j in order:
        vec.extend(_prefix_sums(lamvec[j], base, width))
        base += size(lamvec[j])
    return vec


def compare(kind, a, b):
    """Compare partitions (dominance) or partition tuples (orders ``L`` and ``R``)."""
    if kind == "dominance":
        if a and isinstance(a[0], tuple) or b and isinstance(b[0], tuple):
            raise MixedTupleLength("dominance compares single partitions")
        a, b = (a,), (b,)
        kind = "R"
    elif len(a) != len(b):
        raise MixedTupleLength(f"tuples of length {len(a)} and {len(b)}")
    if kind not in ("L", "R"):
        raise ValueError(f"unknown order {kind!r}")
    if a == b:
        return EQUAL
    if tuple_size(a) != tuple_size(b):
        return INCOMPARABLE
    width = max(1, tuple_size(a))
    va, vb = cumulative_vector(kind, a, width), cumulative_vector(kind, b, width)
    ge = all(x >= y for x, y in zip(va, vb))
    le = all(x <= y for x, y in zip(va, vb))
    if ge:
        return GREATER
    if le:
        return LESS
    return INCOMPARABLE


def leq(kind, a, b):
    return compare(kind, a, b) in (LESS, EQUAL)


@lru_cache(maxsize=None)
def partition_tuples(m, n):
    """All m-tuples of total size n, greatest first in a linear extension of the ``L`` order.

    Sorting key: the ``L`` cumulative vector, descending lexicographically.
    Componentwise domination implies lexicographic domination, so this is a
    linear extension; ties cannot occur because the vector determines the tuple.
    """
    out = []

    def rec(slot, remaining, acc):
        if slot == m - 1:
            for lam in partitions(remaining):
                out.append(tuple(acc + [lam]))
            return
        for k in range(remaining, -1, -1):
            for lam in partitions(k):
                rec(slot + 1, remaining - k, acc + [lam])

    if m < 1:
        raise ValueError("m must be >= 1")
    rec(0, n, [])
    width = max(1, n)
    out.sort(key=lambda lv: cumulative_vector("L", lv, width), reverse=True)
    return tuple(out)


enumerate_tuples = partition_tuples


def count_tuples(m, n):
    """Coefficient of x^n in prod_k (1 - x^k)^{-m}, by polynomial multiplication."""
    p = [1] + [0] * n
    for k in range(1, n + 1):
        for _ in range(m):
            for i in range(k, n + 1):
                p[i] += p[i - k]
    return p[n]


# ---------------------------------------------------------------------------
# text forms
# ---------------------------------------------------------------------------


def partition_text(lam):
    return "(" + ",".join(map(str, lam)) + ")"


def tuple_text(lamvec):
    return "[" + ",".join(partition_text(x) for x in lamvec) + "]"


def parse_partition(s):
    s = s.strip()
    if s in ("", "()", "∅"):
        return ()
    s = s.strip("()")
    return check_partition(int(x) for x in s.split(",") if x.strip())


def parse_tuple(s):
    s = s.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected [..] around a partition tuple: {s!r}")
    body = s[1:-1]
    parts, depth, cur = [], 0, ""
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return tuple(parse_partition(p) for p in parts)
