"""Exact dense/sparse Gaussian elimination over any field scalar (RatFunc or mpq).

Rows are ``dict[column -> scalar]`` with zeros never stored.  Nothing here
knows about the scalar type beyond ``+ - * /`` and truthiness.
"""

from __future__ import annotations


class InconsistentSystem(ValueError):
    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


def _axpy(row, a, other):
    """row += a * other (in place)."""
    for c, x in other.items():
        y = row.get(c)
        y = a * x if y is None else y + a * x
        if y:
            row[c] = y
        else:
            row.pop(c, None)


class Eliminator:
    """Online row reduction: feed equations one at a time, keep a reduced echelon basis.

    Each equation is ``(row, rhs)`` meaning ``sum row[c] x_c = rhs``.  ``order``
    gives the pivot preference (earlier columns are eliminated first).
    """

    def __init__(self, order=None, zero=0):
        self.pivots = {}  # pivot column -> (row normalized with row[col] = 1, rhs)
        self.rank_key = order or {}
        self.zero = zero
        self.inconsistent = None

    def _key(self, c):
        return self.rank_key.get(c, (1, c)) if isinstance(self.rank_key, dict) else self.rank_key(c)

    def reduce(self, row, rhs):
        row = dict(row)
        changed = True
        while changed:
            changed = False
            for c in list(row):
                piv = self.pivots.get(c)
                if piv is not None and c in row:
                    a = row[c]
                    prow, prhs = piv
                    _axpy(row, -a, prow)
                    rhs = rhs - a * prhs
                    changed = True
        return row, rhs

    def add(self, row, rhs=0, label=None):
        row = {c: x for c, x in row.items() if x}
        row, rhs = self.reduce(row, rhs)
        if not row:
            if rhs:
                if self.inconsistent is None:
                    self.inconsistent = (label, rhs)
                return False
            return False
        col = min(row, key=self._key)
        inv = 1 / row[col]
        row = {c: x * inv for c, x in row.items()}
        rhs = rhs * inv
        # back-substitute into existing pivots to keep the basis reduced
        for pc, (prow, prhs) in list(self.pivots.items()):
            a = prow.get(col)
            if a:
                prow = dict(prow)
                _axpy(prow, -a, row)
                self.pivots[pc] = (prow, prhs - a * rhs)
        self.pivots[col] = (row, rhs)
        return True

    def solution(self, unknowns):
        """Values for determined unknowns, plus the list of free ones.

        An unknown counts as determined only if its pivot row has no free
        columns left.
        """
        values, free = {}, []
        for u in unknowns:
            piv = self.pivots.get(u)
            if piv is None:
                free.append(u)
                continue
            prow, prhs = piv
            if len(prow) == 1:
                values[u] = prhs
        undetermined = [u for u in unknowns if u not in values]
        return values, free, undetermined


def solve(rows, rhs, unknowns):
    """Solve a square or overdetermined system; raises on inconsistency or degeneracy."""
    el = Eliminator(order={u: (0, i) for i, u in enumerate(unknowns)})
    for i, (r, b) in enumerate(zip(rows, rhs)):
        el.add(r, b, label=i)
    if el.inconsistent is not None:
        raise InconsistentSystem("inconsistent linear system", el.inconsistent)
    values, free, undetermined = el.solution(unknowns)
    if undetermined:
        raise ValueError(f"system underdetermined in {len(undetermined)} unknowns")
    return values


def rank(rows):
    el = Eliminator()
    return sum(1 for r in rows if el.add(r, 0))


def mat_vec(mat, vec):
    """Sparse matrix (dict row -> dict col -> x) times vector (dict col -> x)."""
    out = {}
    for r, row in mat.items():
        s = None
        for c, x in row.items():
            y = vec.get(c)
            if y:
                s = x * y if s is None else s + x * y
        if s:
            out[r] = s
    return out
