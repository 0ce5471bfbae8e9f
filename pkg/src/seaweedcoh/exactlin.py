"""Exact rational dense linear algebra: rank, kernel, membership.

All entries are `fractions.Fraction`, so every result is exact.  Pivoting is
deterministic (first nonzero entry in column order), which makes kernel bases
reproducible across runs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Rational = Fraction

Vector = list  # list of Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Matrix:
    """Dense matrix over the rationals."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, rows):
        self.data = [[_frac(x) for x in row] for row in rows]
        self.nrows = len(self.data)
        self.ncols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")

    @classmethod
    def zero(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns, nrows=None):
        if not columns:
            return cls.zero(nrows or 0, 0)
        nrows = nrows if nrows is not None else len(columns[0])
        return cls([[col[i] for col in columns] for i in range(nrows)])

    def column(self, j):
        return [self.data[i][j] for i in range(self.nrows)]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        return Matrix([[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def matvec(self, v):
        if len(v) != self.ncols:
            raise ValueError("length mismatch")
        return [sum((self.data[i][j] * v[j] for j in range(self.ncols)), Fraction(0))
                for i in range(self.nrows)]

    def stack(self, other):
        if other.ncols != self.ncols:
            raise ValueError("column mismatch")
        return Matrix(self.data + other.data)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"

    def rref(self):
        """Reduced row echelon form; returns (rref matrix, pivot column list)."""
        m = [row[:] for row in self.data]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r == self.nrows:
                break
            pr = next((i for i in range(r, self.nrows) if m[i][c] != 0), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.nrows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return Matrix(m), pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Basis of the right null space, leading coefficient 1 in each vector."""
        red, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            v = [Fraction(0)] * self.ncols
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -red.data[r][fc]
            lead = next(x for x in v if x != 0)
            basis.append([x / lead for x in v])
        assert len(basis) == self.ncols - len(pivots)
        return basis

    def solve(self, v):
        """One solution of self * x = v, or None if v is outside the column span."""
        if len(v) != self.nrows:
            raise ValueError("length mismatch")
        aug = Matrix([row + [val] for row, val in zip(self.data, [_frac(x) for x in v])])
        red, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [Fraction(0)] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = red.data[r][self.ncols]
        return x

    def inverse(self):
        if self.nrows != self.ncols:
            raise ValueError("not square")
        n = self.nrows
        aug = Matrix([row + ident for row, ident in
                      zip(self.data, Matrix.identity(n).data)])
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("singular matrix")
        return Matrix([row[n:] for row in red.data])


def rank(m: Matrix) -> int:
    return m.rank()


def kernel_basis(m: Matrix):
    return m.kernel_basis()


def membership(m: Matrix, v):
    """Coefficients c with m @ c == v exactly, or None when v is not in the span."""
    return m.solve(v)


# Sparse elimination over column dictionaries.  This is the workhorse behind
# the cochain complexes, where coboundary matrices are huge but each column
# has only a handful of nonzero rows.  Columns are rescaled to integers and
# eliminated fraction-free (cross-multiplication with content reduction), so
# the inner loop is pure integer arithmetic.

_CONTENT_LIMIT = 1 << 128


def _integerize(col):
    """Integer-valued copy of a column, scaled by the denominator lcm."""
    vec = {}
    scale = 1
    for r, v in col.items():
        if v == 0:
            continue
        if isinstance(v, Fraction):
            d = v.denominator
            scale = scale * d // gcd(scale, d)
        vec[r] = v
    if scale != 1:
        for r, v in vec.items():
            vec[r] = int(v * scale)
    else:
        for r, v in vec.items():
            vec[r] = int(v)
    return vec


def _reduce_content(vec):
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for r in vec:
            vec[r] //= g


def sparse_rank(columns) -> int:
    """Rank of a matrix given as an iterable of {row: value} columns."""
    pivot_rows = {}
    rk = 0
    for col in columns:
        vec = _integerize(col)
        while vec:
            r = min(vec)
            piv = pivot_rows.get(r)
            if piv is None:
                _reduce_content(vec)
                pivot_rows[r] = vec
                rk += 1
                break
            a, b = vec[r], piv[r]
            if b != 1:
                for k in vec:
                    vec[k] *= b
            for pr, pv in piv.items():
                nv = vec.get(pr, 0) - a * pv
                if nv == 0:
                    vec.pop(pr, None)
                else:
                    vec[pr] = nv
            if abs(a) > _CONTENT_LIMIT or abs(b) > _CONTENT_LIMIT:
                _reduce_content(vec)
        # empty vec: dependent column
    return rk


_RANK_PRIME = (1 << 61) - 1
_INV_CACHE = {}


def _inv_modp(den, p):
    key = (den, p)
    cached = _INV_CACHE.get(key)
    if cached is None:
        cached = _INV_CACHE[key] = pow(den, p - 2, p)
    return cached


def sparse_rank_modp(columns, p=_RANK_PRIME) -> int:
    """Rank over GF(p): a lower bound for the rational rank.

    Used as a fast first pass; callers certify exactness against a dimension
    bound (rank can only drop modulo p) and rerun `sparse_rank` otherwise.
    """
    pivot_rows = {}
    rk = 0
    for col in columns:
        vec = {}
        for r, v in col.items():
            if isinstance(v, Fraction):
                den = v.denominator % p
                if den == 0:
                    raise ZeroDivisionError("denominator divisible by p")
                val = v.numerator % p * _inv_modp(den, p) % p
            else:
                val = v % p
            if val:
                vec[r] = val
        while vec:
            r = min(vec)
            piv = pivot_rows.get(r)
            if piv is None:
                inv = pow(vec[r], p - 2, p)
                pivot_rows[r] = {k: v * inv % p for k, v in vec.items()}
                rk += 1
                break
            f = vec.pop(r)
            for pr, pv in piv.items():
                if pr == r:
                    continue
                nv = (vec.get(pr, 0) - f * pv) % p
                if nv:
                    vec[pr] = nv
                else:
                    vec.pop(pr, None)
    return rk


def sparse_kernel_basis(columns):
    """Kernel basis for sparse columns; returns dense coefficient vectors."""
    cols = [{r: v for r, v in c.items() if v != 0} for c in columns]
    n = len(cols)
    rows = sorted({r for c in cols for r in c})
    if not rows:
        return [[Fraction(1) if j == i else Fraction(0) for j in range(n)]
                for i in range(n)]
    dense = Matrix.from_columns(
        [[c.get(r, 0) for r in rows] for c in cols], nrows=len(rows))
    return dense.kernel_basis()
