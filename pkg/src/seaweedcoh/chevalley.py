"""Lie algebras as exact structure-constant tables.

Two sources: a canonical Chevalley-basis construction from a root system
(extraspecial-pair sign convention, so tables are deterministic), and verbatim
structure-constant files for reproducing published bases that use their own
normalizations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from pathlib import Path

from . import rootsystem
from .exactlin import Matrix
from .rootsystem import RootSystem


class JacobiError(ValueError):
    pass


def _vec_add(acc, other, scale=1):
    for k, v in other.items():
        nv = acc.get(k, 0) + scale * v
        if nv == 0:
            acc.pop(k, None)
        else:
            acc[k] = nv
    return acc


def _num(x):
    """Keep integers as plain ints; exact rationals otherwise."""
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f


class LieAlgebra:
    """Finite-dimensional Lie algebra over the rationals.

    Brackets are stored sparsely for index pairs i < j; antisymmetry supplies
    the rest.  `root_of` maps a basis index to the coefficient tuple of its
    root over the simple roots (Cartan indices carry no root).
    """

    def __init__(self, dim, brackets, labels=None, cartan=(), root_of=None,
                 root_system=None, form_scale=Fraction(1), check=True):
        self.dim = dim
        self.labels = tuple(labels) if labels else tuple(f"e{i+1}" for i in range(dim))
        if len(self.labels) != dim:
            raise ValueError("label count != dim")
        self.cartan = tuple(cartan)
        self.root_of = dict(root_of or {})
        self.root_system = root_system
        self.form_scale = Fraction(form_scale)
        self.brackets = {}
        for (i, j), vec in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index out of range: ({i+1},{j+1})")
            if i == j:
                if any(v != 0 for v in vec.values()):
                    raise ValueError(f"[x,x] != 0 at index {i+1}")
                continue
            if i > j:
                i, j = j, i
                vec = {k: -v for k, v in vec.items()}
            vec = {k: _num(v) for k, v in vec.items() if v != 0}
            for k in vec:
                if not 0 <= k < dim:
                    raise ValueError(f"bracket target out of range: {k+1}")
            if (i, j) in self.brackets and self.brackets[(i, j)] != vec:
                raise ValueError(f"conflicting entries for bracket ({i+1},{j+1})")
            if vec:
                self.brackets[(i, j)] = vec
        self._ad_cache = {}
        self._killing = None
        self._dual = None
        if check:
            self.check_jacobi()

    # -- bracket evaluation -------------------------------------------------

    def bracket(self, i, j):
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        vec = self.brackets.get((j, i), {})
        return {k: -v for k, v in vec.items()}

    def bracket_vec(self, u, v):
        """[u, v] for sparse coordinate dicts u, v."""
        acc = {}
        for i, ci in u.items():
            if ci == 0:
                continue
            for j, cj in v.items():
                if cj == 0:
                    continue
                b = self.bracket(i, j)
                if b:
                    _vec_add(acc, b, ci * cj)
        return acc

    def ad(self, i):
        """Columns of ad(e_i): maps j -> coords of [e_i, e_j]."""
        cached = self._ad_cache.get(i)
        if cached is None:
            cached = {}
            for j in range(self.dim):
                b = self.bracket(i, j)
                if b:
                    cached[j] = b
            self._ad_cache[i] = cached
        return cached

    def check_jacobi(self):
        for i, j, k in combinations(range(self.dim), 3):
            acc = {}
            _vec_add(acc, self.bracket_vec(self.bracket(i, j), {k: 1}))
            _vec_add(acc, self.bracket_vec(self.bracket(j, k), {i: 1}))
            _vec_add(acc, self.bracket_vec(self.bracket(k, i), {j: 1}))
            if acc:
                raise JacobiError(
                    f"Jacobi identity fails on basis triple "
                    f"({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")

    # -- Killing form and dual basis ----------------------------------------

    def killing_matrix(self):
        """kappa(i,j) = Tr(ad e_i . ad e_j), the literal Killing form."""
        if self._killing is None:
            ads = [self.ad(i) for i in range(self.dim)]
            m = [[Fraction(0)] * self.dim for _ in range(self.dim)]
            for i in range(self.dim):
                for j in range(i, self.dim):
                    s = Fraction(0)
                    for u, col in ads[j].items():
                        adi = ads[i]
                        for v, c in col.items():
                            back = adi.get(v)
                            if back:
                                s += back.get(u, 0) * c
                    m[i][j] = s
                    m[j][i] = s
            self._killing = Matrix(m)
        return self._killing

    def dual_basis(self):
        """Vectors e^j with B(e_i, e^j) = delta_ij for B = form_scale * kappa.

        `form_scale` defaults to 1; fixture files may declare another scale
        when the published tables normalize the invariant form differently.
        """
        if self._dual is None:
            kappa = self.killing_matrix()
            scaled = Matrix([[self.form_scale * x for x in row] for row in kappa.data])
            try:
                inv = scaled.inverse()
            except ValueError:
                raise ValueError("Killing form is degenerate; no dual basis") from None
            self._dual = [inv.column(j) for j in range(self.dim)]
        return self._dual

    # -- helpers -------------------------------------------------------------

    def opposite_index(self, i):
        """Index of the root vector with negated root, if annotated."""
        r = self.root_of.get(i)
        if r is None:
            return None
        neg = tuple(-c for c in r)
        for j, rj in self.root_of.items():
            if rj == neg:
                return j
        return None

    def rescaled(self, scalars):
        """Same algebra in the basis (scalars[i] * e_i)."""
        if len(scalars) != self.dim or any(s == 0 for s in scalars):
            raise ValueError("need a nonzero scalar per basis vector")
        scalars = [Fraction(s) for s in scalars]
        new = {}
        for (i, j), vec in self.brackets.items():
            new[(i, j)] = {k: scalars[i] * scalars[j] / scalars[k] * v
                           for k, v in vec.items()}
        return LieAlgebra(self.dim, new, self.labels, self.cartan,
                          self.root_of, self.root_system, self.form_scale,
                          check=False)


def construct(rs: RootSystem, check=True) -> LieAlgebra:
    """Chevalley basis of the simple Lie algebra with root system `rs`.

    Basis layout: positive root vectors in the root system's order, then the
    negative ones in matching order, then the simple coroots.  Signs follow
    the extraspecial-pair convention, so the table is reproducible.
    """
    consts = _ChevalleyConstants(rs)
    m = len(rs.positive_roots)
    rank = rs.rank
    dim = 2 * m + rank

    pos_coeff = [rs.coefficients(b) for b in rs.positive_roots]
    index_of = {}
    for i, c in enumerate(pos_coeff):
        index_of[c] = i
        index_of[tuple(-x for x in c)] = m + i
    root_at = {}
    for c, i in index_of.items():
        root_at[i] = c

    def cartan_int(beta_c, i):
        # <beta, alpha_i^vee> from coefficient tuples
        beta = consts.vec_of(beta_c)
        return rs.cartan_integer(beta, rs.simple_roots[i])

    brackets = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            if i in root_at and j in root_at:
                x, y = root_at[i], root_at[j]
                s = tuple(a + b for a, b in zip(x, y))
                if all(c == 0 for c in s):
                    brackets[(i, j)] = consts.coroot(x, 2 * m)
                elif s in index_of:
                    n = _num(consts.N(x, y))
                    if abs(n) != consts.down_string(y, x) + 1:
                        raise JacobiError(
                            f"structure constant for {x}+{y} is not +/-(p+1)")
                    brackets[(i, j)] = {index_of[s]: n}
            elif i in root_at and j >= 2 * m:
                h = j - 2 * m
                c = cartan_int(root_at[i], h)
                if c != 0:
                    brackets[(i, j)] = {i: _num(-c)}
    labels = ([f"x{i+1}" for i in range(m)] + [f"y{i+1}" for i in range(m)]
              + [f"h{i+1}" for i in range(rank)])
    root_of = {i: root_at[i] for i in root_at}
    return LieAlgebra(dim, brackets, labels, tuple(range(2 * m, dim)),
                      root_of, rs, check=check)


class _ChevalleyConstants:
    """Structure constants N(a, b) via the extraspecial-pair recursion."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.pos = {rs.coefficients(b): b for b in rs.positive_roots}
        self.simple_sq = [rs.pairing(a, a) for a in rs.simple_roots]
        order = sorted(self.pos, key=lambda c: (sum(c), c))
        self.order = {c: i for i, c in enumerate(order)}
        self._memo = {}
        self._extra = {}

    def vec_of(self, c):
        v = None
        for ci, a in zip(c, self.rs.simple_roots):
            term = tuple(ci * x for x in a)
            v = term if v is None else tuple(p + q for p, q in zip(v, term))
        return v

    def is_root(self, c):
        return c in self.pos or tuple(-x for x in c) in self.pos

    def is_positive(self, c):
        return c in self.pos

    def sq(self, c):
        v = self.vec_of(c)
        return self.rs.pairing(v, v)

    def down_string(self, beta, alpha):
        r = 0
        cur = tuple(b - a for b, a in zip(beta, alpha))
        while self.is_root(cur):
            r += 1
            cur = tuple(b - a for b, a in zip(cur, alpha))
        return r

    def extraspecial(self, gamma):
        pair = self._extra.get(gamma)
        if pair is None:
            for a in sorted(self.pos, key=lambda c: self.order[c]):
                b = tuple(g - x for g, x in zip(gamma, a))
                if b in self.pos and self.order[a] < self.order[b]:
                    pair = (a, b)
                    break
            else:
                raise ValueError(f"no special pair for {gamma}")
            self._extra[gamma] = pair
        return pair

    def coroot(self, c, offset):
        """Coordinates of the coroot of the root with coefficients c."""
        sq = self.sq(c)
        out = {}
        for i, ci in enumerate(c):
            if ci != 0:
                out[offset + i] = _num(Fraction(ci) * self.simple_sq[i] / sq)
        return out

    def N(self, a, b):
        """[e_a, e_b] = N(a,b) e_{a+b}; requires a+b to be a root."""
        key = (a, b)
        if key in self._memo:
            return self._memo[key]
        val = self._compute(a, b)
        self._memo[key] = val
        return val

    def _neg(self, c):
        return tuple(-x for x in c)

    def _compute(self, a, b):
        apos, bpos = self.is_positive(a), self.is_positive(b)
        if apos and bpos:
            return self._positive_pair(a, b)
        if not apos and not bpos:
            return -self.N(self._neg(a), self._neg(b))
        if not apos:
            return -self.N(b, a)
        # a positive, b negative
        s = tuple(x + y for x, y in zip(a, b))
        if self.is_positive(s):
            # rotate a + b + (-s) = 0:  N(a,b) = (s,s)/(a,a) N(b,-s)
            return -Fraction(self.sq(s), 1) / self.sq(a) * self.N(self._neg(b), s)
        return -self.N(self._neg(a), self._neg(b))

    def _positive_pair(self, a, b):
        if self.order[a] > self.order[b]:
            return -self.N(b, a)
        gamma = tuple(x + y for x, y in zip(a, b))
        a1, b1 = self.extraspecial(gamma)
        if (a, b) == (a1, b1):
            return Fraction(self.down_string(b, a) + 1)
        # Jacobi on (e_{a1}, e_{b1}, e_{-a}) determines N(a, b) from pairs
        # whose sums have smaller height.
        total = Fraction(0)
        d1 = tuple(x - y for x, y in zip(b1, a))
        if self.is_root(d1):
            total += self.N(b1, self._neg(a)) * self.N(d1, a1)
        d2 = tuple(x - y for x, y in zip(a1, a))
        if self.is_root(d2):
            total += self.N(self._neg(a), a1) * self.N(d2, b1)
        n11 = self.N(a1, b1)
        return total * self.sq(gamma) / (self.sq(b) * n11)


# -- fixture files ----------------------------------------------------------

def loads_fixture(text: str, check=True) -> LieAlgebra:
    """Parse a structure-constant document (see `load_fixture`)."""
    dim = None
    labels = None
    cartan = ()
    root_of = {}
    form_scale = Fraction(1)
    rs = None
    brackets = {}
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if head == "dim":
                dim = int(rest)
            elif head == "labels":
                labels = rest.split()
            elif head == "cartan":
                cartan = tuple(int(t) - 1 for t in rest.split())
            elif head == "type":
                t, r = rest.split()
                rs = rootsystem.build(t, int(r))
            elif head == "formscale":
                form_scale = Fraction(rest)
            elif head == "root":
                idx_s, _, coeff_s = rest.partition(":")
                root_of[int(idx_s) - 1] = tuple(int(t) for t in coeff_s.split())
            elif head == "bracket":
                pair_s, _, terms_s = rest.partition(":")
                i, j = (int(t) - 1 for t in pair_s.split())
                toks = terms_s.split()
                if len(toks) % 2:
                    raise ValueError("bracket needs (index, value) pairs")
                vec = {}
                for k_s, v_s in zip(toks[::2], toks[1::2]):
                    vec[int(k_s) - 1] = Fraction(v_s)
                if (i, j) in brackets:
                    raise ValueError(f"duplicate bracket ({i+1},{j+1})")
                brackets[(i, j)] = vec
            else:
                raise ValueError(f"unknown directive {head!r}")
        except ValueError as exc:
            raise ValueError(f"fixture line {ln}: {exc}") from None
    if dim is None:
        raise ValueError("fixture missing 'dim'")
    return LieAlgebra(dim, brackets, labels, cartan, root_of, rs,
                      form_scale, check=check)


def load_fixture(path, check=True) -> LieAlgebra:
    """Load a structure-constant file.

    Format (1-based indices, '#' comments):

        dim 8
        labels e1 e2 ... e8
        cartan 7 8
        type A 2                 # optional: ambient simple type
        formscale 1/4            # optional: invariant-form scale for duals
        root 1 : 1 0             # optional: root coefficients over simples
        bracket 1 2 : 3 -2       # [e1,e2] = -2 e3 (pairs: index value ...)

    Antisymmetric completion is applied; the Jacobi identity is verified and
    a violation names the offending triple.
    """
    return loads_fixture(Path(path).read_text(), check=check)


# -- derived algebras --------------------------------------------------------

def subalgebra(parent: LieAlgebra, vectors, labels=None, check=True) -> tuple:
    """Structure constants of span(vectors) in the given basis.

    Returns (LieAlgebra, coords) where coords(v) expresses an ambient vector
    in the new basis.  Raises if the span is not bracket-closed.
    """
    vecs = [dict(v) for v in vectors]
    k = len(vecs)
    mat = Matrix.from_columns(
        [[v.get(i, 0) for i in range(parent.dim)] for v in vecs],
        nrows=parent.dim)

    def coords(vec):
        dense = [vec.get(i, 0) for i in range(parent.dim)]
        sol = mat.solve(dense)
        if sol is None:
            raise ValueError("vector outside the subalgebra span")
        return {i: c for i, c in enumerate(sol) if c != 0}

    brackets = {}
    for i in range(k):
        for j in range(i + 1, k):
            b = parent.bracket_vec(vecs[i], vecs[j])
            if b:
                brackets[(i, j)] = coords(b)
    sub = LieAlgebra(k, brackets, labels, check=check)
    return sub, coords


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    brackets = {}
    for (i, j), vec in a.brackets.items():
        brackets[(i, j)] = dict(vec)
    for (i, j), vec in b.brackets.items():
        brackets[(i + a.dim, j + a.dim)] = {k + a.dim: v for k, v in vec.items()}
    labels = tuple(f"a.{s}" for s in a.labels) + tuple(f"b.{s}" for s in b.labels)
    cartan = a.cartan + tuple(i + a.dim for i in b.cartan)
    return LieAlgebra(a.dim + b.dim, brackets, labels, cartan, check=False)
