"""The Chevalley-Eilenberg complex C^q(a, V) with exact coefficients.

A complex is described by a bracket-closed `domain` and a `module` closed
under the domain action, both given as vectors in an ambient algebra.
Cochains are stored sparsely on strictly increasing index tuples.

Ranks and nullities of the coboundary are computed blockwise: basis cochains
are graded by their eigenvalues under the domain elements that act diagonally
(Cartan elements), and the differential preserves that grading.  This keeps
the eliminations small even when C^q itself is large.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .chevalley import LieAlgebra
from .exactlin import (Matrix, sparse_kernel_basis, sparse_rank,
                       sparse_rank_modp)


def _vec_add(acc, other, scale=1):
    for k, v in other.items():
        nv = acc.get(k, 0) + scale * v
        if nv == 0:
            acc.pop(k, None)
        else:
            acc[k] = nv
    return acc


class ComplexContext:
    """C^*(domain, module) inside an ambient algebra."""

    def __init__(self, ambient: LieAlgebra, domain, module):
        self.ambient = ambient
        self.domain = [dict(v) for v in domain]
        self.module = [dict(v) for v in module]
        self.n = len(self.domain)
        self.m = len(self.module)
        self._dom_solver = _Solver(ambient.dim, self.domain)
        self._mod_solver = _Solver(ambient.dim, self.module)
        # domain bracket table and domain action on the module
        self.dbr = {}
        for i in range(self.n):
            for j in range(i + 1, self.n):
                b = ambient.bracket_vec(self.domain[i], self.domain[j])
                if b:
                    c = self._dom_solver.coords(b)
                    if c is None:
                        raise ValueError("domain is not bracket-closed")
                    if c:
                        self.dbr[(i, j)] = c
        self.act = []
        for i in range(self.n):
            row = {}
            for k in range(self.m):
                b = ambient.bracket_vec(self.domain[i], self.module[k])
                if b:
                    c = self._mod_solver.coords(b)
                    if c is None:
                        raise ValueError("module is not closed under the domain action")
                    if c:
                        row[k] = c
            self.act.append(row)
        # bracket pairs by target: which [d_a, d_b] hit d_t, and with what
        self.pairs_hitting = {}
        for (a, b), vec in self.dbr.items():
            for t, c in vec.items():
                self.pairs_hitting.setdefault(t, []).append((a, b, c))
        self._diag = self._diagonal_indices()
        self._dom_weights = [self._dom_weight(j) for j in range(self.n)]
        self._mod_weights = [self._mod_weight(k) for k in range(self.m)]
        self._rank_cache = {}
        self._basis_cache = {}

    # -- grading ----------------------------------------------------------

    def _diagonal_indices(self):
        diag = []
        for i in range(self.n):
            ok = True
            for (a, b), vec in self.dbr.items():
                if a == i and set(vec) - {b}:
                    ok = False
                elif b == i and set(vec) - {a}:
                    ok = False
                if not ok:
                    break
            if ok:
                for k, vec in self.act[i].items():
                    if set(vec) - {k}:
                        ok = False
                        break
            if ok:
                diag.append(i)
        return diag

    def _dom_weight(self, j):
        out = []
        for i in self._diag:
            if i == j:
                out.append(Fraction(0))
            else:
                a, b = min(i, j), max(i, j)
                vec = self.dbr.get((a, b), {})
                w = vec.get(j, 0)
                out.append(w if a == i else -w)
        return tuple(out)

    def _mod_weight(self, k):
        return tuple(self.act[i].get(k, {}).get(k, 0) for i in self._diag)

    def grade(self, tup, k):
        mw = self._mod_weights[k]
        dws = [self._dom_weights[j] for j in tup]
        return tuple(m - sum(d[i] for d in dws) for i, m in enumerate(mw))

    # -- basis bookkeeping --------------------------------------------------

    def dim_cochains(self, q):
        if q < 0 or q > self.n:
            return 0
        return comb(self.n, q) * self.m

    def basis_by_grade(self, q):
        cached = self._basis_cache.get(q)
        if cached is None:
            cached = {}
            for tup in combinations(range(self.n), q):
                for k in range(self.m):
                    cached.setdefault(self.grade(tup, k), []).append((tup, k))
            self._basis_cache[q] = cached
        return cached

    def basis_cochain(self, tup, k):
        return Cochain(self, len(tup), {tuple(tup): {k: Fraction(1)}})

    def zero(self, q):
        return Cochain(self, q, {})

    # -- the differential ----------------------------------------------------

    def delta_column(self, tup, k):
        """delta of a basis cochain, as {(tuple, module idx): coeff} items."""
        out = {}
        tset = set(tup)
        for mdx in range(self.n):
            if mdx in tset:
                continue
            acted = self.act[mdx].get(k)
            if not acted:
                continue
            s, pos = _insert(tup, mdx)
            sign = -1 if pos % 2 else 1
            for k2, v in acted.items():
                key = (s, k2)
                nv = out.get(key, 0) + sign * v
                if nv == 0:
                    out.pop(key, None)
                else:
                    out[key] = nv
        for tpos, t in enumerate(tup):
            hits = self.pairs_hitting.get(t)
            if not hits:
                continue
            rest = tup[:tpos] + tup[tpos + 1:]
            rset = set(rest)
            sigma = -1 if tpos % 2 else 1
            for a, b, c in hits:
                if a in rset or b in rset:
                    continue
                s, ia = _insert(rest, a)
                s, ib = _insert(s, b)
                sign = sigma * c if (ia + ib) % 2 == 0 else -sigma * c
                key = (s, k)
                nv = out.get(key, 0) + sign
                if nv == 0:
                    out.pop(key, None)
                else:
                    out[key] = nv
        return out.items()

    def _block_columns(self, q, grade):
        basis = self.basis_by_grade(q).get(grade, [])
        return [dict(self.delta_column(tup, k)) for tup, k in basis]

    def _block_rank(self, q, grade, exact=False):
        """Rank of delta_q on one weight block; [value, certified] cached.

        The first pass works modulo a large prime, which can only
        underestimate; `exact=True` (or the certificate in cohomology_dims)
        upgrades the entry with the fraction-free elimination.
        """
        if q < 0 or q > self.n:
            return [0, True]
        key = (q, grade)
        entry = self._rank_cache.get(key)
        if entry is None:
            cols = self._block_columns(q, grade)
            try:
                entry = [sparse_rank_modp(cols), False]
            except ZeroDivisionError:
                entry = [sparse_rank(cols), True]
            self._rank_cache[key] = entry
        if exact and not entry[1]:
            entry[0] = sparse_rank(self._block_columns(q, grade))
            entry[1] = True
        return entry

    def rank_delta(self, q):
        """Rank of delta_q : C^q -> C^{q+1}, exact."""
        if q < 0 or q > self.n:
            return 0
        return sum(self._block_rank(q, g, exact=True)[0]
                   for g in self.basis_by_grade(q))

    def cohomology_dims(self, q):
        """(dim Z^q, dim B^q, dim H^q).

        Blockwise ranks are certified exact whenever the modular lower bounds
        already fill the block (rank delta_q + rank delta_{q-1} = dim C^q on
        the block, which pins both from below and above); anything short of
        that is recomputed exactly.
        """
        if q < 0 or q > self.n:
            return CohomologyDims(0, 0, 0)
        grades = set(self.basis_by_grade(q))
        if 0 < q <= self.n + 1:
            grades |= set(self.basis_by_grade(q - 1))
        z = b = 0
        for g in sorted(grades):
            dim_g = len(self.basis_by_grade(q).get(g, []))
            rq = self._block_rank(q, g)
            rp = self._block_rank(q - 1, g) if q > 0 else [0, True]
            if not (rq[1] and rp[1]):
                if rq[0] + rp[0] == dim_g:
                    rq[1] = rp[1] = True
                else:
                    rq = self._block_rank(q, g, exact=True)
                    rp = (self._block_rank(q - 1, g, exact=True)
                          if q > 0 else [0, True])
            z += dim_g - rq[0]
            b += rp[0]
        h = z - b
        assert h >= 0
        return CohomologyDims(z, b, h)

    def cocycle_basis(self, q):
        """Basis of Z^q as Cochain objects (per-grade kernels)."""
        out = []
        for grade, basis in sorted(self.basis_by_grade(q).items()):
            cols = [dict(self.delta_column(tup, k)) for tup, k in basis]
            for coeffs in sparse_kernel_basis(cols):
                data = {}
                for (tup, k), c in zip(basis, coeffs):
                    if c != 0:
                        data.setdefault(tup, {})[k] = c
                out.append(Cochain(self, q, data))
        return out

    def coboundary_basis(self, q):
        """Independent coboundaries spanning B^q, as Cochain objects."""
        if q <= 0:
            return []
        out = []
        for grade, basis in sorted(self.basis_by_grade(q - 1).items()):
            pivot_rows = {}
            for tup, k in basis:
                col = dict(self.delta_column(tup, k))
                vec = dict(col)
                while vec:
                    r = min(vec, key=_rowkey)
                    piv = pivot_rows.get(r)
                    if piv is None:
                        pivot_rows[r] = vec
                        out.append(Cochain(self, q, _to_data(col)))
                        break
                    f = vec[r] / piv[r]
                    for pr, pv in piv.items():
                        nv = vec.get(pr, 0) - f * pv
                        if nv == 0:
                            vec.pop(pr, None)
                        else:
                            vec[pr] = nv
        return out


def _rowkey(row):
    return row


def _to_data(col):
    data = {}
    for (tup, k), c in col.items():
        if c != 0:
            data.setdefault(tup, {})[k] = c
    return data


class _Solver:
    """Expresses ambient vectors in a fixed spanning list, exactly."""

    def __init__(self, dim, vectors):
        self.dim = dim
        self.vectors = vectors
        self.unit = {}
        self.mat = None
        if all(len(v) == 1 and next(iter(v.values())) == 1 for v in vectors):
            self.unit = {next(iter(v)): i for i, v in enumerate(vectors)}
        else:
            self.mat = Matrix.from_columns(
                [[v.get(i, 0) for i in range(dim)] for v in vectors], nrows=dim)

    def coords(self, vec):
        if self.mat is None:
            out = {}
            for i, c in vec.items():
                j = self.unit.get(i)
                if j is None:
                    return None
                if c != 0:
                    out[j] = c
            return out
        sol = self.mat.solve([vec.get(i, 0) for i in range(self.dim)])
        if sol is None:
            return None
        return {i: c for i, c in enumerate(sol) if c != 0}


@dataclass(frozen=True)
class CohomologyDims:
    cocycles: int
    coboundaries: int
    cohomology: int

    def __iter__(self):
        return iter((self.cocycles, self.coboundaries, self.cohomology))


class Cochain:
    """Alternating q-cochain: {increasing tuple: {module index: coeff}}."""

    __slots__ = ("context", "degree", "data")

    def __init__(self, context, degree, data):
        self.context = context
        self.degree = degree
        self.data = {}
        for tup, vec in data.items():
            vec = {k: v for k, v in vec.items() if v != 0}
            if vec:
                self.data[tup] = vec

    def is_zero(self):
        return not self.data

    def items(self):
        for tup, vec in self.data.items():
            for k, c in vec.items():
                yield (tup, k), c

    def copy(self):
        return Cochain(self.context, self.degree,
                       {t: dict(v) for t, v in self.data.items()})

    def add(self, other, scale=1):
        if other.context is not self.context or other.degree != self.degree:
            raise ValueError("cochain mismatch")
        out = {t: dict(v) for t, v in self.data.items()}
        for t, vec in other.data.items():
            _vec_add(out.setdefault(t, {}), vec, scale)
        return Cochain(self.context, self.degree, out)

    def scale(self, c):
        return Cochain(self.context, self.degree,
                       {t: {k: c * v for k, v in vec.items()}
                        for t, vec in self.data.items()})

    def __eq__(self, other):
        return (isinstance(other, Cochain) and self.degree == other.degree
                and self.data == other.data)

    def evaluate(self, indices):
        """Value on domain basis indices in any order; {} on repeats."""
        if len(indices) != self.degree:
            raise ValueError("wrong arity")
        if len(set(indices)) != len(indices):
            return {}
        order = sorted(range(len(indices)), key=lambda i: indices[i])
        inversions = sum(1 for a, b in combinations(range(len(indices)), 2)
                         if order[a] > order[b])
        sign = -1 if inversions % 2 else 1
        vec = self.data.get(tuple(sorted(indices)), {})
        return {k: sign * v for k, v in vec.items()}

    def evaluate_vectors(self, vecs):
        """Multilinear value on domain-coordinate vectors."""
        acc = {}
        _eval_rec(self, list(vecs), [], Fraction(1), acc)
        return acc

    def as_dense(self):
        out = {}
        for tup, vec in self.data.items():
            out[tup] = [vec.get(k, 0) for k in range(self.context.m)]
        return out


def _eval_rec(f, vecs, chosen, coeff, acc):
    if not vecs:
        _vec_add(acc, f.evaluate(chosen), coeff)
        return
    head, rest = vecs[0], vecs[1:]
    for i, c in head.items():
        if c != 0:
            _eval_rec(f, rest, chosen + [i], coeff * c, acc)


def coboundary(f: Cochain) -> Cochain:
    """Chevalley-Eilenberg differential.

    (delta f)(x_0..x_q) = sum_i (-1)^i x_i . f(..x^_i..)
                        + sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..x^_i..x^_j..)
    """
    ctx = f.context
    q = f.degree
    out = {}
    for tup, vec in f.data.items():
        tset = set(tup)
        # action terms: S = tup + {m}
        for mdx in range(ctx.n):
            if mdx in tset:
                continue
            acted = {}
            for k, c in vec.items():
                a = ctx.act[mdx].get(k)
                if a:
                    _vec_add(acted, a, c)
            if not acted:
                continue
            s, pos = _insert(tup, mdx)
            sign = -1 if pos % 2 else 1
            _vec_add(out.setdefault(s, {}), acted, sign)
        # bracket terms: replace t in tup by a pair (a, b)
        for tpos, t in enumerate(tup):
            hits = ctx.pairs_hitting.get(t)
            if not hits:
                continue
            rest = tup[:tpos] + tup[tpos + 1:]
            rset = set(rest)
            sigma = -1 if tpos % 2 else 1
            for a, b, c in hits:
                if a in rset or b in rset:
                    continue
                s, ia = _insert(rest, a)
                s, ib = _insert(s, b)
                sign = -1 if (ia + ib) % 2 else 1
                _vec_add(out.setdefault(s, {}), vec, sign * sigma * c)
    return Cochain(ctx, q + 1, out)


def _insert(tup, x):
    lst = list(tup)
    insort(lst, x)
    return tuple(lst), lst.index(x)


def lie_derivative(x_vec, f: Cochain, acting=None) -> Cochain:
    """(x . f)(x_1..x_q) = [x, f(..)] - sum_i f(.., [x, x_i], ..).

    `x_vec` is an ambient coordinate vector whose action must close on the
    domain and the module.
    """
    ctx = f.context
    a_dom, a_mod = _action_tables(ctx, x_vec)
    out = {}
    for tup, vec in f.data.items():
        mu = {}
        for k, c in vec.items():
            col = a_mod.get(k)
            if col:
                _vec_add(mu, col, c)
        if mu:
            _vec_add(out.setdefault(tup, {}), mu)
        for tpos, t in enumerate(tup):
            rest = tup[:tpos] + tup[tpos + 1:]
            rset = set(rest)
            for u in range(ctx.n):
                col = a_dom.get(u)
                if not col:
                    continue
                c = col.get(t, 0)
                if c == 0 or u in rset:
                    continue
                if u == t:
                    _vec_add(out.setdefault(tup, {}), vec, -c)
                    continue
                s, pu = _insert(rest, u)
                pt = tpos
                sign = -1 if (pt + pu) % 2 else 1
                _vec_add(out.setdefault(s, {}), vec, -sign * c)
    return Cochain(ctx, f.degree, out)


def _action_tables(ctx, x_vec):
    """Columns of the action of x on the domain and on the module."""
    a_dom, a_mod = {}, {}
    for u in range(ctx.n):
        b = ctx.ambient.bracket_vec(x_vec, ctx.domain[u])
        if b:
            c = ctx._dom_solver.coords(b)
            if c is None:
                raise ValueError("action does not close on the domain")
            if c:
                a_dom[u] = c
    for k in range(ctx.m):
        b = ctx.ambient.bracket_vec(x_vec, ctx.module[k])
        if b:
            c = ctx._mod_solver.coords(b)
            if c is None:
                raise ValueError("action does not close on the module")
            if c:
                a_mod[k] = c
    return a_dom, a_mod


def invariant_cochains(ctx: ComplexContext, q, generators):
    """Basis of the joint kernel of the generators' Lie derivatives on C^q."""
    if q < 0 or q > ctx.n:
        return []
    tables = [_action_tables(ctx, g) for g in generators]
    diag, general = [], []
    for (a_dom, a_mod), g in zip(tables, generators):
        dom_ok = all(set(col) == {u} for u, col in a_dom.items())
        mod_ok = all(set(col) == {k} for k, col in a_mod.items())
        if dom_ok and mod_ok:
            diag.append((a_dom, a_mod))
        else:
            general.append(g)
    candidates = []
    for tup in combinations(range(ctx.n), q):
        for k in range(ctx.m):
            good = True
            for a_dom, a_mod in diag:
                w = a_mod.get(k, {}).get(k, 0) - sum(
                    a_dom.get(t, {}).get(t, 0) for t in tup)
                if w != 0:
                    good = False
                    break
            if good:
                candidates.append((tup, k))
    if not candidates:
        return []
    cols = []
    for tup, k in candidates:
        f = ctx.basis_cochain(tup, k)
        col = {}
        for gi, g in enumerate(general):
            for key, c in lie_derivative(g, f).items():
                col[(gi,) + key] = c
        cols.append(col)
    basis = []
    for coeffs in sparse_kernel_basis(cols):
        data = {}
        for (tup, k), c in zip(candidates, coeffs):
            if c != 0:
                data.setdefault(tup, {})[k] = c
        basis.append(Cochain(ctx, q, data))
    return basis


@dataclass(frozen=True)
class InvariantCohomologyDims:
    cocycles: int
    coboundaries: int
    cohomology: int
    coboundaries_match_full: bool = True

    def __iter__(self):
        return iter((self.cocycles, self.coboundaries, self.cohomology))


def invariant_cohomology_dims(ctx: ComplexContext, q, generators,
                              check_consistency=True):
    """Dims of the invariant subcomplex at degree q.

    Invariant coboundaries are delta of invariant (q-1)-cochains; for a
    reductive invariance algebra this agrees with B^q intersected with the
    invariants, and `coboundaries_match_full` records that comparison.
    """
    inv_q = invariant_cochains(ctx, q, generators)
    inv_prev = invariant_cochains(ctx, q - 1, generators) if q > 0 else []
    z_cols = [dict(coboundary(f).items()) for f in inv_q]
    z_dim = len(inv_q) - sparse_rank(z_cols)
    b_cols = [dict(coboundary(f).items()) for f in inv_prev]
    b_dim = sparse_rank(b_cols)
    consistent = True
    if check_consistency and q > 0:
        consistent = _coboundary_consistency(ctx, q, inv_q, b_cols, b_dim)
    h = z_dim - b_dim
    assert h >= 0
    return InvariantCohomologyDims(z_dim, b_dim, h, consistent)


def _coboundary_consistency(ctx, q, inv_q, b_cols, b_dim):
    """dim(B^q cap invariants) == dim delta(invariant (q-1)-cochains)?"""
    inv_cols = [dict(f.items()) for f in inv_q]
    if not inv_cols:
        return b_dim == 0
    grades = {ctx.grade(tup, k) for f in inv_q for (tup, k), _ in f.items()}
    full_cols = []
    for grade in sorted(grades):
        for tup, k in ctx.basis_by_grade(q - 1).get(grade, []):
            full_cols.append(dict(ctx.delta_column(tup, k)))
    r_b0 = sparse_rank(full_cols)
    r_i = sparse_rank(inv_cols)
    r_union = sparse_rank(full_cols + inv_cols)
    return (r_b0 + r_i - r_union) == b_dim


def cohomology_dims(ctx: ComplexContext, q):
    return ctx.cohomology_dims(q)


def _units(indices):
    return [{i: Fraction(1)} for i in indices]


def adjoint_context(sw) -> ComplexContext:
    """C^*(s, s) for a seaweed (cached on the seaweed)."""
    if not hasattr(sw, "_adjoint_ctx"):
        sw._adjoint_ctx = ComplexContext(sw.ambient, _units(sw.member),
                                         _units(sw.member))
    return sw._adjoint_ctx


def nilradical_context(sw) -> ComplexContext:
    """C^*(n, s) for a seaweed (cached on the seaweed)."""
    if not hasattr(sw, "_nilradical_ctx"):
        sw._nilradical_ctx = ComplexContext(sw.ambient, _units(sw.nilradical),
                                            _units(sw.member))
    return sw._nilradical_ctx


def full_context(L: LieAlgebra) -> ComplexContext:
    """C^*(g, g) for a whole algebra."""
    units = _units(range(L.dim))
    return ComplexContext(L, units, units)


def quotient_context(split) -> ComplexContext:
    """C^*(Q, s): the center-complement acting on all of s (cached).

    With a trivial center the complement is s itself and the adjoint context
    is reused rather than rebuilt.
    """
    if not split.center_basis:
        return adjoint_context(split.seaweed)
    if not hasattr(split, "_quotient_ctx"):
        split._quotient_ctx = ComplexContext(
            split.seaweed.ambient, split.complement_basis,
            _units(split.seaweed.member))
    return split._quotient_ctx


def reductive_generators(sw):
    """Basis vectors of r, as ambient coordinate dicts."""
    return _units(sw.reductive)
