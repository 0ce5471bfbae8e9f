"""Seaweed (biparabolic) subalgebras and their structure.

A seaweed is cut out of a simple algebra by two subsets pi1, pi2 of simple
roots.  The realization here puts the (empty, full) seaweed on the negative
root side, matching the published A2 example; the opposite convention is
related by the Chevalley involution and gives the same dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from . import rootsystem
from .chevalley import LieAlgebra, subalgebra
from .exactlin import Matrix, sparse_kernel_basis

_cached_build = lru_cache(maxsize=None)(rootsystem.build)


def _primitive(vec):
    """Scale a rational coordinate dict to a primitive integer vector."""
    from math import gcd
    scale = 1
    for v in vec.values():
        if isinstance(v, Fraction):
            scale = scale * v.denominator // gcd(scale, v.denominator)
    out = {k: int(v * scale) for k, v in vec.items() if v != 0}
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        out = {k: v // g for k, v in out.items()}
    return out


@dataclass(frozen=True)
class SeaweedSpec:
    """The pair (pi1 | pi2), simple-root indices 1-based."""
    type_label: str
    rank: int
    pi1: frozenset
    pi2: frozenset

    def __post_init__(self):
        for pi in (self.pi1, self.pi2):
            bad = [i for i in pi if not 1 <= i <= self.rank]
            if bad:
                raise ValueError(f"simple-root index out of range: {bad}")

    @classmethod
    def make(cls, type_label, rank, pi1, pi2):
        return cls(type_label, rank, frozenset(pi1), frozenset(pi2))

    def sorted_pi(self):
        return sorted(self.pi1), sorted(self.pi2)


def is_indecomposable(spec: SeaweedSpec) -> bool:
    return spec.pi1 | spec.pi2 == set(range(1, spec.rank + 1))


@dataclass
class Seaweed:
    ambient: LieAlgebra
    spec: SeaweedSpec | None
    member: tuple          # basis indices of s inside the ambient algebra
    reductive: tuple       # r: Cartan indices plus paired root vectors
    nilradical: tuple      # n: root vectors whose opposite is outside s
    dual_nilradical: tuple # indices of the Killing-dual partners of n
    remainder: tuple       # everything else

    @property
    def dim(self):
        return len(self.member)

    def algebra(self):
        """s as a standalone algebra in its member basis (cached)."""
        if not hasattr(self, "_algebra"):
            vecs = [{i: Fraction(1)} for i in self.member]
            sub, _ = subalgebra(self.ambient, vecs,
                                labels=[self.ambient.labels[i] for i in self.member],
                                check=False)
            self._algebra = sub
        return self._algebra


def _support(coeffs):
    return {i + 1 for i, c in enumerate(coeffs) if c != 0}


def build_seaweed(g: LieAlgebra, spec: SeaweedSpec) -> Seaweed:
    """Realize p(pi1 | pi2) inside g; g needs root annotations."""
    if not g.root_of:
        raise ValueError("ambient algebra has no root annotations")
    member = list(g.cartan)
    for i, coeffs in sorted(g.root_of.items()):
        positive = all(c >= 0 for c in coeffs)
        supp = _support(coeffs)
        if positive and supp <= spec.pi1:
            member.append(i)
        elif not positive and supp <= spec.pi2:
            member.append(i)
    member = tuple(sorted(member))
    return _partition(g, spec, member)


def seaweed_from_algebra(L: LieAlgebra) -> Seaweed:
    """Wrap a standalone algebra (e.g. a fixture that is itself a seaweed)."""
    return _partition(L, None, tuple(range(L.dim)))


def _partition(g, spec, member):
    member_set = set(member)
    nil, red = [], []
    for i in member:
        if i in g.cartan or i not in g.root_of:
            red.append(i)
            continue
        opp = g.opposite_index(i)
        if opp is not None and opp in member_set:
            red.append(i)
        else:
            nil.append(i)
    dual = []
    for i in nil:
        opp = g.opposite_index(i)
        if opp is not None:
            dual.append(opp)
    rest = tuple(sorted(set(range(g.dim)) - member_set - set(dual)))
    sw = Seaweed(g, spec, member, tuple(red), tuple(nil), tuple(dual), rest)
    assert not set(dual) & member_set
    return sw


def center(sw: Seaweed):
    """Basis of Z(s) as ambient coordinate vectors (always inside the Cartan)."""
    cols = []
    for i in sw.member:
        col = {}
        for pos, j in enumerate(sw.member):
            for k, v in sw.ambient.bracket(i, j).items():
                col[(j, k)] = v
        cols.append(col)
    # column per member index i: rows (j, k) give coeff of e_k in [e_i, e_j]
    kernel = sparse_kernel_basis(cols)
    out = []
    for coeffs in kernel:
        vec = _primitive({i: c for i, c in zip(sw.member, coeffs) if c != 0})
        cartan_like = set(sw.ambient.cartan) | (set(sw.member) - set(sw.ambient.root_of))
        assert set(vec) <= cartan_like, "central vector outside the Cartan"
        out.append(vec)
    return out


@dataclass
class CenterSplit:
    seaweed: Seaweed
    center_basis: list      # ambient coordinate dicts
    complement_basis: list  # ambient coordinate dicts, bracket-closed
    quotient: LieAlgebra    # structure constants of the complement
    complement_coords: object  # ambient vector -> quotient coordinates

    def project_to_quotient(self, vec):
        """Quotient coordinates of the projection along the center."""
        full = self.center_basis + self.complement_basis
        cols = [[v.get(i, 0) for v in full] for i in range(self.seaweed.ambient.dim)]
        sol = Matrix(cols).solve([vec.get(i, 0) for i in range(self.seaweed.ambient.dim)])
        if sol is None:
            raise ValueError("vector outside s")
        z = len(self.center_basis)
        return {i: c for i, c in enumerate(sol[z:]) if c != 0}

    def center_functional(self, which=0, vector=None):
        """z* with z*(z) = 1 and z* = 0 on the complement.

        `z` is center_basis[which], or `vector` (any vector spanning the same
        center direction, e.g. a published normalization of it).
        """
        basis = list(self.center_basis)
        if vector is not None:
            basis[which] = dict(vector)
        full = basis + self.complement_basis
        dim = self.seaweed.ambient.dim
        mat = Matrix.from_columns(
            [[v.get(i, 0) for i in range(dim)] for v in full], nrows=dim)
        sol = mat.transpose().solve([1 if i == which else 0 for i in range(len(full))])
        if sol is None:
            raise ValueError("center functional does not extend")
        return sol  # dense length-dim list over ambient coordinates


def split_over_center(sw: Seaweed, section_indices=None) -> CenterSplit:
    """Split s = Z(s) (+) s' with s' bracket-closed.

    The Cartan part of s' defaults to the Killing-orthogonal complement of the
    center inside the Cartan of s (which contains [s,s] cap h); a coordinate
    complement is used when the restricted Killing form cannot separate, and
    `section_indices` picks an explicit complement basis instead.
    """
    g = sw.ambient
    zs = center(sw)
    cartan_like = sorted(set(sw.member) & (set(g.cartan) | (set(sw.member) - set(g.root_of))))
    roots_in_s = [i for i in sw.member if i not in cartan_like]

    if section_indices is not None:
        comp = [{i: Fraction(1)} for i in sorted(section_indices)]
    elif not zs:
        comp = [{i: Fraction(1)} for i in sw.member]
    else:
        kappa = g.killing_matrix()
        pair = Matrix([[sum((z.get(i, 0) * kappa.data[i][h] for i in z), Fraction(0))
                        for h in cartan_like] for z in zs])
        hbasis = [_primitive(dict((h, c) for h, c in zip(cartan_like, v) if c != 0))
                  for v in pair.kernel_basis()]
        if len(hbasis) != len(cartan_like) - len(zs):
            # Killing form too degenerate here: fall back to dropping the
            # pivot coordinates of the center vectors.
            zmat = Matrix([[z.get(h, 0) for h in cartan_like] for z in zs])
            _, pivots = zmat.rref()
            hbasis = [{cartan_like[c]: Fraction(1)}
                      for c in range(len(cartan_like)) if c not in pivots]
        comp = hbasis + [{i: Fraction(1)} for i in roots_in_s]

    full = zs + comp
    dim_ok = len(full) == sw.dim
    mat = Matrix.from_columns([[v.get(i, 0) for i in range(g.dim)] for v in full],
                              nrows=g.dim)
    if not dim_ok or mat.rank() != sw.dim:
        raise ValueError("complement does not complement the center in s")
    quotient, coords = subalgebra(g, comp, check=False)
    split = CenterSplit(sw, zs, comp, quotient, coords)
    for z in zs:
        for c in comp:
            if g.bracket_vec(z, c):
                raise ValueError("center does not commute with the complement")
    return split


def quotient_components(spec: SeaweedSpec):
    """Indecomposable seaweed specs of the summands of s/Z(s)."""
    rs = _cached_build(spec.type_label, spec.rank)
    kept = sorted(spec.pi1 | spec.pi2)
    edges = {(i + 1, j + 1) for i, j, _ in rootsystem.dynkin_edges(rs)}
    adj = {k: set() for k in kept}
    for a in kept:
        for b in kept:
            if (min(a, b), max(a, b)) in edges:
                adj[a].add(b)
    comps = []
    seen = set()
    for start in kept:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))

    out = []
    for comp in comps:
        type_label, relabel = _classify_subdiagram(rs, comp)
        pi1 = frozenset(relabel[i] for i in spec.pi1 if i in relabel)
        pi2 = frozenset(relabel[i] for i in spec.pi2 if i in relabel)
        out.append(SeaweedSpec(type_label, len(comp), pi1, pi2))
    for sub in out:
        assert is_indecomposable(sub)
    return out


def _classify_subdiagram(rs, comp):
    """Type label and relabeling {ambient node -> canonical 1-based index}.

    Matches the severed diagram's Cartan matrix against the canonical one of
    each candidate type; searching types in A..G order resolves the B2/C2 and
    A3/D3 coincidences toward the smaller family.
    """
    k = len(comp)
    sub = [[rs.cartan_integer(rs.simple_roots[a - 1], rs.simple_roots[b - 1])
            for b in comp] for a in comp]
    for t, ok in rootsystem.VALID_RANKS.items():
        if not ok(k):
            continue
        cm = _cached_build(t, k).cartan_matrix()
        for perm in permutations(range(k)):
            if all(cm[p][q] == sub[perm[p]][perm[q]]
                   for p in range(k) for q in range(k)):
                return t, {comp[perm[p]]: p + 1 for p in range(k)}
    raise ValueError(f"cannot classify sub-diagram on nodes {comp}")


def render_split_dynkin(spec: SeaweedSpec) -> str:
    """Two-row text diagram; a filled node (*) means the root is in the set."""
    rs = _cached_build(spec.type_label, spec.rank)
    edges = {}
    for i, j, m in rootsystem.dynkin_edges(rs):
        edges[(i + 1, j + 1)] = m

    def edge_symbol(a, b):
        m = edges.get((a, b))
        if m is None:
            return "   "
        if m == 1:
            return "---"
        sq_a = rs.pairing(rs.simple_roots[a - 1], rs.simple_roots[a - 1])
        sq_b = rs.pairing(rs.simple_roots[b - 1], rs.simple_roots[b - 1])
        arrow = f"={m}>" if sq_a > sq_b else f"<{m}="
        return arrow

    def row(pi):
        parts = []
        for i in range(1, spec.rank + 1):
            parts.append("*" if i in pi else "o")
            if i < spec.rank:
                parts.append(edge_symbol(i, i + 1))
        return "".join(parts)

    lines = [row(spec.pi1), row(spec.pi2)]
    extra = [(a, b) for (a, b) in edges if b != a + 1]
    if extra:
        lines.append("branches: " + ", ".join(f"{a}-{b}" for a, b in sorted(extra)))
    return "\n".join(lines)
