"""Root data for the simple types A-G.

Roots live in a standard orthonormal ambient space with rational coordinates.
The invariant form is the ambient dot product rescaled so that long roots have
squared length 2 in every type; Cartan integers are independent of that scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 3,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def _simple_roots(type_label, rank):
    """Simple roots as rational coordinate tuples, Bourbaki realizations."""
    t, n = type_label, rank

    def step(i, dim):
        return _add(_unit(i, dim, 1), _unit(i + 1, dim, -1))

    if t == "A":
        return [step(i, n + 1) for i in range(n)]
    if t == "B":
        return [step(i, n) for i in range(n - 1)] + [_unit(n - 1, n, 1)]
    if t == "C":
        return [step(i, n) for i in range(n - 1)] + [_unit(n - 1, n, 2)]
    if t == "D":
        return [step(i, n) for i in range(n - 1)] + \
            [_add(_unit(n - 2, n, 1), _unit(n - 1, n, 1))]
    if t == "G":
        return [(Fraction(1), Fraction(-1), Fraction(0)),
                (Fraction(-2), Fraction(1), Fraction(1))]
    if t == "F":
        h = Fraction(1, 2)
        return [
            (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(1), Fraction(-1)),
            (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
            (h, -h, -h, -h),
        ]
    if t == "E":
        h = Fraction(1, 2)
        e8 = [
            (h, -h, -h, -h, -h, -h, -h, h),
            (Fraction(1), Fraction(1)) + (Fraction(0),) * 6,
            (Fraction(-1), Fraction(1)) + (Fraction(0),) * 6,
            (Fraction(0), Fraction(-1), Fraction(1)) + (Fraction(0),) * 5,
            (Fraction(0), Fraction(0), Fraction(-1), Fraction(1)) + (Fraction(0),) * 4,
            (Fraction(0),) * 3 + (Fraction(-1), Fraction(1)) + (Fraction(0),) * 3,
            (Fraction(0),) * 4 + (Fraction(-1), Fraction(1)) + (Fraction(0),) * 2,
            (Fraction(0),) * 5 + (Fraction(-1), Fraction(1), Fraction(0)),
        ]
        return e8[:n]
    raise ValueError(f"unknown type {type_label!r}")


def _unit(i, dim, val):
    v = [Fraction(0)] * dim
    v[i] = Fraction(val)
    return tuple(v)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _scale(u, c):
    return tuple(c * a for a in u)


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    simple_roots: tuple            # ambient coordinate tuples
    positive_roots: tuple          # ambient coordinate tuples, lex order on coefficients
    coeffs: dict = field(compare=False)   # root -> coefficient tuple over the simple roots
    form_scale: Fraction = Fraction(1)

    @property
    def roots(self):
        return self.positive_roots + tuple(_scale(b, -1) for b in self.positive_roots)

    def coefficients(self, root):
        """Integer coefficients of a root over the simple roots."""
        c = self.coeffs.get(root)
        if c is None:
            neg = self.coeffs.get(_scale(root, -1))
            if neg is None:
                raise ValueError(f"not a root: {root}")
            c = tuple(-x for x in neg)
        return c

    def is_root(self, vec):
        return vec in self.coeffs or _scale(vec, -1) in self.coeffs

    def pairing(self, v, w):
        return self.form_scale * _dot(v, w)

    def cartan_integer(self, beta, alpha):
        """2(beta, alpha)/(alpha, alpha)."""
        return 2 * self.pairing(beta, alpha) / self.pairing(alpha, alpha)

    def cartan_matrix(self):
        return [[self.cartan_integer(a, b) for b in self.simple_roots]
                for a in self.simple_roots]

    def reflect(self, vec, alpha):
        return _add(vec, _scale(alpha, -self.cartan_integer(vec, alpha)))

    def root_string(self, alpha, beta):
        """(r, q) with the alpha-string through beta equal to beta-r*alpha ... beta+q*alpha."""
        if beta == alpha or beta == _scale(alpha, -1):
            raise ValueError("string through +/-alpha is degenerate")
        r = 0
        cur = _add(beta, _scale(alpha, -1))
        while self.is_root(cur):
            r += 1
            cur = _add(cur, _scale(alpha, -1))
        q = 0
        cur = _add(beta, alpha)
        while self.is_root(cur):
            q += 1
            cur = _add(cur, alpha)
        return r, q

    def height(self, root):
        return sum(self.coefficients(root))


def build(type_label: str, rank: int) -> RootSystem:
    """Construct the root system, generating positive roots to closure."""
    ok = VALID_RANKS.get(type_label)
    if ok is None or not ok(rank):
        raise ValueError(f"invalid simple type ({type_label}, {rank})")
    simples = _simple_roots(type_label, rank)

    long_sq = max(_dot(a, a) for a in simples)
    form_scale = Fraction(2) / long_sq

    def pairing(v, w):
        return form_scale * _dot(v, w)

    coeffs = {}
    for i, a in enumerate(simples):
        coeffs[a] = tuple(1 if j == i else 0 for j in range(rank))
    # Extend by height: beta + alpha is a root iff q > 0, with
    # q = r - <beta, alpha^vee> known from the part already generated.
    frontier = list(simples)
    while frontier:
        new = []
        for beta in frontier:
            for i, alpha in enumerate(simples):
                cart = 2 * pairing(beta, alpha) / pairing(alpha, alpha)
                r = 0
                cur = _add(beta, _scale(alpha, -1))
                while cur in coeffs:
                    r += 1
                    cur = _add(cur, _scale(alpha, -1))
                q = r - cart
                if q > 0:
                    cand = _add(beta, alpha)
                    if cand not in coeffs:
                        c = list(coeffs[beta])
                        c[i] += 1
                        coeffs[cand] = tuple(c)
                        new.append(cand)
        frontier = new

    positive = sorted(coeffs, key=lambda root: coeffs[root])
    return RootSystem(type_label, rank, tuple(simples), tuple(positive),
                      coeffs, form_scale)


def pairing(rs: RootSystem, v, w) -> Fraction:
    return rs.pairing(v, w)


def root_string(rs: RootSystem, alpha, beta):
    return rs.root_string(alpha, beta)


ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


def dynkin_edges(rs: RootSystem):
    """Edges (i, j, multiplicity) of the Dynkin diagram, 0-based node indices."""
    edges = []
    cm = rs.cartan_matrix()
    for i, j in combinations(range(rs.rank), 2):
        m = cm[i][j] * cm[j][i]
        if m != 0:
            edges.append((i, j, int(m)))
    return edges
