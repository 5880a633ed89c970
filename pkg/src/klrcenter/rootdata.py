"""
Combinatorial input data: the quiver, weight/root lattices, the bilinear
pairings, the polynomials Q_ij attached to pairs of vertices, the degree
function on diagram generators, and the mod-2 forms beta used to twist
adjunctions.

Vertices are referred to by integer index (their declaration order in the
input file); that order is total and fixed, and the beta form built from an
ordering uses exactly this order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class RootDataError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    """An oriented simply-laced graph without loops.

    `vertices` are label strings; `edges` are (source, target) index pairs,
    multiplicities allowed.
    """

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise RootDataError("duplicate vertex labels")
        for s, t in self.edges:
            if not (0 <= s < n and 0 <= t < n):
                raise RootDataError("edge endpoint out of range")
            if s == t:
                raise RootDataError("loops are not allowed")

    @property
    def rank(self):
        return len(self.vertices)

    def index(self, label):
        try:
            return self.vertices.index(label)
        except ValueError:
            raise RootDataError("unknown vertex label %r" % (label,))

    def edge_count(self, i, j):
        """Number of oriented edges i -> j."""
        self._check(i)
        self._check(j)
        return sum(1 for s, t in self.edges if s == i and t == j)

    def _check(self, i):
        if not (0 <= i < self.rank):
            raise RootDataError("unknown vertex index %r" % (i,))

    def adjacent(self, i, j):
        return i != j and (self.edge_count(i, j) + self.edge_count(j, i)) > 0

    def is_finite_type(self):
        """True when the Cartan matrix is positive definite (finite ADE)."""
        n = self.rank
        from fractions import Fraction

        a = [[Fraction(cartan_pairing(self, i, j)) for j in range(n)] for i in range(n)]
        # leading principal minors via fraction-free elimination
        for k in range(n):
            piv = a[k][k]
            if piv <= 0:
                return False
            for r in range(k + 1, n):
                f = a[r][k] / piv
                for c in range(k, n):
                    a[r][c] -= f * a[k][c]
        return True


@dataclass(frozen=True)
class Weight:
    """An integral weight recorded by its values lambda^i = alpha_i^vee(lambda)."""

    coeffs: tuple

    def __getitem__(self, i):
        return self.coeffs[i]

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __repr__(self):
        return "Weight%r" % (self.coeffs,)


@dataclass(frozen=True)
class RootVector:
    """An element of the root lattice, nu = sum_i mult_i alpha_i."""

    mults: tuple

    def __getitem__(self, i):
        return self.mults[i]

    def __add__(self, other):
        return RootVector(tuple(a + b for a, b in zip(self.mults, other.mults)))

    def __sub__(self, other):
        return RootVector(tuple(a - b for a, b in zip(self.mults, other.mults)))

    def is_nonnegative(self):
        return all(v >= 0 for v in self.mults)

    @property
    def size(self):
        return sum(self.mults)

    def __repr__(self):
        return "RootVector%r" % (self.mults,)


def alpha(quiver, i):
    """The simple root alpha_i as a RootVector."""
    return RootVector(tuple(1 if j == i else 0 for j in range(quiver.rank)))


def cartan_pairing(quiver, i, j):
    """<alpha_i, alpha_j>: 2 on the diagonal, minus the number of edges
    between i and j (either orientation) off it."""
    quiver._check(i)
    quiver._check(j)
    if i == j:
        return 2
    return -(quiver.edge_count(i, j) + quiver.edge_count(j, i))


def root_pairing(quiver, v, w):
    """Bilinear extension of the Cartan pairing to root vectors."""
    return sum(
        v[i] * w[j] * cartan_pairing(quiver, i, j)
        for i in range(quiver.rank)
        for j in range(quiver.rank)
        if v[i] and w[j]
    )


def weight_root_pairing(quiver, lam, v):
    """(lambda, nu) in the normalization where (alpha_i, alpha_i) = 2."""
    return sum(lam[i] * v[i] for i in range(quiver.rank))


def weight_after(quiver, lam, nu):
    """mu = lambda - nu, as a Weight."""
    return Weight(
        tuple(
            lam[i] - sum(nu[j] * cartan_pairing(quiver, j, i) for j in range(quiver.rank))
            for i in range(quiver.rank)
        )
    )


def qpoly(quiver, i, j, deformed=False):
    """The polynomial Q_ij(u, v) = (u-v)^{#{j->i}} (v-u)^{#{i->j}}.

    Returned as a dict (a, b) -> coeff for the monomials u^a v^b.  With
    `deformed`, each linear factor gains +h and the coefficients become
    HPoly values.
    """
    if i == j:
        raise RootDataError("Q_ij is only defined for i != j")
    from .rings import HPoly

    one = HPoly.const(1) if deformed else 1
    h = HPoly((0, 1)) if deformed else 0
    out = {(0, 0): one}

    def mul_linear(poly, cu, cv):
        # multiply by cu*u + cv*v + h
        res = {}
        for (a, b), c in poly.items():
            for key, f in (((a + 1, b), cu), ((a, b + 1), cv)):
                if f:
                    res[key] = res.get(key, 0) + c * f
            if deformed:
                res[(a, b)] = res.get((a, b), 0) + c * h
        return {k: v for k, v in res.items() if v}

    for _ in range(quiver.edge_count(j, i)):
        out = mul_linear(out, 1, -1)
    for _ in range(quiver.edge_count(i, j)):
        out = mul_linear(out, -1, 1)
    return out


def generator_degree(quiver, kind, i=None, j=None, lam=None):
    """Degree of an elementary diagram.

    kind is one of 'dot', 'crossing', 'cap', 'cup'.  Crossings of equal
    labels have degree -2, otherwise -<alpha_i, alpha_j> (so +1 for a single
    edge, 0 when non-adjacent).  The clockwise cap is <lambda, alpha_i> - 1
    and the clockwise cup is -<lambda, alpha_i> - 1.
    """
    if kind == "dot":
        return 2
    if kind == "crossing":
        return -cartan_pairing(quiver, i, j)
    if kind == "cap":
        return lam[i] - 1
    if kind == "cup":
        return -lam[i] - 1
    raise RootDataError("unknown generator kind %r" % (kind,))


@dataclass(frozen=True)
class BetaForm:
    """A mod-2 bilinear form on the root lattice with
    beta(x, y) + beta(y, x) = <x, y> mod 2 on simple roots."""

    quiver: Quiver
    table: tuple  # table[i][j] in {0, 1}

    def on_simple(self, i, j):
        return self.table[i][j]

    def pair(self, v, w):
        """Bilinear mod-2 extension to root vectors."""
        n = self.quiver.rank
        return (
            sum(
                v[i] * w[j] * self.table[i][j]
                for i in range(n)
                for j in range(n)
                if (v[i] % 2) and (w[j] % 2)
            )
            % 2
        )

    def check(self):
        n = self.quiver.rank
        for i in range(n):
            for j in range(n):
                lhs = (self.table[i][j] + self.table[j][i]) % 2
                if lhs != cartan_pairing(self.quiver, i, j) % 2:
                    return False
        return True


def beta_from_order(quiver):
    """beta(alpha_i, alpha_j) = <alpha_i, alpha_j> mod 2 when i > j, else 0.

    The order is the declaration order of the vertices.
    """
    n = quiver.rank
    table = tuple(
        tuple((cartan_pairing(quiver, i, j) % 2) if i > j else 0 for j in range(n))
        for i in range(n)
    )
    form = BetaForm(quiver, table)
    assert form.check()
    return form


def beta_bipartite(quiver, part0):
    """beta(alpha_i, alpha_j) = <alpha_i, alpha_j> mod 2 when i lies in the
    0-part of a bipartition, else 0."""
    part0 = frozenset(part0)
    for s, t in quiver.edges:
        if (s in part0) == (t in part0):
            raise RootDataError("partition is not a valid 2-coloring")
    n = quiver.rank
    table = tuple(
        tuple((cartan_pairing(quiver, i, j) % 2) if i in part0 else 0 for j in range(n))
        for i in range(n)
    )
    form = BetaForm(quiver, table)
    assert form.check()
    return form


def beta_zero(quiver):
    """The zero form; valid only when all Cartan pairings are even."""
    n = quiver.rank
    table = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    form = BetaForm(quiver, table)
    if not form.check():
        raise RootDataError("zero form violates the defining congruence here")
    return form


def xi_offset(quiver, lam, mu, i, alt_sign=False):
    """mu^i - v_i where lambda - mu = sum v_j alpha_j.

    Only the parity is ever consumed (as a duality-twist sign).  The
    `alt_sign` flag returns v_i + mu^i instead; the two agree mod 2.
    """
    n = quiver.rank
    diff = tuple(lam[j] - mu[j] for j in range(n))
    # solve Cartan * v = diff over the integers
    from fractions import Fraction

    a = [[Fraction(cartan_pairing(quiver, r, c)) for c in range(n)] + [Fraction(diff[r])] for r in range(n)]
    for k in range(n):
        piv = None
        for r in range(k, n):
            if a[r][k]:
                piv = r
                break
        if piv is None:
            raise RootDataError("lambda - mu not in the root lattice span")
        a[k], a[piv] = a[piv], a[k]
        for r in range(n):
            if r != k and a[r][k]:
                f = a[r][k] / a[k][k]
                for c in range(k, n + 1):
                    a[r][c] -= f * a[k][c]
    v = []
    for k in range(n):
        val = a[k][n] / a[k][k]
        if val.denominator != 1 or val < 0:
            raise RootDataError("lambda - mu is not a nonnegative root vector")
        v.append(int(val))
    if alt_sign:
        return v[i] + mu[i]
    return mu[i] - v[i]


def load_quiver_file(path):
    """Read a quiver description from a JSON document.

    Schema: {"vertices": [str, ...], "edges": [[src, dst], ...],
             "weights": {name: {vertex: int, ...}, ...}}
    Edge endpoints are vertex labels.  Returns (quiver, weights dict).
    """
    with open(path) as fh:
        data = json.load(fh)
    try:
        labels = tuple(str(v) for v in data["vertices"])
    except KeyError:
        raise RootDataError("quiver file missing 'vertices'")
    quiver = Quiver(
        labels,
        tuple(
            (labels.index(str(s)), labels.index(str(t)))
            for s, t in data.get("edges", [])
        ),
    )
    weights = {}
    for name, coeffs in data.get("weights", {}).items():
        vals = [0] * quiver.rank
        for lab, v in coeffs.items():
            vals[quiver.index(str(lab))] = int(v)
        weights[name] = Weight(tuple(vals))
    return quiver, weights
