"""
Centers and cocenters of finite-dimensional graded algebras by exact
linear algebra.

Centralizer equations are solved against a homogeneous multiplicative
generating set (commuting with generators implies commuting with
everything); all ranks are over exact rationals and there are no
tolerance parameters anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebras import GradedAlgebra
from .linalg import EchelonPool
from .rings import Laurent


@dataclass
class CenterBasis:
    algebra: GradedAlgebra
    elements: list  # homogeneous central vecs
    degrees: list
    mult_table: list  # mult_table[a][b] = coordinates in this basis

    @property
    def dim(self):
        return len(self.elements)

    def hilbert(self):
        h = Laurent()
        for d in self.degrees:
            h = h + Laurent.term(1, d)
        return h

    def coordinates(self, vec):
        """Coordinates of a central vector in this basis (None if the
        vector is outside the span)."""
        return solve_in_span(self.elements, vec)


@dataclass
class CocenterBasis:
    algebra: GradedAlgebra
    degrees: list
    functionals: list  # dual functionals on the ambient algebra

    @property
    def dim(self):
        return len(self.degrees)

    def hilbert(self):
        h = Laurent()
        for d in self.degrees:
            h = h + Laurent.term(1, d)
        return h

    def image(self, vec):
        """Class of an algebra element in the cocenter coordinates."""
        out = {}
        for pos, phi in enumerate(self.functionals):
            val = sum((Fraction(phi.get(k, 0)) * v for k, v in vec.items()), Fraction(0))
            if val:
                out[pos] = val
        return out


def solve_in_span(vectors, target):
    """Coefficients expressing target in the given vectors, or None.

    Augmented-column elimination: tag columns sort below value columns so
    reduction eliminates the actual coordinates first."""
    pool = EchelonPool(colkey=lambda c: (c[0] == "c", c[1]))
    for idx, v in enumerate(vectors):
        row = {("c", k): Fraction(c) for k, c in v.items()}
        row[("tag", idx)] = Fraction(1)
        pool.insert(row)
    red = pool.reduce({("c", k): Fraction(c) for k, c in target.items()})
    if any(k[0] == "c" for k in red):
        return None
    coords = [Fraction(0)] * len(vectors)
    for k, v in red.items():
        coords[k[1]] = -v
    return coords


def is_central(vec, algebra):
    """Exact test: does vec commute with every generator?"""
    for g in algebra.homogeneous_generators():
        if algebra.commutator(vec, g):
            return False
    return True


def _kernel_of_commutators(algebra, indices):
    """Kernel of z -> ([z, g])_g restricted to span of the given basis
    indices; returns vecs over the full algebra."""
    gens = algebra.homogeneous_generators()
    comm = {}
    for var in indices:
        evec = {var: 1}
        cvecs = []
        for g in gens:
            cvecs.append(algebra.commutator(evec, g))
        comm[var] = cvecs
    pool = EchelonPool()
    for gi in range(len(gens)):
        targets = set()
        for var in indices:
            targets |= set(comm[var][gi])
        for t in sorted(targets, key=repr):
            row = {}
            for var in indices:
                c = comm[var][gi].get(t, 0)
                if c:
                    row[var] = Fraction(c)
            if row:
                pool.insert(row)
    kernel = pool.nullspace(indices)
    return [dict(phi) for phi in kernel]


def center_basis(algebra):
    """Degreewise basis of the center, its degrees, and the structure
    constants of the center in this basis.

    Requires a certified/complete algebra (any CyclotomicAlgebra returned
    by build_quotient is; uncertified builds are never returned)."""
    if isinstance(algebra, object) and hasattr(algebra, "as_graded_algebra"):
        algebra = algebra.as_graded_algebra()
    by_degree = {}
    for k, d in enumerate(algebra.degrees):
        by_degree.setdefault(d, []).append(k)
    elements = []
    degrees = []
    for d in sorted(by_degree):
        for z in _kernel_of_commutators(algebra, by_degree[d]):
            elements.append(z)
            degrees.append(d)
    for z in elements:
        assert is_central(z, algebra)
    # the identity lies in the center
    assert solve_in_span(elements, algebra.one) is not None, "identity not central?"
    table = []
    for a in elements:
        row = []
        for b in elements:
            prod = algebra.mult(a, b)
            coords = solve_in_span(elements, prod)
            assert coords is not None, "center is not closed under products"
            row.append(coords)
        table.append(row)
    return CenterBasis(algebra=algebra, elements=elements, degrees=degrees, mult_table=table)


def cocenter_basis(algebra):
    """Basis (by degree) of A/[A,A]: functionals vanishing on commutators."""
    if hasattr(algebra, "as_graded_algebra"):
        algebra = algebra.as_graded_algebra()
    gens = algebra.homogeneous_generators()
    pool = EchelonPool()
    for g in gens:
        for k in range(algebra.dim):
            row = algebra.commutator({k: 1}, g)
            if row:
                pool.insert({c: Fraction(v) for c, v in row.items()})
    funcs = pool.nullspace(range(algebra.dim))
    degrees = []
    functionals = []
    for phi in funcs:
        # every pool row is homogeneous, so each functional lives in the
        # degree of its free column
        degs = {algebra.degrees[k] for k in phi}
        assert len(degs) == 1
        degrees.append(degs.pop())
        functionals.append(dict(phi))
    order = sorted(range(len(degrees)), key=lambda p: degrees[p])
    return CocenterBasis(
        algebra=algebra,
        degrees=[degrees[p] for p in order],
        functionals=[functionals[p] for p in order],
    )
