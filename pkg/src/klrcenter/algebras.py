"""
A finite-dimensional graded algebra presented by a basis with degrees, a
multiplication callback, the identity, and a multiplicative generating
set.  Cyclotomic quotients and cohomology-ring presentations both adapt to
this interface, which is all the center/cocenter machinery consumes.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class GradedAlgebra:
    degrees: list  # degree of basis element k
    mult: object  # callable (vec, vec) -> vec, vecs are {index: coeff}
    one: dict
    generators: list  # vecs generating the algebra multiplicatively
    name: str = ""

    @property
    def dim(self):
        return len(self.degrees)

    def basis_vec(self, k):
        return {k: 1}

    def homogeneous_components(self, vec):
        """Split a vector by degree: {degree: subvector}."""
        out = {}
        for k, c in vec.items():
            out.setdefault(self.degrees[k], {})[k] = c
        return out

    def homogeneous_generators(self):
        """Degreewise pieces of the generators (still a generating set)."""
        out = []
        for g in self.generators:
            out.extend(self.homogeneous_components(g).values())
        return out

    def commutator(self, a, b):
        ab = self.mult(a, b)
        ba = self.mult(b, a)
        out = dict(ab)
        for k, c in ba.items():
            val = out.get(k, 0) - c
            if val:
                out[k] = val
            elif k in out:
                del out[k]
        return out


def from_structure_constants(degrees, table, one, generators=None, name=""):
    """Build a GradedAlgebra from a dense structure-constant table
    table[a][b] = vec of the product of basis elements a and b."""

    def mult(x, y):
        out = {}
        for a, ca in x.items():
            for b, cb in y.items():
                c = ca * cb
                for k, v in table[a][b].items():
                    val = out.get(k, 0) + c * v
                    if val:
                        out[k] = val
                    elif k in out:
                        del out[k]
        return out

    if generators is None:
        generators = [{k: 1} for k in range(len(degrees))]
    return GradedAlgebra(degrees=list(degrees), mult=mult, one=one, generators=generators, name=name)
