"""
The faithful polynomial representation of R_nu, used as an independent
correctness oracle for the rewriting engine.

The module is a direct sum over words i of polynomial rings in x_1..x_n; a
labelled polynomial is a dict {word: {exponent tuple: coeff}}.  Generators
act by

  e(j):  projection onto the j component,
  y_k:   multiplication by x_k,
  psi_k: the divided difference (f - s_k f) / (x_k - x_{k+1}) when the
         labels at k, k+1 agree, and f |-> s_k(f) * (x_{k+1} - x_k)^m on
         e(i) with m = #{i_{k+1} -> i_k} otherwise (+h deformations of the
         linear factor in the deformed algebra).

None of this shares code with the straightening engine.
"""

from __future__ import annotations

from .rings import HPoly


def poly_mul(f, g):
    out = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            val = out.get(e, 0) + c1 * c2
            if val:
                out[e] = val
            elif e in out:
                del out[e]
    return out


def poly_add(f, g, scale=1):
    out = dict(f)
    for e, c in g.items():
        val = out.get(e, 0) + scale * c
        if val:
            out[e] = val
        elif e in out:
            del out[e]
    return out


def poly_swap(f, k):
    """Exchange the variables x_k and x_{k+1}."""
    out = {}
    for e, c in f.items():
        e2 = list(e)
        e2[k], e2[k + 1] = e2[k + 1], e2[k]
        out[tuple(e2)] = c
    return out


def divided_difference(f, k):
    """(f - s_k f) / (x_k - x_{k+1}), exactly."""
    out = {}
    for e, c in f.items():
        m, n = e[k], e[k + 1]
        if m == n:
            continue
        sign = 1 if m > n else -1
        lo, hi = min(m, n), max(m, n)
        for s in range(hi - lo):
            e2 = list(e)
            e2[k] = lo + s
            e2[k + 1] = hi - 1 - s
            key = tuple(e2)
            val = out.get(key, 0) + sign * c
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


class PolynomialRep:
    """Action of R_nu generators and elements on labelled polynomials."""

    def __init__(self, quiver, deformed=False):
        self.quiver = quiver
        self.deformed = deformed
        self.one = HPoly.const(1) if deformed else 1

    def unit(self, word):
        n = len(word)
        return {tuple(word): {(0,) * n: self.one}}

    def monomial_state(self, word, exps):
        return {tuple(word): {tuple(exps): self.one}}

    def _twist_factor(self, n, k, m):
        """(x_{k+1} - x_k [+ h])^m as a polynomial dict."""
        f = {(0,) * n: self.one}
        e_hi = tuple(1 if j == k + 1 else 0 for j in range(n))
        e_lo = tuple(1 if j == k else 0 for j in range(n))
        for _ in range(m):
            nxt = {}
            for e, c in f.items():
                for base, sgn in ((e_hi, 1), (e_lo, -1)):
                    key = tuple(a + b for a, b in zip(e, base))
                    val = nxt.get(key, 0) + sgn * c
                    if val:
                        nxt[key] = val
                    elif key in nxt:
                        del nxt[key]
                if self.deformed:
                    val = nxt.get(e, 0) + HPoly((0, 1)) * c
                    if val:
                        nxt[e] = val
                    elif e in nxt:
                        del nxt[e]
            f = nxt
        return f

    def apply_gen(self, gen, state):
        kind = gen[0]
        out = {}
        for word, f in state.items():
            n = len(word)
            if kind == "e":
                if word == tuple(gen[1]):
                    out[word] = poly_add(out.get(word, {}), f)
            elif kind == "y":
                k = gen[1]
                e_k = tuple(1 if j == k else 0 for j in range(n))
                g = {tuple(a + b for a, b in zip(e, e_k)): c for e, c in f.items()}
                out[word] = poly_add(out.get(word, {}), g)
            else:
                k = gen[1]
                if word[k] == word[k + 1]:
                    g = divided_difference(f, k)
                    if g:
                        out[word] = poly_add(out.get(word, {}), g)
                else:
                    m = self.quiver.edge_count(word[k + 1], word[k])
                    g = poly_mul(poly_swap(f, k), self._twist_factor(n, k, m))
                    w2 = list(word)
                    w2[k], w2[k + 1] = w2[k + 1], w2[k]
                    w2 = tuple(w2)
                    if g:
                        out[w2] = poly_add(out.get(w2, {}), g)
        return {w: f for w, f in out.items() if f}

    def apply_tokens(self, tokens, state):
        """Apply a top-to-bottom token sequence (rightmost acts first)."""
        for tok in reversed(list(tokens)):
            state = self.apply_gen(tok, state)
        return state

    def apply_element(self, elem, state):
        """Action of a straightened element {(w, dots, word): coeff}."""
        from .klr import KLR

        out = {}
        for mono, cf in elem.items():
            cur = self.apply_tokens(KLR.monomial_tokens(mono), state)
            for word, f in cur.items():
                out[word] = poly_add(out.get(word, {}), f, scale=cf)
        return {w: f for w, f in out.items() if f}


def polynomial_rep_action(quiver, elem, state, deformed=False):
    """Convenience wrapper: act by a straightened element on a labelled
    polynomial state."""
    return PolynomialRep(quiver, deformed=deformed).apply_element(elem, state)


def states_equal(a, b):
    keys = set(a) | set(b)
    for k in keys:
        fa, fb = a.get(k, {}), b.get(k, {})
        if poly_add(fa, fb, scale=-1):
            return False
    return True
