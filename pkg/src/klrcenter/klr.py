"""
The quiver Hecke algebra R_nu with straightening onto the monomial basis
psi_w y^a e(i).

Elements are dicts {(w, dots, word): coeff} where `word` is the bottom
word (a tuple of vertex indices of content nu), `w` the strand permutation
(so the top word is apply_perm(w, word)), and `dots` the exponents of the
dots sitting at the bottom of the diagram.  Each permutation is realized
by its lexicographically smallest reduced word; products are rewritten
onto this basis by the local relations:

  * dots slide through crossings of distinctly labelled strands freely,
    and through equal-labelled crossings with a +/-1 correction,
  * a double crossing is 0 (equal labels) or Q_ij(y_k, y_{k+1}),
  * braid moves are exact unless the outer labels agree, in which case the
    divided-difference correction of Q appears.

All rewriting strictly reduces (crossing count, then dot disorder), so
straightening terminates; confluence is exercised in the test suite both
by re-association and against the polynomial representation.

Instances keep internal memo tables; share one instance per worker (the
operations are pure, but the caches are not synchronized).
"""

from __future__ import annotations

from .perms import (
    apply_perm,
    bring_front_moves,
    canonical_word,
    identity,
    inverse,
    left_mult_s,
    length,
    mult,
    perm_of_word,
    s_perm,
)
from .rings import HPoly
from .rootdata import cartan_pairing, qpoly


class ContentMismatchError(ValueError):
    pass


def words_of_content(nu):
    """All words (tuples of vertex indices) with the given content, in
    lexicographic order."""
    letters = []
    for i, m in enumerate(nu.mults if hasattr(nu, "mults") else nu):
        letters.extend([i] * m)

    out = []

    def rec(remaining, acc):
        if not remaining:
            out.append(tuple(acc))
            return
        seen = set()
        for x in sorted(set(remaining)):
            if x in seen:
                continue
            seen.add(x)
            rest = list(remaining)
            rest.remove(x)
            rec(rest, acc + [x])

    rec(letters, [])
    return out


def compositions(total, parts):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


class KLR:
    """Rewriting context for R_nu over one quiver (optionally deformed)."""

    def __init__(self, quiver, deformed=False):
        self.quiver = quiver
        self.deformed = deformed
        self.one = HPoly.const(1) if deformed else 1
        self._psi_memo = {}
        self._y_memo = {}
        self._qpoly = {}

    # -- scalar helpers ------------------------------------------------

    def _q(self, i, j):
        key = (i, j)
        if key not in self._qpoly:
            self._qpoly[key] = qpoly(self.quiver, i, j, deformed=self.deformed)
        return self._qpoly[key]

    # -- degrees -------------------------------------------------------

    def crossing_degree(self, p, q):
        return -cartan_pairing(self.quiver, p, q)

    def psi_degree(self, w, word):
        """Degree of psi_w e(word): sum of crossing degrees along any
        reduced word (well defined)."""
        d = 0
        cur = word
        for t in reversed(canonical_word(w)):
            d += self.crossing_degree(cur[t], cur[t + 1])
            cur = apply_perm(s_perm(len(cur), t), cur)
        return d

    def monomial_degree(self, mono):
        w, dots, word = mono
        return self.psi_degree(w, word) + 2 * sum(dots)

    def element_degree(self, elem):
        """Degree of a homogeneous element; None for 0, error if mixed."""
        degs = {self.monomial_degree(m) for m in elem}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError("element is not homogeneous: degrees %s" % sorted(degs))
        return degs.pop()

    # -- core rewriting ------------------------------------------------

    def _braid_correction(self, pl, pm, k):
        """The polynomial (Q_{pl,pm}(y_{k+2}, y_{k+1}) - Q_{pl,pm}(y_k, y_{k+1}))
        / (y_{k+2} - y_k), as {position-exponent triple: coeff}.

        Q_ii is 0 (double equal-label crossings vanish), so the all-equal
        braid move is exact."""
        if pl == pm:
            return {}
        out = {}
        for (mu, mv), c in self._q(pl, pm).items():
            for s in range(mu):
                key = (s, mv, mu - 1 - s)
                out[key] = out.get(key, 0) + c
        return {k_: v for k_, v in out.items() if v}

    def _psi_word(self, c, word):
        """Expansion of psi_c e(word) as {(w, dots): coeff}."""
        key = (c, word)
        cached = self._psi_memo.get(key)
        if cached is not None:
            return cached
        n = len(word)
        if not c:
            res = {(identity(n), (0,) * n): self.one}
        else:
            w = perm_of_word(c, n)
            if length(w) == len(c):
                res = self._psi_word_reduced(c, word, w)
            else:
                res = self._psi_word_nonreduced(c, word)
        self._psi_memo[key] = res
        return res

    def _psi_word_reduced(self, c, word, w):
        n = len(word)
        target = canonical_word(w)
        if c == target:
            return {(w, (0,) * n): self.one}
        moves = bring_front_moves(c, target[0])
        cur, out = self._apply_moves(c, word, moves)
        inner = self._psi_word(cur[1:], word)
        self._merge(out, self._prepend_psi(target[0], inner, word), self.one)
        return out

    def _psi_word_nonreduced(self, c, word):
        n = len(word)
        v = identity(n)
        m = None
        for idx, k in enumerate(c):
            if v[k] > v[k + 1]:
                m = idx
                break
            v = mult(v, s_perm(n, k))
        assert m is not None and m >= 1
        t = c[m]
        rev = bring_front_moves(tuple(reversed(c[:m])), t)
        moves = [
            ("swap", m - 2 - p) if kind == "swap" else ("braid", m - 3 - p)
            for kind, p in rev
        ]
        cur, out = self._apply_moves(c, word, moves)
        assert cur[m - 1] == t and cur[m] == t
        suffix = cur[m + 1 :]
        below = apply_perm(perm_of_word(suffix, n), word)
        p_, q_ = below[t], below[t + 1]
        if p_ != q_:
            poly = {}
            for (mu, mv), cf in self._q(p_, q_).items():
                dots = [0] * n
                dots[t] += mu
                dots[t + 1] += mv
                poly[tuple(dots)] = poly.get(tuple(dots), 0) + cf
            elem = self._layers_elem(cur[: m - 1], poly, suffix, word)
            self._merge(out, elem, self.one)
        return out

    def _apply_moves(self, c, word, moves):
        """Apply swap/braid moves to the crossing word, accumulating the
        braid corrections (each with strictly fewer crossings)."""
        n = len(word)
        cur = list(c)
        corr = {}
        for kind, p in moves:
            if kind == "swap":
                cur[p], cur[p + 1] = cur[p + 1], cur[p]
                continue
            a, b = cur[p], cur[p + 1]
            k = min(a, b)
            suffix = tuple(cur[p + 3 :])
            below = apply_perm(perm_of_word(suffix, n), word)
            if below[k] == below[k + 2]:
                sign = 1 if a < b else -1
                poly = {}
                for (ek, em, eh), cf in self._braid_correction(
                    below[k], below[k + 1], k
                ).items():
                    dots = [0] * n
                    dots[k] += ek
                    dots[k + 1] += em
                    dots[k + 2] += eh
                    key = tuple(dots)
                    poly[key] = poly.get(key, 0) + sign * cf
                if poly:
                    elem = self._layers_elem(tuple(cur[:p]), poly, suffix, word)
                    self._merge(corr, elem, self.one)
            cur[p], cur[p + 1], cur[p + 2] = b, a, b
        return tuple(cur), corr

    def _layers_elem(self, prefix, poly, suffix, word):
        """psi_prefix . poly(y) . psi_suffix e(word), straightened."""
        base = self._psi_word(suffix, word)
        out = {}
        for dots, pc in poly.items():
            terms = {m: cf * pc for m, cf in base.items()}
            for pos, e in enumerate(dots):
                for _ in range(e):
                    terms = self._left_y_terms(pos, terms, word)
            for t in reversed(prefix):
                terms = self._prepend_psi(t, terms, word)
            self._merge(out, terms, self.one)
        return out

    def _left_y(self, k, w, word):
        """Expansion of y_k psi_w e(word) as {(v, dots): coeff}."""
        key = (k, w, word)
        cached = self._y_memo.get(key)
        if cached is not None:
            return cached
        n = len(word)
        if w == identity(n):
            dots = [0] * n
            dots[k] = 1
            res = {(w, tuple(dots)): self.one}
        else:
            j = canonical_word(w)[0]
            w2 = left_mult_s(j, w)
            below = apply_perm(w2, word)
            equal = below[j] == below[j + 1]
            if k == j:
                inner = self._left_y(j + 1, w2, word)
                delta = 1 if equal else 0
            elif k == j + 1:
                inner = self._left_y(j, w2, word)
                delta = -1 if equal else 0
            else:
                inner = self._left_y(k, w2, word)
                delta = 0
            res = self._prepend_psi(j, inner, word)
            if delta:
                m = (w2, (0,) * n)
                res[m] = res.get(m, 0) + delta * self.one
                if not res[m]:
                    del res[m]
        self._y_memo[key] = res
        return res

    def _left_y_terms(self, k, terms, word):
        out = {}
        for (v, d), cf in terms.items():
            for (v2, d2), c2 in self._left_y(k, v, word).items():
                m = (v2, tuple(x + y for x, y in zip(d2, d)))
                val = out.get(m, 0) + cf * c2
                if val:
                    out[m] = val
                elif m in out:
                    del out[m]
        return out

    def _prepend_psi(self, t, terms, word):
        """psi_t . (terms over bottom word)."""
        out = {}
        for (v, d), cf in terms.items():
            sv = left_mult_s(t, v)
            if length(sv) == length(v) + 1 and canonical_word(sv) == (t,) + canonical_word(v):
                m = (sv, d)
                val = out.get(m, 0) + cf
                if val:
                    out[m] = val
                elif m in out:
                    del out[m]
            else:
                for (v2, d2), c2 in self._psi_word((t,) + canonical_word(v), word).items():
                    m = (v2, tuple(x + y for x, y in zip(d2, d)))
                    val = out.get(m, 0) + cf * c2
                    if val:
                        out[m] = val
                    elif m in out:
                        del out[m]
        return out

    @staticmethod
    def _merge(acc, other, scale):
        for m, cf in other.items():
            val = acc.get(m, 0) + scale * cf
            if val:
                acc[m] = val
            elif m in acc:
                del acc[m]

    # -- public element operations --------------------------------------

    def e(self, word):
        n = len(word)
        return {(identity(n), (0,) * n, tuple(word)): self.one}

    def monomial(self, w, dots, word):
        return {(tuple(w), tuple(dots), tuple(word)): self.one}

    def top_word(self, mono):
        w, _, word = mono
        return apply_perm(w, word)

    def add(self, x, y, scale=1):
        out = dict(x)
        for m, cf in y.items():
            val = out.get(m, 0) + scale * cf
            if val:
                out[m] = val
            elif m in out:
                del out[m]
        return out

    def scale(self, x, c):
        if not c:
            return {}
        return {m: c * cf for m, cf in x.items()}

    def multiply(self, x, y):
        """Vertical composition x.y (x stacked on top of y)."""
        out = {}
        for (w, a, iw), cx in x.items():
            tw = canonical_word(w)
            for (v, b, jv), cy in y.items():
                if iw != apply_perm(v, jv):
                    continue
                c = cx * cy
                terms = {(v, b): self.one}
                for pos, e in enumerate(a):
                    for _ in range(e):
                        terms = self._left_y_terms(pos, terms, jv)
                for t in reversed(tw):
                    terms = self._prepend_psi(t, terms, jv)
                for (v2, d2), c2 in terms.items():
                    m = (v2, d2, jv)
                    val = out.get(m, 0) + c * c2
                    if val:
                        out[m] = val
                    elif m in out:
                        del out[m]
        return out

    def left_mult_gen(self, gen, x):
        """Multiply the element x on the left by a single generator token
        ('e', word) / ('y', k) / ('psi', k)."""
        kind = gen[0]
        out = {}
        for (w, a, word), cf in x.items():
            if kind == "e":
                if apply_perm(w, word) == tuple(gen[1]):
                    self._merge(out, {(w, a, word): cf}, 1)
                continue
            terms = {(w, a): cf}
            if kind == "y":
                terms = self._left_y_terms(gen[1], terms, word)
            else:
                terms = self._prepend_psi(gen[1], terms, word)
            for (v2, d2), c2 in terms.items():
                m = (v2, d2, word)
                val = out.get(m, 0) + c2
                if val:
                    out[m] = val
                elif m in out:
                    del out[m]
        return out

    def straighten(self, tokens):
        """Normalize a formal top-to-bottom product of generator tokens
        ('e', word), ('y', k), ('psi', k) onto the monomial basis.

        Words are propagated from the idempotent tokens; inconsistent
        idempotents raise ContentMismatchError.
        """
        tokens = list(tokens)
        if not tokens:
            raise ContentMismatchError("empty product has no content")
        # words[j] = word at the bottom of tokens[j]
        words = [None] * len(tokens)

        def bottom_to_top(word, tok):
            if tok[0] == "psi":
                return apply_perm(s_perm(len(word), tok[1]), word)
            return word

        anchor = None
        for j, tok in enumerate(tokens):
            if tok[0] == "e":
                anchor = j
                words[j] = tuple(tok[1])
        if anchor is None:
            raise ContentMismatchError("no idempotent token: content undetermined")
        for j in range(anchor - 1, -1, -1):
            words[j] = bottom_to_top(words[j + 1], tokens[j + 1])
        for j in range(anchor + 1, len(tokens)):
            # word below tokens[j-1] equals word at top of tokens[j]
            top = words[j - 1]
            if tokens[j][0] == "psi":
                words[j] = apply_perm(s_perm(len(top), tokens[j][1]), top)
            else:
                words[j] = top
        for j, tok in enumerate(tokens):
            if tok[0] == "e" and words[j] != tuple(tok[1]):
                raise ContentMismatchError(
                    "idempotent mismatch at layer %d: %r vs %r" % (j, tok[1], words[j])
                )
            if tok[0] in ("y", "psi"):
                limit = len(words[j]) - (1 if tok[0] == "psi" else 0)
                if not 0 <= tok[1] < limit:
                    raise ContentMismatchError("generator index out of range")
        elem = self.e(words[-1])
        for j in range(len(tokens) - 1, -1, -1):
            tok = tokens[j]
            if tok[0] == "e":
                tok = ("e", words[j])
            elem = self.left_mult_gen(tok, elem)
        return elem

    @staticmethod
    def monomial_tokens(mono):
        """A defining token sequence (top-to-bottom) for a basis monomial."""
        w, dots, word = mono
        toks = [("psi", t) for t in canonical_word(w)]
        for pos, e in enumerate(dots):
            toks.extend([("y", pos)] * e)
        toks.append(("e", word))
        return toks

    # -- bases -----------------------------------------------------------

    def graded_basis(self, nu, degree):
        """All basis monomials of content nu and the given degree."""
        from itertools import permutations

        mults = nu.mults if hasattr(nu, "mults") else tuple(nu)
        n = sum(mults)
        out = []
        perms = sorted(set(permutations(range(n))))
        for word in words_of_content(mults):
            for w in perms:
                cd = self.psi_degree(w, word)
                rem = degree - cd
                if rem < 0 or rem % 2:
                    continue
                for dots in compositions(rem // 2, n):
                    out.append((w, dots, word))
        return out

    def add_strand(self, x, label):
        """Image of x under the nonunital embedding adding a vertical
        strand with the given label at the right."""
        out = {}
        for (w, a, word), cf in x.items():
            n = len(word)
            out[(w + (n,), a + (0,), word + (label,))] = cf
        return out

    # -- serialization ----------------------------------------------------

    def to_jsonable(self, x):
        from fractions import Fraction

        items = []
        for (w, a, word), cf in sorted(x.items()):
            cf = Fraction(cf) if not isinstance(cf, HPoly) else None
            if cf is None:
                raise ValueError("deformed elements are not serialized")
            items.append(
                {
                    "word": list(word),
                    "perm_word": list(canonical_word(w)),
                    "dots": list(a),
                    "num": cf.numerator,
                    "den": cf.denominator,
                }
            )
        return items

    def from_jsonable(self, items):
        from fractions import Fraction

        out = {}
        for it in items:
            word = tuple(it["word"])
            w = perm_of_word(tuple(it["perm_word"]), len(word))
            cf = Fraction(it["num"], it["den"])
            out[(w, tuple(it["dots"]), word)] = out.get((w, tuple(it["dots"]), word), 0) + cf
        return {m: c for m, c in out.items() if c}
