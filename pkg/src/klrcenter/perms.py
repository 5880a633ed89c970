"""
Permutations of strand positions, reduced words, and the canonical
(lexicographically smallest) reduced word used to index basis monomials.

A permutation w is a tuple with w[m] = the top position of the strand that
starts at bottom position m (0-based).  The elementary transposition s_k
swaps positions k and k+1; as crossings are stacked on top of a diagram
with bottom word i, the word at the top is apply_perm(w, i) with
(w.i)[w[m]] = i[m].
"""

from __future__ import annotations

from functools import lru_cache


def identity(n):
    return tuple(range(n))


def mult(u, v):
    """(u v)(m) = u(v(m)); in diagrams, u stacked on top of v."""
    return tuple(u[v[m]] for m in range(len(v)))


def inverse(w):
    out = [0] * len(w)
    for m, x in enumerate(w):
        out[x] = m
    return tuple(out)


def s_perm(n, k):
    w = list(range(n))
    w[k], w[k + 1] = w[k + 1], w[k]
    return tuple(w)


def length(w):
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def left_mult_s(k, w):
    """s_k w, i.e. swap the values k and k+1."""
    sw = lambda x: k + 1 if x == k else (k if x == k + 1 else x)
    return tuple(sw(x) for x in w)


def left_descent(k, w):
    """True iff l(s_k w) < l(w)."""
    wi = inverse(w)
    return wi[k] > wi[k + 1]


def apply_perm(w, word):
    out = [None] * len(word)
    for m, x in enumerate(word):
        out[w[m]] = x
    return tuple(out)


def perm_of_word(c, n):
    """The permutation of the crossing word c = (c_1, ..., c_r), read with
    c_1 topmost: s_{c_1} s_{c_2} ... s_{c_r}."""
    w = identity(n)
    for k in reversed(c):
        w = left_mult_s(k, w)
    return w


@lru_cache(maxsize=None)
def canonical_word(w):
    """Lexicographically smallest reduced word of w.

    Peeling the first letter of the result stays canonical: if the word is
    (k,) + rest then rest is the canonical word of s_k w.
    """
    n = len(w)
    word = []
    cur = w
    while True:
        for k in range(n - 1):
            if left_descent(k, cur):
                word.append(k)
                cur = left_mult_s(k, cur)
                break
        else:
            break
    return tuple(word)


def is_reduced(c, n):
    return length(perm_of_word(c, n)) == len(c)


def bring_front_moves(c, t):
    """Moves turning the reduced word c into a reduced word starting with t,
    where t is a left descent of the underlying permutation.

    Returns a list of ('swap', p) and ('braid', p) items to apply in order;
    'swap' exchanges distant letters at positions p, p+1, 'braid' replaces
    the a,b,a at positions p..p+2 by b,a,b.
    """
    moves = []

    def go(word, t, offset):
        if word[0] == t:
            return word
        a = word[0]
        if abs(a - t) >= 2:
            rest = go(word[1:], t, offset + 1)
            word = (a,) + rest
            moves.append(("swap", offset))
            return (t, a) + rest[1:]
        # adjacent letters: dig out t, then a, then braid at the front
        rest = go(word[1:], t, offset + 1)  # -> (t,) + d
        d = go(rest[1:], a, offset + 2)  # -> (a,) + e
        moves.append(("braid", offset))
        return (t, a, t) + d[1:]

    go(tuple(c), t, 0)
    return moves
