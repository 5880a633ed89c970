"""
Rewriting engine tests: the five relation families hold for straightened
elements and under the polynomial representation, straightening is
idempotent, products re-associate, and the two routes (symbolic vs
polynomial action) agree on random products.
"""

import itertools
import random

import pytest

from klrcenter.klr import KLR, ContentMismatchError, words_of_content
from klrcenter.perms import apply_perm, identity, s_perm
from klrcenter.polyrep import PolynomialRep, states_equal
from klrcenter.rootdata import qpoly

from quivers import A1, A2, A2_REV, A3, D4

QUIVERS = [A1, A2, A3, D4]


def elements_equal(ctx, a, b):
    return not ctx.add(a, b, scale=-1)


def relation_pairs(ctx, word):
    """Yield (lhs tokens, rhs element) pairs for every defining relation
    applicable to the given bottom word."""
    n = len(word)
    e = ("e", word)
    for k in range(n - 1):
        sword = apply_perm(s_perm(n, k), word)
        if word[k] == word[k + 1]:
            # psi_k^2 e = 0
            yield [("psi", k), ("psi", k), e], {}
            # y_k psi_k e - psi_k y_{k+1} e = e  (first nilHecke display)
            lhs = ctx.straighten([("y", k), ("psi", k), e])
            rhs = ctx.add(ctx.straighten([("psi", k), ("y", k + 1), e]), ctx.e(word))
            yield lhs, rhs
            # psi_k y_k e - y_{k+1} psi_k e = e  (second nilHecke display)
            lhs = ctx.straighten([("psi", k), ("y", k), e])
            rhs = ctx.add(ctx.straighten([("y", k + 1), ("psi", k), e]), ctx.e(word))
            yield lhs, rhs
        else:
            # dots slide freely through distinct-label crossings
            lhs = ctx.straighten([("y", k), ("psi", k), e])
            rhs = ctx.straighten([("psi", k), ("y", k + 1), e])
            yield lhs, rhs
            lhs = ctx.straighten([("y", k + 1), ("psi", k), e])
            rhs = ctx.straighten([("psi", k), ("y", k), e])
            yield lhs, rhs
            # psi_k^2 e = Q_{i_k, i_{k+1}}(y_k, y_{k+1}) e
            lhs = ctx.straighten([("psi", k), ("psi", k), e])
            rhs = {}
            for (mu, mv), c in ctx._q(word[k], word[k + 1]).items():
                toks = [("y", k)] * mu + [("y", k + 1)] * mv + [e]
                rhs = ctx.add(rhs, ctx.scale(ctx.straighten(toks), c))
            yield lhs, rhs
        # distant commutations
        for l in range(k + 2, n - 1):
            lhs = ctx.straighten([("psi", k), ("psi", l), e])
            rhs = ctx.straighten([("psi", l), ("psi", k), e])
            yield lhs, rhs
            lhsy = ctx.straighten([("y", l + 1), ("psi", k), e])
            rhsy = ctx.straighten([("psi", k), ("y", l + 1), e])
            yield lhsy, rhsy
    for k in range(n - 2):
        lhs = ctx.straighten([("psi", k), ("psi", k + 1), ("psi", k), e])
        rhs = ctx.straighten([("psi", k + 1), ("psi", k), ("psi", k + 1), e])
        if word[k] == word[k + 2]:
            corr = {}
            for (ek, em, eh), c in ctx._braid_correction(word[k], word[k + 1], k).items():
                toks = [("y", k)] * ek + [("y", k + 1)] * em + [("y", k + 2)] * eh + [("e", word)]
                corr = ctx.add(corr, ctx.scale(ctx.straighten(toks), c))
            rhs = ctx.add(rhs, corr)
        yield lhs, rhs


def as_element(ctx, lhs):
    if isinstance(lhs, list):
        return ctx.straighten(lhs)
    return lhs


@pytest.mark.parametrize("quiver", QUIVERS, ids=["A1", "A2", "A3", "D4"])
def test_relations_straightened(quiver):
    n_strands = 3 if quiver.rank >= 3 else 3
    labels = range(quiver.rank)
    for n in (2, 3):
        for word in itertools.product(labels, repeat=n):
            ctx = KLR(quiver)
            for lhs, rhs in relation_pairs(ctx, word):
                assert elements_equal(ctx, as_element(ctx, lhs), as_element(ctx, rhs))


def test_relations_straightened_four_strands():
    # full four-strand sweep on A2 (the acceptance suite covers the rest)
    ctx = KLR(A2)
    for word in itertools.product(range(2), repeat=4):
        for lhs, rhs in relation_pairs(ctx, word):
            assert elements_equal(ctx, as_element(ctx, lhs), as_element(ctx, rhs))


def poly_test_states(rep, word, rng):
    n = len(word)
    states = [rep.unit(word)]
    for e in itertools.product(range(2), repeat=n):
        states.append(rep.monomial_state(word, e))
    for _ in range(2):
        exps = tuple(rng.randrange(4) for _ in range(n))
        states.append(rep.monomial_state(word, exps))
    return states


@pytest.mark.parametrize("quiver", QUIVERS, ids=["A1", "A2", "A3", "D4"])
def test_relations_in_polynomial_rep(quiver):
    rng = random.Random(7)
    rep = PolynomialRep(quiver)
    ctx = KLR(quiver)
    for n in (2, 3):
        for word in itertools.product(range(quiver.rank), repeat=n):
            e = ("e", word)
            checks = []
            for k in range(n - 1):
                if word[k] == word[k + 1]:
                    checks.append(([("psi", k), ("psi", k)], []))
                    checks.append(
                        ([("y", k), ("psi", k)], [("psi", k), ("y", k + 1)], 1)
                    )
                    checks.append(
                        ([("psi", k), ("y", k)], [("y", k + 1), ("psi", k)], 1)
                    )
                else:
                    checks.append(([("y", k), ("psi", k)], [("psi", k), ("y", k + 1)]))
            for k in range(n - 2):
                lhs = [("psi", k), ("psi", k + 1), ("psi", k)]
                rhs = [("psi", k + 1), ("psi", k), ("psi", k + 1)]
                checks.append((lhs, rhs, "braid"))
            for state in poly_test_states(rep, word, rng):
                for chk in checks:
                    lhs_toks, rhs_toks = chk[0], chk[1]
                    a = rep.apply_tokens(lhs_toks + [e], state)
                    b = rep.apply_tokens(rhs_toks + [e], state) if rhs_toks else {}
                    if len(chk) == 3 and chk[2] == 1:
                        b = {
                            w: dict(f) for w, f in b.items()
                        }
                        extra = rep.apply_tokens([e], state)
                        for w, f in extra.items():
                            cur = b.setdefault(w, {})
                            for exp, c in f.items():
                                cur[exp] = cur.get(exp, 0) + c
                    if len(chk) == 3 and chk[2] == "braid":
                        k = chk[0][0][1]
                        if word[k] == word[k + 2]:
                            corr = ctx._braid_correction(word[k], word[k + 1], k)
                            extra = rep.apply_tokens([e], state)
                            for (ek, em, eh), c in corr.items():
                                for w, f in extra.items():
                                    cur = b.setdefault(w, {})
                                    for exp, cf in f.items():
                                        e2 = list(exp)
                                        e2[k] += ek
                                        e2[k + 1] += em
                                        e2[k + 2] += eh
                                        cur[tuple(e2)] = cur.get(tuple(e2), 0) + c * cf
                    assert states_equal(a, b), (word, chk)


def test_idempotents_multiply():
    ctx = KLR(A2)
    e01 = ctx.e((0, 1))
    e10 = ctx.e((1, 0))
    assert ctx.multiply(e01, e01) == e01
    assert ctx.multiply(e01, e10) == {}


def test_dot_commutes():
    ctx = KLR(A1)
    y1 = ctx.straighten([("y", 0), ("e", (0,))])
    sq = ctx.multiply(y1, y1)
    assert sq == {(identity(1), (2,), (0,)): 1}


def test_straighten_idempotent():
    ctx = KLR(A2)
    for word in itertools.product(range(2), repeat=3):
        elem = ctx.straighten(
            [("psi", 0), ("psi", 1), ("y", 1), ("psi", 0), ("e", word)]
        )
        for mono, cf in elem.items():
            again = ctx.straighten(KLR.monomial_tokens(mono))
            assert again == {mono: 1}


def test_multiply_associative_random():
    rng = random.Random(2024)
    ctx = KLR(A2)
    words = list(itertools.product(range(2), repeat=3))
    gens = []
    for k in range(3):
        gens.append(("y", k))
    for k in range(2):
        gens.append(("psi", k))

    def random_elem():
        word = words[rng.randrange(len(words))]
        toks = [gens[rng.randrange(len(gens))] for _ in range(rng.randrange(1, 4))]
        return ctx.straighten(toks + [("e", word)])

    for _ in range(40):
        a, b, c = random_elem(), random_elem(), random_elem()
        assert elements_equal(
            ctx, ctx.multiply(ctx.multiply(a, b), c), ctx.multiply(a, ctx.multiply(b, c))
        )


def test_multiply_graded():
    ctx = KLR(A2)
    a = ctx.straighten([("psi", 0), ("e", (0, 1))])
    b = ctx.straighten([("y", 0), ("e", (0, 1))])
    ab = ctx.multiply(a, b)
    assert ctx.element_degree(ab) == ctx.element_degree(a) + ctx.element_degree(b)


def test_oracle_agreement_random_products():
    rng = random.Random(99)
    rep = PolynomialRep(A2)
    ctx = KLR(A2)
    words = list(itertools.product(range(2), repeat=3))
    for _ in range(25):
        word = words[rng.randrange(len(words))]
        toks_a = [
            (("psi", rng.randrange(2)) if rng.random() < 0.5 else ("y", rng.randrange(3)))
            for _ in range(rng.randrange(1, 4))
        ]
        toks_b = [
            (("psi", rng.randrange(2)) if rng.random() < 0.5 else ("y", rng.randrange(3)))
            for _ in range(rng.randrange(1, 4))
        ]
        b = ctx.straighten(toks_b + [("e", word)])
        tops = {apply_perm(w, wd) for (w, d, wd) in b}
        if not tops:
            continue
        top = tops.pop()
        a = ctx.straighten(toks_a + [("e", top)])
        ab = ctx.multiply(a, b)
        for state in poly_test_states(rep, word, rng):
            via_product = rep.apply_element(ab, state)
            via_compose = rep.apply_element(a, rep.apply_element(b, state))
            assert states_equal(via_product, via_compose)


def test_straighten_content_mismatch():
    ctx = KLR(A2)
    with pytest.raises(ContentMismatchError):
        ctx.straighten([("e", (0, 1)), ("psi", 0), ("e", (0, 1))])


def test_spec_straighten_examples():
    # double crossing with equal labels dies
    ctx = KLR(A1)
    assert ctx.straighten([("psi", 0), ("psi", 0), ("e", (0, 0))]) == {}
    # with an edge 1 -> 2 the bigon produces Q_{12}(y_1, y_2) = y_2 - y_1
    ctx = KLR(A2)
    got = ctx.straighten([("psi", 0), ("psi", 0), ("e", (0, 1))])
    expect = {
        (identity(2), (0, 1), (0, 1)): 1,
        (identity(2), (1, 0), (0, 1)): -1,
    }
    assert got == expect
    # dot-slide correction on equal labels is +/- the idempotent
    ctx = KLR(A1)
    lhs = ctx.straighten([("psi", 0), ("y", 1), ("e", (0, 0))])
    rhs = ctx.straighten([("y", 0), ("psi", 0), ("e", (0, 0))])
    diff = ctx.add(lhs, rhs, scale=-1)
    assert diff == {(identity(2), (0, 0), (0, 0)): -1}


def test_graded_basis_examples():
    ctx = KLR(A1)
    assert ctx.graded_basis((1,), 0) == [(identity(1), (0,), (0,))]
    assert ctx.graded_basis((1,), 2) == [(identity(1), (1,), (0,))]
    basis = ctx.graded_basis((2,), -2)
    assert basis == [((1, 0), (0, 0), (0, 0))]


def test_words_of_content():
    assert words_of_content((1, 1)) == [(0, 1), (1, 0)]
    assert len(words_of_content((2, 1))) == 3


def test_deformed_bigon():
    # edge 1 -> 2 deformed: psi^2 e(12) = (y_2 - y_1 + h) e(12)
    ctx = KLR(A2, deformed=True)
    got = ctx.straighten([("psi", 0), ("psi", 0), ("e", (0, 1))])
    from klrcenter.rings import HPoly

    expect = {
        (identity(2), (0, 1), (0, 1)): HPoly.const(1),
        (identity(2), (1, 0), (0, 1)): HPoly.const(-1),
        (identity(2), (0, 0), (0, 1)): HPoly((0, 1)),
    }
    assert got == expect


def test_deformed_relations_small():
    ctx = KLR(A2, deformed=True)
    for word in itertools.product(range(2), repeat=3):
        for lhs, rhs in relation_pairs(ctx, word):
            assert elements_equal(ctx, as_element(ctx, lhs), as_element(ctx, rhs))


def test_element_io_roundtrip():
    ctx = KLR(A2)
    elem = ctx.straighten([("psi", 0), ("y", 0), ("psi", 1), ("e", (0, 1, 0))])
    again = ctx.from_jsonable(ctx.to_jsonable(elem))
    from fractions import Fraction

    assert {m: Fraction(c) for m, c in elem.items()} == again
