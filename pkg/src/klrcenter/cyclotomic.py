"""
Cyclotomic quotients R^lambda_nu = R_nu / <y_1^{lambda^{i_1}} e(i)>, built
degreewise by exact linear algebra and certified against the Shapovalov
oracle.

The two-sided ideal in degree d is spanned by psi_w . (J-rows), where the
J-rows are the straightened right multiples y_1^{lambda^{j_1}} e(j) . m of
the cyclotomic generators by basis monomials (left dot factors commute
into the right factor, so this is the same span as {u . g . v}).  The
ideal is bigraded by (top word, bottom word), so ranks are computed per
block.  A build is certified exactly when every graded dimension matches
the oracle and the quotient vanishes in a window above the oracle's top
degree; an uncertified build raises, it is never returned.

Quotient coordinates are the annihilator functionals of the ideal; the
representative basis consists of the non-leading monomials, on which the
functionals restrict to the identity matrix.

The deformed algebra is graded with deg h = 2, so its graded pieces are
finite-dimensional rational spaces with basis pairs (monomial, h-power);
the same pipeline runs on those columns (the ideal is h-stable, so rows
are closed under the degree-2 shift).  Its quotient is a free module over
Q[h] on the h-power-zero representatives, and setting h = 0 recovers the
plain quotient.
"""

from __future__ import annotations

from fractions import Fraction

from .klr import KLR, words_of_content
from .linalg import EchelonPool
from .perms import apply_perm, identity, left_mult_s, length
from .rings import HPoly, Laurent
from .rootdata import RootVector, weight_after
from .shapovalov import shapovalov_hilbert


class UncertifiedBuildError(RuntimeError):
    def __init__(self, message, degree=None):
        super().__init__(message)
        self.degree = degree


def monomial_sort_key(mono):
    """Column order for ideal elimination: monomials with more dots (then
    lexicographically larger dots, then longer permutations) are preferred
    as leading terms, so the surviving representatives carry few dots."""
    w, dots, word = mono
    return (sum(dots), dots, length(w), w, word)


def _coeff_h_degree(c):
    """h-degree of a scalar that is a single h-monomial (graded algebra)."""
    if isinstance(c, HPoly):
        nz = [k for k, v in enumerate(c.c) if v]
        assert len(nz) == 1, "graded element with mixed h-powers"
        return nz[0]
    return 0


def _coeff_value(c):
    if isinstance(c, HPoly):
        for v in c.c:
            if v:
                return v
        return 0
    return c


class DegreeBlock:
    """Quotient data of one graded piece.  Columns are monomials, or
    (monomial, h-power) pairs in the deformed case."""

    __slots__ = ("degree", "columns", "index", "functionals", "reps")

    def __init__(self, degree, columns, functionals, reps):
        self.degree = degree
        self.columns = columns
        self.index = {m: k for k, m in enumerate(columns)}
        self.functionals = functionals
        self.reps = reps


class CyclotomicAlgebra:
    """A certified cyclotomic quotient with a chosen representative basis.

    Elements are sparse dicts {flat basis index: coeff}; coefficients are
    Fractions/ints, or HPoly values in the deformed case (the flat basis
    is then a Q[h]-module basis)."""

    def __init__(self, quiver, lam, nu, ctx, blocks, hilbert, top_degree, checked_cap):
        self.quiver = quiver
        self.lam = lam
        self.nu = nu
        self.ctx = ctx
        self.deformed = ctx.deformed
        self.blocks = blocks
        self.hilbert = hilbert
        self.top_degree = top_degree
        self.checked_cap = checked_cap
        self.certified = True
        self.basis = []
        self.rep_monomials = []
        self._pos_of_flat = {}
        for d in sorted(blocks):
            blk = blocks[d]
            for pos, col in enumerate(blk.reps):
                column = blk.columns[col]
                mono = column[0] if self.deformed else column
                hpow = column[1] if self.deformed else 0
                if hpow:
                    continue  # Q[h]-module basis: h-power-zero reps only
                self._pos_of_flat[(d, pos)] = len(self.basis)
                self.basis.append((d, pos))
                self.rep_monomials.append(mono)
        if self.deformed:
            self._check_h_towers()
        self._mono_flat = {m: k for k, m in enumerate(self.rep_monomials)}
        self._sc = {}
        self._gen_elems = None
        self.mu = weight_after(quiver, lam, nu)

    def _check_h_towers(self):
        """In the deformed case the rep columns must come in h-towers over
        the h-power-zero reps (the ideal is h-stable)."""
        reps0 = set()
        for d, blk in self.blocks.items():
            for col in blk.reps:
                mono, hpow = blk.columns[col]
                if hpow == 0:
                    reps0.add(mono)
        for d, blk in self.blocks.items():
            for col in blk.reps:
                mono, hpow = blk.columns[col]
                assert mono in reps0, "rep column outside an h-tower"

    # -- basic structure -------------------------------------------------

    @property
    def dim(self):
        return len(self.basis)

    def degree_of(self, k):
        return self.ctx.monomial_degree(self.rep_monomials[k])

    def zero(self):
        return {}

    def _fold_coords(self, coords):
        """Collapse (degree, position) coordinates onto the flat basis,
        turning h-powers into HPoly coefficients (deformed only)."""
        out = {}
        for (d, pos), cf in coords.items():
            blk = self.blocks[d]
            col = blk.columns[blk.reps[pos]]
            if self.deformed:
                mono, hpow = col
                k = self._mono_flat[mono]
                add = HPoly((0,) * hpow + (cf,))
                val = out.get(k, HPoly()) + add
            else:
                k = self._mono_flat[col]
                val = out.get(k, 0) + cf
            if val:
                out[k] = val
            elif k in out:
                del out[k]
        return out

    def project(self, x):
        """Coset coordinates of a straightened element of R_nu."""
        coords = {}
        for mono, cf in x.items():
            base_deg = self.ctx.monomial_degree(mono)
            if self.deformed:
                pieces = [
                    (m, v)
                    for m, v in enumerate(cf.c if isinstance(cf, HPoly) else (cf,))
                    if v
                ]
            else:
                pieces = [(0, cf)]
            for hpow, val in pieces:
                d = base_deg + 2 * hpow
                if not self.deformed and d > self.top_degree:
                    continue  # certified zero above the oracle's top degree
                blk = self.blocks.get(d)
                if blk is None:
                    if self.deformed and d > self.checked_cap:
                        raise UncertifiedBuildError(
                            "degree %d beyond certified range" % d, degree=d
                        )
                    continue  # certified zero graded piece
                col = blk.index[(mono, hpow) if self.deformed else mono]
                for pos, phi in enumerate(blk.functionals):
                    v = phi.get(col)
                    if v:
                        key = (d, pos)
                        cur = coords.get(key, 0) + val * v
                        if cur:
                            coords[key] = cur
                        elif key in coords:
                            del coords[key]
        return self._fold_coords(coords)

    def lift(self, vec):
        """A representative in R_nu (combination of rep monomials)."""
        out = {}
        for k, cf in vec.items():
            if cf:
                m = self.rep_monomials[k]
                out[m] = out.get(m, 0) + cf
        return {m: c for m, c in out.items() if c}

    def element_from_tokens(self, tokens):
        return self.project(self.ctx.straighten(tokens))

    def identity_element(self):
        out = {}
        for word in words_of_content(self.nu):
            for k, cf in self.project(self.ctx.e(word)).items():
                val = out.get(k, 0) + cf
                if val:
                    out[k] = val
                elif k in out:
                    del out[k]
        return out

    def generator_elements(self):
        """Projections of the algebra generators: all e(i), all y_k, all
        psi_k (summed over words)."""
        if self._gen_elems is not None:
            return self._gen_elems
        n = self.nu.size
        words = words_of_content(self.nu)
        gens = []
        for word in words:
            gens.append((("e", word), self.project(self.ctx.e(word))))
        for kind, count in (("y", n), ("psi", n - 1)):
            for k in range(count):
                total = {}
                for word in words:
                    elem = self.ctx.straighten([(kind, k), ("e", word)])
                    for kk, cf in self.project(elem).items():
                        val = total.get(kk, 0) + cf
                        if val:
                            total[kk] = val
                        elif kk in total:
                            del total[kk]
                gens.append(((kind, k), total))
        self._gen_elems = gens
        return gens

    def mult_basis(self, a, b):
        key = (a, b)
        cached = self._sc.get(key)
        if cached is None:
            prod = self.ctx.multiply(
                {self.rep_monomials[a]: self.ctx.one},
                {self.rep_monomials[b]: self.ctx.one},
            )
            cached = self.project(prod)
            self._sc[key] = cached
        return cached

    def mult(self, x, y):
        out = {}
        for a, ca in x.items():
            for b, cb in y.items():
                c = ca * cb
                for k, v in self.mult_basis(a, b).items():
                    val = out.get(k, 0) + c * v
                    if val:
                        out[k] = val
                    elif k in out:
                        del out[k]
        return out

    def pair_dimension_table(self):
        """dims of e(i) . A . e(j) as {(top word, bottom word): Laurent}."""
        out = {}
        for k, mono in enumerate(self.rep_monomials):
            w, _, word = mono
            key = (apply_perm(w, word), word)
            cur = out.get(key, Laurent())
            out[key] = cur + Laurent.term(1, self.degree_of(k))
        return out

    def as_graded_algebra(self):
        from .algebras import GradedAlgebra

        degrees = [self.degree_of(k) for k in range(self.dim)]
        return GradedAlgebra(
            degrees=degrees,
            mult=self.mult,
            one=self.identity_element(),
            generators=[v for _, v in self.generator_elements()],
            name="R^%s_%s" % (self.lam.coeffs, self.nu.mults),
        )


def project(x, algebra):
    """Spec-level convenience wrapper for the coset map."""
    return algebra.project(x)


def _ideal_rows(ctx, lam, nu, degree_lo, degree_hi, j_hi):
    """Generate straightened spanning rows of the cyclotomic ideal with
    graded degrees in [degree_lo, degree_hi], binned as
    {(degree, top, bottom): [rows]}.  Rows are {monomial: coeff} in the
    plain case and {(monomial, h-power): value} in the deformed case (then
    h-shifted copies up to degree_hi are included: the ideal is h-stable)."""
    from itertools import permutations

    n = nu.size
    rows = {}
    if n == 0:
        return rows  # no strands, no cyclotomic generators
    words = words_of_content(nu)

    def bin_row(row, word):
        if not row:
            return
        degs = set()
        for (v, dots), cf in row.items():
            degs.add(ctx.monomial_degree((v, dots, word)) + 2 * _coeff_h_degree(cf))
        assert len(degs) == 1, "inhomogeneous ideal row"
        d = degs.pop()
        some = next(iter(row))
        top = apply_perm(some[0], word)
        if ctx.deformed:
            base = {
                ((v, dots, word), _coeff_h_degree(cf)): _coeff_value(cf)
                for (v, dots), cf in row.items()
            }
            shift = 0
            while d + 2 * shift <= degree_hi:
                if d + 2 * shift >= degree_lo:
                    shifted = {(m, hp + shift): val for (m, hp), val in base.items()}
                    rows.setdefault((d + 2 * shift, top, word), []).append(shifted)
                shift += 1
        else:
            if degree_lo <= d <= degree_hi:
                full = {(v, dots, word): cf for (v, dots), cf in row.items()}
                rows.setdefault((d, top, word), []).append(full)

    for dj in range(degree_lo, j_hi + 1):
        for word in words:
            c1 = lam[word[0]]
            base_deg = dj - 2 * c1
            for m in ctx.graded_basis(nu, base_deg):
                if apply_perm(m[0], m[2]) != word:
                    continue
                terms = {(m[0], m[1]): ctx.one}
                for _ in range(c1):
                    terms = ctx._left_y_terms(0, terms, m[2])
                bin_row(terms, m[2])
                level = {identity(n): terms}
                cur_len = 0
                while level:
                    nxt = {}
                    for w, row in level.items():
                        for k in range(n - 1):
                            w2 = left_mult_s(k, w)
                            if length(w2) != cur_len + 1 or w2 in nxt:
                                continue
                            row2 = ctx._prepend_psi(k, row, m[2])
                            nxt[w2] = row2
                            bin_row(row2, m[2])
                    level = nxt
                    cur_len += 1
    return rows


def build_quotient(quiver, lam, nu, degree_cap=None, deformed=False, ctx=None):
    """Construct the certified cyclotomic quotient R^lambda_nu.

    Raises UncertifiedBuildError when any graded dimension disagrees with
    the Shapovalov oracle (carrying the first mismatching degree), or when
    degree_cap is smaller than the oracle's top degree.
    """
    if not isinstance(nu, RootVector):
        nu = RootVector(tuple(nu))
    if not nu.is_nonnegative():
        raise ValueError("nu must be a nonnegative root vector")
    if any(lam[i] < 0 for i in range(quiver.rank)):
        raise ValueError("lambda must be dominant")
    ctx = ctx or KLR(quiver, deformed=deformed)
    hseries = shapovalov_hilbert(quiver, lam, nu)
    if any(v < 0 for v in hseries.c.values()):
        raise UncertifiedBuildError("oracle series is not a dimension count")

    n = nu.size
    lmax = n * (n - 1) // 2

    if not hseries:
        return _build_zero_quotient(quiver, lam, nu, ctx, hseries)

    top = hseries.max_degree()
    if degree_cap is not None and degree_cap < top:
        raise UncertifiedBuildError(
            "degree_cap %d is below the oracle top degree %d" % (degree_cap, top),
            degree=top,
        )
    cap = degree_cap if degree_cap is not None else top
    checked_cap = max(cap, top + 2)
    if deformed:
        # structure constants need every product of representatives
        checked_cap = max(checked_cap, 2 * top)

    degree_lo = -2 * lmax
    j_hi = checked_cap + 2 * lmax
    rows = _ideal_rows(ctx, lam, nu, degree_lo, checked_cap, j_hi)

    def expected_dim(d):
        if deformed:
            return sum(hseries.coeff(d - 2 * m) for m in range((d - degree_lo) // 2 + 1))
        return hseries.coeff(d) if d <= top else 0

    blocks = {}
    for d in range(degree_lo, checked_cap + 1):
        by_block = {}
        if deformed:
            m = 0
            while d - 2 * m >= degree_lo:
                for mono in ctx.graded_basis(nu, d - 2 * m):
                    key = (apply_perm(mono[0], mono[2]), mono[2])
                    by_block.setdefault(key, []).append((mono, m))
                m += 1
        else:
            for mono in ctx.graded_basis(nu, d):
                key = (apply_perm(mono[0], mono[2]), mono[2])
                by_block.setdefault(key, []).append(mono)
        if not by_block:
            if expected_dim(d):
                raise UncertifiedBuildError(
                    "oracle expects dimension %s in empty degree %d"
                    % (expected_dim(d), d),
                    degree=d,
                )
            continue
        quotient_dim = 0
        deg_blocks = []
        for key in sorted(by_block):
            if deformed:
                cols = sorted(
                    by_block[key], key=lambda c: (-c[1],) + monomial_sort_key(c[0])
                )
            else:
                cols = sorted(by_block[key], key=monomial_sort_key)
            index = {m_: i for i, m_ in enumerate(cols)}
            pool = EchelonPool()
            for row in rows.get((d, key[0], key[1]), ()):
                pool.insert({index[m_]: Fraction(c) for m_, c in row.items()})
            funcs = pool.nullspace(range(len(cols)))
            reps = [c for c in range(len(cols)) if c not in pool.rows]
            quotient_dim += len(reps)
            deg_blocks.append((key, cols, funcs, reps))
        if quotient_dim != expected_dim(d):
            raise UncertifiedBuildError(
                "uncertified: degree %d has dimension %d, oracle expects %s"
                % (d, quotient_dim, expected_dim(d)),
                degree=d,
            )
        if quotient_dim:
            columns = []
            functionals = []
            reps = []
            for key, cols, funcs, rp in deg_blocks:
                off = len(columns)
                columns.extend(cols)
                for phi in funcs:
                    functionals.append({c + off: v for c, v in phi.items()})
                reps.extend(c + off for c in rp)
            blocks[d] = DegreeBlock(d, columns, functionals, reps)

    return CyclotomicAlgebra(quiver, lam, nu, ctx, blocks, hseries, top, checked_cap)


def _build_zero_quotient(quiver, lam, nu, ctx, hseries):
    """Zero oracle: certify by showing every idempotent lies in the ideal
    in degree 0 (then the ideal is everything)."""
    n = nu.size
    lmax = n * (n - 1) // 2
    degree_lo = -2 * lmax
    lam_max = max((abs(lam[i]) for i in range(quiver.rank)), default=0)
    rows = _ideal_rows(ctx, lam, nu, degree_lo, 0, 2 * lmax + 2 * lam_max * n)
    for word in words_of_content(nu):
        monos = sorted(
            (
                m
                for m in ctx.graded_basis(nu, 0)
                if m[2] == word and apply_perm(m[0], m[2]) == word
            ),
            key=monomial_sort_key,
        )
        index = {m: i for i, m in enumerate(monos)}
        pool = EchelonPool()
        for row in rows.get((0, word, word), ()):
            pool.insert({index[m]: Fraction(c) for m, c in row.items()})
        e_mono = (identity(n), (0,) * n, word)
        if not pool.contains({index[e_mono]: Fraction(1)}):
            raise UncertifiedBuildError(
                "oracle says the quotient vanishes but e(%s) survives" % (word,),
                degree=0,
            )
    return CyclotomicAlgebra(quiver, lam, nu, ctx, {}, hseries, -1, 0)
