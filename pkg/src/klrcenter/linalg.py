"""
Exact sparse linear algebra over the rationals (and over small coefficient
fields carried by duck typing).

The workhorse is a leading-entry-indexed echelon pool: rows are sparse
dicts, each stored row is normalized to have leading coefficient 1 at a
column no other stored row leads, and insertion reduces a candidate row by
cancelling leading terms.  This gives incremental rank, membership tests,
nullspace (annihilator) bases, and solving -- everything the quotient
constructions and centralizer computations need, with no tolerances
anywhere.

For large integer systems there is a mod-p accelerated path whose output
is still exact: candidate annihilators are reconstructed by CRT over
several primes and then *verified* against every generating row over the
integers, and the achieved rank is certified by a mod-p nonvanishing
minor.  A failed verification falls back to the plain rational pool.
"""

from __future__ import annotations

from fractions import Fraction


class EchelonPool:
    """Incremental echelon form for sparse rows over a field.

    Columns are compared by an arbitrary total order given as sort keys:
    the leading entry of a row is its largest column under `colkey`.
    """

    def __init__(self, colkey=None):
        self.rows = {}  # leading column -> normalized sparse row
        self.colkey = colkey or (lambda c: c)

    def _lead(self, row):
        return max(row, key=self.colkey)

    def reduce(self, row):
        """Fully reduce a sparse row against the pool (a copy is made)."""
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = self._lead(row)
            pivot = self.rows.get(lead)
            if pivot is None:
                return row
            coef = row[lead]
            for c, v in pivot.items():
                val = row.get(c, 0) - coef * v
                if val:
                    row[c] = val
                elif c in row:
                    del row[c]
        return row

    def insert(self, row):
        """Reduce and store; returns True when the rank grew."""
        row = self.reduce(row)
        if not row:
            return False
        lead = self._lead(row)
        inv = row[lead]
        self.rows[lead] = {c: v / inv for c, v in row.items()}
        return True

    @property
    def rank(self):
        return len(self.rows)

    def contains(self, row):
        return not self.reduce(row)

    def nullspace(self, columns):
        """Annihilator functionals of the row space, one per non-leading
        column, as sparse dicts over the given column universe."""
        leads = sorted(self.rows, key=self.colkey, reverse=True)
        free = [c for c in columns if c not in self.rows]
        out = []
        for f in free:
            # functional phi with phi(f) = 1, phi(other free) = 0,
            # phi(row) = 0 for all pool rows; solve by back-substitution
            # in decreasing column order.
            phi = {f: Fraction(1)}
            for lead in sorted(leads, key=self.colkey):
                row = self.rows[lead]
                val = sum((phi[c] * v for c, v in row.items() if c in phi), Fraction(0))
                if val:
                    phi[lead] = -val
            out.append(phi)
        return out

    def solve(self, target):
        """Express target as a combination of the *stored* rows; returns
        {lead-column: coeff} or None if target is outside the row space."""
        row = {c: v for c, v in target.items() if v}
        combo = {}
        while row:
            lead = self._lead(row)
            pivot = self.rows.get(lead)
            if pivot is None:
                return None
            coef = row[lead]
            combo[lead] = combo.get(lead, 0) + coef
            for c, v in pivot.items():
                val = row.get(c, 0) - coef * v
                if val:
                    row[c] = val
                elif c in row:
                    del row[c]
        return combo


def frac_rows_to_int(row):
    """Scale a sparse Fraction row to integers (content removed)."""
    from math import gcd, lcm

    if not row:
        return {}
    den = lcm(*(Fraction(v).denominator for v in row.values()))
    ints = {c: int(Fraction(v) * den) for c, v in row.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, abs(v))
    if g > 1:
        ints = {c: v // g for c, v in ints.items()}
    return ints


def rank_and_annihilator(rows, columns, colkey=None, expect_dim=None, use_modular=None):
    """Rank of the span and a basis of its annihilator, exactly.

    `rows` is an iterable of sparse dicts over `columns`.  When
    `use_modular` is true (default: automatic by size) the heavy part runs
    mod p with exact verification afterwards.
    """
    rows = list(rows)
    ncols = len(columns)
    if use_modular is None:
        use_modular = ncols > 420 and len(rows) * ncols > 2_000_000
    if use_modular:
        result = _modular_rank_annihilator(rows, columns, colkey)
        if result is not None:
            return result
    pool = EchelonPool(colkey=colkey)
    for r in rows:
        pool.insert(r)
    return pool.rank, pool.nullspace(columns)


# -- mod-p accelerated path -------------------------------------------------

_PRIMES = (1_000_003, 1_000_033, 1_000_037, 1_000_039, 1_000_081, 1_000_099)


class _ModPool:
    """Echelon pool over Z/p with integer arithmetic."""

    def __init__(self, p, colkey):
        self.p = p
        self.rows = {}
        self.colkey = colkey or (lambda c: c)
        self.witness = {}  # lead column -> index of the source row

    def insert(self, row, idx=None):
        p = self.p
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            lead = max(row, key=self.colkey)
            pivot = self.rows.get(lead)
            if pivot is None:
                inv = pow(row[lead], -1, p)
                self.rows[lead] = {c: (v * inv) % p for c, v in row.items()}
                if idx is not None:
                    self.witness[lead] = idx
                return True
            coef = row[lead]
            for c, v in pivot.items():
                val = (row.get(c, 0) - coef * v) % p
                if val:
                    row[c] = val
                elif c in row:
                    del row[c]
        return False

    def nullspace(self, columns):
        p = self.p
        leads = list(self.rows)
        free = [c for c in columns if c not in self.rows]
        out = []
        for f in free:
            phi = {f: 1}
            for lead in sorted(leads, key=self.colkey):
                row = self.rows[lead]
                val = sum(phi[c] * v for c, v in row.items() if c in phi) % p
                if val:
                    phi[lead] = (-val) % p
            out.append(phi)
        return out


def _crt_pair(r1, m1, r2, m2):
    # r mod m1*m2 with r = r1 (m1), r2 (m2)
    inv = pow(m1, -1, m2)
    t = ((r2 - r1) * inv) % m2
    return r1 + m1 * t, m1 * m2


def _rational_reconstruct(a, m):
    """Wang's algorithm: num/den = a mod m with |num|, den <= sqrt(m/2)."""
    bound = int((m // 2) ** 0.5)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    num, den = r1, s1
    if den < 0:
        num, den = -num, -den
    return Fraction(num, den)


def _modular_rank_annihilator(rows, columns, colkey):
    """Rank + annihilator via CRT over several primes, with exact
    verification; returns None when reconstruction fails repeatedly."""
    int_rows = [frac_rows_to_int(r) for r in rows]
    key = colkey or (lambda c: c)
    reconstructed = None
    rank = None
    mod_data = []
    for p in _PRIMES:
        pool = _ModPool(p, colkey)
        for r in int_rows:
            pool.insert(r)
        nsp = pool.nullspace(columns)
        if rank is None:
            rank = pool.rank
            free_ref = sorted(
                (c for c in columns if c not in pool.rows), key=key
            )
        else:
            if pool.rank != rank:
                # prime hit a bad specialization; rank is the max
                if pool.rank > rank:
                    rank = pool.rank
                    mod_data = []
                    free_ref = sorted(
                        (c for c in columns if c not in pool.rows), key=key
                    )
                else:
                    continue
        mod_data.append((p, {max(phi, key=key): phi for phi in nsp}, pool))
        # attempt reconstruction with what we have
        cand = _try_reconstruct(mod_data, columns, key)
        if cand is None:
            continue
        if _verify_annihilator(cand, int_rows):
            return rank, cand
    return None


def _try_reconstruct(mod_data, columns, key):
    if not mod_data:
        return None
    # align functionals across primes by their free column
    frees = None
    for p, table, pool in mod_data:
        fr = sorted(table, key=key)
        if frees is None:
            frees = fr
        elif frees != fr:
            return None
    out = []
    for f in frees:
        vec = {}
        support = set()
        for p, table, _ in mod_data:
            support |= set(table[f])
        ok = True
        for c in support:
            r, m = 0, 1
            for p, table, _ in mod_data:
                r, m = _crt_pair(r, m, table[f].get(c, 0) % p, p)
            val = _rational_reconstruct(r, m)
            if val is None:
                ok = False
                break
            if val:
                vec[c] = val
        if not ok:
            return None
        out.append(vec)
    return out


def _verify_annihilator(functionals, int_rows):
    """Exact check: every functional kills every generating row."""
    for phi in functionals:
        for row in int_rows:
            if len(row) > len(phi):
                tot = sum(phi[c] * row[c] for c in phi if c in row)
            else:
                tot = sum(phi.get(c, 0) * v for c, v in row.items())
            if tot:
                return False
    return True
