"""
Small exact coefficient rings used throughout the package.

Everything here is deliberately dependency-free: Laurent polynomials in a
single variable `q` (graded dimensions, Hilbert series), polynomials in a
deformation variable `h` (the deformed quiver Hecke algebra), and the
rational-function field over `h` needed when the deformed algebras hit
exact linear algebra.  Coefficients are Python ints or `Fraction`s; nothing
is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction


class Laurent:
    """Laurent polynomial in one variable with exact coefficients.

    Stored as a dict exponent -> coefficient with zeros removed.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        self.c = {e: v for e, v in coeffs.items() if v}

    @classmethod
    def term(cls, coeff, exp=0):
        return cls({exp: coeff})

    @classmethod
    def one(cls):
        return cls({0: 1})

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.c
        if isinstance(other, Laurent):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) + v
        return Laurent(out)

    def __sub__(self, other):
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) - v
        return Laurent(out)

    def __neg__(self):
        return Laurent({e: -v for e, v in self.c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Laurent({e: v * other for e, v in self.c.items()})
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + v1 * v2
        return Laurent(out)

    __rmul__ = __mul__

    def coeff(self, exp):
        return self.c.get(exp, 0)

    def support(self):
        return sorted(self.c)

    def max_degree(self):
        return max(self.c) if self.c else None

    def min_degree(self):
        return min(self.c) if self.c else None

    def bar(self):
        """Invert the variable (q -> q^-1)."""
        return Laurent({-e: v for e, v in self.c.items()})

    def total(self):
        """Value at q = 1."""
        return sum(self.c.values())

    def str_in(self, var="q"):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c):
            v = self.c[e]
            if e == 0:
                parts.append(str(v))
            else:
                p = var if e == 1 else "%s^%d" % (var, e)
                if v == 1:
                    parts.append(p)
                elif v == -1:
                    parts.append("-" + p)
                else:
                    parts.append("%s*%s" % (v, p))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return self.str_in()


def qint(m):
    """The balanced q-integer [m] = q^{m-1} + q^{m-3} + ... + q^{1-m}."""
    if m == 0:
        return Laurent()
    if m < 0:
        return -qint(-m)
    return Laurent({m - 1 - 2 * k: 1 for k in range(m)})


def gaussian_binomial(n, k):
    """The Gaussian binomial [n choose k]_q, normalized with lowest term 1.

    Satisfies the Pascal recursion [n,k] = [n-1,k-1] + q^k [n-1,k].
    """
    if k < 0 or k > n:
        return Laurent()
    if k == 0 or k == n:
        return Laurent.one()
    return gaussian_binomial(n - 1, k - 1) + Laurent.term(1, k) * gaussian_binomial(n - 1, k)


class HPoly:
    """Polynomial in the deformation variable h, with Fraction coefficients.

    These serve as scalars for the deformed quiver Hecke algebra; the only
    operations the rewriting engine needs are ring operations and an exact
    zero test.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        # trim trailing zeros
        coeffs = tuple(coeffs)
        n = len(coeffs)
        while n and not coeffs[n - 1]:
            n -= 1
        self.c = coeffs[:n]

    @classmethod
    def const(cls, a):
        return cls((a,))

    @classmethod
    def gen(cls):
        return cls((0, 1))

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HPoly.const(other)
        if isinstance(other, HPoly):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    @staticmethod
    def _lift(x):
        return x if isinstance(x, HPoly) else HPoly.const(x)

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.c), len(other.c))
        a = self.c + (0,) * (n - len(self.c))
        b = other.c + (0,) * (n - len(other.c))
        return HPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __neg__(self):
        return HPoly(-x for x in self.c)

    def __mul__(self, other):
        other = self._lift(other)
        if not self.c or not other.c:
            return HPoly()
        out = [0] * (len(self.c) + len(other.c) - 1)
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(other.c):
                    out[i + j] += x * y
        return HPoly(out)

    __rmul__ = __mul__

    def at_zero(self):
        """Evaluate at h = 0."""
        return self.c[0] if self.c else 0

    def degree(self):
        return len(self.c) - 1

    def divmod(self, other):
        """Exact polynomial division with remainder over Fraction."""
        other = self._lift(other)
        if not other.c:
            raise ZeroDivisionError("division by zero HPoly")
        rem = [Fraction(x) for x in self.c]
        dq = len(rem) - len(other.c)
        quo = [Fraction(0)] * (dq + 1) if dq >= 0 else []
        lead = Fraction(other.c[-1])
        for i in range(dq, -1, -1):
            c = rem[i + len(other.c) - 1] / lead
            quo[i] = c
            if c:
                for j, y in enumerate(other.c):
                    rem[i + j] -= c * y
        return HPoly(quo), HPoly(rem)

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for i, x in enumerate(self.c):
            if not x:
                continue
            if i == 0:
                parts.append(str(x))
            elif i == 1:
                parts.append("%s*h" % x if x != 1 else "h")
            else:
                parts.append("%s*h^%d" % (x, i) if x != 1 else "h^%d" % i)
        return " + ".join(parts)


def hpoly_gcd(a: HPoly, b: HPoly) -> HPoly:
    while b:
        a, b = b, a.divmod(b)[1]
    if a and a.c[-1] != 1:
        lead = Fraction(a.c[-1])
        a = HPoly(Fraction(x) / lead for x in a.c)
    return a


class HRat:
    """Rational function in h: the fraction field needed for exact linear
    algebra over the deformed coefficient ring."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, HPoly):
            num = HPoly.const(num)
        if den is None:
            den = HPoly.const(1)
        elif not isinstance(den, HPoly):
            den = HPoly.const(den)
        if not den:
            raise ZeroDivisionError("HRat with zero denominator")
        if not num:
            den = HPoly.const(1)
        else:
            g = hpoly_gcd(num, den)
            if g.degree() > 0 or (g and g.c[0] != 1):
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = Fraction(den.c[-1])
            if lead != 1:
                num = HPoly(Fraction(x) / lead for x in num.c)
                den = HPoly(Fraction(x) / lead for x in den.c)
        self.num, self.den = num, den

    @staticmethod
    def _lift(x):
        if isinstance(x, HRat):
            return x
        if isinstance(x, HPoly):
            return HRat(x)
        return HRat(HPoly.const(x))

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._lift(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._lift(other)
        return HRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return HRat(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        return HRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        return HRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def at_zero(self):
        d = self.den.at_zero()
        if not d:
            raise ZeroDivisionError("pole at h = 0")
        return Fraction(self.num.at_zero()) / d

    def __repr__(self):
        if self.den == HPoly.const(1):
            return repr(self.num)
        return "(%s)/(%s)" % (self.num, self.den)
