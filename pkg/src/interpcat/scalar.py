"""
Exact coefficients: rationals, polynomials in the rank variable t,
and the two kinds of scalar ring a computation can run over.

Rationals are plain :class:`fractions.Fraction`.  A :class:`Poly` is a
univariate polynomial over the rationals.  A :class:`Ring` fixes whether
the rank is the indeterminate ``t`` (elements are ``Poly``) or a fixed
rational ``t0`` (elements are ``Fraction``).
"""

from fractions import Fraction
from functools import lru_cache
import re


def frac(x):
    "coerce int / str / Fraction to Fraction"
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Poly):
        raise TypeError("expected a rational, got a polynomial")
    return Fraction(x)


def fmt_frac(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


class Poly:
    """
    Polynomial in t with rational coefficients, ``coeffs[k]`` is the
    coefficient of t**k.  Trailing zeros are stripped, so the zero
    polynomial has ``coeffs == ()`` and ``degree is None``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def var(cls):
        return cls((0, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    # ring operations ------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly()
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert n >= 0
        out = Poly((1,))
        for _ in range(n):
            out = out * self
        return out

    def __truediv__(self, other):
        # only division by a nonzero rational; polynomial division is divmod
        if isinstance(other, (int, Fraction)):
            return Poly([c / other for c in self.coeffs])
        return NotImplemented

    def divmod(self, other):
        "Euclidean division over Q: returns (q, r) with self = q*other + r"
        other = self._lift(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.lead()
        if len(rem) - 1 < db:
            return Poly(), Poly(rem)
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lead
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return Poly(quot), Poly(rem[:db] if db > 0 else [])

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    # evaluation / substitution ---------------------------------------

    def __call__(self, t0):
        "Horner evaluation; t0 may be a rational or a Poly"
        acc = Fraction(0) if not isinstance(t0, Poly) else Poly()
        for c in reversed(self.coeffs):
            acc = acc * t0 + c
        return acc

    def shift(self, c):
        "the polynomial p(t + c)"
        return self(Poly((c, 1))) if self.coeffs else Poly()

    # comparison / hashing --------------------------------------------

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            if len(self.coeffs) <= 1:
                # equal to a rational: hash alike
                self._hash = hash(self.coeffs[0] if self.coeffs else Fraction(0))
            else:
                self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return "Poly(%s)" % str(self)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mon = "" if k == 0 else ("t" if k == 1 else "t^%d" % k)
            if mon and c == 1:
                s = mon
            elif mon and c == -1:
                s = "-" + mon
            elif mon:
                s = "%s*%s" % (fmt_frac(c), mon) if c.denominator == 1 else "(%s)*%s" % (fmt_frac(c), mon)
            else:
                s = fmt_frac(c)
            terms.append(s)
        out = terms[0]
        for s in terms[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def to_list(self):
        return [fmt_frac(c) for c in self.coeffs]


T = Poly.var()


@lru_cache(maxsize=None)
def falling_factorial(lower, upper):
    """
    prod_{lower <= a < upper} (t - a), the count of ways to place
    ``upper - lower`` orphans into the free slots at rank t.
    """
    if lower < 0 or upper < 0:
        raise ValueError("falling_factorial needs naturals, got (%s, %s)" % (lower, upper))
    if lower > upper:
        raise ValueError("falling_factorial: lower=%d > upper=%d" % (lower, upper))
    p = Poly((1,))
    for a in range(lower, upper):
        p = p * Poly((-a, 1))
    return p


def poly_eval(p, t0):
    return p(frac(t0))


class Ring:
    """
    Scalar ring of a computation: ``Ring()`` is Q[t] with t symbolic,
    ``Ring(t0)`` is Q with the rank specialized to the rational t0.

    Scalars of a symbolic ring are Poly, of a specialized ring Fraction.
    Two morphisms can only be combined if their rings are equal.
    """

    __slots__ = ("t0",)

    def __init__(self, t0=None):
        self.t0 = None if t0 is None else frac(t0)

    @classmethod
    def symbolic(cls):
        return cls(None)

    @classmethod
    def at(cls, t0):
        return cls(t0)

    @property
    def is_symbolic(self):
        return self.t0 is None

    @property
    def t(self):
        return T if self.t0 is None else self.t0

    @property
    def zero(self):
        return Poly() if self.t0 is None else Fraction(0)

    @property
    def one(self):
        return Poly((1,)) if self.t0 is None else Fraction(1)

    def coerce(self, x):
        if self.t0 is None:
            return x if isinstance(x, Poly) else Poly((frac(x),))
        if isinstance(x, Poly):
            return x(self.t0)
        return frac(x)

    def falling(self, lower, upper):
        p = falling_factorial(lower, upper)
        return p if self.t0 is None else p(self.t0)

    def evaluate(self, x, t0):
        "value of a scalar of this ring at rank t0"
        if isinstance(x, Poly):
            return x(frac(t0))
        if self.t0 is not None and frac(t0) != self.t0:
            raise ValueError("scalar lives at t=%s, cannot evaluate at %s" % (self.t0, t0))
        return frac(x)

    def specialize(self, t0):
        return Ring(t0)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.t0 == other.t0

    def __hash__(self):
        return hash(("Ring", self.t0))

    def __repr__(self):
        return "Ring(t)" if self.t0 is None else "Ring(t=%s)" % fmt_frac(self.t0)

    def __str__(self):
        return "symbolic" if self.t0 is None else fmt_frac(self.t0)

    @classmethod
    def parse(cls, text):
        text = str(text).strip()
        if text in ("symbolic", "t", "T"):
            return cls()
        return cls(parse_rational(text))


_RAT = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text):
    m = _RAT.match(str(text))
    if not m:
        raise ValueError("not a rational: %r" % (text,))
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError("zero denominator in %r" % (text,))
    return Fraction(num, den)


def scalar_to_text(x):
    "rational as 'p/q', polynomial as coefficient list '[c0,c1,...]'"
    if isinstance(x, Poly):
        return "[" + ",".join(x.to_list()) + "]"
    return fmt_frac(x)


def scalar_from_text(text, ring):
    text = text.strip()
    if text.startswith("["):
        body = text[1:-1].strip()
        cs = [parse_rational(c) for c in body.split(",")] if body else []
        return ring.coerce(Poly(cs))
    return ring.coerce(parse_rational(text))
