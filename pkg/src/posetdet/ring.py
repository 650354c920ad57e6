"""Exact ring elements: unbounded integers, rationals, and integer polynomials.

Every value is immutable and tagged by its concrete class.  Arithmetic is
closed within one tag; combining different tags raises TagMismatchError
instead of silently coercing, so determinant identities stay exact.
"""

from __future__ import annotations

from fractions import Fraction


class TagMismatchError(TypeError):
    """Two ring values of different tags were combined."""


class InexactDivisionError(ArithmeticError):
    """An exact division left a remainder.

    Inside fraction-free elimination this signals a broken invariant, not
    bad user input.
    """


class RingValue:
    """Base class for exact elements of a commutative integral domain."""

    __slots__ = ()

    def _require_same_tag(self, other: RingValue) -> None:
        if type(other) is not type(self):
            raise TagMismatchError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )

    def __sub__(self, other: RingValue) -> RingValue:
        self._require_same_tag(other)
        return self + (-other)

    def __pow__(self, exponent: int) -> RingValue:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = one_like(self)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result


class Int(RingValue):
    """Arbitrary-precision integer."""

    __slots__ = ("v",)

    def __init__(self, v: int):
        if not isinstance(v, int):
            raise TypeError(f"Int needs a Python int, got {type(v).__name__}")
        self.v = v

    def __add__(self, other: Int) -> Int:
        self._require_same_tag(other)
        return Int(self.v + other.v)

    def __neg__(self) -> Int:
        return Int(-self.v)

    def __mul__(self, other: Int) -> Int:
        self._require_same_tag(other)
        return Int(self.v * other.v)

    def exact_div(self, other: Int) -> Int:
        self._require_same_tag(other)
        if other.v == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(self.v, other.v)
        if r != 0:
            raise InexactDivisionError(f"{self.v} is not divisible by {other.v}")
        return Int(q)

    def scale(self, k: int) -> Int:
        return Int(self.v * k)

    def is_zero(self) -> bool:
        return self.v == 0

    def is_positive(self) -> bool:
        return self.v > 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Int) and self.v == other.v

    def __hash__(self):
        return hash(("Int", self.v))

    def __str__(self) -> str:
        return str(self.v)

    def __repr__(self) -> str:
        return f"Int({self.v})"


class Rat(RingValue):
    """Exact rational, always reduced with positive denominator."""

    __slots__ = ("v",)

    def __init__(self, numerator, denominator: int = 1):
        # Fraction normalizes sign and reduces to lowest terms.
        if isinstance(numerator, Fraction) and denominator == 1:
            self.v = numerator
        elif isinstance(numerator, int) and isinstance(denominator, int):
            self.v = Fraction(numerator, denominator)
        else:
            raise TypeError("Rat needs integers or a Fraction")

    @property
    def numerator(self) -> int:
        return self.v.numerator

    @property
    def denominator(self) -> int:
        return self.v.denominator

    def __add__(self, other: Rat) -> Rat:
        self._require_same_tag(other)
        return Rat(self.v + other.v)

    def __neg__(self) -> Rat:
        return Rat(-self.v)

    def __mul__(self, other: Rat) -> Rat:
        self._require_same_tag(other)
        return Rat(self.v * other.v)

    def exact_div(self, other: Rat) -> Rat:
        self._require_same_tag(other)
        if other.v == 0:
            raise ZeroDivisionError("division by zero")
        return Rat(self.v / other.v)

    def scale(self, k: int) -> Rat:
        return Rat(self.v * k)

    def is_zero(self) -> bool:
        return self.v == 0

    def is_positive(self) -> bool:
        return self.v > 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Rat) and self.v == other.v

    def __hash__(self):
        return hash(("Rat", self.v))

    def __str__(self) -> str:
        return str(self.v)

    def __repr__(self) -> str:
        return f"Rat({self.v.numerator}, {self.v.denominator})"


class Poly(RingValue):
    """Univariate polynomial in q over the integers.

    Coefficients are stored ascending by degree with no trailing zeros;
    the empty tuple is the zero polynomial.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError("Poly coefficients must be Python ints")
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls((c,))

    @classmethod
    def variable(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> Poly:
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (coeff,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Poly) -> Poly:
        self._require_same_tag(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: Poly) -> Poly:
        self._require_same_tag(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        if len(a) == 1:
            return Poly(tuple(a[0] * c for c in b))
        if len(b) == 1:
            return Poly(tuple(b[0] * c for c in a))
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return Poly(out)

    def exact_div(self, other: Poly) -> Poly:
        """Quotient self / other when the division is exact in Z[q]."""
        self._require_same_tag(other)
        b = other.coeffs
        if not b:
            raise ZeroDivisionError("division by zero polynomial")
        a = self.coeffs
        if not a:
            return Poly()
        if len(a) < len(b):
            raise InexactDivisionError("degree of dividend below degree of divisor")
        rem = list(a)
        lead = b[-1]
        width = len(b)
        quot = [0] * (len(a) - width + 1)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + width - 1]
            if c == 0:
                continue
            t, r = divmod(c, lead)
            if r != 0:
                raise InexactDivisionError("polynomial division is not exact")
            quot[k] = t
            for j, bj in enumerate(b):
                rem[k + j] -= t * bj
        if any(rem):
            raise InexactDivisionError("polynomial division leaves a remainder")
        return Poly(quot)

    def scale(self, k: int) -> Poly:
        if k == 0:
            return Poly()
        return Poly(tuple(c * k for c in self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __str__(self) -> str:
        """Render with descending powers, e.g. "q^3 - q^2 + 1"."""
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            elif power == 1:
                body = "q" if mag == 1 else f"{mag}q"
            else:
                body = f"q^{power}" if mag == 1 else f"{mag}q^{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.coeffs})"


def ring_value_from_json(v) -> RingValue:
    """Ring value from its file-format form: an integer, or an ascending
    coefficient list for a polynomial."""
    if isinstance(v, bool):
        raise ValueError("boolean is not a ring value")
    if isinstance(v, int):
        return Int(v)
    if isinstance(v, list):
        return Poly(v)
    raise ValueError(f"cannot read a ring value from {v!r}")


def zero_like(x: RingValue) -> RingValue:
    """Additive identity with the same tag as x."""
    if isinstance(x, Int):
        return Int(0)
    if isinstance(x, Rat):
        return Rat(0)
    if isinstance(x, Poly):
        return Poly()
    raise TypeError(f"not a ring value: {type(x).__name__}")


def one_like(x: RingValue) -> RingValue:
    """Multiplicative identity with the same tag as x."""
    if isinstance(x, Int):
        return Int(1)
    if isinstance(x, Rat):
        return Rat(1)
    if isinstance(x, Poly):
        return Poly((1,))
    raise TypeError(f"not a ring value: {type(x).__name__}")
