"""
Gaussian rationals: exact elements of Q(i) built on ``fractions.Fraction``.
"""

from dataclasses import dataclass
from fractions import Fraction


def _format(q):
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True, eq=False)
class GaussianRational:
    """re + i*im with both parts kept in lowest terms by ``Fraction``."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 're', Fraction(self.re))
        object.__setattr__(self, 'im', Fraction(self.im))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        if isinstance(value, str):
            return cls(Fraction(value))
        raise TypeError(f"cannot read {value!r} as a Gaussian rational")

    @classmethod
    def from_strings(cls, re, im):
        return cls(Fraction(re), Fraction(im))

    def to_strings(self):
        return [_format(self.re), _format(self.im)]

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm_sq(self):
        """|x|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    @property
    def is_zero(self):
        return self.re == 0 and self.im == 0

    @property
    def is_real(self):
        return self.im == 0

    def __bool__(self):
        return not self.is_zero

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = ONE
        for _ in range(abs(k)):
            result = result * base
        return result

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = '+' if self.im > 0 else '-'
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gr(value, im=0):
    """Shorthand constructor: ``gr(3, 4)`` is 3+4i, ``gr('3/5')`` is 3/5."""
    if im == 0:
        return GaussianRational.coerce(value)
    return GaussianRational(Fraction(value), Fraction(im))
