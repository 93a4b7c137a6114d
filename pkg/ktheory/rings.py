"""
R(T) = Z[t, t^-1] and R(G) = Z[V] for G = SU(2), T its maximal torus.

V is the standard representation; it restricts to t + t^-1 on T. The Weyl
group acts on R(T) by t -> t^-1 and R(G) is its fixed ring.
"""

from dataclasses import dataclass

from arith.exceptions import DomainError


def _canonical(pairs):
    acc = {}
    for exponent, coefficient in pairs:
        if isinstance(coefficient, bool) or not isinstance(coefficient, int):
            raise DomainError(f"representation ring coefficients are integers, got {coefficient!r}")
        acc[int(exponent)] = acc.get(int(exponent), 0) + coefficient
    return tuple(sorted((k, c) for k, c in acc.items() if c))


class _IntegerPoly:
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, 'terms', _canonical(self.terms))

    @classmethod
    def from_dict(cls, mapping):
        return cls(tuple(mapping.items()))

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls(((exponent, coefficient),))

    def coeff(self, exponent):
        return dict(self.terms).get(exponent, 0)

    @property
    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        return self.terms[-1][0] if self.terms else None

    def __add__(self, other):
        other = self._coerce(other)
        return type(self)(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return type(self)(tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return type(self)(tuple((k, c * other) for k, c in self.terms))
        other = self._coerce(other)
        return type(self)(tuple(
            (k1 + k2, c1 * c2) for k1, c1 in self.terms for k2, c2 in other.terms
        ))

    __rmul__ = __mul__

    def __pow__(self, n):
        result = type(self).monomial(0)
        for _ in range(n):
            result = result * self
        return result

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self).monomial(0, other)
        raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def to_dict(self):
        return {str(k): c for k, c in self.terms}

    def _format(self, symbol):
        if not self.terms:
            return '0'
        parts = []
        for k, c in reversed(self.terms):
            if k == 0:
                parts.append(str(c))
            else:
                power = symbol if k == 1 else f"{symbol}^{k}"
                parts.append(power if c == 1 else f"{c}*{power}")
        return ' + '.join(parts)


@dataclass(frozen=True)
class RTElement(_IntegerPoly):
    """A Laurent polynomial in t with integer coefficients."""

    terms: tuple = ()

    def __str__(self):
        return self._format('t')


@dataclass(frozen=True)
class RGElement(_IntegerPoly):
    """A polynomial in V with integer coefficients."""

    terms: tuple = ()

    def __post_init__(self):
        super().__post_init__()
        if self.terms and self.terms[0][0] < 0:
            raise DomainError("R(G) elements are polynomials in V")

    def __str__(self):
        return self._format('V')


T = RTElement.monomial(1)
T_INV = RTElement.monomial(-1)
V = RGElement.monomial(1)


def weyl_act(x):
    """t -> t^-1."""
    return RTElement(tuple((-k, c) for k, c in x.terms))


def is_weyl_invariant(x):
    return weyl_act(x) == x


def restrict_rg_to_rt(x):
    """V -> t + t^-1."""
    standard = T + T_INV
    total = RTElement()
    for k, c in x.terms:
        total = total + (standard ** k) * c
    return total


def invariants_to_rg(x):
    """Write a Weyl-invariant element as a polynomial in V."""
    if not is_weyl_invariant(x):
        raise DomainError(f"{x} is not invariant under t -> t^-1")
    standard = T + T_INV
    result = {}
    remainder = x
    while not remainder.is_zero:
        top = remainder.degree
        coefficient = remainder.coeff(top)
        result[top] = coefficient
        remainder = remainder - (standard ** top) * coefficient
    return RGElement.from_dict(result)
