"""
Laurent polynomials, vectors and square matrices over Q(i).

Coefficients live in sorted ``(exponent, coefficient)`` tuples with zeros
dropped, so dataclass equality is semantic equality.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product

from .exceptions import DimensionError
from .scalars import GaussianRational, ONE, ZERO


def _canonical_terms(pairs):
    acc = {}
    for exponent, coefficient in pairs:
        coefficient = GaussianRational.coerce(coefficient)
        acc[int(exponent)] = acc.get(int(exponent), ZERO) + coefficient
    return tuple(sorted((k, c) for k, c in acc.items() if not c.is_zero))


@dataclass(frozen=True)
class LaurentPoly:
    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, 'terms', _canonical_terms(self.terms))

    @classmethod
    def from_dict(cls, mapping):
        return cls(tuple(mapping.items()))

    @classmethod
    def monomial(cls, coefficient, exponent=0):
        return cls(((exponent, coefficient),))

    @classmethod
    def constant(cls, coefficient):
        return cls.monomial(coefficient, 0)

    @classmethod
    def from_coefficients(cls, coefficients, lo=0):
        """Coefficients listed from exponent ``lo`` upwards."""
        return cls(tuple((lo + k, c) for k, c in enumerate(coefficients)))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        return cls.constant(value)

    @cached_property
    def _map(self):
        return dict(self.terms)

    @property
    def lo(self):
        return self.terms[0][0] if self.terms else None

    @property
    def hi(self):
        return self.terms[-1][0] if self.terms else None

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    @property
    def is_polynomial(self):
        return not self.terms or self.lo >= 0

    def coeff(self, exponent):
        return self._map.get(exponent, ZERO)

    def coefficients(self, lo, hi):
        """Dense coefficient list for exponents lo..hi inclusive."""
        return [self.coeff(k) for k in range(lo, hi + 1)]

    def __neg__(self):
        return LaurentPoly(tuple((k, -c) for k, c in self.terms))

    def __add__(self, other):
        other = LaurentPoly.coerce(other)
        return LaurentPoly(self.terms + other.terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                scalar = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
            return LaurentPoly(tuple((k, c * scalar) for k, c in self.terms))
        return LaurentPoly(tuple(
            (k1 + k2, c1 * c2)
            for (k1, c1), (k2, c2) in product(self.terms, other.terms)
        ))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = LaurentPoly.constant(ONE)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k):
        """Multiply by z^k."""
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    def conj(self):
        """Conjugate every coefficient, keep exponents."""
        return LaurentPoly(tuple((k, c.conjugate()) for k, c in self.terms))

    def reflect(self):
        """Substitute z -> 1/z."""
        return LaurentPoly(tuple((-k, c) for k, c in self.terms))

    def star(self):
        return LaurentPoly(tuple((-k, c.conjugate()) for k, c in self.terms))

    def truncate(self, lo=None, hi=None):
        """Keep only exponents inside [lo, hi]."""
        return LaurentPoly(tuple(
            (k, c) for k, c in self.terms
            if (lo is None or k >= lo) and (hi is None or k <= hi)
        ))

    def evaluate(self, zeta):
        zeta = GaussianRational.coerce(zeta)
        total = ZERO
        for k, c in self.terms:
            total = total + c * zeta ** k
        return total

    def substitute_scale(self, t):
        """p(z) -> p(t z)."""
        t = GaussianRational.coerce(t)
        return LaurentPoly(tuple((k, c * t ** k) for k, c in self.terms))

    def to_triples(self):
        return [[k, *c.to_strings()] for k, c in self.terms]

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for k, c in self.terms:
            coeff = f"({c})" if not c.is_real else str(c)
            parts.append(coeff if k == 0 else f"{coeff}*z^{k}")
        return ' + '.join(parts)


POLY_ZERO = LaurentPoly()
POLY_ONE = LaurentPoly.constant(ONE)
Z = LaurentPoly.monomial(ONE, 1)


@dataclass(frozen=True)
class VectorLaurent:
    components: tuple

    def __post_init__(self):
        object.__setattr__(
            self, 'components', tuple(LaurentPoly.coerce(c) for c in self.components)
        )

    @classmethod
    def zero(cls, n=2):
        return cls(tuple(POLY_ZERO for _ in range(n)))

    @classmethod
    def basis(cls, i, exponent=0, n=2):
        """z^exponent e_i, with 0-based i."""
        return cls(tuple(
            LaurentPoly.monomial(ONE, exponent) if j == i else POLY_ZERO for j in range(n)
        ))

    @classmethod
    def from_constant(cls, vector, exponent=0):
        return cls(tuple(LaurentPoly.monomial(c, exponent) for c in vector))

    @classmethod
    def from_coefficient_map(cls, mapping, n=2):
        """Build from ``{exponent: (c_1, ..., c_n)}``."""
        return cls(tuple(
            LaurentPoly(tuple((k, vec[i]) for k, vec in mapping.items())) for i in range(n)
        ))

    @property
    def n(self):
        return len(self.components)

    @property
    def is_zero(self):
        return all(c.is_zero for c in self.components)

    def degree(self):
        return vec_degree(self)

    def valuation(self):
        los = [c.lo for c in self.components if not c.is_zero]
        return min(los) if los else math.inf

    def coefficient(self, exponent):
        """The C^n coefficient of z^exponent."""
        return tuple(c.coeff(exponent) for c in self.components)

    def _check(self, other):
        if self.n != other.n:
            raise DimensionError(f"vector sizes differ: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        return VectorLaurent(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other):
        self._check(other)
        return VectorLaurent(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self):
        return VectorLaurent(tuple(-c for c in self.components))

    def __mul__(self, other):
        if isinstance(other, (VectorLaurent, LaurentMatrix)):
            return NotImplemented
        return VectorLaurent(tuple(c * other for c in self.components))

    __rmul__ = __mul__

    def shift(self, k):
        return VectorLaurent(tuple(c.shift(k) for c in self.components))

    def transform(self, g):
        """Apply a constant matrix (rows of Gaussian rationals) componentwise."""
        if len(g) != self.n:
            raise DimensionError("constant matrix does not match vector size")
        return VectorLaurent(tuple(
            sum((self.components[j] * g[i][j] for j in range(self.n)), POLY_ZERO)
            for i in range(self.n)
        ))

    def inner(self, other):
        """Hermitian L^2 pairing sum_k <coeff_k(self), coeff_k(other)>, linear in self."""
        self._check(other)
        total = ZERO
        for a, b in zip(self.components, other.components):
            for k, c in a.terms:
                total = total + c * b.coeff(k).conjugate()
        return total

    def norm_sq(self):
        return sum((c.norm_sq() for comp in self.components for _, c in comp.terms), Fraction(0))


@dataclass(frozen=True)
class LaurentMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(LaurentPoly.coerce(e) for e in row) for row in self.entries)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise DimensionError("LaurentMatrix must be square with n >= 1")
        object.__setattr__(self, 'entries', rows)

    @classmethod
    def identity(cls, n=2):
        return cls(tuple(
            tuple(POLY_ONE if i == j else POLY_ZERO for j in range(n)) for i in range(n)
        ))

    @classmethod
    def diagonal(cls, *polys):
        n = len(polys)
        return cls(tuple(
            tuple(LaurentPoly.coerce(polys[i]) if i == j else POLY_ZERO for j in range(n))
            for i in range(n)
        ))

    @classmethod
    def from_constant(cls, rows, exponent=0):
        return cls(tuple(
            tuple(LaurentPoly.monomial(c, exponent) for c in row) for row in rows
        ))

    @classmethod
    def from_columns(cls, columns):
        n = len(columns)
        return cls(tuple(
            tuple(columns[j].components[i] for j in range(n)) for i in range(n)
        ))

    @property
    def n(self):
        return len(self.entries)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def column(self, j):
        return VectorLaurent(tuple(row[j] for row in self.entries))

    def columns(self):
        return [self.column(j) for j in range(self.n)]

    def support(self):
        """(lowest, highest) exponent over all entries, None for the zero matrix."""
        los = [e.lo for row in self.entries for e in row if not e.is_zero]
        his = [e.hi for row in self.entries for e in row if not e.is_zero]
        if not los:
            return None
        return min(los), max(his)

    def __matmul__(self, other):
        return laurent_mul(self, other)

    def __add__(self, other):
        if self.n != other.n:
            raise DimensionError("matrix sizes differ")
        return LaurentMatrix(tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)
        ))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, scalar):
        return LaurentMatrix(tuple(tuple(e * scalar for e in row) for row in self.entries))

    def star(self):
        return star(self)

    def det(self):
        return det(self)

    def apply(self, vector):
        if vector.n != self.n:
            raise DimensionError("vector size does not match matrix")
        return VectorLaurent(tuple(
            sum((self.entries[i][j] * vector.components[j] for j in range(self.n)), POLY_ZERO)
            for i in range(self.n)
        ))

    def evaluate(self, zeta):
        return tuple(tuple(e.evaluate(zeta) for e in row) for row in self.entries)

    def conjugate_by(self, g, g_inv):
        """g M g^{-1} for constant matrices given as rows."""
        if len(g) != self.n:
            raise DimensionError("constant matrix does not match loop size")
        return LaurentMatrix.from_constant(g) @ self @ LaurentMatrix.from_constant(g_inv)

    def is_identity(self):
        return self == LaurentMatrix.identity(self.n)

    def to_dict(self):
        return {'n': self.n, 'entries': [[e.to_triples() for e in row] for row in self.entries]}

    def __str__(self):
        return '[' + '; '.join(', '.join(str(e) for e in row) for row in self.entries) + ']'


def laurent_mul(a, b):
    if a.n != b.n:
        raise DimensionError(f"cannot multiply {a.n}x{a.n} by {b.n}x{b.n}")
    n = a.n
    return LaurentMatrix(tuple(
        tuple(sum((a.entries[i][k] * b.entries[k][j] for k in range(n)), POLY_ZERO) for j in range(n))
        for i in range(n)
    ))


def star(a):
    """Conjugate transpose with z -> 1/z."""
    if isinstance(a, LaurentPoly):
        return a.star()
    n = a.n
    return LaurentMatrix(tuple(
        tuple(a.entries[j][i].star() for j in range(n)) for i in range(n)
    ))


def det(a):
    rows = a.entries if isinstance(a, LaurentMatrix) else a
    if any(len(row) != len(rows) for row in rows):
        raise DimensionError("determinant of a non-square matrix")
    return _cofactor_det([list(row) for row in rows])


def _cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = POLY_ZERO
    for j, entry in enumerate(rows[0]):
        if entry.is_zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * _cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def vec_degree(v):
    """Top exponent across components; -inf for the zero vector."""
    his = [c.hi for c in v.components if not c.is_zero]
    return max(his) if his else -math.inf
