"""
Coordinates on the chart U_lambda.

With lambda(z) = z^r P_u + z^-r P_v, a lattice of U_lambda is generated by

    u = z^r (1 + z^-1 a(z^-1)) u_lam + z^(-r-1) c(z^-1) v_lam
    v = z^-r b(z^-1) u_lam + z^-r (1 + z^-1 d(z^-1)) v_lam

and the fiber polynomial e(z) shears v into v + z^(1-2r) e(z) u. The
polynomials a, b, c, d are kept in the variable w = z^-1.
"""

import logging
from dataclasses import dataclass

from arith.exceptions import DimensionError, DomainError
from arith.laurent import POLY_ZERO, LaurentPoly, VectorLaurent
from arith.scalars import GaussianRational, ONE
from circle.roots import count_roots_in_open_unit_disk
from lattices.projective import HomomorphismData

logger = logging.getLogger(__name__)

W = LaurentPoly.monomial(ONE, 1)


def in_z(poly, shift=0):
    """p(z^-1) * z^shift for a polynomial p in w."""
    return poly.reflect().shift(shift)


def lambda_coordinates(vector, lam):
    """(p, q) with vector = p u_lam + q v_lam."""
    u, v = lam.u, lam.v
    nu = u[0].norm_sq() + u[1].norm_sq()
    nv = v[0].norm_sq() + v[1].norm_sq()
    first, second = vector.components
    p = first * (u[0].conjugate() / nu) + second * (u[1].conjugate() / nu)
    q = first * (v[0].conjugate() / nv) + second * (v[1].conjugate() / nv)
    return p, q


def from_lambda_coordinates(p, q, lam):
    return VectorLaurent((
        p * lam.u[0] + q * lam.v[0],
        p * lam.u[1] + q * lam.v[1],
    ))


def _polynomial(value, name):
    if isinstance(value, (list, tuple)):
        poly = LaurentPoly.from_coefficients(value)
    else:
        poly = LaurentPoly.coerce(value)
    if not poly.is_polynomial:
        raise DomainError(f"{name} must be a polynomial in w")
    return poly


@dataclass(frozen=True)
class StratumData:
    lam: HomomorphismData
    a: LaurentPoly = POLY_ZERO
    b: LaurentPoly = POLY_ZERO
    c: LaurentPoly = POLY_ZERO
    d: LaurentPoly = POLY_ZERO

    def __post_init__(self):
        if self.lam.r < 1:
            raise DomainError("stratum data needs a homomorphism with r > 0")
        for name in 'abcd':
            object.__setattr__(self, name, _polynomial(getattr(self, name), name))
        determinant = determinant_polynomial(self)
        inside = count_roots_in_open_unit_disk(determinant)
        if inside:
            logger.warning(f"det A = {determinant} has {inside} roots with |w| < 1")
            raise DomainError(f"det A vanishes at {inside} points with |z| > 1")

    @property
    def r(self):
        return self.lam.r

    @property
    def is_identity(self):
        return all(getattr(self, name).is_zero for name in 'abcd')

    def generators(self):
        """The generators u and v of the zero-section lattice."""
        r = self.r
        u = from_lambda_coordinates(
            in_z(ONE + W * self.a, r), in_z(self.c, -r - 1), self.lam,
        )
        v = from_lambda_coordinates(
            in_z(self.b, -r), in_z(ONE + W * self.d, -r), self.lam,
        )
        return u, v

    def scaled(self, t):
        """The data of H_t: coefficients damped by powers of t."""
        t = GaussianRational.coerce(t)
        r = self.r
        return StratumData(
            self.lam,
            self.a.substitute_scale(t) * t,
            self.b.substitute_scale(t) * t ** r,
            self.c.substitute_scale(t) * t ** (r + 1),
            self.d.substitute_scale(t) * t,
        )


def determinant_polynomial(s):
    """D(w) = (1 + w a)(1 + w d) - w^(2r+1) b c, the determinant of A in w = z^-1."""
    return (ONE + W * s.a) * (ONE + W * s.d) - W ** (2 * s.r + 1) * s.b * s.c


@dataclass(frozen=True)
class FiberVector:
    """Coefficients e_0, ..., e_2r-2 of e(z)."""

    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(
            self, 'coefficients', tuple(GaussianRational.coerce(x) for x in self.coefficients),
        )

    @classmethod
    def zero(cls, r):
        return cls(tuple(GaussianRational(0) for _ in range(2 * r - 1)))

    @property
    def is_zero(self):
        return all(x.is_zero for x in self.coefficients)

    def polynomial(self):
        return LaurentPoly.from_coefficients(self.coefficients)

    def check(self, r):
        if len(self.coefficients) != 2 * r - 1:
            raise DimensionError(f"a fiber over r={r} has {2 * r - 1} coefficients, got {len(self.coefficients)}")
