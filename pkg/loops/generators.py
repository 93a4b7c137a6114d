"""
The homomorphisms lambda_r = diag(z^r, z^-r) and their conjugates.
"""

from arith.exceptions import DomainError
from arith.laurent import LaurentMatrix, LaurentPoly
from arith.scalars import ONE
from lattices.projective import ProjectivePoint, orthogonal

from .unitary import ConstantUnitary, GroupTag, check_poly_loop


def lambda_matrix(r):
    return LaurentMatrix.diagonal(LaurentPoly.monomial(ONE, r), LaurentPoly.monomial(ONE, -r))


def projection_loop(u, v, r):
    """z^r P_u + z^-r P_v for an orthogonal pair u, v of C^2."""
    nu = u[0] * u[0].conjugate() + u[1] * u[1].conjugate()
    nv = v[0] * v[0].conjugate() + v[1] * v[1].conjugate()
    return LaurentMatrix(tuple(
        tuple(
            LaurentPoly.monomial(u[i] * u[j].conjugate() / nu, r)
            + LaurentPoly.monomial(v[i] * v[j].conjugate() / nv, -r)
            for j in range(2)
        )
        for i in range(2)
    ))


def generator_loop(r, line, g=None):
    """g lambda_r g^{-1} with g e_2 spanning ``line``.

    Without ``g`` the loop is built from the orthogonal projections onto the
    line and its complement, which needs no normalization.
    """
    if r < 0:
        raise DomainError(f"degree bound {r} is negative")
    if r == 0:
        return check_poly_loop(LaurentMatrix.identity(2), 0, GroupTag.SU2)
    if g is None:
        v = line.vector()
        matrix = projection_loop(orthogonal(v), v, r)
    else:
        if not isinstance(g, ConstantUnitary):
            g = ConstantUnitary(g)
        if ProjectivePoint.from_vector(g.apply((0, ONE))) != line:
            raise DomainError(f"g does not carry e_2 onto {line}")
        matrix = lambda_matrix(r).conjugate_by(g.matrix, g.inverse().matrix)
    return check_poly_loop(matrix, r, GroupTag.SU2)


def lambda_loop(lam):
    """The homomorphism lambda_W as a loop: z^r P_u + z^-r P_v."""
    if lam.is_trivial:
        return check_poly_loop(LaurentMatrix.identity(2), 0, GroupTag.SU2)
    return check_poly_loop(projection_loop(lam.u, lam.v, lam.r), lam.r, GroupTag.SU2)


def power_loop(k):
    """diag(z^k, 1), a U(2) loop of degree bound |k| with det z^k."""
    return check_poly_loop(
        LaurentMatrix.diagonal(LaurentPoly.monomial(ONE, k), LaurentPoly.monomial(ONE, 0)),
        abs(k),
        GroupTag.U2,
    )
