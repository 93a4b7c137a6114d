"""
The bundle chart phi: (stratum data, fiber) -> lattice of U_lambda, and its inverse.

phi sends (A, e) to the lattice generated by u and v + z^(1-2r) e(z) u. The
projection onto K_lambda carries u to z^r u_lam and the sheared v to
z^-r v_lam, so phi_inverse recovers both generators as preimages and reads
a, b, c, d and e off their lambda-coordinates.
"""

import logging

from arith.exceptions import DomainError, InvariantViolation
from arith.laurent import POLY_ONE, LaurentPoly
from arith.linalg import inner, solve
from arith.scalars import ZERO
from lattices.lattice import span_of
from lattices.window import check_window, from_coordinates, to_coordinates

from .charts import gram_matrix, in_U_lambda
from .data import FiberVector, StratumData, determinant_polynomial, from_lambda_coordinates, lambda_coordinates

logger = logging.getLogger(__name__)


def _bound(vectors):
    exponents = [0]
    for vector in vectors:
        if not vector.is_zero:
            exponents += [vector.degree(), -vector.valuation()]
    return max(exponents)


def chart_generators(s, x):
    """u and v + z^(1-2r) e(z) u."""
    x.check(s.r)
    u, v = s.generators()
    shear = x.polynomial().shift(1 - 2 * s.r)
    return u, v + u * shear


def phi(s, x):
    if determinant_polynomial(s) != POLY_ONE:
        raise DomainError("stratum data with non-constant det A does not give a bounded lattice")
    u, v = chart_generators(s, x)
    bound = _bound([u, v])
    check_window(4 * bound)
    w = span_of([u, v], bound)
    logger.info(f"phi: r={s.r}, fiber zero {x.is_zero} -> lattice at bound {bound}")
    return w


def stratum_lattice(s):
    return phi(s, FiberVector.zero(s.r))


def _preimage(gram, held, target, goal):
    """The element of W projecting onto ``goal`` (a vector of K_lambda)."""
    goal_coords = to_coordinates(goal, held.lo, held.r)
    # rows: one equation per basis vector k_j of the target window
    equations = [[gram[i][j] for i in range(held.dim)] for j in range(target.dim)]
    rhs = [inner(goal_coords, k) for k in target.basis]
    solution, free = solve(equations, rhs, held.dim)
    if solution is None or free:
        raise DomainError("the projection onto K_lambda is not invertible")
    coords = [
        sum((c * row[j] for c, row in zip(solution, held.basis)), ZERO) for j in range(held.ncols)
    ]
    return from_coordinates(coords, held.lo)


def _read(poly, start, lowest):
    """Coefficients of poly at start, start - 1, ... down to lowest, as a polynomial in w."""
    coefficients = []
    exponent = start
    while exponent >= lowest:
        coefficients.append(poly.coeff(exponent))
        exponent -= 1
    return LaurentPoly.from_coefficients(coefficients)


def phi_inverse(w, lam):
    if lam.is_trivial:
        raise DomainError("the chart needs a homomorphism with r > 0")
    if not in_U_lambda(w, lam):
        raise DomainError("the lattice is not in U_lambda")
    r = lam.r
    bound = max(w.r, r) + 1
    gram, held, target = gram_matrix(w, lam, bound)
    low = held.lo
    u = _preimage(gram, held, target, from_lambda_coordinates(POLY_ONE.shift(r), LaurentPoly(), lam))
    v = _preimage(gram, held, target, from_lambda_coordinates(LaurentPoly(), POLY_ONE.shift(-r), lam))

    pu, qu = lambda_coordinates(u, lam)
    if pu.truncate(lo=r) != POLY_ONE.shift(r) or not qu.truncate(lo=-r).is_zero:
        raise InvariantViolation("the preimage of z^r u_lam does not have the chart shape")
    a = _read(pu, r - 1, low)
    c = _read(qu, -r - 1, low)

    pv, qv = lambda_coordinates(v, lam)
    a_in_z = POLY_ONE + a.reflect().shift(-1)
    # pv on exponents [1-r, r-1] is (z^(1-r) e(z)) (1 + z^-1 a(z^-1)), unipotent in e
    shear = {}
    for m in range(r - 1, -r, -1):
        value = pv.coeff(m)
        for k, coefficient in a.terms:
            value = value - coefficient * shear.get(m + 1 + k, ZERO)
        shear[m] = value
    e = LaurentPoly.from_dict(shear)
    if not pv.truncate(lo=r).is_zero:
        raise InvariantViolation("the preimage of z^-r v_lam has exponents above r - 1 in u_lam")
    remainder = pv - e * a_in_z
    if not remainder.truncate(lo=-r + 1).is_zero:
        raise InvariantViolation("the shear does not absorb the middle exponents")
    b = _read(remainder, -r, low)
    rest = qv - e * c.reflect().shift(-2 * r - 1)
    if rest.truncate(lo=-r) != POLY_ONE.shift(-r):
        raise InvariantViolation("the preimage of z^-r v_lam does not have the chart shape")
    d = _read(rest, -r - 1, low)

    data = StratumData(lam, a, b, c, d)
    fiber = FiberVector(tuple(e.coeff(j + 1 - r) for j in range(2 * r - 1)))
    if phi(data, fiber) != w:
        logger.warning("phi does not reproduce the lattice from its chart coordinates")
        raise InvariantViolation("phi(phi_inverse(W)) != W")
    logger.info(f"phi_inverse: r={r}, fiber zero {fiber.is_zero}")
    return data, fiber


def act_on_chart(g, s, x):
    """Transport (s, x) along g so that phi commutes with the action.

    g u_lam and g v_lam are multiples nu and mu of the canonical vectors of
    the moved homomorphism; rescaling the generators absorbs them.
    """
    lam = s.lam.act(g)
    gu = g.apply(s.lam.u)
    gv = g.apply(s.lam.v)
    nu = _ratio(gu, lam.u)
    mu = _ratio(gv, lam.v)
    moved = StratumData(lam, s.a, s.b * (nu / mu), s.c * (mu / nu), s.d)
    return moved, FiberVector(tuple(e * (nu / mu) for e in x.coefficients))


def _ratio(vector, reference):
    i = 0 if not reference[0].is_zero else 1
    return vector[i] / reference[i]

