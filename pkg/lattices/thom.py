"""
Coordinates on F_2r / F_2r-2.

A lattice of filtration level exactly r is generated over C[z], together
with z^r K_+, by a single vector

    w = z^-r u_0 + z^-r+1 u_1 + ... + z^r-1 u_2r-1,   u_j ⊥ u_0 for j > 0,

unique up to a nonzero scalar. Lattices of lower level collapse to the
basepoint of the Thom space.
"""

import logging
from dataclasses import dataclass

from arith.exceptions import DimensionError, DomainError, InvariantViolation
from arith.laurent import VectorLaurent
from arith.linalg import inner, mat_vec, rank, solve
from arith.scalars import GaussianRational, ZERO

from .invariants import slot_image
from .lattice import span_of
from .projective import ProjectivePoint
from .window import block

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThomPoint:
    """(u_0; u_1, ..., u_2r-1) up to scale, stored with u_0 = [1 : b] or [0 : 1].

    ``u0 is None`` is the basepoint.
    """

    u0: tuple = None
    fiber: tuple = ()

    def __post_init__(self):
        if self.u0 is None:
            if self.fiber:
                raise DomainError("the basepoint has no fiber")
            return
        u0 = tuple(GaussianRational.coerce(x) for x in self.u0)
        fiber = tuple(tuple(GaussianRational.coerce(x) for x in u) for u in self.fiber)
        if len(u0) != 2 or any(len(u) != 2 for u in fiber):
            raise DimensionError("Thom coordinates are vectors of C^2")
        if all(x.is_zero for x in u0):
            raise DomainError("u_0 must be nonzero")
        for j, u in enumerate(fiber, start=1):
            if not inner(u, u0).is_zero:
                raise DomainError(f"fiber entry u_{j} is not orthogonal to u_0")
        lead = next(x for x in u0 if not x.is_zero)
        scale = lead.inverse()
        object.__setattr__(self, 'u0', tuple(x * scale for x in u0))
        object.__setattr__(self, 'fiber', tuple(tuple(x * scale for x in u) for u in fiber))

    @property
    def is_basepoint(self):
        return self.u0 is None

    @property
    def r(self):
        return None if self.is_basepoint else (len(self.fiber) + 1) // 2

    @property
    def is_zero_section(self):
        return not self.is_basepoint and all(x.is_zero for u in self.fiber for x in u)

    @property
    def line(self):
        return None if self.is_basepoint else ProjectivePoint.from_vector(self.u0)

    def act(self, g):
        if self.is_basepoint:
            return self
        matrix = getattr(g, 'matrix', g)
        return ThomPoint(mat_vec(matrix, self.u0), tuple(mat_vec(matrix, u) for u in self.fiber))

    def vector(self, r):
        """The generator w as a Laurent vector."""
        slots = {-r: self.u0}
        for j, u in enumerate(self.fiber, start=1):
            slots[-r + j] = u
        return VectorLaurent.from_coefficient_map(slots)


BASEPOINT = ThomPoint()


def thom_coords(w, r):
    if r < 1:
        raise DomainError("Thom coordinates need r >= 1")
    level = w.level()
    if level > r:
        raise DomainError(f"lattice has filtration level {level} > {r}")
    if level < r:
        return BASEPOINT
    held = w.rewindow(r)
    image = slot_image(w, r)
    image_rank = rank(image, 2)
    if image_rank != 1:
        logger.warning(f"slot image has dimension {image_rank} at level {r}")
        raise InvariantViolation(f"the z^-{r} coefficients span a space of dimension {image_rank}, not 1")
    u0 = ProjectivePoint.from_vector(next(v for v in image if any(not x.is_zero for x in v))).vector()

    # unknowns: coefficients over the basis rows
    equations, rhs = [], []
    for c in range(2):
        equations.append([row[c] for row in held.basis])
        rhs.append(u0[c])
    for k in range(-r + 1, r):
        i = 2 * (k - held.lo)
        equations.append([
            row[i] * u0[0].conjugate() + row[i + 1] * u0[1].conjugate() for row in held.basis
        ])
        rhs.append(ZERO)
    solution, homogeneous = solve(equations, rhs, held.dim)
    if solution is None or homogeneous:
        logger.warning(f"generator system at r={r}: solution {solution is not None}, {len(homogeneous)} free")
        raise InvariantViolation("the generator w is not unique up to scale")
    x = [
        sum((c * row[j] for c, row in zip(solution, held.basis)), ZERO) for j in range(held.ncols)
    ]
    fiber = tuple(block(x, k, held.lo) for k in range(-r + 1, r))
    point = ThomPoint(u0, fiber)
    logger.info(f"thom coordinates at r={r}: u0={point.line}, zero section {point.is_zero_section}")
    return point


def lattice_from_thom(p, r):
    if p.is_basepoint:
        raise DomainError("the basepoint is not a single lattice")
    if len(p.fiber) != 2 * r - 1:
        raise DimensionError(f"expected {2 * r - 1} fiber entries for r={r}, got {len(p.fiber)}")
    return span_of([p.vector(r)], r)
