"""
Polynomial loops in U(n) / SU(n) and constant unitaries acting on them.
"""

import logging
from dataclasses import dataclass
from enum import Enum

from arith.exceptions import DimensionError, DomainError, LoopValidationError
from arith.laurent import POLY_ONE, LaurentMatrix
from arith.linalg import conj_transpose, identity_matrix, mat_det, mat_mul, mat_vec
from arith.scalars import GaussianRational, ONE

logger = logging.getLogger(__name__)


class GroupTag(str, Enum):
    U2 = 'U2'
    SU2 = 'SU2'


@dataclass(frozen=True)
class UnitaryLoop:
    matrix: LaurentMatrix
    degree_bound: int
    group_tag: GroupTag

    @property
    def n(self):
        return self.matrix.n

    def describe(self):
        group = 'SU(2)' if self.group_tag == GroupTag.SU2 else 'U(2)'
        return f"valid Ω_poly,{self.degree_bound} {group}"


def check_poly_loop(m, r, tag):
    """Validate ``m`` as an element of Omega_poly,r of the tagged group.

    Every failed invariant is collected; a LoopValidationError carries the
    whole list.
    """
    tag = GroupTag(tag)
    n = m.n
    violations = []
    if r < 0:
        violations.append({'error': 'support', 'message': f"degree bound {r} is negative"})
    if n != 2:
        violations.append({'error': 'dimension', 'message': f"expected a 2x2 loop, got {n}x{n}"})
    if m.evaluate(1) != identity_matrix(n):
        violations.append({'error': 'basepoint', 'message': "f(1) is not the identity"})
    if m @ m.star() != LaurentMatrix.identity(n):
        violations.append({'error': 'unitarity', 'message': "f(z) * star(f)(z) is not the identity"})
    support = m.support()
    lowest = -r * (n - 1)
    if support is not None and (support[0] < lowest or support[1] > r):
        violations.append({
            'error': 'support',
            'message': f"exponents {support[0]}..{support[1]} leave the window [{lowest}, {r}]",
        })
    if tag == GroupTag.SU2:
        determinant = m.det()
        if determinant != POLY_ONE:
            violations.append({'error': 'determinant', 'message': f"det f = {determinant}, expected 1"})
    if violations:
        logger.debug(f"loop rejected: {[v['error'] for v in violations]}")
        raise LoopValidationError(violations)
    return UnitaryLoop(matrix=m, degree_bound=r, group_tag=tag)


@dataclass(frozen=True)
class ConstantUnitary:
    matrix: tuple

    def __post_init__(self):
        rows = tuple(tuple(GaussianRational.coerce(x) for x in row) for row in self.matrix)
        if any(len(row) != len(rows) for row in rows):
            raise DimensionError("a constant unitary must be square")
        if mat_mul(rows, conj_transpose(rows)) != identity_matrix(len(rows)):
            raise DomainError("g * g^* is not the identity")
        object.__setattr__(self, 'matrix', rows)

    @classmethod
    def identity(cls, n=2):
        return cls(identity_matrix(n))

    @classmethod
    def rotation(cls, a, b, c):
        """The real rotation ((a/c, b/c), (-b/c, a/c)) from a Pythagorean triple."""
        x = GaussianRational(a) / c
        y = GaussianRational(b) / c
        return cls(((x, y), (-y, x)))

    @classmethod
    def su2(cls, alpha, beta):
        """((alpha, beta), (-conj beta, conj alpha)) with |alpha|^2 + |beta|^2 = 1."""
        alpha = GaussianRational.coerce(alpha)
        beta = GaussianRational.coerce(beta)
        return cls(((alpha, beta), (-beta.conjugate(), alpha.conjugate())))

    @property
    def n(self):
        return len(self.matrix)

    def det(self):
        return mat_det(self.matrix)

    @property
    def is_special(self):
        return self.det() == ONE

    def inverse(self):
        return ConstantUnitary(conj_transpose(self.matrix))

    def compose(self, other):
        return ConstantUnitary(mat_mul(self.matrix, other.matrix))

    __matmul__ = compose

    def apply(self, vector):
        return mat_vec(self.matrix, vector)

    def to_list(self):
        return [[x.to_strings() for x in row] for row in self.matrix]


def conjugate_action(g, f):
    """z -> g f(z) g^{-1}, revalidated with the same degree bound."""
    if f.group_tag == GroupTag.SU2 and not g.is_special:
        raise DomainError("SU(2) loops are acted on by elements of determinant 1")
    matrix = f.matrix.conjugate_by(g.matrix, g.inverse().matrix)
    return check_poly_loop(matrix, f.degree_bound, f.group_tag)


def loop_product(f, g):
    """Pointwise product, an element of Omega_poly,(r_f + r_g)."""
    tag = GroupTag.SU2 if f.group_tag == g.group_tag == GroupTag.SU2 else GroupTag.U2
    return check_poly_loop(f.matrix @ g.matrix, f.degree_bound + g.degree_bound, tag)
