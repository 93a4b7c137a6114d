"""
W ⊖ zW for a bounded lattice.

W ⊖ zW is orthogonal to z^(r+1) K_+, so it lives on exponents [-r, r]. Its
elements are combinations of the lifted window basis of W and z^r e_1,
z^r e_2 that are orthogonal to z times each of those generators.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from arith.exceptions import DomainError, InvariantViolation
from arith.laurent import VectorLaurent
from arith.linalg import inner, nullspace, rref
from arith.scalars import ONE, ZERO
from lattices.window import check_window, from_coordinates, shift_coordinates

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScaledVector:
    """An unnormalized vector with its exact squared norm."""

    vector: VectorLaurent
    norm_sq: Fraction

    def __post_init__(self):
        if self.vector.is_zero:
            raise DomainError("a scaled vector must be nonzero")
        if Fraction(self.norm_sq) != self.vector.norm_sq():
            raise InvariantViolation("recorded squared norm does not match the vector")
        object.__setattr__(self, 'norm_sq', Fraction(self.norm_sq))

    @classmethod
    def of(cls, vector):
        return cls(vector, vector.norm_sq())


def _combine(weights, rows):
    return tuple(
        sum((c * row[j] for c, row in zip(weights, rows)), ZERO) for j in range(len(rows[0]))
    )


def _gram_schmidt(rows):
    """Orthogonalize without normalizing; stays inside Q(i)."""
    out = []
    for row in rows:
        for prior in out:
            factor = inner(row, prior) / inner(prior, prior)
            row = tuple(a - factor * b for a, b in zip(row, prior))
        out.append(row)
    return out


def complement_basis(w):
    r = w.r
    size = 4 * r + 2
    check_window(size)
    lifted = [tuple(row) + (ZERO, ZERO) for row in w.basis]
    for c in range(2):
        unit = [ZERO] * size
        unit[size - 2 + c] = ONE
        lifted.append(tuple(unit))
    shifted = [shift_coordinates(row) for row in lifted]
    equations = [[inner(row, target) for row in lifted] for target in shifted]
    combos = nullspace(equations, len(lifted))
    if len(combos) != 2:
        logger.warning(f"W ⊖ zW has dimension {len(combos)} at r={r}")
        raise InvariantViolation(f"W ⊖ zW has dimension {len(combos)}, expected 2")
    reduced, _ = rref([_combine(combo, lifted) for combo in combos], size)
    basis = [ScaledVector.of(from_coordinates(row, -r)) for row in _gram_schmidt(reduced)]
    logger.debug(f"complement at r={r}: norms {[str(b.norm_sq) for b in basis]}")
    return tuple(basis)
