"""
Index, rank, kernel, pi, lambda_W and filtration level of a window span.

W ∩ K_- is read off the window: a window vector whose coordinates at
exponents 0..r-1 vanish lifts to an element of W with only negative
exponents, since z^r K_+ <= W.
"""

import logging

from arith.exceptions import DomainError, InvariantViolation
from arith.laurent import VectorLaurent
from arith.linalg import nullspace, rank as matrix_rank, rref
from arith.scalars import ZERO

from .lattice import k_plus, span_of
from .projective import HomomorphismData, ProjectivePoint
from .window import block, from_coordinates, shift_coordinates

logger = logging.getLogger(__name__)


def _vectors_below(w, exponent):
    """Basis (rref) of the window vectors of W with no exponents above ``exponent``."""
    start = 2 * (exponent + 1 - w.lo)
    if not w.basis:
        return []
    if start >= w.ncols:
        return list(w.basis)
    # combinations c with sum c_i row_i vanishing on the columns >= start
    columns = [[row[j] for row in w.basis] for j in range(max(start, 0), w.ncols)]
    combos = nullspace(columns, w.dim)
    vectors = [
        tuple(sum((c * row[j] for c, row in zip(combo, w.basis)), ZERO) for j in range(w.ncols))
        for combo in combos
    ]
    return rref(vectors, w.ncols)[0] if vectors else []


def index_of_lattice(w):
    """dim ker P_+ - dim coker P_+, which is dim(W / z^r K_+) - 2r."""
    kernel = len(_vectors_below(w, -1))
    image = matrix_rank([row[2 * w.r:] for row in w.basis], 2 * w.r) if w.basis else 0
    cokernel = 2 * w.r - image
    return kernel - cokernel


def rank(w):
    """dim W ∩ K_-."""
    return len(_vectors_below(w, -1))


def min_negative_degree(w):
    """The least degree of a negative-degree element of W, or None."""
    for d in range(w.lo, 0):
        if _vectors_below(w, d):
            return d
    return None


def kernel_basis(w):
    """x, z x, ..., z^(rank-1) x with x of minimal degree."""
    size = rank(w)
    if size == 0:
        raise DomainError("W has rank 0, so W ∩ K_- is trivial")
    d = min_negative_degree(w)
    if -d != size:
        logger.warning(f"rank {size} disagrees with minimal degree {d}")
        raise InvariantViolation(f"rank {size} disagrees with minimal negative degree {d}")
    x = _vectors_below(w, d)[0]
    coords = [x]
    for _ in range(size - 1):
        coords.append(shift_coordinates(coords[-1]))
    if matrix_rank(coords + _vectors_below(w, -1), w.ncols) != size:
        raise InvariantViolation("z^j x does not span W ∩ K_-")
    return [from_coordinates(c, w.lo) for c in coords]


def pi(w):
    """The line of z^-1 coefficients of degree -1 elements of W."""
    basis = kernel_basis(w)
    return ProjectivePoint.from_vector(basis[-1].coefficient(-1))


def lambda_of(w):
    r = rank(w)
    if r == 0:
        return HomomorphismData.trivial()
    return HomomorphismData.from_line(r, pi(w))


def filtration_level(w):
    return w.level()


def k_lambda_window(lam, bound=None):
    """K_lambda = lambda K_+ on the window of bound ``bound`` (at least r)."""
    bound = lam.r if bound is None else bound
    if bound < lam.r:
        raise DomainError(f"window bound {bound} is below r={lam.r}")
    if lam.is_trivial:
        return k_plus().rewindow(bound)
    generators = [
        VectorLaurent.from_constant(lam.u, lam.r),
        VectorLaurent.from_constant(lam.v, -lam.r),
    ]
    return span_of(generators, bound)


def slot_image(w, r):
    """Rows of the coefficient of z^-r over the basis of W held at bound r."""
    held = w.rewindow(r)
    return [block(row, -r, held.lo) for row in held.basis]
