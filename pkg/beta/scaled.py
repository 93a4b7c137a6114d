"""
beta: the loop of a lattice.

The columns of Ñ(z) are an orthogonal, unnormalized basis of W ⊖ zW. They
equal f(z) M for the loop f with W = f K_+ and a constant invertible M, so the
represented loop is Ñ(z) Ñ(1)^-1. Column norms cancel in that product, which
keeps the loop inside Q(i) and makes comparisons exact.
"""

import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv, mp, nstr

from arith.exceptions import DomainError, InvariantViolation
from arith.laurent import POLY_ONE, LaurentMatrix, LaurentPoly
from arith.linalg import mat_inverse
from arith.scalars import GaussianRational, ONE
from circle.winding import assert_constant_if_unimodular
from lattices.lattice import span_of
from loops.unitary import GroupTag, check_poly_loop

from .complement import complement_basis

logger = logging.getLogger(__name__)

_IV_LOCK = threading.Lock()


@dataclass(frozen=True)
class ScaledLoop:
    nb: LaurentMatrix
    norms_sq: tuple

    def __post_init__(self):
        norms = tuple(Fraction(q) for q in self.norms_sq)
        columns = self.nb.columns()
        if len(norms) != self.nb.n or any(q <= 0 for q in norms):
            raise DomainError("norms_sq must hold one positive rational per column")
        for j, column in enumerate(columns):
            if column.norm_sq() != norms[j]:
                raise InvariantViolation(f"column {j} does not have squared norm {norms[j]}")
            for other in columns[j + 1:]:
                if not column.inner(other).is_zero:
                    raise InvariantViolation("columns of Ñ are not orthogonal")
        object.__setattr__(self, 'norms_sq', norms)

    def at_one_inverse(self):
        try:
            return mat_inverse(self.nb.evaluate(ONE))
        except DomainError:
            raise InvariantViolation("Ñ(1) is singular") from None

    def represented_matrix(self):
        return self.nb @ LaurentMatrix.from_constant(self.at_one_inverse())


def beta(w):
    first, second = complement_basis(w)
    nb = LaurentMatrix.from_columns([first.vector, second.vector])
    scaled = ScaledLoop(nb, (first.norm_sq, second.norm_sq))
    logger.info(f"beta: lattice at r={w.r} -> Ñ with norms {[str(q) for q in scaled.norms_sq]}")
    return scaled


def represented_loop(s, r=None, tag=None):
    """The exact loop Ñ(z) Ñ(1)^-1, validated."""
    matrix = s.represented_matrix()
    if r is None:
        support = matrix.support()
        r = max(support[1], -support[0], 0)
    if tag is None:
        tag = GroupTag.SU2 if matrix.det() == POLY_ONE else GroupTag.U2
    return check_poly_loop(matrix, r, tag)


def scaled_loop_equals(s, f):
    return s.represented_matrix() == f.matrix


def generated_lattice(s, r):
    """The C[z]-span of the columns of Ñ together with z^r K_+."""
    return span_of(s.nb.columns(), r)


def special_linear_check(s):
    """det Ñ(z) / det Ñ(1), and whether it is identically 1.

    A determinant ratio that is a unimodular polynomial with nonzero constant
    term is confirmed to be constant along the way.
    """
    s.at_one_inverse()
    determinant = s.nb.det()
    ratio = determinant * determinant.evaluate(ONE).inverse()
    if ratio.is_polynomial and not ratio.coeff(0).is_zero:
        assert_constant_if_unimodular(ratio)
    return {'det_ratio': ratio, 'special': ratio == POLY_ONE}


def _interval(q):
    q = Fraction(q)
    return iv.mpf(q.numerator) / iv.mpf(q.denominator)


def _circle_point(point):
    """(re, im) intervals of an exact Gaussian rational or of exp(2 pi i turns)."""
    if isinstance(point, GaussianRational):
        if point.norm_sq() != 1:
            raise DomainError(f"{point} is not on the unit circle")
        return _interval(point.re), _interval(point.im)
    angle = 2 * iv.pi * _interval(point)
    return iv.cos(angle), iv.sin(angle)


def _evaluate_entry(poly, z):
    re, im = iv.mpf(0), iv.mpf(0)
    for k, c in LaurentPoly.coerce(poly).terms:
        zr, zi = iv.mpf(1), iv.mpf(0)
        base = z if k >= 0 else (z[0], -z[1])
        for _ in range(abs(k)):
            zr, zi = zr * base[0] - zi * base[1], zr * base[1] + zi * base[0]
        cr, ci = _interval(c.re), _interval(c.im)
        re += cr * zr - ci * zi
        im += cr * zi + ci * zr
    return re, im


def _contains(part, value):
    return mp.mpf(part.a) <= value <= mp.mpf(part.b)


def _check_unitary_enclosure(values):
    """M M^* - 1 must contain zero entrywise, or the enclosure is not of a unitary matrix."""
    n = len(values)
    for i in range(n):
        for j in range(n):
            re, im = iv.mpf(0), iv.mpf(0)
            for k in range(n):
                ar, ai = values[i][k]
                br, bi = values[j][k]
                # a * conj(b)
                re += ar * br + ai * bi
                im += ai * br - ar * bi
            if not (_contains(re, 1 if i == j else 0) and _contains(im, 0)):
                logger.warning(f"enclosure of entry ({i}, {j}) of M M^* misses the identity")
                raise InvariantViolation("the evaluated loop is not unitary at this point")


def _outward(part, digits, pad):
    return [nstr(mp.mpf(part.a) - pad, digits), nstr(mp.mpf(part.b) + pad, digits)]


def evaluate_scaled_loop(s, point, bits=64):
    """Interval enclosure of the represented loop at a point of the circle.

    ``point`` is an exact Gaussian rational of modulus 1, or a Fraction read
    as a number of turns. Entries come back as ``{"re": [lo, hi], "im": [lo, hi]}``
    strings, padded outward past the decimal rounding, with radii at most
    2^-bits. The enclosure is checked to contain a unitary matrix.
    """
    matrix = s.represented_matrix()
    digits = math.ceil(bits * math.log10(2)) + 2
    with _IV_LOCK, mp.workprec(bits + 32):
        saved = iv.prec
        iv.prec = bits + 32
        try:
            z = _circle_point(point)
            bound = mp.mpf(2) ** (-bits)
            pad = mp.mpf(10) ** (1 - digits)
            values = [[_evaluate_entry(entry, z) for entry in row] for row in matrix.entries]
            for row in values:
                for parts in row:
                    for part in parts:
                        if mp.mpf(part.b) - mp.mpf(part.a) > 2 * bound - 3 * pad:
                            raise DomainError(f"precision of {bits} bits is unattainable")
            _check_unitary_enclosure(values)
            rows = [
                [
                    {key: _outward(part, digits, pad) for key, part in zip(('re', 'im'), parts)}
                    for parts in row
                ]
                for row in values
            ]
        finally:
            iv.prec = saved
    return rows
