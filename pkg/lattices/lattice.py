"""
Bounded z-stable subspaces z^r K_+ <= W <= z^-r K_+ held as W / z^r K_+.

The basis is kept in reduced row echelon form over Q(i) with exponent-major
slot ordering, so two spans on the same window are equal exactly when their
bases are equal. Spans on different windows are compared after widening the
smaller window.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

from arith.exceptions import DomainError, InvariantViolation
from arith.linalg import mat_vec, rref, span_contains
from arith.scalars import ONE, ZERO

from .window import check_window, from_coordinates, shift_coordinates, to_coordinates

logger = logging.getLogger(__name__)


def _unit(index, size):
    row = [ZERO] * size
    row[index] = ONE
    return tuple(row)


@dataclass(frozen=True, eq=False)
class WindowSpan:
    """A z-stable span in the window of bound r; any dimension is accepted."""

    r: int
    basis: tuple = ()

    def __post_init__(self):
        if self.r < 0:
            raise DomainError(f"window bound {self.r} is negative")
        check_window(4 * self.r)
        reduced, pivots = rref(self.basis, 4 * self.r)
        object.__setattr__(self, 'basis', tuple(reduced))
        object.__setattr__(self, 'pivots', tuple(pivots))
        for row in reduced:
            if not span_contains(reduced, pivots, shift_coordinates(row)):
                raise DomainError("span is not stable under multiplication by z")

    @property
    def lo(self):
        return -self.r

    @property
    def ncols(self):
        return 4 * self.r

    @property
    def dim(self):
        return len(self.basis)

    def vectors(self):
        return [from_coordinates(row, self.lo) for row in self.basis]

    def contains(self, vector):
        if vector.valuation() < self.lo:
            return False
        return span_contains(self.basis, self.pivots, to_coordinates(vector, self.lo, self.r))

    def contains_coordinates(self, coords):
        return span_contains(self.basis, self.pivots, coords)

    def inside_lower(self, s):
        """W <= z^-s K_+."""
        cut = 2 * (self.r - s)
        return all(x.is_zero for row in self.basis for x in row[:cut])

    def contains_upper(self, s):
        """z^s K_+ <= W."""
        return all(
            self.contains_coordinates(_unit(i, self.ncols))
            for i in range(2 * (s + self.r), self.ncols)
        )

    def level(self):
        for s in range(self.r + 1):
            if self.inside_lower(s) and self.contains_upper(s):
                return s
        return self.r

    def rewindow(self, s):
        """The same subspace held on the window of bound s."""
        if s == self.r:
            return self
        if s > self.r:
            pad = tuple([ZERO] * (2 * (s - self.r)))
            rows = [pad + row + pad for row in self.basis]
            size = 4 * s
            rows += [_unit(i, size) for i in range(2 * (s + self.r), size)]
            return type(self)(s, tuple(rows))
        if s < 0 or not (self.inside_lower(s) and self.contains_upper(s)):
            raise DomainError(f"span does not fit in the window of bound {s}")
        start, end = 2 * (self.r - s), 2 * (self.r + s)
        return type(self)(s, tuple(row[start:end] for row in self.basis))

    @cached_property
    def tight(self):
        return self.rewindow(self.level())

    def act(self, g):
        """Apply a constant 2x2 matrix to every C^2 block of every basis vector."""
        matrix = getattr(g, 'matrix', g)
        rows = []
        for row in self.basis:
            moved = []
            for i in range(0, len(row), 2):
                moved.extend(mat_vec(matrix, (row[i], row[i + 1])))
            rows.append(tuple(moved))
        return type(self)(self.r, tuple(rows))

    def __eq__(self, other):
        if not isinstance(other, WindowSpan):
            return NotImplemented
        common = max(self.r, other.r)
        return self.rewindow(common).basis == other.rewindow(common).basis

    def __hash__(self):
        tight = self.tight
        return hash((tight.r, tight.basis))

    def __repr__(self):
        return f"{type(self).__name__}(r={self.r}, dim={self.dim})"


@dataclass(frozen=True, eq=False)
class Lattice(WindowSpan):
    """A span of index 0: dim W / z^r K_+ == 2r."""

    def __post_init__(self):
        super().__post_init__()
        if self.dim != 2 * self.r:
            logger.warning(f"rejecting span of dimension {self.dim} in window r={self.r}")
            raise InvariantViolation(
                f"index-0 dimension check failed: dim {self.dim} != {2 * self.r}"
            )

    __eq__ = WindowSpan.__eq__
    __hash__ = WindowSpan.__hash__


def span_of(generators, r, cls=Lattice):
    """C[z]-span of ``generators`` plus z^r K_+, held on the window of bound r."""
    check_window(4 * r)
    rows = []
    for vector in generators:
        coords = to_coordinates(vector, -r, r)
        for _ in range(2 * r):
            if all(x.is_zero for x in coords):
                break
            rows.append(coords)
            coords = shift_coordinates(coords)
    span = cls(r, tuple(rows))
    logger.debug(f"span of {len(generators)} generators in window r={r}: dim {span.dim}")
    return span


def lattice_from_generators(vectors, r, raw=False):
    """Lattice spanned by ``vectors``; ``raw`` allows any index."""
    return span_of(vectors, r, cls=WindowSpan if raw else Lattice)


def k_plus():
    return Lattice(0, ())
