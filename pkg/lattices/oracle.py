"""
Finite compressions of the Toeplitz operator (M_f)_++.

The domain is span{z^k e_i : 0 <= k <= N}. Images have exponents up to N + r,
so the kernel is read from the full image. Cokernel directions are counted
only among exponents <= N - r, where every column that can reach them is
present; both numbers are stable once N >= max(r, 2r - 1).
"""

import logging
from dataclasses import dataclass

from arith.exceptions import DomainError
from arith.linalg import rank
from arith.scalars import ZERO

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncatedOperator:
    depth: int
    bound: int
    matrix: tuple

    @property
    def columns(self):
        return 2 * (self.depth + 1)

    @property
    def kernel_dimension(self):
        return self.columns - rank(self.matrix, self.columns)

    @property
    def cokernel_dimension(self):
        reliable = 2 * (self.depth - self.bound + 1)
        return reliable - rank(self.matrix[:reliable], self.columns)

    @property
    def index(self):
        return self.kernel_dimension - self.cokernel_dimension

    def to_dict(self):
        return {
            'depth': self.depth,
            'bound': self.bound,
            'kernel': self.kernel_dimension,
            'cokernel': self.cokernel_dimension,
            'index': self.index,
        }


def minimal_depth(r):
    return max(r, 2 * r - 1)


def truncated_operator(f, depth):
    r = f.degree_bound
    if depth < minimal_depth(r):
        raise DomainError(f"truncation depth {depth} is below {minimal_depth(r)} for degree bound {r}")
    n_rows = 2 * (depth + r + 1)
    columns = []
    for k in range(depth + 1):
        for i in range(2):
            image = f.matrix.column(i).shift(k)
            column = [ZERO] * n_rows
            for c, poly in enumerate(image.components):
                for e, coefficient in poly.terms:
                    if e >= 0:
                        column[2 * e + c] = coefficient
            columns.append(column)
    matrix = tuple(tuple(col[row] for col in columns) for row in range(n_rows))
    operator = TruncatedOperator(depth=depth, bound=r, matrix=matrix)
    logger.debug(f"truncated operator at depth {depth}: {n_rows}x{len(columns)}")
    return operator
