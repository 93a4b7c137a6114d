import logging

from arith.exceptions import DomainError

from .lattice import lattice_from_generators

logger = logging.getLogger(__name__)


def alpha(f, r=None, raw=False):
    """W_f = f K_+, held on the window of bound r.

    ``raw`` returns a WindowSpan of any index, for U(2) loops whose
    determinant winds; otherwise the index-0 check applies.
    """
    if r is None:
        r = f.degree_bound
    if r < f.degree_bound:
        raise DomainError(f"window bound {r} is below the degree bound {f.degree_bound}")
    w = lattice_from_generators(f.matrix.columns(), r, raw=raw)
    logger.info(f"alpha: {f.describe()} -> dim {w.dim} in window r={r}")
    return w
