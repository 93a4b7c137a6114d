"""
Membership in U_lambda and Sigma_lambda, and the section s_r of pi.

W lies in U_lambda when the orthogonal projection W -> K_lambda is an
isomorphism. On a common window of bound R both spaces contain z^R K_+, where
the projection is the identity, so only the Gram matrix between the
complements W ⊖ z^R K_+ and K_lambda ⊖ z^R K_+ has to be inverted.
"""

import logging

from arith.exceptions import DomainError
from arith.linalg import inner, rank as matrix_rank
from lattices.invariants import k_lambda_window, rank
from lattices.projective import HomomorphismData

logger = logging.getLogger(__name__)


def lambda_from_line(r, x):
    return HomomorphismData.from_line(r, x)


def section_s_r(x, r):
    """s_r(x) = W_{z^r u, z^-r v} for the orthogonal pair (u, v) with v on x."""
    if r < 1:
        raise DomainError("the section s_r needs r > 0")
    return k_lambda_window(lambda_from_line(r, x))


def gram_matrix(w, lam, bound=None):
    """<w_i, k_j> over the window bases of W and K_lambda at a common bound."""
    bound = max(w.r, lam.r) if bound is None else bound
    held = w.rewindow(bound)
    target = k_lambda_window(lam, bound)
    return [[inner(row, k) for k in target.basis] for row in held.basis], held, target


def in_U_lambda(w, lam):
    gram, held, _ = gram_matrix(w, lam)
    size = 2 * held.r
    result = matrix_rank(gram, size) == size if size else True
    logger.debug(f"U_lambda test at bound {held.r}: {result}")
    return result


def in_Sigma_lambda(w, lam):
    return in_U_lambda(w, lam) and rank(w) == lam.r
