from fractions import Fraction

from arith.exceptions import DomainError, InvariantViolation

from .bundle import stratum_lattice


def homotopy_H(s, t, w=None):
    """H_t(A)(z) = A(z / t) on the zero section of the chart.

    H_1 is the lattice of ``s`` and H_0 is the section s_r(pi(W)). ``w``, when
    given, must be the lattice ``s`` presents.
    """
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise DomainError(f"t = {t} lies outside [0, 1]")
    if w is not None and stratum_lattice(s) != w:
        raise InvariantViolation("the stratum data does not present the given lattice")
    return stratum_lattice(s.scaled(t))
