import logging
from dataclasses import dataclass

from arith.exceptions import DomainError, InvariantViolation
from arith.laurent import POLY_ONE

from .roots import count_roots_in_open_unit_disk

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WindingResult:
    winding: int
    roots_inside: int
    pole_order_at_zero: int

    def __post_init__(self):
        if self.winding != self.roots_inside - self.pole_order_at_zero:
            raise InvariantViolation("winding must equal roots inside minus pole order")

    def to_dict(self):
        return {
            'winding': self.winding,
            'roots_inside': self.roots_inside,
            'pole_order_at_zero': self.pole_order_at_zero,
        }


def split_pole(h):
    """h = z^(-m) p(z) with p a polynomial; returns (p, m)."""
    if h.is_zero:
        raise DomainError("the zero Laurent polynomial has no winding number")
    m = max(0, -h.lo)
    return h.shift(m), m


def winding_number(h):
    p, m = split_pole(h)
    inside = count_roots_in_open_unit_disk(p)
    logger.debug(f"winding of {h}: {inside} roots inside, pole order {m}")
    return WindingResult(winding=inside - m, roots_inside=inside, pole_order_at_zero=m)


def is_unimodular_on_circle(p):
    """|p| == 1 on S^1, decided as the identity p * star(p) == 1."""
    return p * p.star() == POLY_ONE


def assert_constant_if_unimodular(p):
    """A polynomial with p(0) != 0 and |p| == 1 on the circle is a constant.

    Returns whether p is unimodular; raises InvariantViolation if a
    unimodular p turns out not to be constant.
    """
    if not p.is_polynomial or p.coeff(0).is_zero:
        raise DomainError("expected a polynomial with nonzero constant term")
    unimodular = is_unimodular_on_circle(p)
    if unimodular and not p.is_constant:
        logger.warning(f"unimodular polynomial {p} is not constant")
        raise InvariantViolation(f"unimodular polynomial {p} is not constant")
    return unimodular
