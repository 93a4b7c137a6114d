"""
Rank bookkeeping for K_G(F_2r) and K_T(F_2r).

F_0 is a point. Each quotient F_2r / F_2r-2 is the Thom space of a complex
bundle over P^1, so it contributes a free module of rank 2 in even degree and
nothing in odd degree; the long exact sequences split into short exact ones,
so ranks add up.
"""

import logging
from dataclasses import dataclass
from enum import Enum

from arith.exceptions import DomainError

from .rings import RTElement, T, invariants_to_rg, is_weyl_invariant, restrict_rg_to_rt, weyl_act

logger = logging.getLogger(__name__)


class Ring(str, Enum):
    RG = 'RG'
    RT = 'RT'

    @property
    def display(self):
        return 'R(G)' if self is Ring.RG else 'R(T)'


@dataclass(frozen=True)
class FreeModule:
    ring: Ring
    even: tuple = ()
    odd: tuple = ()

    @property
    def even_rank(self):
        return len(self.even)

    @property
    def odd_rank(self):
        return len(self.odd)

    def to_dict(self):
        return {
            'ring': self.ring.value,
            'even_rank': self.even_rank,
            'odd_rank': self.odd_rank,
            'labels': list(self.even),
        }


def k_of_quotient(r, ring):
    ring = Ring(ring)
    if r < 1:
        raise DomainError(f"quotients start at r = 1, got {r}")
    return FreeModule(ring, (f"Thom r={r}, cell 0", f"Thom r={r}, cell 1"))


def k_of_filtration(r, ring):
    ring = Ring(ring)
    if r < 0:
        raise DomainError(f"filtration level {r} is negative")
    labels = ["F_0 = pt"]
    for k in range(1, r + 1):
        labels.extend(k_of_quotient(k, ring).even)
    module = FreeModule(ring, tuple(labels))
    logger.debug(f"K of F_{2 * r} over {ring.display}: even rank {module.even_rank}")
    return module


def k_limit_description(ring, levels=5):
    """The inverse limit as a product of copies of the ring, with its first truncations."""
    ring = Ring(ring)
    return {
        'ring': ring.value,
        'even': {
            'kind': 'product',
            'factor': ring.display,
            'truncation_ranks': [k_of_filtration(r, ring).even_rank for r in range(levels + 1)],
        },
        'odd': 0,
        'restrictions_surjective': True,
        'lim1_vanishes': True,
    }


def _divide_by_t_minus_t_inverse(y):
    """Exact quotient y / (t - t^-1)."""
    # y t / (t^2 - 1), by long division from the top degree
    remainder = dict((k + 1, c) for k, c in y.terms)
    quotient = {}
    while remainder:
        top = max(remainder)
        c = remainder.pop(top)
        if not c:
            continue
        quotient[top - 2] = c
        remainder[top - 2] = remainder.get(top - 2, 0) + c
        if not remainder[top - 2]:
            del remainder[top - 2]
        if top - 2 < min(k for k, _ in y.terms) - 2:
            raise DomainError(f"{y} is not divisible by t - t^-1")
    return RTElement.from_dict(quotient)


def decompose_over_rg(x):
    """(p, q) in R(G) with x = p + q t; {1, t} is a basis of R(T) over R(G)."""
    y = x - weyl_act(x)
    q = invariants_to_rg(_divide_by_t_minus_t_inverse(y))
    p = invariants_to_rg(x - restrict_rg_to_rt(q) * T)
    return p, q


RT_BASIS_OVER_RG = (RTElement.monomial(0), T)


def spans_rt_over_rg(degree):
    """Every t^k with |k| <= degree is p + q t with p, q in R(G), and W-invariants have q = 0.

    Independence is automatic: p + q t = 0 and p + q t^-1 = 0 give q (t - t^-1) = 0.
    """
    for k in range(-degree, degree + 1):
        x = RTElement.monomial(k)
        p, q = decompose_over_rg(x)
        if restrict_rg_to_rt(p) + restrict_rg_to_rt(q) * T != x:
            logger.warning(f"{x} is not recovered from its decomposition over R(G)")
            return False
        _, q_invariant = decompose_over_rg(x + weyl_act(x))
        if not q_invariant.is_zero:
            return False
    return True


def rank_over_rg(rt_mod):
    """R(G)-rank of a free R(T)-module: R(T) is free on {1, t}."""
    return rt_mod.even_rank * len(RT_BASIS_OVER_RG)


def invariant_rank(rt_mod):
    """R(G)-rank of the Weyl-invariant part: the basis elements of R(T) fixed by W."""
    fixed = sum(1 for b in RT_BASIS_OVER_RG if is_weyl_invariant(b))
    return rt_mod.even_rank * fixed


def weyl_invariance_check(rt_mod, rg_mod, degree=None):
    """K_G(F) = K_T(F)^W, checked on ranks through the basis {1, t} of R(T) over R(G).

    The generators of K_T(F) are Weyl-fixed Thom classes, so the invariant
    part of R(T) g is R(G) g, the 1-component of the decomposition.
    """
    if Ring(rt_mod.ring) is not Ring.RT or Ring(rg_mod.ring) is not Ring.RG:
        raise DomainError("expected an R(T)-module and an R(G)-module")
    if not spans_rt_over_rg(rt_mod.even_rank + 1 if degree is None else degree):
        return False
    return invariant_rank(rt_mod) == rg_mod.even_rank and rt_mod.odd_rank == rg_mod.odd_rank == 0


def closed_form_report(r):
    recursion = k_of_filtration(r, Ring.RG).even_rank
    displayed = r + 1
    return {
        'level': r,
        'recursion_rank': recursion,
        'displayed_closed_form_rank': displayed,
        'discrepant': recursion != displayed,
    }


def rank_table(max_r, ring):
    ring = Ring(ring)
    rows = []
    for r in range(max_r + 1):
        row = {
            'level': r,
            'filtration_even_rank': k_of_filtration(r, ring).even_rank,
            'filtration_odd_rank': 0,
        }
        if r >= 1:
            row['quotient_even_rank'] = k_of_quotient(r, ring).even_rank
        rows.append(row)
    return rows
