"""
Random chart coordinates with det A == 1, for round-trip tests and gen-corpus.
"""

import random

from arith.laurent import LaurentPoly
from arith.scalars import GaussianRational
from lattices.projective import HomomorphismData, ProjectivePoint
from loops.corpus import rotations

from .data import FiberVector, StratumData

FAMILIES = ('identity', 'upper', 'lower', 'balanced')


def lines():
    """Exact lines g e_2 for the corpus rotations."""
    seen = []
    for g in rotations():
        point = ProjectivePoint.from_vector(g.apply((GaussianRational(0), GaussianRational(1))))
        if point not in seen:
            seen.append(point)
    return seen


def _scalar(rng, nonzero=False):
    while True:
        value = GaussianRational(rng.randint(-2, 2), rng.randint(-1, 1)) / rng.choice((1, 2))
        if value or not nonzero:
            return value


def _poly(rng, degree):
    return LaurentPoly.from_coefficients([_scalar(rng) for _ in range(degree + 1)])


def stratum_data(lam, family, rng):
    """Polynomial a, b, c, d with det A identically 1."""
    r = lam.r
    if family == 'identity':
        return StratumData(lam)
    if family == 'upper':
        return StratumData(lam, b=_poly(rng, 1))
    if family == 'lower':
        return StratumData(lam, c=_poly(rng, 1))
    # (1 + w a)(1 - alpha w) = 1 - alpha^(2r+1) w^(2r+1), cancelled by w^(2r+1) b c
    alpha = _scalar(rng, nonzero=True)
    beta = _scalar(rng, nonzero=True)
    a = LaurentPoly.from_coefficients([alpha ** (k + 1) for k in range(2 * r)])
    return StratumData(
        lam,
        a=a,
        b=LaurentPoly.constant(beta),
        c=LaurentPoly.constant(-(alpha ** (2 * r + 1)) / beta),
        d=LaurentPoly.constant(-alpha),
    )


def fiber(r, rng, zero=False):
    if zero:
        return FiberVector.zero(r)
    return FiberVector(tuple(_scalar(rng) for _ in range(2 * r - 1)))


def chart_corpus(seed=0, count=30, max_r=2):
    """``count`` pairs (stratum data, fiber), reproducible from ``seed``."""
    rng = random.Random(seed)
    points = lines()
    pairs = []
    for i in range(count):
        r = 1 + i % max_r
        lam = HomomorphismData.from_line(r, points[i % len(points)])
        family = FAMILIES[(i // max_r) % len(FAMILIES)]
        pairs.append((stratum_data(lam, family, rng), fiber(r, rng, zero=i % 3 == 0)))
    return pairs
