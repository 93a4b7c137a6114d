"""
Sampling cross-check for winding numbers.

Samples are exact points of the unit circle, z(t) = ((1 - t^2) + 2it) / (1 + t^2)
for rational t, plus z = -1. Between neighbouring samples the arc is certified
free of zeros by a Lipschitz bound, so each principal argument increment is
the true increment along that arc. Uncertified arcs are split until every arc
passes.
"""

import math
from fractions import Fraction

from arith.exceptions import DomainError, InvariantViolation
from arith.scalars import GaussianRational

from .roots import has_root_on_unit_circle
from .winding import split_pole

# (pi / 2)^2 < 64 / 25; arc length <= (pi / 2) * chord for arcs below pi.
_ARC_FACTOR_SQ = Fraction(64, 25)


def _circle_point(t):
    if t is None:
        return GaussianRational(-1)
    d = 1 + t * t
    return GaussianRational((1 - t * t) / d, 2 * t / d)


def _lipschitz_bound(p):
    return sum((k * (abs(c.re) + abs(c.im)) for k, c in p.terms), Fraction(0))


def _initial_mesh(points):
    mesh = set()
    for j in range(points):
        theta = -math.pi + 2 * math.pi * (j + 0.5) / points
        mesh.add(Fraction(math.tan(theta / 2)).limit_denominator(10_000))
    return sorted(mesh)


def _refine(a, b):
    if a is None:
        return 2 * b - 1
    if b is None:
        return 2 * a + 1
    return (a + b) / 2


def sampled_winding(h, points=64, max_points=1 << 14):
    p, m = split_pole(h)
    if has_root_on_unit_circle(p):
        raise DomainError(f"{h} vanishes on the unit circle")
    lipschitz_sq = _lipschitz_bound(p) ** 2
    values = {}

    def value(t):
        if t not in values:
            values[t] = p.evaluate(_circle_point(t))
        return values[t]

    nodes = [None] + _initial_mesh(points) + [None]
    total = 0.0
    pending = list(zip(nodes, nodes[1:]))
    pending.reverse()
    visited = len(nodes)
    while pending:
        a, b = pending.pop()
        pa, pb = value(a), value(b)
        chord_sq = (_circle_point(a) - _circle_point(b)).norm_sq()
        if min(pa.norm_sq(), pb.norm_sq()) > _ARC_FACTOR_SQ * lipschitz_sq * chord_sq:
            ratio = pb * pa.conjugate()
            total += math.atan2(float(ratio.im), float(ratio.re))
            continue
        visited += 1
        if visited > max_points:
            raise InvariantViolation(f"sampling oracle did not certify {h} within {max_points} points")
        mid = _refine(a, b)
        pending.append((mid, b))
        pending.append((a, mid))
    return round(total / (2 * math.pi)) - m
