"""
Coordinates on exponent windows.

A window covers exponents ``lo <= k < hi`` of C^2-valued Laurent polynomials;
the coordinate of z^k e_c sits at ``2 * (k - lo) + c`` (exponent-major,
component-minor). The lattice window of bound r is lo = -r, hi = r.
"""

from django.conf import settings

from arith.exceptions import DomainError, WindowTooLarge
from arith.laurent import LaurentPoly, VectorLaurent
from arith.scalars import ZERO


def max_window_slots():
    if settings.configured:
        return getattr(settings, 'LOOPGRASS_MAX_WINDOW', 64)
    return 64


def check_window(slots):
    limit = max_window_slots()
    if slots > limit:
        raise WindowTooLarge(f"a window of {slots} slots exceeds LOOPGRASS_MAX_WINDOW={limit}")


def slot(exponent, component, lo):
    return 2 * (exponent - lo) + component


def slot_key(index, lo):
    """(exponent, component) of a coordinate index, component 0-based."""
    return index // 2 + lo, index % 2


def to_coordinates(vector, lo, hi):
    """Coordinates of ``vector`` modulo z^hi K_+; it must lie in z^lo K_+."""
    if vector.valuation() < lo:
        raise DomainError(f"vector has exponents below {lo}")
    coords = [ZERO] * (2 * (hi - lo))
    for c, poly in enumerate(vector.components):
        for k, coefficient in poly.terms:
            if k < hi:
                coords[slot(k, c, lo)] = coefficient
    return tuple(coords)


def from_coordinates(coords, lo):
    return VectorLaurent(tuple(
        LaurentPoly(tuple(
            (index // 2 + lo, x) for index, x in enumerate(coords) if index % 2 == c
        ))
        for c in range(2)
    ))


def shift_coordinates(coords, steps=1):
    """Multiply by z^steps inside the same window, dropping what leaves the top."""
    width = 2 * steps
    if width >= len(coords):
        return tuple([ZERO] * len(coords))
    return tuple([ZERO] * width) + tuple(coords[:len(coords) - width])


def block(coords, exponent, lo):
    """The C^2 coefficient of z^exponent."""
    i = slot(exponent, 0, lo)
    return coords[i], coords[i + 1]
