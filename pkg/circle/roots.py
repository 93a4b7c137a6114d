"""
Exact root location relative to the unit circle.

Both decisions pull the circle back to the real line through the Cayley
substitution z = (1 + it) / (1 - it), which covers every point except z = -1,
and then run Sturm sequences over QQ with sympy.
"""

import logging

from sympy import QQ, Poly, Rational, Symbol, sturm

from arith.exceptions import DomainError, InvariantViolation, RootOnCircleError
from arith.laurent import LaurentPoly
from arith.scalars import I, ONE

logger = logging.getLogger(__name__)

T = Symbol('t', real=True)

_PLUS = LaurentPoly(((0, ONE), (1, I)))     # 1 + i t
_MINUS = LaurentPoly(((0, ONE), (1, -I)))   # 1 - i t


def _require_polynomial(p):
    if p.is_zero:
        raise DomainError("the zero polynomial has no well-defined root count")
    if not p.is_polynomial:
        raise DomainError(f"expected a polynomial, got negative exponents in {p}")


def _cayley_pullback(coefficients, m, n):
    """sum_k c_k (1 + it)^(m + k) (1 - it)^(n - k) as a polynomial in t."""
    total = LaurentPoly()
    for k, c in coefficients:
        total = total + (_PLUS ** (m + k)) * (_MINUS ** (n - k)) * c
    return total


def _to_sympy(poly, part):
    if poly.is_zero:
        return Poly(0, T, domain=QQ)
    values = [getattr(poly.coeff(k), part) for k in range(poly.hi, -1, -1)]
    return Poly([Rational(v.numerator, v.denominator) for v in values], T, domain=QQ)


def _sign_at_infinity(f, positive):
    if f.is_zero:
        return 0
    sign = 1 if f.LC() > 0 else -1
    if not positive and f.degree() % 2:
        sign = -sign
    return sign


def _variations(chain, positive):
    signs = [s for s in (_sign_at_infinity(f, positive) for f in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _circle_pullback(p):
    """(1 + t^2)^m |p(z(t))|^2 as a real sympy polynomial."""
    q = p * p.star()
    m = q.hi
    pulled = _cayley_pullback(q.terms, m, m)
    if any(not c.is_real for _, c in pulled.terms):
        raise InvariantViolation("pullback of |p|^2 has non-real coefficients")
    return _to_sympy(pulled, 're')


def circle_root_certificate(p):
    """Evidence for (or against) a root of p on |z| = 1."""
    _require_polynomial(p)
    at_minus_one = p.evaluate(-1).is_zero
    pullback = _circle_pullback(p)
    if pullback.degree() <= 0:
        real_roots = 0
    else:
        chain = sturm(pullback)
        real_roots = _variations(chain, False) - _variations(chain, True)
    return {
        'root_at_minus_one': at_minus_one,
        'pullback': str(pullback.as_expr()),
        'pullback_real_roots': real_roots,
    }


def has_root_on_unit_circle(p):
    certificate = circle_root_certificate(p)
    return certificate['root_at_minus_one'] or certificate['pullback_real_roots'] > 0


def count_roots_in_open_unit_disk(p):
    """Number of roots of p with |z| < 1, counted with multiplicity."""
    _require_polynomial(p)
    at_origin = p.lo
    q = p.shift(-at_origin)
    certificate = circle_root_certificate(q)
    if certificate['root_at_minus_one'] or certificate['pullback_real_roots']:
        raise RootOnCircleError(f"{p} vanishes on the unit circle", certificate)
    return at_origin + _schur_cohn(q)


def _schur_cohn(p):
    # p(0) != 0 and p has no roots on the circle.
    n = p.hi
    if n == 0:
        return 0
    a0 = p.coeff(0)
    an = p.coeff(n)
    delta = a0.norm_sq() - an.norm_sq()
    if delta == 0:
        logger.debug(f"singular Schur-Cohn step at degree {n}, using the argument count")
        return _argument_count(p)
    reciprocal = LaurentPoly(tuple((n - k, c.conjugate()) for k, c in p.terms))
    reduced = p * a0.conjugate() - reciprocal * an
    inner = _schur_cohn(reduced)
    return inner if delta > 0 else n - inner


def _argument_count(p):
    """Root count from the change of arg p around the circle.

    With P(t) = (1 - it)^n p(z(t)) = X + iY, the total change of arg P over the
    real line is pi * (E - Ind(Y/X)), and the roots inside number
    (change / pi + n) / 2.
    """
    n = p.hi
    pulled = _cayley_pullback(p.terms, 0, n)
    x = _to_sympy(pulled, 're')
    y = _to_sympy(pulled, 'im')
    if x.is_zero:
        turns = 0
    else:
        chain = [x, y]
        while not chain[-1].is_zero:
            chain.append(-chain[-2].rem(chain[-1]))
        chain = chain[:-1]
        cauchy_index = _variations(chain, False) - _variations(chain, True)
        ends = 0
        if not y.is_zero and y.degree() > x.degree():
            s_plus = 1 if y.LC() * x.LC() > 0 else -1
            s_minus = s_plus if (y.degree() - x.degree()) % 2 == 0 else -s_plus
            ends = (s_plus - s_minus) // 2
        turns = ends - cauchy_index
    doubled = turns + n
    if doubled % 2:
        raise InvariantViolation(f"argument count for {p} is not an integer")
    return doubled // 2
