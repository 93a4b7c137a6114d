"""
Exactly representable test loops.

Conjugates of lambda_r by rational rotations, their products, and the
winding U(2) loops diag(z^k, 1).
"""

from itertools import combinations

from arith.scalars import GaussianRational

from .generators import lambda_matrix, power_loop
from .unitary import ConstantUnitary, GroupTag, check_poly_loop, conjugate_action, loop_product

PYTHAGOREAN_TRIPLES = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29))


def rotations():
    """Rational elements of SU(2) used to conjugate loops, identity first."""
    elements = [ConstantUnitary.identity()]
    elements += [ConstantUnitary.rotation(a, b, c) for a, b, c in PYTHAGOREAN_TRIPLES]
    elements.append(ConstantUnitary.su2(GaussianRational(0, '3/5'), GaussianRational('4/5')))
    elements.append(ConstantUnitary.su2(GaussianRational('1/2', '1/2'), GaussianRational('1/2', '-1/2')))
    return elements


def su2_loops(max_r=3):
    loops = []
    for r in range(1, max_r + 1):
        base = check_poly_loop(lambda_matrix(r), r, GroupTag.SU2)
        loops.extend(conjugate_action(g, base) for g in rotations())
    return loops


def product_loops():
    """Pairwise products of the r = 1 conjugates, degree bound 2."""
    degree_one = su2_loops(1)
    return [loop_product(f, g) for f, g in combinations(degree_one, 2)]


def u2_loops(max_k=3):
    loops = []
    for k in range(-max_k, max_k + 1):
        if k == 0:
            continue
        base = power_loop(k)
        loops.extend(conjugate_action(g, base) for g in rotations()[:3])
    loops.append(loop_product(power_loop(1), su2_loops(1)[1]))
    return loops


def corpus(max_r=3):
    """Every corpus loop, SU(2) first."""
    return su2_loops(max_r) + product_loops() + u2_loops(max_r)

