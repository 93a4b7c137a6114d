"""
Exact Gaussian elimination over Q(i).

Rows are sequences of GaussianRational of equal length. Every routine is
deterministic: pivots are taken left to right, first nonzero row first.
"""

from .exceptions import DimensionError, DomainError
from .scalars import GaussianRational, ONE, ZERO


def _as_rows(rows, ncols=None):
    rows = [[GaussianRational.coerce(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != ncols:
            raise DimensionError(f"row of length {len(row)} in a {ncols}-column system")
    return rows, ncols


def rref(rows, ncols=None):
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` with zero rows removed, every pivot equal to 1
    and every pivot column otherwise zero.
    """
    work, ncols = _as_rows(rows, ncols)
    pivots = []
    top = 0
    for col in range(ncols):
        pivot = next((i for i in range(top, len(work)) if not work[i][col].is_zero), None)
        if pivot is None:
            continue
        work[top], work[pivot] = work[pivot], work[top]
        lead = work[top][col]
        if lead != ONE:
            inv = lead.inverse()
            work[top] = [x * inv for x in work[top]]
        for i in range(len(work)):
            if i != top and not work[i][col].is_zero:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[top])]
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return [tuple(row) for row in work[:top]], pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols=None):
    """Basis of {x : A x = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    reduced, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(rows, rhs, ncols=None):
    """One solution of A x = b plus a basis of the homogeneous solutions.

    Returns ``(None, [])`` when the system is inconsistent.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None, []
    x = [ZERO] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return tuple(x), nullspace(rows, ncols)


def span_contains(reduced, pivots, vector):
    """Membership test against a basis already in reduced echelon form."""
    residue = list(vector)
    for row, p in zip(reduced, pivots):
        if not residue[p].is_zero:
            factor = residue[p]
            residue = [a - factor * b for a, b in zip(residue, row)]
    return all(x.is_zero for x in residue)


def inner(u, v):
    """sum u_i * conj(v_i)."""
    return sum((a * b.conjugate() for a, b in zip(u, v)), ZERO)


def identity_matrix(n):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def mat_mul(a, b):
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(len(b))), ZERO) for j in range(len(b[0])))
        for i in range(len(a))
    )


def mat_vec(a, v):
    return tuple(sum((a[i][k] * v[k] for k in range(len(v))), ZERO) for i in range(len(a)))


def conj_transpose(a):
    return tuple(tuple(a[j][i].conjugate() for j in range(len(a))) for i in range(len(a[0])))


def mat_det(a):
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = ZERO
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * mat_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def mat_inverse(a):
    n = len(a)
    augmented = [list(a[i]) + list(identity_matrix(n)[i]) for i in range(n)]
    reduced, pivots = rref(augmented, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise DomainError("matrix is singular")
    return tuple(tuple(row[n:]) for row in reduced[:n])
