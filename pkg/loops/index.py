from circle.winding import winding_number


def index_of_loop(f):
    """Index of (M_f)_{++} in the documented convention: -n * winding(det f).

    The truncated-operator oracle counts one cokernel dimension per unit of
    winding, so oracle_index * n == index_of_loop(f).
    """
    return -f.n * winding_number(f.matrix.det()).winding
