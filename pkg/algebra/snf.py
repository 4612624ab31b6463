"""
Smith normal form over the integers.

All matrices are lists of rows of Python ints, so arithmetic is exact at any
size. ``smith_normal_form`` also returns the unimodular transforms, which the
rest of the package uses to compute cokernels, kernels and integer solutions.
"""

import logging
from typing import List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

Matrix = List[List[int]]


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def copy_matrix(m: Sequence[Sequence[int]]) -> Matrix:
    return [list(row) for row in m]


def transpose(m: Sequence[Sequence[int]], cols: Optional[int] = None) -> Matrix:
    """
    Transpose a matrix.

    Args:
        m: Matrix given as rows
        cols: Column count, needed when ``m`` has no rows

    Returns:
        Matrix: The transpose
    """
    ncols = len(m[0]) if m else (cols or 0)
    return [[m[i][j] for i in range(len(m))] for j in range(ncols)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], inner: Optional[int] = None) -> Matrix:
    """
    Multiply two integer matrices.

    Args:
        a: Left factor (rows x inner)
        b: Right factor (inner x cols)
        inner: Shared dimension, needed when ``a`` has no rows and ``b`` is empty

    Returns:
        Matrix: The product
    """
    n = len(b) if inner is None else inner
    cols = len(b[0]) if b else 0
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(cols)]
        for i in range(len(a))
    ]


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def _swap_rows(a: Matrix, i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]


def _swap_cols(a: Matrix, i: int, j: int) -> None:
    for row in a:
        row[i], row[j] = row[j], row[i]


def _add_row(a: Matrix, target: int, source: int, factor: int) -> None:
    """row[target] += factor * row[source]"""
    src = a[source]
    dst = a[target]
    for k in range(len(dst)):
        dst[k] += factor * src[k]


def _add_col(a: Matrix, target: int, source: int, factor: int) -> None:
    """col[target] += factor * col[source]"""
    for row in a:
        row[target] += factor * row[source]


def _smallest_entry(a: Matrix, t: int) -> Optional[Tuple[int, int]]:
    best = None
    best_abs = 0
    for i in range(t, len(a)):
        row = a[i]
        for j in range(t, len(row)):
            v = row[j]
            if v and (best is None or abs(v) < best_abs):
                best, best_abs = (i, j), abs(v)
                if best_abs == 1:
                    return best
    return best


def _smallest_in_cross(a: Matrix, t: int) -> Optional[Tuple[int, int]]:
    """Smallest nonzero entry in column t (rows >= t) or row t (cols >= t)."""
    best = None
    best_abs = 0
    for i in range(t, len(a)):
        v = a[i][t]
        if v and (best is None or abs(v) < best_abs):
            best, best_abs = (i, t), abs(v)
    for j in range(t + 1, len(a[t])):
        v = a[t][j]
        if v and (best is None or abs(v) < best_abs):
            best, best_abs = (t, j), abs(v)
    return best


def smith_normal_form(m: Sequence[Sequence[int]], cols: Optional[int] = None) -> Tuple[Matrix, Matrix, Matrix]:
    """
    Compute the Smith normal form of an integer matrix.

    Pivots are chosen as the smallest nonzero absolute value; rows are cleared
    before columns, and diagonal entries are made non-negative.

    Args:
        m: Matrix given as rows
        cols: Column count, needed when ``m`` has no rows

    Returns:
        Tuple[Matrix, Matrix, Matrix]: (U, D, V) with U*M*V = D, U and V
        unimodular, D diagonal with d1 | d2 | ... (zeros last)
    """
    rows = len(m)
    ncols = len(m[0]) if rows else (cols or 0)
    a = copy_matrix(m)
    u = identity_matrix(rows)
    v = identity_matrix(ncols)

    t = 0
    while t < min(rows, ncols):
        pivot = _smallest_entry(a, t)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            _swap_rows(a, i, t)
            _swap_rows(u, i, t)
        if j != t:
            _swap_cols(a, j, t)
            _swap_cols(v, j, t)

        while True:
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    _add_row(a, i, t, -q)
                    _add_row(u, i, t, -q)
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    _add_col(a, j, t, -q)
                    _add_col(v, j, t, -q)

            leftover = any(a[i][t] for i in range(t + 1, rows)) or any(
                a[t][j] for j in range(t + 1, ncols)
            )
            if leftover:
                i, j = _smallest_in_cross(a, t)
                if i != t:
                    _swap_rows(a, i, t)
                    _swap_rows(u, i, t)
                if j != t:
                    _swap_cols(a, j, t)
                    _swap_cols(v, j, t)
                continue

            # the pivot must divide the whole remaining block
            bad_row = next(
                (i for i in range(t + 1, rows) if any(a[i][j] % p for j in range(t + 1, ncols))),
                None,
            )
            if bad_row is None:
                break
            _add_row(a, t, bad_row, 1)
            _add_row(u, t, bad_row, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    logger.debug(f"SNF of {rows}x{ncols} matrix: diagonal {[a[k][k] for k in range(min(rows, ncols))]}")
    return u, a, v


def diagonal(d: Sequence[Sequence[int]]) -> List[int]:
    """Diagonal entries of a (possibly rectangular) diagonal matrix."""
    return [d[k][k] for k in range(min(len(d), len(d[0]) if d else 0))]


def integer_kernel(m: Sequence[Sequence[int]], cols: int) -> Matrix:
    """
    Basis of the integer kernel {x : M x = 0}.

    Args:
        m: Matrix given as rows
        cols: Column count of ``m``

    Returns:
        Matrix: Kernel basis vectors, one per row
    """
    _, d, v = smith_normal_form(m, cols=cols)
    rank = sum(1 for x in diagonal(d) if x) if m else 0
    return [[v[i][k] for i in range(cols)] for k in range(rank, cols)]


def solve_integer_system(m: Sequence[Sequence[int]], b: Sequence[int], cols: int) -> Optional[List[int]]:
    """
    Find one integer solution of M x = b.

    Args:
        m: Matrix given as rows
        b: Right-hand side, one entry per row of ``m``
        cols: Column count of ``m``

    Returns:
        Optional[List[int]]: A solution, or None when the system has no
        integer solution
    """
    rows = len(m)
    if rows == 0:
        return [0] * cols
    u, d, v = smith_normal_form(m, cols=cols)
    ub = matvec(u, b)
    y = [0] * cols
    for k in range(rows):
        dk = d[k][k] if k < cols else 0
        if dk == 0:
            if ub[k] != 0:
                return None
            continue
        if ub[k] % dk:
            return None
        y[k] = ub[k] // dk
    return matvec(v, y)
