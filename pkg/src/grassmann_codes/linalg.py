"""Dense linear algebra over a prime field F_p on numpy int64 arrays."""
from __future__ import annotations

import numpy as np


def rref(A, p: int, columns=None):
    """Reduced row-echelon form of A over F_p.

    `columns` restricts (and orders) the pivot search; by default every column
    is scanned left to right.  Returns (R, pivots) with pivots the list of pivot
    column indices in the order they were found.
    """
    R = np.array(A, dtype=np.int64) % p
    if R.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = R.shape
    order = range(cols) if columns is None else columns
    pivots = []
    r = 0
    for c in order:
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        factors = R[:, c].copy()
        factors[r] = 0
        R = (R - np.outer(factors, R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(A, p: int) -> np.ndarray:
    """Basis (as rows) of {x : A x = 0} over F_p."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    R, pivots = rref(A, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = (-R[row, f]) % p
    return basis


def inverse(A, p: int) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    R, pivots = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), p, columns=range(n))
    if len(pivots) < n:
        raise np.linalg.LinAlgError("matrix is singular over F_p")
    return R[:, n:]


def in_row_space(G, v, p: int) -> bool:
    G = np.asarray(G, dtype=np.int64)
    return rank(np.vstack([G, np.asarray(v)[None, :]]), p) == rank(G, p)
