"""Dense linear algebra over F_q on integer numpy arrays."""
from __future__ import annotations

import numpy as np

from .fields import GF


def as_matrix(rows, width: int) -> np.ndarray:
    m = np.asarray(rows, dtype=np.int64)
    if m.size == 0:
        return np.zeros((0, width), dtype=np.int64)
    return m.reshape(-1, width)


def rref(F: GF, M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with zero rows trimmed, and the pivot columns."""
    M = np.array(M, dtype=np.int64, copy=True)
    nrows, ncols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        lead = M[r, c]
        if lead != 1:
            M[r] = F.mul[F.inv[lead], M[r]]
        col = M[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            M[hit] = F.sub[M[hit], F.mul[col[hit, None], M[r][None, :]]]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(F: GF, M: np.ndarray) -> int:
    if M.shape[0] == 0 or M.shape[1] == 0:
        return 0
    return len(rref(F, M)[1])


def nullspace(F: GF, M: np.ndarray) -> np.ndarray:
    """Rows spanning ``{x : M @ x = 0}``, returned in reduced echelon form."""
    ncols = M.shape[1]
    R, pivots = rref(F, M)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = F.neg[R[i, f]]
    return rref(F, basis)[0]


def left_nullspace(F: GF, M: np.ndarray) -> np.ndarray:
    """Rows spanning ``{c : c @ M = 0}``."""
    return nullspace(F, M.T)


def matmul(F: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        out = F.add[out, F.mul[A[:, k, None], B[None, k, :]]]
    return out


def kron(F: GF, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    prod = F.mul[A[:, None, :, None], B[None, :, None, :]]
    return prod.reshape(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1])


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)
