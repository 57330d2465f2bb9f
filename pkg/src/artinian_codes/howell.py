"""Canonical forms for row modules over the chain ring Z/p^e.

Echelon form alone is not canonical over Z/p^e, and rows with zero leading
block need not span the part of the row module vanishing on that block.
The Howell form repairs both: each pivot is a power of p, entries above a
pivot are reduced into ``range(pivot)`` and the row set is saturated so that
``p^(e-k) * row`` (which kills a pivot p^k) stays in the span of later rows.
"""
from __future__ import annotations

import numpy as np


def valuation(a: int, p: int, e: int) -> int:
    """p-adic valuation of a residue mod p^e; ``e`` for zero."""
    a %= p**e
    if a == 0:
        return e
    v = 0
    while a % p == 0:
        a //= p
        v += 1
    return v


def howell_form(rows, p: int, e: int, ncols: int) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Howell form of the row module spanned by ``rows``.

    Returns the matrix and a list of ``(pivot_column, pivot_valuation)``.
    """
    N = p**e
    work = [[int(x) % N for x in r] for r in rows]
    work = [r for r in work if any(r)]
    out: list[list[int]] = []
    pivots: list[tuple[int, int]] = []
    for col in range(ncols):
        cand = [(valuation(r[col], p, e), i) for i, r in enumerate(work) if r[col]]
        if not cand:
            continue
        k, i = min(cand)
        piv = work.pop(i)
        pk = p**k
        unit = piv[col] // pk
        if unit != 1:
            uinv = pow(unit, -1, N)
            piv = [x * uinv % N for x in piv]
        rest = []
        for r in work:
            if r[col]:
                f = r[col] // pk
                r = [(a - f * b) % N for a, b in zip(r, piv)]
            if any(r):
                rest.append(r)
        if k:
            s = [x * p ** (e - k) % N for x in piv]
            if any(s):
                rest.append(s)
        work = rest
        out.append(piv)
        pivots.append((col, k))
    for i, (col, k) in enumerate(pivots):
        pk = p**k
        for j in range(i):
            t = out[j][col] // pk
            if t:
                out[j] = [(a - t * b) % N for a, b in zip(out[j], out[i])]
    mat = np.array(out, dtype=np.int64).reshape(len(out), ncols)
    return mat, pivots


def pivot_structure(H: np.ndarray, p: int, e: int) -> list[tuple[int, int]]:
    """Recover ``(column, valuation)`` pairs from a Howell matrix."""
    out = []
    for row in H:
        nz = np.flatnonzero(row)
        c = int(nz[0])
        out.append((c, valuation(int(row[c]), p, e)))
    return out


def smith_diagonal(rows, p: int, e: int, ncols: int) -> list[int]:
    """Valuations of the nonzero invariant factors of a matrix over Z/p^e.

    The row module is isomorphic to the direct sum of ``p^k R`` over the
    returned valuations ``k``; ``k == 0`` entries are the free summands.
    """
    N = p**e
    A = [[int(x) % N for x in r] for r in rows]
    A = [r for r in A if any(r)]
    diag = []
    while A:
        best = None
        for i, r in enumerate(A):
            for j, x in enumerate(r):
                if x:
                    v = valuation(x, p, e)
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            break
        k, i, j = best
        piv_row = A.pop(i)
        pk = p**k
        uinv = pow(piv_row[j] // pk, -1, N)
        piv_row = [x * uinv % N for x in piv_row]
        # clear the pivot column from the other rows
        rest = []
        for r in A:
            if r[j]:
                f = r[j] // pk
                r = [(a - f * b) % N for a, b in zip(r, piv_row)]
            rest.append(r)
        # column operations clear the pivot row; they act on the remaining
        # rows only through column j, already zero there
        for r in rest:
            r.pop(j)
        A = [r for r in rest if any(r)]
        diag.append(k)
    return sorted(diag)


def kernel_part(rows, p: int, e: int, ncols: int, lead: list[int]) -> np.ndarray:
    """Rows of the row module vanishing on the columns ``lead``, in Howell form.

    The module is restricted to vectors that are zero on ``lead``; the result
    keeps all ``ncols`` columns.
    """
    rest = [c for c in range(ncols) if c not in set(lead)]
    order = list(lead) + rest
    M = np.asarray(rows, dtype=np.int64).reshape(-1, ncols)
    H, piv = howell_form(M[:, order], p, e, ncols)
    keep = [i for i, (c, _) in enumerate(piv) if c >= len(lead)]
    sub = np.zeros((len(keep), ncols), dtype=np.int64)
    for t, i in enumerate(keep):
        sub[t, order] = H[i]
    return howell_form(sub, p, e, ncols)[0]
