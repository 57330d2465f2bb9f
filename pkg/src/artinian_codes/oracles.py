"""Brute-force reference implementations.

Everything here works on explicit sets of codewords, using only the ring's
element arithmetic.  None of it touches echelon or Howell forms, so it serves
as ground truth for the structured algorithms.  Budgets are hard errors.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from .errors import BudgetExceeded
from .rings import ChainRing

ORACLE_MAX_WORDS = 2**20
FREE_RANK_MAX_WORDS = 2**12


class ElementTables:
    """Rings as index tables: element ``i`` is ``elements[i]``, index 0 is zero."""

    def __init__(self, R):
        if R.size > 4096:
            raise BudgetExceeded(f"ring of size {R.size} is too large for table oracles")
        self.ring = R
        self.elements = list(R.elements())
        self.index = {a: i for i, a in enumerate(self.elements)}
        s = len(self.elements)
        idx = self.index
        self.add = np.array([[idx[R.add(a, b)] for b in self.elements] for a in self.elements])
        self.mul = np.array([[idx[R.mul(a, b)] for b in self.elements] for a in self.elements])
        self.neg = np.array([idx[R.neg(a)] for a in self.elements])
        self.zero, self.one = idx[R.zero], idx[R.one]
        self.units = [i for i, a in enumerate(self.elements) if R.is_unit(a)]
        self.inverse = {u: int(np.flatnonzero(self.mul[u] == self.one)[0]) for u in self.units}
        self.size = s


@lru_cache(maxsize=None)
def tables(R) -> ElementTables:
    return ElementTables(R)


class BruteCode:
    """A code as the explicit set of its codewords.

    ``words`` is a sorted, duplicate-free ``(|C|, n)`` array of element indices.
    """

    def __init__(self, ring, n: int, words: np.ndarray):
        self.ring, self.n = ring, n
        self.words = np.asarray(words, dtype=np.int64).reshape(-1, n)

    def __len__(self):
        return len(self.words)

    def keys(self) -> np.ndarray:
        return encode(tables(self.ring), self.words)

    def vectors(self) -> set:
        els = tables(self.ring).elements
        return {tuple(els[i] for i in w) for w in self.words.tolist()}


def encode(T: ElementTables, words: np.ndarray) -> np.ndarray:
    """Injective integer key per row (base-|R| digits)."""
    n = words.shape[1]
    weights = np.array([T.size**i for i in range(n)], dtype=object if T.size**n > 2**62 else np.int64)
    return words @ weights


def rows_to_indices(R, n: int, rows: np.ndarray) -> np.ndarray:
    """Flattened presentation rows -> element-index vectors, matching ``R.elements()``."""
    rows = np.asarray(rows, dtype=np.int64)
    if isinstance(R, ChainRing):
        return rows
    N = R.length
    place = np.array([R.q ** (N - 1 - k) for k in range(N)], dtype=np.int64)
    return rows.reshape(len(rows), n, N) @ place


def _unique_rows(T: ElementTables, words: np.ndarray) -> np.ndarray:
    _, first = np.unique(encode(T, words), return_index=True)
    return words[np.sort(first)]


def _combine(T: ElementTables, words: np.ndarray, g: np.ndarray) -> np.ndarray:
    """All ``w + r g`` for w in ``words`` and r in R, deduplicated."""
    multiples = T.mul[:, g]  # (|R|, n)
    out = T.add[words[:, None, :], multiples[None, :, :]].reshape(-1, words.shape[1])
    return _unique_rows(T, out)


def _sorted(T, words):
    return words[np.argsort(encode(T, words), kind="stable")]


def same_words(B: BruteCode, C) -> bool:
    """Does the structured code C have exactly the codewords of B?"""
    from .modules import codeword_array

    T = tables(B.ring)
    main = np.sort(encode(T, rows_to_indices(C.ring, C.n, codeword_array(C))))
    return np.array_equal(main, np.sort(B.keys()))


def brute_span(R, n: int, generators, budget: int = ORACLE_MAX_WORDS) -> BruteCode:
    """The set of all R-combinations of ``generators``."""
    T = tables(R)
    words = np.zeros((1, n), dtype=np.int64)
    for v in generators:
        words = _combine(T, words, np.array(_index_vector(T, v), dtype=np.int64))
        if len(words) > budget:
            raise BudgetExceeded(f"span exceeds {budget} words")
    return BruteCode(R, n, _sorted(T, words))


def as_brute(C, budget: int = ORACLE_MAX_WORDS) -> BruteCode:
    if isinstance(C, BruteCode):
        return C
    return brute_span(C.ring, C.n, C.generators(), budget)


def _index_vector(T: ElementTables, v) -> tuple:
    return tuple(T.index[T.ring.coerce(a)] for a in v)


def _ambient(T: ElementTables, n: int, budget: int) -> np.ndarray:
    if T.size**n > budget:
        raise BudgetExceeded(f"|R^n| = {T.size ** n} exceeds {budget}")
    return np.indices((T.size,) * n).reshape(n, -1).T


def brute_weight_census(C) -> list[int]:
    B = as_brute(C)
    w = np.count_nonzero(B.words, axis=1)
    return np.bincount(w, minlength=B.n + 1).tolist()


def brute_min_distance(C) -> int:
    B = as_brute(C)
    w = np.count_nonzero(B.words, axis=1)
    if not w.any():
        raise ValueError("zero code")
    return int(w[w > 0].min())


def brute_length(C) -> int:
    """log_q |C|, insisting that it is an integer."""
    B = as_brute(C)
    q, size, lam = B.ring.q, len(B), 0
    while size > 1:
        if size % q:
            raise ArithmeticError(f"|C| = {len(B)} is not a power of {q}")
        size //= q
        lam += 1
    return lam


def brute_dual(C, budget: int = ORACLE_MAX_WORDS) -> BruteCode:
    """Scan all of R^n for vectors orthogonal to a generating set of C."""
    B = as_brute(C)
    T = tables(B.ring)
    V = _ambient(T, B.n, budget)
    ok = np.ones(len(V), dtype=bool)
    for g in _generating_words(B):
        acc = np.full(len(V), T.zero)
        for i in range(B.n):
            acc = T.add[acc, T.mul[V[:, i], g[i]]]
        ok &= acc == T.zero
    return BruteCode(B.ring, B.n, _sorted(T, V[ok]))


def _generating_words(B: BruteCode) -> list[np.ndarray]:
    """A greedy generating set: take words not yet in the running span."""
    T = tables(B.ring)
    span = np.zeros((1, B.n), dtype=np.int64)
    known = {0}
    gens = []
    for w, key in zip(B.words, B.keys().tolist()):
        if key in known:
            continue
        gens.append(w)
        span = _combine(T, span, w)
        known = set(encode(T, span).tolist())
        if len(span) == len(B):
            break
    return gens


def _linear_maps(B: BruteCode, want_unit: bool = False):
    """Yield every R-linear map B -> R as ``(words, values)`` arrays.

    Backtracking over values on a greedy generating set: extending by a new
    generator g with value t is consistent iff every word reached twice as
    ``s + r g`` gets the same value.
    """
    T = tables(B.ring)
    gens = _generating_words(B)
    mul_by = T.mul  # mul_by[:, t] = r * t for all r

    def extend(W, vals, j, has_unit):
        if j == len(gens):
            if has_unit or not want_unit:
                yield W, vals
            return
        G = T.mul[:, gens[j]]
        newW = T.add[W[:, None, :], G[None, :, :]].reshape(-1, B.n)
        keys = encode(T, newW)
        _, first, inv = np.unique(keys, return_index=True, return_inverse=True)
        nW = newW[first]
        for t in range(T.size):
            newV = T.add[vals[:, None], mul_by[:, t][None, :]].reshape(-1)
            rep = newV[first]
            if np.array_equal(rep[inv], newV):
                yield from extend(nW, rep, j + 1, has_unit or t in T.inverse)

    yield from extend(np.zeros((1, B.n), dtype=np.int64), np.array([T.zero]), 0, False)


def brute_hom_count(C) -> int:
    """|Hom_R(C, R)| by exhaustive search."""
    B = as_brute(C)
    if len(B) > FREE_RANK_MAX_WORDS:
        raise BudgetExceeded(f"{len(B)} words exceed the Hom-search budget")
    return sum(1 for _ in _linear_maps(B))


def brute_free_rank(C) -> int:
    """Split off R c with phi(c) = 1 for a surjection phi: C -> R, recursively."""
    B = as_brute(C)
    if len(B) > FREE_RANK_MAX_WORDS:
        raise BudgetExceeded(f"{len(B)} words exceed the free-rank budget")
    T = tables(B.ring)
    rank = 0
    while len(B) > 1:
        found = next(_linear_maps(B, want_unit=True), None)
        if found is None:
            break
        rank += 1
        W, vals = found
        B = BruteCode(B.ring, B.n, _sorted(T, W[vals == T.zero]))
    return rank


def brute_submodule_count(R, n: int) -> int:
    """Count subsets of R^n that contain 0 and are closed under + and R-scaling.

    Direct subset enumeration; only for ``|R^n| <= 16``.
    """
    T = tables(R)
    V = [tuple(v) for v in _ambient(T, n, 16).tolist()]
    zero = (T.zero,) * n
    others = [v for v in V if v != zero]

    def scale(r, u):
        return tuple(int(T.mul[r, a]) for a in u)

    count = 0
    for bits in product((0, 1), repeat=len(others)):
        S = {zero} | {v for v, b in zip(others, bits) if b}
        closed = all(
            tuple(int(T.add[a, b]) for a, b in zip(u, w)) in S for u in S for w in S
        ) and all(scale(r, u) in S for r in range(T.size) for u in S)
        count += closed
    return count


def brute_submodules(R, n: int, budget: int = 2**12) -> set:
    """All submodules of R^n as frozensets of keys, by closing under M + Rv."""
    T = tables(R)
    V = _ambient(T, n, budget)
    zero = np.zeros((1, n), dtype=np.int64)
    seen = {frozenset([0])}
    frontier = [zero]
    while frontier:
        nxt = []
        for M in frontier:
            mk = set(encode(T, M).tolist())
            for v, key in zip(V, encode(T, V).tolist()):
                if key in mk:
                    continue
                S = _combine(T, M, v)
                fs = frozenset(encode(T, S).tolist())
                if fs not in seen:
                    seen.add(fs)
                    nxt.append(S)
        frontier = nxt
    return seen
