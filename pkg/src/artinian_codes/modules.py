"""Finitely generated submodules of R^n in canonical form, and their invariants.

Two presentations hide behind :class:`Submodule`:

* ``kshadow`` (algebra rings): the module viewed as a K-subspace of
  ``K^(n * lambda(R))``, coordinate-major then basis order, kept in reduced
  row echelon form.
* ``howell`` (Z/p^e): the Howell form of a generator matrix.

Both are canonical, so equal modules compare equal bit for bit.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import howell, linalg
from .errors import ChainBackendUnsupported
from .rings import AlgebraRing, ChainRing, Ring, is_frobenius


class Submodule:
    """An R-submodule of R^n held in canonical presentation."""

    def __init__(self, ring: Ring, n: int, matrix: np.ndarray):
        self.ring = ring
        self.n = n
        self.matrix = matrix
        self.matrix.setflags(write=False)

    @property
    def backend(self) -> str:
        return "kshadow" if isinstance(self.ring, AlgebraRing) else "howell"

    @property
    def width(self) -> int:
        return self.n * self.ring.length if self.backend == "kshadow" else self.n

    @cached_property
    def pivots(self) -> list:
        if self.backend == "kshadow":
            return [int(np.flatnonzero(r)[0]) for r in self.matrix]
        return howell.pivot_structure(self.matrix, self.ring.p, self.ring.e)

    @cached_property
    def _key(self):
        return (self.ring.descriptor, self.n, self.matrix.shape, self.matrix.tobytes())

    def __eq__(self, other):
        return isinstance(other, Submodule) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def is_zero(self) -> bool:
        return self.matrix.shape[0] == 0

    def generators(self) -> list[tuple]:
        """The presentation rows as vectors over R (they generate the module)."""
        return [row_to_vector(self.ring, self.n, r) for r in self.matrix]

    def __repr__(self):
        rows = ["(" + ", ".join(map(self.ring.format_element, v)) + ")" for v in self.generators()]
        return f"<{self.ring!r} submodule of R^{self.n}: {', '.join(rows) or '0'}>"


# ------------------------------------------------------------------ plumbing


def vector_to_row(R: Ring, n: int, v) -> np.ndarray:
    v = list(v)
    if len(v) != n:
        raise ValueError(f"vector has width {len(v)}, expected {n}")
    if isinstance(R, ChainRing):
        return np.array([R.coerce(a) for a in v], dtype=np.int64)
    return np.array([c for a in v for c in R.coerce(a)], dtype=np.int64)


def row_to_vector(R: Ring, n: int, row) -> tuple:
    if isinstance(R, ChainRing):
        return tuple(int(a) for a in row)
    N = R.length
    return tuple(tuple(int(c) for c in row[i * N:(i + 1) * N]) for i in range(n))


def times_basis(R: AlgebraRing, rows: np.ndarray, i: int) -> np.ndarray:
    """Multiply every coordinate of every flattened row by the basis element e_i."""
    N = R.length
    blocks = rows.reshape(rows.shape[0], -1, N)
    out = np.zeros_like(blocks)
    src, dst = R.basis_maps[i]
    out[:, :, dst] = blocks[:, :, src]
    return out.reshape(rows.shape)


def _canonical(R: Ring, n: int, rows, closed: bool = True) -> Submodule:
    width = n * R.length if isinstance(R, AlgebraRing) else n
    M = linalg.as_matrix(rows, width)
    if isinstance(R, ChainRing):
        H, _ = howell.howell_form(M, R.p, R.e, n)
        return Submodule(R, n, H)
    if not closed and M.shape[0]:
        M = np.vstack([times_basis(R, M, i) for i in range(R.length)])
    return Submodule(R, n, linalg.rref(R.field, M)[0])


def span_closure(R: Ring, n: int, generators) -> Submodule:
    """Canonical presentation of the R-span of ``generators`` inside R^n."""
    rows = [vector_to_row(R, n, g) for g in generators]
    return _canonical(R, n, rows, closed=False)


def zero_module(R: Ring, n: int) -> Submodule:
    return span_closure(R, n, [])


def full_module(R: Ring, n: int) -> Submodule:
    gens = []
    for i in range(n):
        v = [R.zero] * n
        v[i] = R.one
        gens.append(v)
    return span_closure(R, n, gens)


def _check_same(C: Submodule, D: Submodule):
    if C.ring is not D.ring or C.n != D.n:
        raise ValueError("modules live in different ambient spaces")


def _vanishing_part(R: Ring, width: int, rows: np.ndarray, lead: list[int]) -> np.ndarray:
    """Rows spanning the part of ``span(rows)`` that is zero on columns ``lead``."""
    if isinstance(R, ChainRing):
        return howell.kernel_part(rows, R.p, R.e, width, lead)
    rest = [c for c in range(width) if c not in set(lead)]
    order = lead + rest
    E, piv = linalg.rref(R.field, rows[:, order])
    keep = [i for i, c in enumerate(piv) if c >= len(lead)]
    out = np.zeros((len(keep), width), dtype=np.int64)
    out[:, order] = E[keep]
    return out


def coordinate_columns(C: Submodule, coords) -> list[int]:
    """Flattened columns belonging to the ambient coordinates ``coords``."""
    if C.backend == "howell":
        return sorted(coords)
    N = C.ring.length
    return [i * N + j for i in sorted(coords) for j in range(N)]


def vanishing_on(C: Submodule, coords) -> Submodule:
    """Submodule of codewords that are zero on the ambient coordinates ``coords``."""
    lead = coordinate_columns(C, coords)
    if not lead or C.is_zero():
        return C
    return _canonical(C.ring, C.n, _vanishing_part(C.ring, C.width, np.array(C.matrix), lead))


def project(C: Submodule, keep) -> Submodule:
    """Image of C under the projection onto the ambient coordinates ``keep``."""
    keep = sorted(keep)
    cols = coordinate_columns(C, keep)
    return _canonical(C.ring, len(keep), np.array(C.matrix)[:, cols])


def intersect(C: Submodule, D: Submodule) -> Submodule:
    _check_same(C, D)
    if C.is_zero() or D.is_zero():
        return zero_module(C.ring, C.n)
    w = C.width
    top = np.hstack([C.matrix, C.matrix])
    bottom = np.hstack([D.matrix, np.zeros_like(D.matrix)])
    part = _vanishing_part(C.ring, 2 * w, np.vstack([top, bottom]), list(range(w)))
    return _canonical(C.ring, C.n, part[:, w:])


def module_sum(C: Submodule, D: Submodule) -> Submodule:
    _check_same(C, D)
    return _canonical(C.ring, C.n, np.vstack([C.matrix, D.matrix]))


def contains(C: Submodule, D: Submodule) -> bool:
    """Whether D is a submodule of C."""
    return module_sum(C, D) == C


# ---------------------------------------------------------------- invariants


def length(M) -> int:
    if isinstance(M, AbstractModule):
        return M.dim
    if M.backend == "kshadow":
        return M.matrix.shape[0]
    return sum(M.ring.e - k for _, k in M.pivots)


def cardinality(C: Submodule) -> int:
    return C.ring.q ** length(C)


def socle(C: Submodule) -> Submodule:
    """soc(C) = {v in C : x v = 0 for every generator x of the maximal ideal}."""
    R = C.ring
    if C.is_zero():
        return C
    if isinstance(R, ChainRing):
        if R.e == 1:
            return C
        killed = [[0] * C.n for _ in range(C.n)]
        for i in range(C.n):
            killed[i][i] = R.p ** (R.e - 1)
        return intersect(C, span_closure(R, C.n, killed))
    if not R.maximal_ideal_gens:
        return C
    F = R.field
    B = np.array(C.matrix)
    images = np.hstack([times_basis(R, B, g) for g in R.maximal_ideal_gens])
    coeffs = linalg.left_nullspace(F, images)
    return _canonical(R, C.n, linalg.matmul(F, coeffs, B))


def type_of(M) -> int:
    """type(M) = dim_K soc(M)."""
    if isinstance(M, AbstractModule):
        return M.socle_basis().shape[0]
    return length(socle(M))


def maximal_ideal_times(C: Submodule) -> Submodule:
    """The submodule mC."""
    R = C.ring
    if C.is_zero():
        return C
    if isinstance(R, ChainRing):
        return _canonical(R, C.n, np.array(C.matrix) * R.p % R.modulus)
    if not R.maximal_ideal_gens:
        return zero_module(R, C.n)
    B = np.array(C.matrix)
    return _canonical(R, C.n, np.vstack([times_basis(R, B, g) for g in R.maximal_ideal_gens]))


def minimal_generators_count(M) -> int:
    """mu(M) = dim_K M/mM."""
    if isinstance(M, AbstractModule):
        return M.minimal_generators_count()
    return length(M) - length(maximal_ideal_times(M))


def coordinates(C: Submodule, rows: np.ndarray) -> np.ndarray:
    """Coordinates, in the echelon basis of C, of flattened rows lying in C."""
    piv = C.pivots
    return np.asarray(rows)[:, piv]


# ----------------------------------------------------------- abstract modules


@dataclass(frozen=True)
class AbstractModule:
    """A module over an algebra ring given as K^dim with one action matrix per
    maximal-ideal generator; a generator acts on row vectors by ``c -> c @ A``."""

    ring: AlgebraRing
    dim: int
    actions: tuple

    def socle_basis(self) -> np.ndarray:
        if not self.actions or self.dim == 0:
            return linalg.identity(self.dim)
        return linalg.left_nullspace(self.ring.field, np.hstack(self.actions))

    def minimal_generators_count(self) -> int:
        if self.dim == 0:
            return 0
        if not self.actions:
            return self.dim
        return self.dim - linalg.rank(self.ring.field, np.vstack(self.actions))


def _require_kshadow(C: Submodule, what: str):
    if C.backend != "kshadow":
        raise ChainBackendUnsupported(f"{what} is only implemented for residue-field algebras")


def action_matrices(C: Submodule) -> tuple:
    R = C.ring
    B = np.array(C.matrix)
    if B.shape[0] == 0:
        return tuple(np.zeros((0, 0), dtype=np.int64) for _ in R.maximal_ideal_gens)
    return tuple(coordinates(C, times_basis(R, B, g)) for g in R.maximal_ideal_gens)


def as_abstract(C: Submodule) -> AbstractModule:
    _require_kshadow(C, "abstract module view")
    return AbstractModule(C.ring, length(C), action_matrices(C))


def matlis_dual(M) -> AbstractModule:
    """Hom_K(M, K) with the transposed action ``(x f)(m) = f(x m)``."""
    if isinstance(M, Submodule):
        M = as_abstract(M)
    return AbstractModule(M.ring, M.dim, tuple(np.ascontiguousarray(A.T) for A in M.actions))


# ------------------------------------------------------------ Hom and splits


@dataclass(frozen=True)
class HomBasis:
    """K-basis of Hom_R(C, R); each map is a ``lambda(C) x lambda(R)`` matrix
    whose k-th row is the image of the k-th presentation basis vector."""

    module: Submodule
    maps: tuple

    @property
    def dim(self) -> int:
        return len(self.maps)

    def residual(self, phi: np.ndarray) -> int:
        """Number of nonzero entries in ``phi(x b) - x phi(b)`` over generators x."""
        C, R = self.module, self.module.ring
        F = R.field
        bad = 0
        for g, A in zip(R.maximal_ideal_gens, action_matrices(C)):
            lhs = linalg.matmul(F, A, phi)
            rhs = times_basis(R, phi, g)
            bad += int(np.count_nonzero(F.sub[lhs, rhs]))
        return bad


def hom_space(C: Submodule) -> HomBasis:
    _require_kshadow(C, "hom_space")
    R, F = C.ring, C.ring.field
    lam, N = length(C), R.length
    if lam == 0:
        return HomBasis(C, ())
    blocks = []
    for g, A in zip(R.maximal_ideal_gens, action_matrices(C)):
        M = R.mult_matrix(R.basis_element(g))
        blocks.append(
            F.sub[linalg.kron(F, A, linalg.identity(N)), linalg.kron(F, linalg.identity(lam), M)]
        )
    system = np.vstack(blocks) if blocks else np.zeros((0, lam * N), dtype=np.int64)
    sol = linalg.nullspace(F, system)
    return HomBasis(C, tuple(s.reshape(lam, N) for s in sol))


def split_free_summand(C: Submodule):
    """Find ``C = R c ⊕ ker(phi)``; return ``(c_row, kernel)`` or ``None``."""
    R, F = C.ring, C.ring.field
    for phi in hom_space(C).maps:
        hits = np.flatnonzero(phi[:, 0])
        if hits.size:
            k = int(hits[0])
            kern = linalg.left_nullspace(F, phi)
            K = _canonical(R, C.n, linalg.matmul(F, kern, np.array(C.matrix)))
            return np.array(C.matrix[k]), K
    return None


def _free_rank_residue(C: Submodule) -> int:
    R = C.ring
    if C.is_zero():
        return 0
    if isinstance(R, ChainRing):
        return linalg.rank(R.field, np.array(C.matrix) % R.p)
    return linalg.rank(R.field, np.array(C.matrix)[:, coordinate_columns(C, range(C.n))[:: R.length]])


def _free_rank_smith(C: Submodule) -> int:
    if not isinstance(C.ring, ChainRing):
        raise ChainBackendUnsupported("Smith path is for Z/p^e")
    R = C.ring
    return sum(1 for k in howell.smith_diagonal(C.matrix, R.p, R.e, C.n) if k == 0)


def _free_rank_split(C: Submodule) -> int:
    count = 0
    while not C.is_zero():
        found = split_free_summand(C)
        if found is None:
            break
        count += 1
        C = found[1]
    return count


def free_rank(C: Submodule, method: str | None = None) -> int:
    """Largest rank of a free direct summand of C.

    ``method`` is one of ``"residue"`` (dim_K of the residue image, valid on
    Frobenius rings), ``"smith"`` (unit invariant factors, Z/p^e only) or
    ``"split"`` (repeatedly split off R c via Hom_R(C, R), algebras only).
    """
    if method is None:
        if isinstance(C.ring, ChainRing):
            method = "smith"
        elif is_frobenius(C.ring):
            method = "residue"
        else:
            method = "split"
    if method == "residue":
        return _free_rank_residue(C)
    if method == "smith":
        return _free_rank_smith(C)
    if method == "split":
        _require_kshadow(C, "split free rank")
        return _free_rank_split(C)
    raise ValueError(f"unknown free-rank method {method!r}")


def is_free(C: Submodule) -> bool:
    return free_rank(C) * C.ring.length == length(C)


# ---------------------------------------------------------------- enumeration


def codeword_array(C: Submodule) -> np.ndarray:
    """Every element of C as a flattened row (``|C| x width`` array)."""
    R = C.ring
    W = np.zeros((1, C.width), dtype=np.int64)
    if isinstance(R, ChainRing):
        for row, (_, k) in zip(C.matrix, C.pivots):
            W = np.concatenate([(W + a * row) % R.modulus for a in range(R.p ** (R.e - k))])
        return W
    F = R.field
    for row in C.matrix:
        W = np.concatenate([F.add[W, F.mul[c, row][None, :]] for c in range(R.q)])
    return W


def row_weights(C: Submodule, rows: np.ndarray) -> np.ndarray:
    if C.backend == "howell":
        return np.count_nonzero(rows, axis=1)
    return np.count_nonzero(rows.reshape(rows.shape[0], C.n, -1).any(axis=2), axis=1)


def codewords(C: Submodule) -> list[tuple]:
    return [row_to_vector(C.ring, C.n, r) for r in codeword_array(C)]
