"""Linear codes over finite local rings: distance, duality, hull, support
restriction, puncturing/shortening, Singleton-type classification, the
residue-field codes attached to a code, and lifting to the idealization."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import linalg
from .errors import ChainBackendUnsupported, EnumerationBudgetExceeded, NotFrobenius, ZeroCode
from .modules import (
    Submodule,
    _canonical,
    codeword_array,
    free_rank,
    full_module,
    intersect,
    is_free,
    length,
    minimal_generators_count,
    project,
    row_weights,
    socle,
    span_closure,
    type_of,
    vanishing_on,
    zero_module,
)
from .rings import (
    AlgebraRing,
    ChainRing,
    MonomialAlgebraDesc,
    construct_ring,
    embed_in_idealization,
    is_frobenius,
    monomial_algebra,
    nagata_idealization,
    ring_invariants,
    socle_generator,
)

Code = Submodule

DEFAULT_MAX_CODEWORDS = 2**20


def _support(A, n: int) -> tuple[int, ...]:
    A = tuple(sorted(set(int(i) for i in A)))
    if any(not 0 <= i < n for i in A):
        raise ValueError(f"support set {A} out of range for length {n}")
    return A


# ------------------------------------------------------------------ distance


def _min_weight(C: Code, M: Code, guard: int) -> int:
    count = C.ring.q ** length(M)
    if count > guard:
        raise EnumerationBudgetExceeded(f"{count} codewords exceed the budget {guard}")
    w = row_weights(C, codeword_array(M))
    return int(w[w > 0].min())


def min_distance(C: Code, guard: int = DEFAULT_MAX_CODEWORDS, full: bool = False) -> int:
    """Minimum Hamming weight of a nonzero codeword.

    Only soc(C) is enumerated (``q**type(C)`` words) unless ``full`` is set:
    every nonzero ``v`` has a nonzero multiple in the socle, of no larger weight.
    """
    if C.is_zero():
        raise ZeroCode("the zero code has no minimum distance")
    return _min_weight(C, C if full else socle(C), guard)


# ------------------------------------------------------------------- duality


def dual(C: Code) -> Code:
    """C^⊥ = {v in R^n : v . c = 0 for all c in C} under the standard product."""
    R, n = C.ring, C.n
    if C.is_zero():
        return full_module(R, n)
    if isinstance(R, ChainRing):
        from . import howell

        k = C.matrix.shape[0]
        aug = np.hstack([C.matrix.T, np.eye(n, dtype=np.int64)])
        part = howell.kernel_part(aug, R.p, R.e, k + n, list(range(k)))
        return _canonical(R, n, part[:, k:])
    F, N = R.field, R.length
    constraints = []
    for row in C.matrix:
        blocks = [R.mult_matrix(row[i * N:(i + 1) * N]) for i in range(n)]
        constraints.append(np.hstack(blocks))
    return _canonical(R, n, linalg.nullspace(F, np.vstack(constraints)))


def hull(C: Code) -> Code:
    return intersect(C, dual(C))


def is_lcd(C: Code) -> bool:
    return hull(C).is_zero()


# ------------------------------------------------------- supports and shapes


def support_restriction(C: Code, A) -> Code:
    """C(A): codewords whose support lies inside A (0-based coordinates)."""
    A = _support(A, C.n)
    return vanishing_on(C, [i for i in range(C.n) if i not in A])


def coordinate_code(R, n: int, A) -> Code:
    """H_A, the code generated by the unit vectors e_i for i in A."""
    gens = []
    for i in _support(A, n):
        v = [R.zero] * n
        v[i] = R.one
        gens.append(v)
    return span_closure(R, n, gens)


def puncture(C: Code, A) -> Code:
    """Delete the coordinates in A from every codeword."""
    A = _support(A, C.n)
    if len(A) == C.n:
        raise ValueError("cannot puncture every coordinate")
    return project(C, [i for i in range(C.n) if i not in A])


def shorten(C: Code, A) -> Code:
    """Keep the codewords vanishing on A, then delete A."""
    A = _support(A, C.n)
    if len(A) == C.n:
        raise ValueError("cannot shorten on every coordinate")
    return project(vanishing_on(C, A), [i for i in range(C.n) if i not in A])


# ------------------------------------------------------ Singleton-type bounds


@dataclass(frozen=True)
class BoundsReport:
    distance: int
    is_mds: bool
    is_mdt: bool
    mds_defect: Fraction
    mdt_defect: Fraction
    length_ratio: Fraction
    type_ratio: Fraction


def classify_bounds(C: Code, guard: int = DEFAULT_MAX_CODEWORDS) -> BoundsReport:
    """Compare d(C) with ``n - lambda(C)/lambda(R) + 1`` and ``n - type(C)/type(R) + 1``."""
    if C.is_zero():
        raise ZeroCode("bounds are stated for nonzero codes")
    inv = ring_invariants(C.ring)
    d = min_distance(C, guard)
    lr = Fraction(length(C), inv.lambda_R)
    tr = Fraction(type_of(C), inv.type_R)
    mds_defect = C.n - lr + 1 - d
    mdt_defect = C.n - tr + 1 - d
    return BoundsReport(
        d,
        lr.denominator == 1 and mds_defect == 0,
        tr.denominator == 1 and mdt_defect == 0,
        mds_defect,
        mdt_defect,
        lr,
        tr,
    )


def is_mds(C: Code, guard: int = DEFAULT_MAX_CODEWORDS) -> bool:
    return not C.is_zero() and classify_bounds(C, guard).is_mds


# ----------------------------------------------------- residue-field codes


@lru_cache(maxsize=None)
def residue_field_ring(R) -> AlgebraRing:
    """K = R/m as a ring handle (a monomial algebra with no variables)."""
    if isinstance(R, ChainRing):
        return construct_ring(monomial_algebra(R.p))
    return construct_ring(MonomialAlgebraDesc(R.field.desc))


def rho_kcode(C: Code) -> Code:
    """Image of C under coordinatewise reduction R^n -> K^n."""
    R = C.ring
    K = residue_field_ring(R)
    M = np.array(C.matrix)
    rows = M % R.p if isinstance(R, ChainRing) else M[:, :: R.length]
    return _canonical(K, C.n, rows)


def socle_kcode(C: Code, generator=None) -> Code:
    """α^{-1}(soc C) ⊆ K^n, identifying soc(R) = K z for a fixed generator z.

    ``generator`` defaults to the canonical socle generator; any K-unit
    multiple gives the same subspace.
    """
    R = C.ring
    if not is_frobenius(R):
        raise NotFrobenius("socle_kcode needs a Frobenius ring")
    z = socle_generator(R) if generator is None else generator
    K = residue_field_ring(R)
    soc = socle(C)
    if soc.is_zero():
        return zero_module(K, C.n)
    M = np.array(soc.matrix)
    if isinstance(R, ChainRing):
        z = int(z) % R.modulus
        if z == 0 or (z * R.p) % R.modulus:
            raise ValueError("generator does not span soc(R)")
        scale = R.p ** (R.e - 1)
        rows = (M // scale) * pow((z // scale) % R.p, -1, R.p) % R.p
        return _canonical(K, C.n, rows)
    F, N = R.field, R.length
    z = np.asarray(z, dtype=np.int64)
    k = int(np.flatnonzero(z)[0])
    rows = F.mul[M[:, k::N], F.inv[z[k]]]
    return _canonical(K, C.n, rows)


# --------------------------------------------------------------- idealization


def lift_to_idealization(C: Code) -> Code:
    """The S-code generated by C inside S^n, S = R ⋉ R^∨."""
    R = C.ring
    if not isinstance(R.descriptor, MonomialAlgebraDesc):
        raise ChainBackendUnsupported("lifting needs a monomial-algebra code")
    S = nagata_idealization(R)
    gens = [[embed_in_idealization(S, x) for x in v] for v in C.generators()]
    return span_closure(S, C.n, gens)


def free_code_rank(C: Code) -> int:
    """Rank of a free code (raises if C is not free)."""
    lam, lr = length(C), C.ring.length
    if not is_free(C):
        raise ValueError("code is not free")
    return lam // lr


# -------------------------------------------------------------------- report


@dataclass(frozen=True)
class CodeReport:
    lambda_R: int
    type_R: int
    frobenius: bool
    lambda_C: int
    type_C: int
    mu_C: int
    free_rank: int
    min_distance: int | None
    is_free: bool
    is_lcd: bool
    is_mds: bool
    is_mdt: bool
    lambda_dual: int


def code_report(C: Code, guard: int = DEFAULT_MAX_CODEWORDS) -> CodeReport:
    inv = ring_invariants(C.ring)
    if C.is_zero():
        d, mds, mdt = None, False, False
    else:
        b = classify_bounds(C, guard)
        d, mds, mdt = b.distance, b.is_mds, b.is_mdt
    return CodeReport(
        lambda_R=inv.lambda_R,
        type_R=inv.type_R,
        frobenius=inv.frobenius,
        lambda_C=length(C),
        type_C=type_of(C),
        mu_C=minimal_generators_count(C),
        free_rank=free_rank(C),
        min_distance=d,
        is_free=is_free(C),
        is_lcd=is_lcd(C),
        is_mds=mds,
        is_mdt=mdt,
        lambda_dual=length(dual(C)),
    )


__all__ = [
    "Code",
    "BoundsReport",
    "CodeReport",
    "classify_bounds",
    "code_report",
    "coordinate_code",
    "dual",
    "free_code_rank",
    "hull",
    "is_lcd",
    "is_mds",
    "lift_to_idealization",
    "min_distance",
    "puncture",
    "residue_field_ring",
    "rho_kcode",
    "shorten",
    "socle_kcode",
    "support_restriction",
]
