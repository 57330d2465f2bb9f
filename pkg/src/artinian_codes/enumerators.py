"""Length enumerators, weight polynomials and the MacWilliams transform.

For a code C ⊆ R^n and A ⊆ [n], C(A) is the subcode supported in A.  The
length enumerator records ``z^lambda(C(A)) x^(n-|A|) y^|A|`` over all 2^n
subsets; inclusion-exclusion regroups it by exact weight into the weight
polynomials g_i(z), which evaluate at z = |K| to the weight distribution.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from . import howell, linalg
from .codes import Code, dual
from .errors import (
    InternalConsistencyError,
    ResidualLaurentTerms,
    SubsetBudgetExceeded,
)
from .modules import length, span_closure
from .polynomials import (
    TrivariatePoly,
    UPoly,
    uadd,
    ueval,
    ujson,
    umonomial,
    usubs_power,
    utrim,
)
from .rings import (
    MonomialAlgebraDesc,
    construct_ring,
    extend_field_desc,
    lift_along_tensor,
    tensor_desc,
)

DEFAULT_MAX_N = 20


def _check_budget(n: int, max_n: int):
    if n > max_n:
        raise SubsetBudgetExceeded(f"block length {n} exceeds the subset budget {max_n}")


def subset_lengths(C: Code, max_n: int = DEFAULT_MAX_N) -> list[int]:
    """``lambda(C(A))`` for every subset A, indexed by bitmask (bit i <-> coordinate i).

    Uses ``lambda(C(A)) = lambda(C) - lambda(image of C on the complement of A)``,
    the kernel of the projection onto A^c being exactly C(A).
    """
    n = C.n
    _check_budget(n, max_n)
    R = C.ring
    lam = length(C)
    full = (1 << n) - 1
    out = [0] * (1 << n)
    if lam == 0:
        return out
    M = np.array(C.matrix)
    if C.backend == "kshadow":
        N = R.length
        F = R.field
        for mask in range(1 << n):
            comp = full & ~mask
            cols = [i * N + j for i in range(n) if comp >> i & 1 for j in range(N)]
            out[mask] = lam - (linalg.rank(F, M[:, cols]) if cols else 0)
    else:
        for mask in range(1 << n):
            comp = [i for i in range(n) if not mask >> i & 1]
            if not comp:
                out[mask] = lam
                continue
            _, piv = howell.howell_form(M[:, comp], R.p, R.e, len(comp))
            out[mask] = lam - sum(R.e - k for _, k in piv)
    return out


def length_enumerator(C: Code, max_n: int = DEFAULT_MAX_N) -> TrivariatePoly:
    n = C.n
    terms: dict = {}
    for mask, lam in enumerate(subset_lengths(C, max_n)):
        a = bin(mask).count("1")
        key = (n - a, a, lam)
        terms[key] = terms.get(key, 0) + 1
    return TrivariatePoly(terms)


@dataclass(frozen=True)
class WeightEnumerator:
    """W_C(x, y, z) = sum_i g_i(z) x^(n-i) y^i, with g_0 included."""

    n: int
    g: tuple
    lambda_C: int
    lambda_R: int

    def as_trivariate(self) -> TrivariatePoly:
        terms = {}
        for i, gi in enumerate(self.g):
            for e, c in enumerate(gi):
                if c:
                    terms[(self.n - i, i, e)] = c
        return TrivariatePoly(terms)

    def g_json(self) -> list[list[int]]:
        return [ujson(gi) for gi in self.g]


def _weight_polys_from_lengths(n: int, lengths) -> tuple:
    # counts[a][l] = number of |A| = a subsets with lambda(C(A)) = l
    counts: dict[tuple[int, int], int] = {}
    for mask, lam in enumerate(lengths):
        key = (bin(mask).count("1"), lam)
        counts[key] = counts.get(key, 0) + 1
    g = []
    for i in range(n + 1):
        acc: UPoly = ()
        for (a, lam), cnt in counts.items():
            if a <= i:
                acc = uadd(acc, umonomial(lam, (-1) ** (i - a) * comb(n - a, i - a) * cnt))
        g.append(acc)
    return tuple(g)


def weight_polynomials(C: Code, max_n: int = DEFAULT_MAX_N) -> WeightEnumerator:
    """g_i(z) = sum_{a<=i} sum_{|A|=a} (-1)^(i-a) binom(n-a, i-a) z^lambda(C(A))."""
    g = _weight_polys_from_lengths(C.n, subset_lengths(C, max_n))
    return WeightEnumerator(C.n, g, length(C), C.ring.length)


def evaluate_weight_distribution(W: WeightEnumerator, q: int) -> list[int]:
    """A_i = g_i(q), for q the residue field cardinality."""
    A = [ueval(gi, q) for gi in W.g]
    if any(a < 0 for a in A):
        raise InternalConsistencyError(f"negative codeword count in {A}")
    if sum(A) != q**W.lambda_C:
        raise InternalConsistencyError(f"counts {A} do not sum to q^{W.lambda_C}")
    return A


def length_from_weight(W: TrivariatePoly) -> TrivariatePoly:
    """L(x, y, z) = W(x + y, y, z)."""
    return W.substitute(TrivariatePoly.x() + TrivariatePoly.y(), TrivariatePoly.y())


def weight_from_length(L: TrivariatePoly) -> TrivariatePoly:
    """W(x, y, z) = L(x - y, y, z)."""
    return L.substitute(TrivariatePoly.x() - TrivariatePoly.y(), TrivariatePoly.y())


def dual_length_prediction(L: TrivariatePoly, lambda_C: int, lambda_R: int) -> TrivariatePoly:
    """z^(-lambda(C)) L_C(z^lambda(R) y, x, z), the length enumerator of C^⊥
    over a Frobenius ring."""
    x, y = TrivariatePoly.x(), TrivariatePoly.y()
    return L.substitute(TrivariatePoly.z(lambda_R) * y, x).shift_z(-lambda_C)


def transform_polynomial(W: WeightEnumerator) -> TrivariatePoly:
    """z^(-lambda(C)) W_C(x + z^lambda(R) y - y, x - y, z); may be Laurent in z."""
    x, y = TrivariatePoly.x(), TrivariatePoly.y()
    X = x + TrivariatePoly.z(W.lambda_R) * y - y
    Y = x - y
    return W.as_trivariate().substitute(X, Y).shift_z(-W.lambda_C)


def _collect(P: TrivariatePoly, n: int) -> tuple:
    g = []
    for i in range(n + 1):
        coeffs = P.xy_coefficient(n - i, i)
        deg = max(coeffs, default=-1)
        g.append(utrim(coeffs.get(e, 0) for e in range(deg + 1)))
    return tuple(g)


def macwilliams_transform(W: WeightEnumerator) -> WeightEnumerator:
    """Predicted weight enumerator of C^⊥ (exact over Frobenius rings)."""
    P = transform_polynomial(W)
    if P.min_z_exponent() < 0:
        raise ResidualLaurentTerms("negative z powers survive the transform")
    return WeightEnumerator(W.n, _collect(P, W.n), W.n * W.lambda_R - W.lambda_C, W.lambda_R)


@dataclass(frozen=True)
class MacWilliamsCheck:
    holds: bool
    predicted: TrivariatePoly
    actual: WeightEnumerator
    residual: TrivariatePoly

    @property
    def predicted_g(self):
        """Predicted g_i as integer lists, or None if negative z powers remain."""
        if self.predicted.min_z_exponent() < 0:
            return None
        return [ujson(gi) for gi in _collect(self.predicted, self.actual.n)]


def check_macwilliams(C: Code, max_n: int = DEFAULT_MAX_N) -> MacWilliamsCheck:
    """Compare the transform of W_C with the directly computed W_{C^⊥}."""
    predicted = transform_polynomial(weight_polynomials(C, max_n))
    actual = weight_polynomials(dual(C), max_n)
    residual = predicted - actual.as_trivariate()
    return MacWilliamsCheck(not residual, predicted, actual, residual)


def mds_weight_polynomials(n: int, d: int, lambda_R: int) -> WeightEnumerator:
    """Closed form of the weight polynomials of an MDS code."""
    if not (1 <= d <= n) or lambda_R < 1:
        raise ValueError("need 1 <= d <= n and lambda_R >= 1")
    g = []
    for i in range(n + 1):
        acc: UPoly = ()
        for a in range(i + 1):
            coeff = (-1) ** (i - a) * comb(n, i) * comb(i, a)
            acc = uadd(acc, umonomial(max(0, a - d + 1) * lambda_R, coeff))
        g.append(acc)
    return WeightEnumerator(n, tuple(g), (n - d + 1) * lambda_R, lambda_R)


# --------------------------------------------------------- base change checks


@dataclass(frozen=True)
class ExtensionCheck:
    theta: int
    holds: bool
    base: WeightEnumerator
    extended: WeightEnumerator
    extended_code: Code


def _base_change(C: Code, S, lift) -> Code:
    gens = [[lift(x) for x in v] for v in C.generators()]
    return span_closure(S, C.n, gens)


def flat_extension_check(C: Code, B: MonomialAlgebraDesc, max_n: int = DEFAULT_MAX_N) -> ExtensionCheck:
    """Tensor C with the K-algebra B (θ = lambda(B)) and compare g with g(z^θ)."""
    A = C.ring
    if not isinstance(A.descriptor, MonomialAlgebraDesc):
        raise ValueError("flat extension needs a code over a monomial algebra")
    S = construct_ring(tensor_desc(A.descriptor, B))
    theta = construct_ring(B).length
    CS = _base_change(C, S, lambda r: lift_along_tensor(A, S, r))
    base = weight_polynomials(C, max_n)
    ext = weight_polynomials(CS, max_n)
    holds = all(e == usubs_power(b, theta) for e, b in zip(ext.g, base.g))
    return ExtensionCheck(theta, holds, base, ext, CS)


def field_extension_check(C: Code, q: int, max_n: int = DEFAULT_MAX_N) -> ExtensionCheck:
    """Extend scalars from the prime field to F_q (θ = 1): g must not change."""
    A = C.ring
    if not isinstance(A.descriptor, MonomialAlgebraDesc):
        raise ValueError("field extension needs a code over a monomial algebra")
    S = construct_ring(extend_field_desc(A.descriptor, q))
    CS = _base_change(C, S, tuple)
    base = weight_polynomials(C, max_n)
    ext = weight_polynomials(CS, max_n)
    return ExtensionCheck(1, ext.g == base.g, base, ext, CS)
