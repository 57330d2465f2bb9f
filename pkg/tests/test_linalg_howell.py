from itertools import product

import numpy as np
from hypothesis import given, settings, strategies as st

from artinian_codes import howell, linalg
from artinian_codes.fields import FieldDescriptor, get_field


def span_mod(rows, m, ncols):
    """All Z/m-combinations of rows, by brute force."""
    S = {(0,) * ncols}
    for r in rows:
        S = {tuple((a + c * b) % m for a, b in zip(s, r)) for s in S for c in range(m)}
    return S


matrices = st.integers(1, 3).flatmap(
    lambda k: st.integers(1, 3).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, 7), min_size=n, max_size=n), min_size=k, max_size=k)
    )
)


@settings(max_examples=80)
@given(matrices, st.sampled_from([(2, 2), (2, 3), (3, 2)]))
def test_howell_span_and_shape(rows, pe):
    p, e = pe
    m, n = p**e, len(rows[0])
    H, piv = howell.howell_form(np.array(rows) % m, p, e, n)
    assert span_mod(H.tolist(), m, n) == span_mod(rows, m, n)
    assert len(span_mod(rows, m, n)) == p ** sum(e - k for _, k in piv)
    cols = [c for c, _ in piv]
    assert cols == sorted(cols) and len(set(cols)) == len(cols)
    for (c, k), r in zip(piv, H):
        assert r[c] == p**k and not r[:c].any()


@settings(max_examples=60)
@given(matrices, st.randoms(use_true_random=False))
def test_howell_canonical_under_row_operations(rows, rnd):
    p, e = 2, 3
    m, n = 8, len(rows[0])
    A = np.array(rows) % m
    B = A.copy()
    for _ in range(4):
        i, j = rnd.randrange(len(B)), rnd.randrange(len(B))
        if i != j:
            B[i] = (B[i] + rnd.randrange(m) * B[j]) % m
        B[i] = (B[i] * rnd.choice([1, 3, 5, 7])) % m
    B = B[::-1]
    assert np.array_equal(howell.howell_form(A, p, e, n)[0], howell.howell_form(B, p, e, n)[0])


@settings(max_examples=60)
@given(matrices)
def test_kernel_part_is_the_vanishing_submodule(rows):
    p, e, m = 2, 2, 4
    n = len(rows[0])
    lead = [0]
    K = howell.kernel_part(np.array(rows) % m, p, e, n, lead)
    want = {v for v in span_mod(rows, m, n) if v[0] == 0}
    got = span_mod(K.tolist(), m, n) if len(K) else {(0,) * n}
    assert got == want


@settings(max_examples=60)
@given(matrices)
def test_smith_counts_match(rows):
    p, e = 3, 2
    n = len(rows[0])
    d = howell.smith_diagonal(np.array(rows) % 9, p, e, n)
    assert len(span_mod(rows, 9, n)) == p ** sum(e - k for k in d)


def test_smith_detects_free_cyclic_with_nonunit_pivot():
    H, piv = howell.howell_form(np.array([[2, 1]]), 2, 2, 2)
    assert H.tolist() == [[2, 1], [0, 2]] and [k for _, k in piv] == [1, 1]
    assert howell.smith_diagonal(np.array([[2, 1]]), 2, 2, 2) == [0]


@settings(max_examples=60)
@given(
    st.sampled_from([2, 3, 4]),
    st.integers(1, 4),
    st.integers(1, 4),
    st.data(),
)
def test_rref_and_nullspace(q, k, n, data):
    F = get_field(FieldDescriptor.of_order(q))
    M = np.array(data.draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=k, max_size=k)))
    E, piv = linalg.rref(F, M)
    r = linalg.rank(F, M)
    assert len(piv) == r == E.shape[0]
    N = linalg.nullspace(F, M)
    assert N.shape[0] == n - r
    if N.shape[0]:
        assert not linalg.matmul(F, M, N.T).any()
    # the row space is preserved: brute span sizes agree with q^rank
    span = set()
    for coeffs in product(range(q), repeat=k):
        v = np.zeros(n, dtype=np.int64)
        for c, row in zip(coeffs, M):
            v = F.add[v, F.mul[c, row]]
        span.add(tuple(v))
    assert len(span) == q**r
