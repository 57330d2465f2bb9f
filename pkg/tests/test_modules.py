import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from artinian_codes import (
    ChainBackendUnsupported,
    construct_ring,
    free_rank,
    hom_space,
    is_free,
    length,
    matlis_dual,
    minimal_generators_count,
    socle,
    span_closure,
    type_of,
)
from artinian_codes.codes import dual
from artinian_codes.modules import codewords, contains, full_module, intersect, module_sum, zero_module
from artinian_codes.oracles import as_brute, brute_free_rank, brute_hom_count, brute_length
from artinian_codes.suite import enumerate_all_submodules

from conftest import BOX_DESC, DUAL_DESC, NONFROB_DESC, Z4_DESC, el


def test_span_examples(Z4, section4_code, nonfrob):
    C = span_closure(Z4, 2, [[2, 2]])
    assert C.matrix.tolist() == [[2, 2]]
    assert set(codewords(C)) == {(0, 0), (2, 2)}
    x, z = el(nonfrob, x=1), nonfrob.zero
    assert set(codewords(section4_code)) == {(z, z, z), (x, x, z), (z, x, x), (x, z, x)}
    assert length(span_closure(Z4, 3, [])) == 0


def test_lengths(Z4, section4_code, box):
    assert length(span_closure(Z4, 2, [[2, 2]])) == 1
    assert length(section4_code) == 2 == brute_length(section4_code)
    assert length(full_module(box, 3)) == 3 * 4


def test_socle_examples(Z4, nonfrob, dual_numbers):
    S = socle(full_module(nonfrob, 1))
    assert S == span_closure(nonfrob, 1, [[el(nonfrob, x=1)], [el(nonfrob, y=1)]])
    assert type_of(full_module(nonfrob, 1)) == 2
    xx = el(dual_numbers, x=1)
    C = span_closure(dual_numbers, 2, [[xx, xx]])
    assert socle(C) == C and type_of(C) == 1
    C = span_closure(Z4, 2, [[1, 1]])
    assert set(codewords(socle(C))) == {(0, 0), (2, 2)}


def test_minimal_generators(Z4, nonfrob):
    for R in (Z4, nonfrob):
        assert minimal_generators_count(full_module(R, 1)) == 1
    m = span_closure(nonfrob, 1, [[el(nonfrob, x=1)], [el(nonfrob, y=1)]])
    assert minimal_generators_count(m) == 2
    assert minimal_generators_count(span_closure(Z4, 2, [[2, 2]])) == 1


def test_hom_space(dual_numbers, nonfrob, Z4):
    H = hom_space(full_module(dual_numbers, 1))
    assert H.dim == 2
    xmod = span_closure(dual_numbers, 1, [[el(dual_numbers, x=1)]])
    assert dual_numbers.q ** hom_space(xmod).dim == brute_hom_count(xmod) == 2
    assert hom_space(zero_module(dual_numbers, 2)).dim == 0
    m = span_closure(nonfrob, 1, [[el(nonfrob, x=1)], [el(nonfrob, y=1)]])
    Hm = hom_space(m)
    assert 2 ** Hm.dim == brute_hom_count(m) == 16
    assert all(Hm.residual(phi) == 0 for phi in Hm.maps)
    with pytest.raises(ChainBackendUnsupported):
        hom_space(full_module(Z4, 1))


def test_free_rank_examples(Z4):
    assert free_rank(span_closure(Z4, 2, [[1, 1]])) == 1
    C = span_closure(Z4, 2, [[2, 2]])
    assert free_rank(C) == 0
    D = dual(C)
    assert len(codewords(D)) == 8
    assert free_rank(D) == 1 and type_of(C) + free_rank(D) == 2
    # ⟨(2,1)⟩ is free although neither Howell pivot is a unit
    assert free_rank(span_closure(Z4, 2, [[2, 1]])) == 1


def test_matlis_dual(box, nonfrob):
    R = full_module(box, 1)
    D = matlis_dual(R)
    assert (length(D), type_of(D), minimal_generators_count(D)) == (4, 1, 1)
    m = span_closure(nonfrob, 1, [[el(nonfrob, x=1)], [el(nonfrob, y=1)]])
    D = matlis_dual(m)
    assert (length(D), minimal_generators_count(D), type_of(D)) == (2, 2, 2)
    assert length(matlis_dual(zero_module(nonfrob, 2))) == 0
    # double dual recovers the invariants
    DD = matlis_dual(D)
    assert (length(DD), type_of(DD), minimal_generators_count(DD)) == (2, 2, 2)


# --------------------------------------------------------------- properties

RINGS = [Z4_DESC, DUAL_DESC, BOX_DESC, NONFROB_DESC]


def vectors(R, n, k):
    elt = st.sampled_from(list(R.elements()))
    return st.lists(st.lists(elt, min_size=n, max_size=n), min_size=0, max_size=k)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(RINGS), st.integers(1, 3), st.data())
def test_canonicity(desc, n, data):
    R = construct_ring(desc)
    gens = data.draw(vectors(R, n, 3))
    C = span_closure(R, n, gens)
    units = [a for a in R.elements() if R.is_unit(a)]
    shuffled = data.draw(st.permutations(gens)) if gens else []
    scaled = []
    for v in shuffled:
        u = data.draw(st.sampled_from(units))
        scaled.append([R.mul(u, a) for a in v])
    if len(scaled) >= 2:
        r = data.draw(st.sampled_from(list(R.elements())))
        scaled[0] = [R.add(a, R.mul(r, b)) for a, b in zip(scaled[0], scaled[1])]
    D = span_closure(R, n, scaled)
    assert C == D
    assert np.array_equal(C.matrix, D.matrix)
    assert span_closure(R, n, C.generators()) == C  # idempotent
    assert set(codewords(C)) == as_brute(span_closure(R, n, gens)).vectors()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(RINGS), st.integers(1, 3), st.data())
def test_additivity_and_monotonicity(desc, n, data):
    R = construct_ring(desc)
    C = span_closure(R, n, data.draw(vectors(R, n, 3)))
    D = span_closure(R, n, data.draw(vectors(R, n, 2)))
    sub = intersect(C, D)
    assert contains(C, sub) and contains(D, sub)
    # lambda(C + D) = lambda(C) + lambda(D) - lambda(C ∩ D)
    assert length(module_sum(C, D)) == length(C) + length(D) - length(sub)
    assert type_of(sub) <= type_of(C)
    assert R.q ** length(C) == len(codewords(C))
    assert minimal_generators_count(C) <= length(C)


@pytest.mark.parametrize("desc, n", [(Z4_DESC, 2), (DUAL_DESC, 2), (NONFROB_DESC, 1), (NONFROB_DESC, 2)])
def test_free_rank_against_direct_summand_search(desc, n):
    R = construct_ring(desc)
    for C in enumerate_all_submodules(R, n):
        fr = free_rank(C)
        assert fr == brute_free_rank(C), C
        if R.kind == "algebra":
            assert free_rank(C, "split") == fr
        assert is_free(C) == (fr * R.length == length(C))


@pytest.mark.parametrize("desc", [Z4_DESC, DUAL_DESC])
def test_type_length_bound_exhaustive(desc):
    R = construct_ring(desc)
    for C in enumerate_all_submodules(R, 2):
        assert length(C) <= type_of(C) * R.length
        assert (length(C) == type_of(C) * R.length) == is_free(C)
