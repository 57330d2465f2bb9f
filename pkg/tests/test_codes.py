from fractions import Fraction

import pytest

from artinian_codes import (
    EnumerationBudgetExceeded,
    NotFrobenius,
    ZeroCode,
    classify_bounds,
    code_report,
    construct_ring,
    dual,
    free_rank,
    hull,
    is_free,
    is_lcd,
    is_mds,
    length,
    lift_to_idealization,
    min_distance,
    puncture,
    rho_kcode,
    shorten,
    socle_kcode,
    span_closure,
    support_restriction,
    type_of,
)
from artinian_codes.codes import coordinate_code, residue_field_ring
from artinian_codes.modules import codewords, contains, full_module, zero_module
from artinian_codes.oracles import brute_dual, brute_min_distance, same_words
from artinian_codes.suite import enumerate_all_submodules

from conftest import DUAL_DESC, NONFROB_DESC, Z4_DESC, el, ex57


def test_min_distance_examples(section4_code, dual_numbers):
    assert min_distance(ex57(2)) == 2
    assert min_distance(section4_code) == 2 == brute_min_distance(section4_code)
    xx = el(dual_numbers, x=1)
    assert min_distance(span_closure(dual_numbers, 2, [[xx, xx]])) == 2


def test_min_distance_errors(Z4):
    with pytest.raises(ZeroCode):
        min_distance(zero_module(Z4, 2))
    C = full_module(Z4, 3)  # socle has 2^3 words
    assert min_distance(C, guard=8) == 1
    with pytest.raises(EnumerationBudgetExceeded):
        min_distance(C, guard=7)
    with pytest.raises(EnumerationBudgetExceeded):
        min_distance(C, guard=63, full=True)


def test_dual_examples(Z4, nonfrob):
    C = span_closure(Z4, 2, [[2, 2]])
    D = dual(C)
    assert set(codewords(D)) == {(a, b) for a in range(4) for b in range(4) if (a - b) % 2 == 0}
    assert length(D) == 3 and length(C) + length(D) == 4
    m = span_closure(nonfrob, 1, [[el(nonfrob, x=1)], [el(nonfrob, y=1)]])
    assert dual(m) == m and length(m) + length(dual(m)) == 4 != 3
    assert dual(full_module(Z4, 3)).is_zero()


@pytest.mark.parametrize("desc, n", [(Z4_DESC, 2), (DUAL_DESC, 2), (NONFROB_DESC, 2)])
def test_dual_against_scan(desc, n):
    R = construct_ring(desc)
    for C in enumerate_all_submodules(R, n):
        D = dual(C)
        assert same_words(brute_dual(C), D)
        assert contains(dual(D), C)


def test_hull_and_lcd(Z4, nonfrob):
    C = span_closure(Z4, 2, [[1, 0]])
    assert hull(C).is_zero() and is_lcd(C) and is_free(C)
    K = construct_ring(NONFROB_DESC.__class__(NONFROB_DESC.field))
    C = span_closure(K, 2, [[(1,), (1,)]])
    assert hull(C) == C and not is_lcd(C)
    m = span_closure(nonfrob, 1, [[el(nonfrob, x=1)], [el(nonfrob, y=1)]])
    assert hull(m) == m


def test_support_restriction(Z4):
    C = span_closure(Z4, 2, [[2, 2]])
    assert support_restriction(C, [0]).is_zero()
    assert support_restriction(C, [0, 1]) == C
    assert support_restriction(C, []).is_zero()
    M = span_closure(Z4, 3, [[1, 1, 1]])
    assert is_mds(span_closure(Z4, 2, [[1, 1]]))
    for A in ([], [0], [0, 1], [0, 1, 2], [1, 2]):
        assert length(support_restriction(M, A)) == max(0, len(A) - 2) * 2


def test_coordinate_code(Z4):
    H = coordinate_code(Z4, 3, [0, 2])
    assert length(H) == 4 and set(v[1] for v in codewords(H)) == {0}


def test_puncture_shorten(Z4, section4_code, nonfrob):
    P = puncture(ex57(2), [2])
    assert length(P) == 2 and P == full_module(P.ring, 2)
    P = puncture(section4_code, [0])
    assert length(P) == 2 < 6
    assert shorten(span_closure(Z4, 2, [[1, 1]]), [0]).is_zero()
    with pytest.raises(ValueError):
        puncture(ex57(2), [0, 1, 2])
    C = ex57(3)
    for A in ([0], [1], [0, 2]):
        assert length(shorten(C, A)) <= length(puncture(C, A)) <= length(C)


def test_classify_bounds(dual_numbers, Z4):
    xx = el(dual_numbers, x=1)
    b = classify_bounds(span_closure(dual_numbers, 2, [[xx, xx]]))
    assert (b.distance, b.is_mdt, b.is_mds) == (2, True, False)
    assert b.mds_defect == Fraction(1, 2) and b.mdt_defect == 0
    b = classify_bounds(span_closure(Z4, 2, [[1, 1]]))
    assert b.is_mds and b.distance == 2 and b.length_ratio == 1
    assert classify_bounds(full_module(Z4, 3)).is_mds
    with pytest.raises(ZeroCode):
        classify_bounds(zero_module(Z4, 1))


def test_kcodes(Z4, nonfrob):
    C = span_closure(Z4, 2, [[2, 2]])
    K = residue_field_ring(Z4)
    one = span_closure(K, 2, [[(1,), (1,)]])
    assert socle_kcode(C) == one and rho_kcode(dual(C)) == one == dual(one)
    full = full_module(Z4, 3)
    assert socle_kcode(full) == full_module(K, 3) == rho_kcode(full)
    F = span_closure(Z4, 2, [[1, 1]])
    assert socle_kcode(F) == rho_kcode(F) == one
    assert socle_kcode(C, generator=2) == socle_kcode(C)
    with pytest.raises(NotFrobenius):
        socle_kcode(full_module(nonfrob, 1))


def test_lift_to_idealization(nonfrob):
    o = nonfrob.one
    C = span_closure(nonfrob, 2, [[o, o]])
    assert is_mds(C) and length(C) == 3
    CS = lift_to_idealization(C)
    assert is_free(CS) and free_rank(CS) == 1
    assert is_free(dual(CS)) and free_rank(dual(CS)) == 1
    full = lift_to_idealization(full_module(nonfrob, 2))
    assert full == full_module(full.ring, 2)
    assert lift_to_idealization(zero_module(nonfrob, 2)).is_zero()


def test_code_report(Z4):
    r = code_report(span_closure(Z4, 2, [[2, 2]]))
    assert r.__dict__ == {
        "lambda_R": 2,
        "type_R": 1,
        "frobenius": True,
        "lambda_C": 1,
        "type_C": 1,
        "mu_C": 1,
        "free_rank": 0,
        "min_distance": 2,
        "is_free": False,
        "is_lcd": False,
        "is_mds": False,
        "is_mdt": True,
        "lambda_dual": 3,
    }
    assert type_of(span_closure(Z4, 2, [[2, 2]])) == 1
