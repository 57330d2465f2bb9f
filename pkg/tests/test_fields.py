import pytest
from hypothesis import given, strategies as st

from artinian_codes.errors import RingConstructionError
from artinian_codes.fields import DEFAULT_MODULI, FieldDescriptor, get_field, is_irreducible, prime_power

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27]


@pytest.mark.parametrize("q", sorted(DEFAULT_MODULI))
def test_default_moduli_irreducible(q):
    p, m = prime_power(q)
    mod = DEFAULT_MODULI[q]
    assert len(mod) == m + 1 and mod[-1] == 1
    assert is_irreducible(mod, p)


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(25) == (5, 2)
    with pytest.raises(RingConstructionError):
        prime_power(12)


def test_rejects_bad_descriptors():
    with pytest.raises(RingConstructionError):
        FieldDescriptor(4)
    with pytest.raises(RingConstructionError, match="reducible"):
        FieldDescriptor(2, 2, (1, 0, 1))  # u^2 + 1 = (u + 1)^2
    with pytest.raises(RingConstructionError, match="supply field_poly"):
        FieldDescriptor(2, 5)


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms_exhaustive(q):
    F = get_field(FieldDescriptor.of_order(q))
    for a in range(q):
        assert F.add[a, F.neg[a]] == 0
        if a:
            assert F.mul[a, F.inv[a]] == 1
        for b in range(q):
            assert F.add[a, b] == F.add[b, a]
            assert F.mul[a, b] == F.mul[b, a]
            assert F.sub[F.add[a, b], b] == a


@given(st.sampled_from(ORDERS), st.data())
def test_distributive_associative(q, data):
    F = get_field(FieldDescriptor.of_order(q))
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul[a, F.add[b, c]] == F.add[F.mul[a, b], F.mul[a, c]]
    assert F.mul[F.mul[a, b], c] == F.mul[a, F.mul[b, c]]


def test_multiplicative_group_cyclic_of_order_q_minus_1():
    F = get_field(FieldDescriptor.of_order(9))
    u = 3  # digits (0, 1): the class of u
    seen, x = set(), 1
    for _ in range(8):
        x = F.mul[x, u]
        seen.add(int(x))
    assert len(seen) == 8  # u generates, so the Conway modulus is primitive here


def test_format():
    F = get_field(FieldDescriptor.of_order(4))
    assert [F.format(a) for a in range(4)] == ["0", "1", "u", "u+1"]
    assert get_field(FieldDescriptor.of_order(5)).format(3) == "3"
