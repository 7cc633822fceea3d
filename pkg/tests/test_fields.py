"""Finite-field arithmetic."""
import itertools

import pytest

from powertree import GF

SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2)]


def test_prime_field_is_plain_modular_arithmetic():
    field = GF(7)
    a, b = field.from_index(3), field.from_index(5)
    assert (a + b).index == 1
    assert (a * b).index == 15 % 7
    assert (a - b).index == (3 - 5) % 7
    assert (-a).index == 4
    assert a.inverse().index == 5  # 3 * 5 = 15 = 1 mod 7


def test_moduli_are_deterministic():
    assert GF(2, 2).modulus == (1, 1, 1)  # x^2 + x + 1
    assert GF(2, 3).modulus == (1, 1, 0, 1)  # x^3 + x + 1
    assert GF(3, 2).modulus == (1, 0, 1)  # x^2 + 1
    assert GF(5).modulus is None


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_field_axioms_exhaustive(p, k):
    field = GF(p, k)
    elements = list(field.elements())
    assert len(elements) == field.q
    for a, b in itertools.product(elements, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
    for a, b, c in itertools.product(elements, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a in elements:
        assert a + field.zero == a
        assert a * field.one == a
        assert a - a == field.zero
        if a != field.zero:
            assert a * a.inverse() == field.one


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_primitive_element_generates(p, k):
    field = GF(p, k)
    gen = field.primitive_element()
    assert gen.multiplicative_order() == field.q - 1
    powers = {(gen ** i).index for i in range(field.q - 1)}
    assert len(powers) == field.q - 1
    for x in field.elements():
        if x != field.zero:
            assert x.multiplicative_order() > 0
            assert (field.q - 1) % x.multiplicative_order() == 0


def test_index_round_trip():
    field = GF(3, 2)
    for i in range(field.q):
        assert field.from_index(i).index == i


def test_errors():
    with pytest.raises(ValueError):
        GF(4)  # characteristic must be prime
    with pytest.raises(ValueError):
        GF(2, 0)
    field = GF(5)
    with pytest.raises(ZeroDivisionError):
        field.zero.inverse()
    with pytest.raises(ValueError):
        field.zero.multiplicative_order()
    with pytest.raises(ValueError):
        field.from_index(5)
