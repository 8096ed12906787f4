from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qverify.cyclofield import (
    CycNum, I, OMEGA, ONE, ZERO, ZETA, field_add, field_inv, field_mul,
    root_of_unity, unit_index, zeta_power,
)
from qverify.errors import DivisionByZero, UnsupportedRoot

rationals = st.builds(Fraction, st.integers(-60, 60), st.integers(1, 12))
nums = st.builds(CycNum, rationals, rationals, rationals, rationals)
nonzero = nums.filter(bool)


def test_small_sums_and_products():
    assert field_add(ONE, ZERO) == ONE
    assert field_add(OMEGA, OMEGA * OMEGA) == CycNum(-1)
    assert field_add(Fraction(1, 2), Fraction(1, 3)) == CycNum(Fraction(5, 6))
    assert field_mul(ZETA, ZETA ** 3) == CycNum(-1, 0, 1, 0)
    assert field_mul(I, I) == CycNum(-1)
    assert (OMEGA - OMEGA ** 2) ** 2 == CycNum(-3)


def test_inverses():
    assert field_inv(1 - OMEGA) == (1 - OMEGA ** 2) / 3
    assert field_inv(2) == CycNum(Fraction(1, 2))
    # zeta^-1 = zeta^11 = -zeta^5 = zeta - zeta^3
    assert field_inv(ZETA) == CycNum(0, 1, 0, -1)
    with pytest.raises(DivisionByZero):
        field_inv(ZERO)


def test_roots_of_unity():
    assert root_of_unity(3, 1) == OMEGA
    assert root_of_unity(4, 1) == I
    assert root_of_unity(1, 0) == ONE
    assert root_of_unity(12, 5) == zeta_power(5)
    with pytest.raises(UnsupportedRoot):
        root_of_unity(5, 1)
    with pytest.raises(UnsupportedRoot):
        root_of_unity(8, 1)


def test_orders():
    def order(u):
        return next(n for n in range(1, 25) if u ** n == ONE)
    assert order(ZETA) == 12
    assert order(OMEGA) == 3
    assert order(I) == 4
    assert OMEGA ** 2 + OMEGA + 1 == ZERO
    assert I * I == -1


def test_unit_index_round_trip():
    for k in range(12):
        assert unit_index(zeta_power(k)) == k
    with pytest.raises(UnsupportedRoot):
        unit_index(CycNum(2))


def test_text_round_trip():
    for v in [CycNum(Fraction(1, 2), 0, -1, 0), ZETA, CycNum(0, 0, 0, -3), ZERO, CycNum(-7, 2, 0, Fraction(5, 3))]:
        assert CycNum.parse(str(v)) == v
    assert CycNum.parse("w") == OMEGA
    assert CycNum.parse("I") == I
    assert CycNum.parse("1 - 2*w^2") == 1 - 2 * OMEGA ** 2


@given(nums, nums, nums)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(nonzero)
def test_inverse_property(a):
    assert a * a.inverse() == ONE


@given(nonzero)
def test_norm_is_nonzero_rational(a):
    n = a.norm()
    assert isinstance(n, Fraction) and n != 0


@given(nums, nums)
def test_norm_is_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()
