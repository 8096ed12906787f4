import pytest
from hypothesis import assume, given, strategies as st

from qverify.cyclofield import OMEGA, zeta_power
from qverify.errors import (
    CannotDetermineValuation, InvalidSubstitution, NonGenericPole, PrecisionTooLow,
)
from qverify.mock import MockKind, mock_series
from qverify.qseries import (
    Monomial, Q, Series, s_add, s_div, s_eq_to, s_geom_inv_one_minus, s_mul, s_subst,
)
from qverify.theta import J_ab

from conftest import units


def poly(coeffs, prec, val=0):
    return Series.from_dict({val + i: c for i, c in enumerate(coeffs)}, prec)


def same(a, b, order):
    ok, mm = a.eq_to(b, order)
    assert ok, mm


def test_add_examples():
    same(s_add(poly([1, 1], 10), poly([-1, 1], 10)), poly([0, 2], 10), 9)
    assert s_add(poly([1], 10), poly([1], 5)).prec == 5
    w = Series.monomial(Monomial(4, 1), 10)
    w2 = Series.monomial(Monomial(8, 1), 10)
    same(s_add(w, w2), poly([0, -1], 10), 9)


def test_mul_examples():
    same(s_mul(poly([1, -1], 20), poly([1, 1], 20)), poly([1, 0, -1], 20), 19)
    one = s_mul(Series.monomial(Monomial(0, -1), 10), Series.monomial(Q, 10))
    assert one.val == 0 and one[0] == 1
    p = s_mul(J_ab(1, 2, 10), mock_series(MockKind.phi, 10))
    assert p[0] == 1


def test_mul_precision_rule():
    a = poly([1, 1], 7, val=2)
    b = poly([3], 5, val=-1)
    c = a * b
    assert c.val == 1
    assert c.prec == min(7 - 1, 5 + 2)


def test_div_examples():
    g = s_div(poly([1], 12), poly([1, -1], 12))
    same(g, poly([1] * 12, 12), 11)
    same(s_div(Series.monomial(Q ** 2, 10), Series.monomial(Q, 10)), Series.monomial(Q, 10), 8)
    c = OMEGA - OMEGA ** 2
    assert s_div(poly([c], 5), poly([c], 5))[0] == 1
    with pytest.raises(CannotDetermineValuation):
        s_div(poly([1], 5), Series.zero(5))


def test_subst_examples():
    s = s_subst(poly([1, 1, 1], 3), 1, 9)
    assert s.prec == 9 * (3 - 1) + 1
    same(s, Series.from_dict({0: 1, 9: 1, 18: 1}, 19), 18)
    w = s_subst(Series.monomial(Q, 5), OMEGA, 1)
    assert w[1] == OMEGA
    with pytest.raises(InvalidSubstitution):
        s_subst(poly([1], 3), 1, 0)


def test_twisted_phi_combination_is_rational():
    phi = mock_series(MockKind.phi, 12)
    combo = (s_subst(phi, OMEGA, 1) - s_subst(phi, OMEGA ** 2, 1)) / (OMEGA - OMEGA ** 2)
    assert combo.is_rational()
    assert not s_subst(phi, OMEGA, 1).is_rational()


def test_eq_to_reports_mismatch_and_guards_precision():
    assert s_eq_to(poly([1, 1], 11), poly([1, 1], 11), 10) == (True, None)
    ok, (e, lhs, rhs) = s_eq_to(poly([1, 1], 2), poly([1, 2], 2), 1)
    assert not ok and e == 1 and lhs == 1 and rhs == 2
    with pytest.raises(PrecisionTooLow):
        s_eq_to(poly([1], 10), poly([1], 10), 10)


def test_geometric_branches():
    same(s_geom_inv_one_minus(Q, 10), poly([1] * 10, 10), 9)
    same(s_geom_inv_one_minus(Q.inverse(), 10), Series.from_dict({e: -1 for e in range(1, 10)}, 10), 9)
    c = s_geom_inv_one_minus(Monomial(4, 0), 10)
    assert c.val == 0 and c[0] == (1 - OMEGA ** 2) / 3
    with pytest.raises(NonGenericPole):
        s_geom_inv_one_minus(Monomial(0, 0), 10)


@pytest.mark.parametrize("k", range(12))
@pytest.mark.parametrize("e", [-3, -2, -1, 0, 1, 2, 3])
def test_geometric_matches_division(k, e):
    w = Monomial(k, e)
    if w.is_one():
        return
    two_term = Series.constant(1, 40) - Series.monomial(w, 40)
    same(s_geom_inv_one_minus(w, 30), 1 / two_term, 25)


coef = st.builds(lambda k, n: zeta_power(k) * n, units, st.integers(-3, 3))


@st.composite
def small_series(draw):
    val = draw(st.integers(-3, 3))
    cs = draw(st.lists(coef, min_size=1, max_size=8))
    return Series.from_dict({val + i: c for i, c in enumerate(cs)}, val + 12)


@given(small_series(), small_series(), small_series())
def test_ring_laws(a, b, c):
    lhs = (a * b) * c
    rhs = a * (b * c)
    order = min(lhs.prec, rhs.prec) - 1
    if order >= max(lhs.val, rhs.val):
        same(lhs, rhs, order)
    d1 = a * (b + c)
    d2 = a * b + a * c
    order = min(d1.prec, d2.prec) - 1
    if order >= min(d1.val, d2.val):
        same(d1, d2, order)


@given(small_series(), small_series())
def test_division_round_trip(a, b):
    assume(not b.is_zero())
    back = (a / b) * b
    order = min(back.prec, a.prec) - 1
    assume(order >= a.val)
    same(back, a, order)


@given(small_series(), st.integers(1, 4), st.integers(1, 4))
def test_subst_composes(a, k, m):
    lhs = a.subst(1, k).subst(1, m)
    rhs = a.subst(1, k * m)
    same(lhs, rhs, min(lhs.prec, rhs.prec) - 1)


def test_render_and_machine_form():
    s = poly([1, 0, -2], 4)
    assert str(s) == "1 - 2*q^2 + O(q^4)"
    m = s.to_machine()
    assert m[0][0] == 0 and len(m[0][1]) == 4
