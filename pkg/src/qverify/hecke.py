"""Hecke-type double sums

    f_{a,b,c}(x, y, q) = (sum_{r,s>=0} - sum_{r,s<0}) (-1)^(r+s) x^r y^s q^(a C(r,2) + b r s + c C(s,2))

and the Appell-Lerch expansion of f_{2,3,2}.
"""
from __future__ import annotations

from .errors import UnsupportedForm
from .qseries import Monomial, Series, check_base
from .theta import at_precision, monomial_terms_to_series, theta_quotient
from .appell import m_series

__all__ = ["f_hecke", "f232_appell"]


def f_hecke(a: int, b: int, c: int, x: Monomial, y: Monomial, base: Monomial,
            prec: int, quiet_rings: int = 2):
    """The signed two-quadrant double sum, exact below q^prec.

    The box max(|r|, |s|) <= R grows until ``quiet_rings`` consecutive rings
    contribute nothing below q^prec.
    """
    check_base(base)
    if min(a, b, c) < 0:
        raise UnsupportedForm("a, b, c must be non-negative")
    if b * b <= a * c:
        raise UnsupportedForm(f"f_{{{a},{b},{c}}} is not indefinite (b^2 <= ac)")

    def expo(r, s):
        quad = a * (r * (r - 1) // 2) + b * r * s + c * (s * (s - 1) // 2)
        return base.exp * quad + x.exp * r + y.exp * s

    def unit(r, s):
        quad = a * (r * (r - 1) // 2) + b * r * s + c * (s * (s - 1) // 2)
        return 6 * (r + s) + x.k * r + y.k * s + base.k * quad

    pos, neg = [], []

    def visit(r, s):
        e = expo(r, s)
        if e < prec:
            (pos if r >= 0 else neg).append((unit(r, s), e))
            return True
        return False

    quiet = 0
    R = 0
    while quiet < quiet_rings:
        hit = False
        # ring max(r, s) == R in the quadrant r, s >= 0
        for t in range(R + 1):
            hit |= visit(R, t)
            if t != R:
                hit |= visit(t, R)
        # ring max(|r|, |s|) == R + 1 in the quadrant r, s < 0
        Rn = R + 1
        for t in range(1, Rn + 1):
            hit |= visit(-Rn, -t)
            if t != Rn:
                hit |= visit(-t, -Rn)
        quiet = 0 if hit else quiet + 1
        R += 1
    plus = monomial_terms_to_series(pos, prec)
    minus = monomial_terms_to_series(neg, prec)
    return plus - minus


def f232_appell(x: Monomial, y: Monomial, base: Monomial, prec: int) -> Series:
    """The five-term Appell-Lerch/theta expansion of f_{2,3,2}(x, y, base)."""
    check_base(base)
    b = base
    b2, b5, b10 = b ** 2, b ** 5, b ** 10
    minus_one = Monomial(6, 0)

    def theta_times_m(pre, tx, mx, p):
        theta = theta_quotient([(tx, b2)], [], p, pre=pre)
        return theta * m_series(mx, b10, minus_one, p - theta.val if not theta.is_zero() else p)

    def build(p):
        t1 = theta_times_m(Monomial(0, 0), x, b ** 6 * y ** 2 / x ** 3, p)
        t2 = theta_times_m(-y, b ** 3 * x, b * y ** 2 / x ** 3, p)
        t3 = theta_times_m(Monomial(0, 0), y, b ** 6 * x ** 2 / y ** 3, p)
        t4 = theta_times_m(-x, b ** 3 * y, b * x ** 2 / y ** 3, p)
        J5 = (b5, b ** 15)
        t5 = theta_quotient(
            num=[J5, J5, J5, (-(x ** 2 / y ** 2), b2), (b ** 3 * x * y, b5)],
            den=[(minus_one, b10), (-(b ** 4 * y ** 3 / x ** 2), b5),
                 (-(b ** 4 * x ** 3 / y ** 2), b5)],
            prec=p,
            pre=-(y / (b * x)),
        )
        return t1 + t2 + t3 + t4 + t5

    return at_precision(build, prec)
