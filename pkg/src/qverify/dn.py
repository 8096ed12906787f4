"""The splitting functions D_n(x, q, z, z').

``dn_def`` evaluates the defining combination of n + 1 Appell-Lerch sums;
``dn_closed`` evaluates the n-term theta-quotient sum that equals it for
generic parameters.  ``d2_closed`` and ``d3_closed`` are the hand-expanded
n = 2 and n = 3 forms.
"""
from __future__ import annotations

from .errors import UnsupportedArgument
from .qseries import Monomial, Series, check_base
from .appell import m_series
from .theta import theta_quotient

__all__ = ["dn_def", "dn_closed", "d2_closed", "d3_closed"]

ONE_MONO = Monomial(0, 0)


def _c2(n):
    return n * (n - 1) // 2


def dn_def(n: int, x: Monomial, base: Monomial, z: Monomial, zp: Monomial, prec: int) -> Series:
    """m(x,q,z) - sum_r q^-C(r+1,2) (-x)^r m(-q^(C(n,2)-nr) (-x)^n, q^(n^2), z')."""
    check_base(base)
    if n < 1:
        raise UnsupportedArgument("n must be >= 1")
    q = base
    out = m_series(x, q, z, prec)
    inner_base = q ** (n * n)
    for r in range(n):
        pre = q ** (-((r + 1) * r // 2)) * (-x) ** r
        arg = -(q ** (_c2(n) - n * r)) * (-x) ** n
        term = m_series(arg, inner_base, zp, prec - pre.exp).mul_monomial(pre)
        out = out - term
    return out


def dn_closed(n: int, x: Monomial, base: Monomial, z: Monomial, zp: Monomial, prec: int) -> Series:
    """The n-term theta-quotient evaluation of D_n(x, q, z, z')."""
    check_base(base)
    if n < 1:
        raise UnsupportedArgument("n must be >= 1")
    q = base
    qn, qnn = q ** n, q ** (n * n)
    Jn = (qn, q ** (3 * n))
    mx_n = (-x) ** n
    common_den = [(x * z, q), (zp, qnn), (-(q ** _c2(n)) * mx_n * zp, qn)]
    out = Series.zero(prec)
    for r in range(n):
        pre = zp * q ** _c2(r) * (-(x * z)) ** r
        num = [Jn, Jn, Jn,
               (-(q ** (_c2(n) + r)) * mx_n * z * zp, qn),
               (q ** (n * r) * z ** n / zp, qnn)]
        den = common_den + [(q ** r * z, qn)]
        out = out + theta_quotient(num, den, prec, pre=pre)
    return out


def d2_closed(x: Monomial, base: Monomial, z: Monomial, zp: Monomial, prec: int) -> Series:
    check_base(base)
    q = base
    q2, q4 = q ** 2, q ** 4
    J2 = (q2, q ** 6)
    den = [(x * z, q), (zp, q4), (-(q * x ** 2 * zp), q2)]
    first = theta_quotient(
        [J2, J2, J2, (-(q * x ** 2 * z * zp), q2), (z ** 2 / zp, q4)],
        den + [(z, q2)], prec, pre=zp)
    second = theta_quotient(
        [J2, J2, J2, (-(q2 * x ** 2 * z * zp), q2), (q2 * z ** 2 / zp, q4)],
        den + [(q * z, q2)], prec, pre=-(zp * x * z))
    return first + second


def d3_closed(x: Monomial, base: Monomial, z: Monomial, zp: Monomial, prec: int) -> Series:
    check_base(base)
    q = base
    q3, q9 = q ** 3, q ** 9
    J3 = (q3, q ** 9)
    x3 = x ** 3
    den = [(x * z, q), (zp, q9), (x3 * zp, q3)]
    parts = [
        (zp / z, [(x3 * z * zp, q3), (z ** 3 / zp, q9)], [(z, q3)]),
        (-(zp * x / q), [(q * x3 * z * zp, q3), (q3 * z ** 3 / zp, q9)], [(q * z, q3)]),
        (zp * x ** 2 * z / q, [(q ** 2 * x3 * z * zp, q3), (q ** 6 * z ** 3 / zp, q9)],
         [(q ** 2 * z, q3)]),
    ]
    out = Series.zero(prec)
    for pre, num, extra in parts:
        out = out + theta_quotient([J3, J3, J3] + num, den + extra, prec, pre=pre)
    return out
