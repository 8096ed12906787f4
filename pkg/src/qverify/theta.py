"""q-Pochhammer symbols and the theta function j(x; q).

``theta_j`` sums the bilateral series directly; ``theta_j_product`` goes
through three infinite Pochhammer products and is kept as an independent
check of the triple product.
"""
from __future__ import annotations

from functools import lru_cache

from .cyclofield import zeta_vector
from .errors import DegenerateParameters, PrecisionTooLow, UnsupportedArgument
from .qseries import Monomial, Q, Series, check_base

__all__ = [
    "poch_finite", "poch_inf", "theta_j", "theta_j_product",
    "J_ab", "Jbar_ab", "J_m", "monomial_terms_to_series",
    "theta_valuation", "theta_quotient", "in_base_lattice", "at_precision",
]


def monomial_terms_to_series(terms, prec: int) -> Series:
    """Sum ``sign * zeta^k * q^e`` over ``(k, e)`` pairs with ``e < prec``."""
    acc = {}
    for k, e in terms:
        if e >= prec:
            continue
        v = zeta_vector(k)
        slot = acc.get(e)
        if slot is None:
            acc[e] = list(v)
        else:
            for i in range(4):
                slot[i] += v[i]
    keys = [e for e, v in acc.items() if any(v)]
    if not keys:
        return Series.zero(prec)
    val = min(keys)
    lists = [[0] * (prec - val) for _ in range(4)]
    for e in keys:
        v = acc[e]
        for i in range(4):
            lists[i][e - val] = v[i]
    return Series.from_lists(val, prec, lists)


def _times_one_minus(s: Series, m: Monomial) -> Series:
    """s * (1 - m) for m with nonnegative exponent."""
    if m.exp == 0:
        return s.scale(1 - m.unit)
    return s - s.mul_monomial(m)


def poch_finite(x: Monomial, base: Monomial, n: int, prec: int) -> Series:
    """(x; base)_n = prod_{i<n} (1 - base^i x), exact below q^prec."""
    check_base(base)
    if n < 0:
        raise UnsupportedArgument("finite Pochhammer length must be >= 0")
    pre = Monomial(0, 0)
    factors = []
    for i in range(n):
        m = base ** i * x
        if m.exp < 0:
            # 1 - m = -m (1 - 1/m)
            pre = pre * (-m)
            m = m.inverse()
        factors.append(m)
    inner = prec - pre.exp
    s = Series.constant(1, inner)
    for m in factors:
        if m.exp < inner:
            s = _times_one_minus(s, m)
    return s.mul_monomial(pre)


@lru_cache(maxsize=4096)
def poch_inf(x: Monomial, base: Monomial, prec: int) -> Series:
    """(x; base)_inf truncated below q^prec; x must have exponent >= 0."""
    check_base(base)
    if x.exp < 0:
        raise UnsupportedArgument("infinite Pochhammer needs x with exponent >= 0")
    s = Series.constant(1, prec)
    m = x
    while m.exp < prec:
        s = _times_one_minus(s, m)
        if s.is_zero():
            break
        m = m * base
    return s


@lru_cache(maxsize=8192)
def theta_j(x: Monomial, base: Monomial, prec: int) -> Series:
    """j(x; base) = sum_n (-1)^n base^C(n,2) x^n, exact below q^prec."""
    check_base(base)
    eb, ex = base.exp, x.exp

    def expo(n):
        return eb * (n * (n - 1) // 2) + ex * n

    def term(n):
        return (6 * n + base.k * (n * (n - 1) // 2) + x.k * n, expo(n))

    # the exponent is convex in n with its minimum near 1/2 - ex/eb
    n0 = round(0.5 - ex / eb)
    terms = []
    n = n0
    while expo(n) < prec or expo(n + 1) <= expo(n):
        terms.append(term(n))
        n += 1
    n = n0 - 1
    while expo(n) < prec or expo(n - 1) <= expo(n):
        terms.append(term(n))
        n -= 1
    return monomial_terms_to_series(terms, prec)


def theta_j_product(x: Monomial, base: Monomial, prec: int) -> Series:
    """(x)_inf (base/x)_inf (base)_inf; requires 0 <= x.exp <= base.exp."""
    return poch_inf(x, base, prec) * poch_inf(base / x, base, prec) * poch_inf(base, base, prec)


def J_ab(a: int, m: int, prec: int, base: Monomial = Q) -> Series:
    """J_{a,m} = j(q^a; q^m)."""
    return theta_j(base ** a, base ** m, prec)


def Jbar_ab(a: int, m: int, prec: int, base: Monomial = Q) -> Series:
    """Jbar_{a,m} = j(-q^a; q^m)."""
    return theta_j(-(base ** a), base ** m, prec)


def J_m(m: int, prec: int, base: Monomial = Q) -> Series:
    """J_m = (q^m; q^m)_inf, computed as j(q^m; q^{3m})."""
    return theta_j(base ** m, base ** (3 * m), prec)


def in_base_lattice(x: Monomial, base: Monomial) -> bool:
    """True when x == base**n for some integer n, i.e. j(x; base) == 0."""
    if x.exp % base.exp:
        return False
    return (base ** (x.exp // base.exp)).k == x.k


@lru_cache(maxsize=8192)
def theta_valuation(x: Monomial, base: Monomial):
    """Valuation of j(x; base), or None when the theta function vanishes."""
    check_base(base)
    if in_base_lattice(x, base):
        return None
    n0 = round(0.5 - x.exp / base.exp)
    lowest = min(base.exp * (n * (n - 1) // 2) + x.exp * n for n in (n0 - 1, n0, n0 + 1))
    p = lowest + 1
    while True:
        s = theta_j(x, base, p)
        if not s.is_zero():
            return s.val
        p += base.exp


def theta_quotient(num, den, prec: int, pre: Monomial = Monomial(0, 0), coeff=1) -> Series:
    """coeff * pre * prod j(num) / prod j(den), exact below q^prec.

    ``num`` and ``den`` are sequences of ``(x, base)`` pairs.  A vanishing
    numerator theta gives the zero series; a vanishing denominator theta
    raises :class:`DegenerateParameters`.
    """
    dvals = []
    for x, b in den:
        v = theta_valuation(x, b)
        if v is None:
            raise DegenerateParameters(f"denominator j({x}; {b}) vanishes identically")
        dvals.append(v)
    nvals = []
    for x, b in num:
        v = theta_valuation(x, b)
        if v is None:
            return Series.zero(prec)
        nvals.append(v)
    target_val = pre.exp + sum(nvals) - sum(dvals)
    rel = prec - target_val
    if rel <= 0:
        return Series.zero(prec)
    out = Series.constant(1, rel)
    for (x, b), v in zip(num, nvals):
        out = out * theta_j(x, b, v + rel)
    for (x, b), v in zip(den, dvals):
        out = out / theta_j(x, b, v + rel)
    out = out.mul_monomial(pre)
    if coeff != 1:
        out = out.scale(coeff)
    return out.truncate(prec)


def at_precision(fn, prec: int, guard: int = 8, attempts: int = 8) -> Series:
    """Call ``fn(p)`` with growing ``p`` until the result is known below q^prec."""
    for _ in range(attempts):
        s = fn(prec + guard)
        if s.prec >= prec:
            return s.truncate(prec)
        guard += 2 * (prec - s.prec) + guard
    raise PrecisionTooLow(f"could not reach precision {prec}")
