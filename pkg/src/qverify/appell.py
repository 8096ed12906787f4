"""The Appell-Lerch function m(x, q, z) as a truncated q-series.

    m(x, q, z) = 1/j(z; q) * sum_r (-1)^r q^C(r,2) z^r / (1 - q^(r-1) x z)

Each denominator ``1 - w`` is expanded as a geometric series in whichever
direction makes it a power series in q; see ``s_geom_inv_one_minus``.
"""
from __future__ import annotations

from functools import lru_cache

from .cyclofield import zeta_vector
from .errors import NonGenericPole, PrefactorZero
from .qseries import Monomial, Series, check_base
from .theta import in_base_lattice, theta_j, theta_quotient, theta_valuation

__all__ = ["m_series", "m_numerator", "m_changing_z", "STOP_AFTER"]

# consecutive r with no contribution below the target before the scan stops
STOP_AFTER = 20


def _term_valuation(r, x, base, z):
    e_r = base.exp * (r * (r - 1) // 2) + z.exp * r
    e_w = base.exp * (r - 1) + x.exp + z.exp
    return e_r + max(0, -e_w)


def m_numerator(x: Monomial, base: Monomial, z: Monomial, prec: int,
                stop_after: int = STOP_AFTER) -> Series:
    """The bilateral sum in the definition of m, exact below q^prec."""
    check_base(base)
    acc = {}

    def add(e, vec):
        slot = acc.get(e)
        if slot is None:
            acc[e] = list(vec)
        else:
            for i in range(4):
                slot[i] += vec[i]

    def add_term(r):
        lead = Monomial(6 * r + base.k * (r * (r - 1) // 2) + z.k * r,
                        base.exp * (r * (r - 1) // 2) + z.exp * r)
        w = base ** (r - 1) * x * z
        if w.exp == 0:
            if w.k == 0:
                raise NonGenericPole(f"1 - q^(r-1) x z vanishes at r = {r}")
            if lead.exp < prec:
                c = lead.unit / (1 - w.unit)
                add(lead.exp, c.c)
            return
        if w.exp > 0:
            step, cur = w, lead
        else:
            # 1/(1-w) = -w^{-1} / (1 - w^{-1})
            step = w.inverse()
            cur = -(lead * step)
        while cur.exp < prec:
            add(cur.exp, zeta_vector(cur.k))
            cur = cur * step

    r0 = round(0.5 - z.exp / base.exp)
    for direction in (1, -1):
        r = r0 if direction == 1 else r0 - 1
        misses = 0
        while misses < stop_after:
            if _term_valuation(r, x, base, z) < prec:
                add_term(r)
                misses = 0
            else:
                misses += 1
            r += direction

    keys = [e for e, v in acc.items() if any(v)]
    if not keys:
        return Series.zero(prec)
    val = min(keys)
    lists = [[0] * (prec - val) for _ in range(4)]
    for e in keys:
        for i in range(4):
            lists[i][e - val] = acc[e][i]
    return Series.from_lists(val, prec, lists)


@lru_cache(maxsize=4096)
def m_series(x: Monomial, base: Monomial, z: Monomial, prec: int,
             stop_after: int = STOP_AFTER) -> Series:
    """m(x, base, z), exact below q^prec."""
    check_base(base)
    if in_base_lattice(z, base):
        raise PrefactorZero(f"j(z; base) vanishes for z = {z}, base = {base}")
    vz = theta_valuation(z, base)
    num = m_numerator(x, base, z, prec + vz, stop_after)
    if num.is_zero():
        return Series.zero(prec)
    den = theta_j(z, base, prec + 2 * vz - num.val)
    return (num / den).truncate(prec)


def m_changing_z(x: Monomial, base: Monomial, z1: Monomial, z0: Monomial, prec: int) -> Series:
    """Closed form of m(x, q, z1) - m(x, q, z0) as a theta quotient."""
    check_base(base)
    J1 = (base, base ** 3)
    return theta_quotient(
        num=[J1, J1, J1, (z1 / z0, base), (x * z0 * z1, base)],
        den=[(z0, base), (z1, base), (x * z0, base), (x * z1, base)],
        prec=prec,
        pre=z0,
    )
