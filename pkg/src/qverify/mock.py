"""The tenth-order mock theta functions as Eulerian series.

    phi(q) = sum q^C(n+1,2) / (q; q^2)_{n+1}
    psi(q) = sum q^C(n+2,2) / (q; q^2)_{n+1}
    X(q)   = sum (-1)^n q^(n^2)     / (-q; q)_{2n}
    chi(q) = sum (-1)^n q^((n+1)^2) / (-q; q)_{2n+1}
"""
from __future__ import annotations

import enum
from functools import lru_cache

from .qseries import Monomial, Q, Series
from .theta import poch_finite

__all__ = ["MockKind", "mock_series", "mock_at"]


class MockKind(enum.Enum):
    phi = "phi"
    psi = "psi"
    bigX = "X"
    chi = "chi"


def _term(kind: MockKind, n: int):
    """(sign, q-exponent, Pochhammer x, Pochhammer base, length) of term n."""
    if kind is MockKind.phi:
        return 1, (n + 1) * n // 2, Q, Q ** 2, n + 1
    if kind is MockKind.psi:
        return 1, (n + 2) * (n + 1) // 2, Q, Q ** 2, n + 1
    if kind is MockKind.bigX:
        return (-1) ** n, n * n, -Q, Q, 2 * n
    return (-1) ** n, (n + 1) ** 2, -Q, Q, 2 * n + 1


@lru_cache(maxsize=256)
def mock_series(kind: MockKind, prec: int) -> Series:
    """The chosen mock theta function, exact below q^prec."""
    kind = MockKind(kind)
    total = Series.zero(prec)
    n = 0
    while True:
        sign, e, x, base, length = _term(kind, n)
        if e >= prec:
            return total
        den = poch_finite(x, base, length, prec - e)
        total = total + (1 / den).shift(e).scale(sign)
        n += 1


def mock_at(kind: MockKind, arg: Monomial, prec: int) -> Series:
    """The mock function evaluated at ``arg`` (q -> unit * q^k), exact below q^prec."""
    k = arg.exp
    inner = max(1, -(-(prec - 1) // k) + 1)
    return mock_series(MockKind(kind), inner).subst(arg, k).truncate(prec)
