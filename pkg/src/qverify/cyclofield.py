"""Exact arithmetic in the cyclotomic field Q(zeta_12).

Elements are stored in the power basis ``1, z, z^2, z^3`` where ``z`` is a
primitive 12th root of unity with minimal polynomial ``t^4 - t^2 + 1``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import DivisionByZero, UnsupportedRoot

__all__ = [
    "CycNum", "ZETA", "OMEGA", "I", "ONE", "ZERO",
    "field_add", "field_mul", "field_inv", "root_of_unity", "zeta_power",
    "unit_index",
]


def _reduce(p):
    """Reduce a coefficient list of length <= 7 modulo t^4 - t^2 + 1."""
    p = list(p) + [0] * (7 - len(p))
    # t^4 = t^2 - 1, t^5 = t^3 - t, t^6 = -1
    return (p[0] - p[4] - p[6], p[1] - p[5], p[2] + p[4], p[3] + p[5])


class CycNum:
    """An element c0 + c1*z + c2*z^2 + c3*z^3 of Q(zeta_12)."""

    __slots__ = ("c", "_hash")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c = (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3))
        self._hash = None

    @classmethod
    def coerce(cls, v) -> "CycNum":
        if isinstance(v, CycNum):
            return v
        if isinstance(v, (int, Rational)):
            return cls(v)
        raise TypeError(f"cannot convert {type(v).__name__} to CycNum")

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        try:
            o = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return CycNum(*(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(*(-a for a in self.c))

    def __sub__(self, other):
        try:
            o = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return CycNum(*(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return CycNum.coerce(other) - self

    def __mul__(self, other):
        try:
            o = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        p = [0] * 7
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        p[i + j] += a * b
        return CycNum(*_reduce(p))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if not self:
            raise DivisionByZero("inverse of zero in Q(zeta_12)")
        # Solve M x = e0 where column k of M is self * z^k.
        cols = [(self * zeta_power(k)).c for k in range(4)]
        m = [[cols[k][r] for k in range(4)] + [Fraction(r == 0)] for r in range(4)]
        for col in range(4):
            piv = next(r for r in range(col, 4) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            inv = 1 / m[col][col]
            m[col] = [v * inv for v in m[col]]
            for r in range(4):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return CycNum(*(m[r][4] for r in range(4)))

    def __truediv__(self, other):
        try:
            o = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return CycNum.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def norm(self) -> Fraction:
        """Field norm down to Q (determinant of multiplication-by-self)."""
        cols = [(self * zeta_power(k)).c for k in range(4)]
        m = [[cols[k][r] for k in range(4)] for r in range(4)]
        det = Fraction(1)
        for col in range(4):
            piv = next((r for r in range(col, 4) if m[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                det = -det
            det *= m[col][col]
            for r in range(col + 1, 4):
                f = m[r][col] / m[col][col]
                if f:
                    m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return det

    # -- comparison and predicates ------------------------------------------
    def __eq__(self, other):
        try:
            o = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.c)
        return self._hash

    def __bool__(self):
        return any(self.c)

    def is_rational(self) -> bool:
        return not (self.c[1] or self.c[2] or self.c[3])

    # -- text ---------------------------------------------------------------
    def __repr__(self):
        return f"CycNum({', '.join(str(a) for a in self.c)})"

    def __str__(self):
        parts = []
        for k, a in enumerate(self.c):
            if not a:
                continue
            sym = ("", "z", "z^2", "z^3")[k]
            mag = abs(a)
            if sym and mag == 1:
                body = sym
            elif sym:
                body = f"{mag}*{sym}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if a > 0 else "-" + body)
            else:
                parts.append(("+ " if a > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> "CycNum":
        """Parse ``a + b*z + c*z^2 + ...``; ``w`` and ``I`` are accepted too."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty CycNum literal")
        if s[0] not in "+-":
            s = "+" + s
        total = ZERO
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            term = ONE
            for factor in body.split("*"):
                m = re.fullmatch(r"([zwI])(?:\^(\d+))?", factor)
                if m:
                    term = term * _SYMBOLS[m.group(1)] ** int(m.group(2) or 1)
                elif re.fullmatch(r"\d+(/\d+)?", factor):
                    term = term * Fraction(factor)
                else:
                    raise ValueError(f"bad CycNum factor {factor!r} in {text!r}")
            total = total + (term if sign == "+" else -term)
        if "".join(sign + body for sign, body in re.findall(r"([+-])([^+-]+)", s)) != s:
            raise ValueError(f"malformed CycNum literal {text!r}")
        return total

    def to_pair_list(self):
        """Machine-readable form: four ``"p/q"`` strings."""
        return [str(a) for a in self.c]


ZERO = CycNum(0)
ONE = CycNum(1)
ZETA = CycNum(0, 1)

_ZPOW = [ONE]
for _ in range(11):
    _ZPOW.append(_ZPOW[-1] * ZETA)
_ZPOW_INT = [tuple(int(a) for a in u.c) for u in _ZPOW]


def zeta_power(k: int) -> CycNum:
    """zeta_12 ** k for any integer k."""
    return _ZPOW[k % 12]


def zeta_vector(k: int) -> tuple:
    """Integer coordinates of zeta_12 ** k in the power basis."""
    return _ZPOW_INT[k % 12]


OMEGA = zeta_power(4)
I = zeta_power(3)
_SYMBOLS = {"z": ZETA, "w": OMEGA, "I": I}


def unit_index(u: CycNum) -> int:
    """Return k with u == zeta_12**k, or raise if u is not a 12th root of unity."""
    for k, v in enumerate(_ZPOW):
        if v == u:
            return k
    raise UnsupportedRoot(f"{u} is not a 12th root of unity")


def field_add(a, b) -> CycNum:
    return CycNum.coerce(a) + b


def field_mul(a, b) -> CycNum:
    return CycNum.coerce(a) * b


def field_inv(a) -> CycNum:
    return CycNum.coerce(a).inverse()


def root_of_unity(n: int, k: int = 1) -> CycNum:
    """The primitive n-th root exp(2 pi i / n), raised to the power k; n must divide 12."""
    if n <= 0 or 12 % n:
        raise UnsupportedRoot(f"zeta_{n} does not lie in Q(zeta_12)")
    return zeta_power(12 // n * k)
