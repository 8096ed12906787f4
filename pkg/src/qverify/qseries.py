"""Truncated Laurent series in q with coefficients in Q(zeta_12).

A :class:`Series` knows its coefficients exactly for exponents in the window
``[val, prec)``; everything at or above ``prec`` is unknown.  Internally the
window is stored as four ``flint.fmpq_poly`` objects, one per power-basis
coordinate, so a product of two series costs at most sixteen dense rational
polynomial products followed by reduction modulo ``t^4 - t^2 + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional

import flint

from .cyclofield import CycNum, ONE, zeta_power, zeta_vector, unit_index
from .errors import (
    CannotDetermineValuation,
    InvalidSubstitution,
    NonGenericPole,
    PrecisionTooLow,
)

__all__ = [
    "Monomial", "Series", "Q", "check_base",
    "s_add", "s_mul", "s_div", "s_subst", "s_eq_to", "s_geom_inv_one_minus",
]

_ZERO_POLY = flint.fmpq_poly([])


# unit zeta_12^k written with w = omega, I = i, z = zeta_12
UNIT_TEXT = {0: "1", 1: "z", 2: "-w^2", 3: "I", 4: "w", 5: "z^5",
             6: "-1", 7: "-z", 8: "w^2", 9: "-I", 10: "-w", 11: "-z^5"}


@dataclass(frozen=True)
class Monomial:
    """The unit ``zeta_12**k`` times ``q**exp``.

    Every root of unity in Q(zeta_12) is a power of zeta_12, so ``-1`` is
    ``k == 6``, omega is ``k == 4`` and i is ``k == 3``.
    """

    k: int
    exp: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 12)

    @classmethod
    def of(cls, unit=1, exp: int = 0) -> "Monomial":
        """Build from a unit given as a CycNum, or as the integer 1 or -1."""
        if isinstance(unit, int) and unit in (1, -1):
            return cls(0 if unit == 1 else 6, exp)
        return cls(unit_index(CycNum.coerce(unit)), exp)

    @property
    def unit(self) -> CycNum:
        return zeta_power(self.k)

    def __mul__(self, other):
        if isinstance(other, Monomial):
            return Monomial(self.k + other.k, self.exp + other.exp)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Monomial):
            return Monomial(self.k - other.k, self.exp - other.exp)
        return NotImplemented

    def __pow__(self, n: int):
        return Monomial(self.k * n, self.exp * n)

    def __neg__(self):
        return Monomial(self.k + 6, self.exp)

    def inverse(self) -> "Monomial":
        return Monomial(-self.k, -self.exp)

    def is_one(self) -> bool:
        return self.k == 0 and self.exp == 0

    def __repr__(self):
        return f"Monomial(k={self.k}, exp={self.exp})"

    def __str__(self):
        unit = UNIT_TEXT[self.k]
        if self.exp == 0:
            return unit
        qpart = "q" if self.exp == 1 else f"q^{self.exp}"
        if self.k in (0, 6):
            return qpart if self.k == 0 else "-" + qpart
        return f"{unit}*{qpart}"


Q = Monomial(0, 1)


def check_base(base: Monomial) -> Monomial:
    if base.exp < 1:
        raise InvalidSubstitution(f"base must have positive q-exponent, got {base}")
    return base


# -- raw component helpers ----------------------------------------------------
# A "comps" value is a 4-tuple of fmpq_poly holding the window coefficients.

def _fmpq(v):
    if isinstance(v, Fraction):
        return flint.fmpq(v.numerator, v.denominator)
    return v


def _to_fraction(v) -> Fraction:
    return Fraction(int(v.p), int(v.q))


def _reduce_polys(p):
    return (p[0] - p[4] - p[6], p[1] - p[5], p[2] + p[4], p[3] + p[5])


def _cmul(a, b, n):
    p = [_ZERO_POLY] * 7
    for i in range(4):
        if a[i].is_zero():
            continue
        for j in range(4):
            if b[j].is_zero():
                continue
            p[i + j] = p[i + j] + a[i].mul_low(b[j], n)
    return _reduce_polys(p)


def _cscale(c: CycNum, a):
    p = [_ZERO_POLY] * 7
    for i, ci in enumerate(c.c):
        if not ci:
            continue
        f = _fmpq(ci)
        for j in range(4):
            if not a[j].is_zero():
                p[i + j] = p[i + j] + a[j] * f
    return _reduce_polys(p)


def _ctrunc(a, n):
    return tuple(x.truncate(n) if x.length() > n else x for x in a)


def _cinv(b, n):
    """Inverse of a window whose index-0 coefficient is nonzero, to length n."""
    lead = CycNum(*(_to_fraction(x[0]) for x in b))
    x = tuple(flint.fmpq_poly([_fmpq(v)]) for v in lead.inverse().c)
    m = 1
    one = (flint.fmpq_poly([1]), _ZERO_POLY, _ZERO_POLY, _ZERO_POLY)
    while m < n:
        m = min(2 * m, n)
        bx = _cmul(_ctrunc(b, m), x, m)
        e = tuple(u - v for u, v in zip(one, bx))
        corr = _cmul(x, e, m)
        x = tuple(u + v for u, v in zip(x, corr))
    return _ctrunc(x, n)


class Series:
    """Laurent series ``sum c_e q^e`` known modulo ``q^prec``.

    ``val`` is the exponent of the first nonzero coefficient; a series that
    is zero throughout its window has ``val == prec``.
    """

    __slots__ = ("val", "prec", "_c")

    def __init__(self, val: int, prec: int, comps):
        n = prec - val
        if n <= 0:
            self.val = prec
            self.prec = prec
            self._c = (_ZERO_POLY,) * 4
            return
        comps = _ctrunc(comps, n)
        shift = n
        for p in comps:
            length = p.length()
            i = 0
            while i < length and i < shift and p[i] == 0:
                i += 1
            if i < length:
                shift = min(shift, i)
        if shift:
            comps = tuple(p.right_shift(shift) for p in comps)
        self.val = val + shift
        self.prec = prec
        self._c = comps

    # -- constructors --------------------------------------------------------
    @classmethod
    def from_lists(cls, val: int, prec: int, lists) -> "Series":
        """Build from four coordinate lists indexed from ``val``."""
        return cls(val, prec, tuple(flint.fmpq_poly([_fmpq(v) for v in l]) for l in lists))

    @classmethod
    def from_dict(cls, terms: dict, prec: int) -> "Series":
        """Build from ``{exponent: coefficient}``; exponents >= prec are dropped."""
        keys = [e for e, c in terms.items() if e < prec and c]
        if not keys:
            return cls.zero(prec)
        val = min(keys)
        lists = [[0] * (prec - val) for _ in range(4)]
        for e in keys:
            c = CycNum.coerce(terms[e])
            for k in range(4):
                lists[k][e - val] = c.c[k]
        return cls.from_lists(val, prec, lists)

    @classmethod
    def zero(cls, prec: int) -> "Series":
        return cls(prec, prec, ())

    @classmethod
    def constant(cls, c, prec: int) -> "Series":
        return cls.from_dict({0: c}, prec)

    @classmethod
    def monomial(cls, m: Monomial, prec: int, coeff=1) -> "Series":
        return cls.from_dict({m.exp: m.unit * coeff}, prec)

    # -- inspection ------------------------------------------------------------
    def coeff(self, e: int) -> CycNum:
        if e >= self.prec:
            raise PrecisionTooLow(f"coefficient of q^{e} unknown (prec {self.prec})")
        i = e - self.val
        if i < 0:
            return CycNum(0)
        return CycNum(*(_to_fraction(p[i]) for p in self._c))

    def __getitem__(self, e: int) -> CycNum:
        return self.coeff(e)

    def coeffs(self) -> list:
        """``[(exponent, CycNum)]`` for every nonzero known coefficient."""
        cols = [[_to_fraction(v) for v in p.coeffs()] for p in self._c]
        n = max((len(c) for c in cols), default=0)
        out = []
        for i in range(n):
            c = CycNum(*(col[i] if i < len(col) else 0 for col in cols))
            if c:
                out.append((self.val + i, c))
        return out

    def is_zero(self) -> bool:
        return self.val >= self.prec

    def is_rational(self) -> bool:
        return all(p.is_zero() for p in self._c[1:])

    def truncate(self, prec: int) -> "Series":
        if prec >= self.prec:
            return self
        return Series(self.val, prec, self._c)

    def __len__(self):
        return self.prec - self.val

    # -- ring operations ---------------------------------------------------------
    def _aligned(self, other: "Series"):
        prec = min(self.prec, other.prec)
        val = min(self.val, other.val, prec)
        a = tuple(p.left_shift(self.val - val) for p in self._c)
        b = tuple(p.left_shift(other.val - val) for p in other._c)
        return val, prec, a, b

    def __add__(self, other):
        if not isinstance(other, Series):
            if isinstance(other, (int, Rational, CycNum)):
                other = Series.constant(other, self.prec)
            else:
                return NotImplemented
        val, prec, a, b = self._aligned(other)
        return Series(val, prec, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Series(self.val, self.prec, tuple(-p for p in self._c))

    def __sub__(self, other):
        if not isinstance(other, (Series, int, Rational, CycNum)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational, CycNum)):
            return self.scale(other)
        if isinstance(other, Monomial):
            return self.mul_monomial(other)
        if not isinstance(other, Series):
            return NotImplemented
        prec = min(self.prec + other.val, other.prec + self.val)
        val = self.val + other.val
        n = prec - val
        if n <= 0 or self.is_zero() or other.is_zero():
            return Series.zero(prec)
        return Series(val, prec, _cmul(self._c, other._c, n))

    __rmul__ = __mul__

    def scale(self, c) -> "Series":
        c = CycNum.coerce(c)
        if c.is_rational():
            f = _fmpq(c.c[0])
            return Series(self.val, self.prec, tuple(p * f for p in self._c))
        return Series(self.val, self.prec, _cscale(c, self._c))

    def shift(self, e: int) -> "Series":
        """Exact multiplication by q**e."""
        return Series(self.val + e, self.prec + e, self._c)

    def mul_monomial(self, m: Monomial) -> "Series":
        s = self.shift(m.exp)
        return s if m.k == 0 else s.scale(m.unit)

    def inverse(self) -> "Series":
        if self.is_zero():
            raise CannotDetermineValuation(
                f"divisor vanishes to its known precision O(q^{self.prec})")
        n = self.prec - self.val
        return Series(-self.val, -self.val + n, _cinv(self._c, n))

    def __truediv__(self, other):
        if isinstance(other, (int, Rational, CycNum)):
            return self.scale(CycNum.coerce(other).inverse())
        if isinstance(other, Monomial):
            return self.mul_monomial(other.inverse())
        if not isinstance(other, Series):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, (int, Rational, CycNum)):
            return self.inverse().scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return Series.constant(1, self.prec - self.val)
        result, base = None, self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def subst(self, u, k: int) -> "Series":
        """Substitute q -> u * q**k for a 12th root of unity u and k >= 1."""
        if not isinstance(k, int) or k < 1:
            raise InvalidSubstitution(f"stretch must be a positive integer, got {k}")
        ku = u.k if isinstance(u, Monomial) else unit_index(CycNum.coerce(u))
        prec = k * (self.prec - 1) + 1
        if self.is_zero():
            return Series.zero(prec)
        cols = [p.coeffs() for p in self._c]
        n = max(len(c) for c in cols)
        cols = [c + [0] * (n - len(c)) for c in cols]
        out = [[0] * (k * (n - 1) + 1) for _ in range(4)]
        for i in range(n):
            a = [cols[j][i] for j in range(4)]
            if not any(a):
                continue
            r = (ku * (self.val + i)) % 12
            v = _rotate(a, r)
            for j in range(4):
                out[j][k * i] = v[j]
        return Series.from_lists(k * self.val, prec, out)

    def eq_to(self, other: "Series", order: int):
        """Compare coefficients of q^e for all e <= order.

        Returns ``(True, None)`` or ``(False, (e, self[e], other[e]))`` for the
        lowest mismatching exponent.
        """
        known = min(self.prec, other.prec)
        if known < order + 1:
            raise PrecisionTooLow(
                f"need coefficients through q^{order}, only known below q^{known}")
        d = self - other
        if d.val <= order:
            e = d.val
            return False, (e, self.coeff(e), other.coeff(e))
        return True, None

    # -- text ----------------------------------------------------------------
    def __str__(self):
        parts = []
        for e, c in self.coeffs():
            cs = str(c)
            single = " " not in cs
            if e == 0:
                body = cs if single else f"({cs})"
            else:
                qe = "q" if e == 1 else f"q^{e}"
                if cs == "1":
                    body = qe
                elif cs == "-1":
                    body = "-" + qe
                else:
                    body = f"{cs}*{qe}" if single else f"({cs})*{qe}"
            parts.append(body)
        parts.append(f"O(q^{self.prec})")
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def __repr__(self):
        return f"Series({self})"

    def to_machine(self) -> list:
        """``[(exponent, [c0, c1, c2, c3])]`` with rationals as strings."""
        return [(e, c.to_pair_list()) for e, c in self.coeffs()]


def _build_rotations():
    mats = []
    for r in range(12):
        # column j is zeta^(r + j) in the power basis
        mats.append([zeta_vector(r + j) for j in range(4)])
    return mats


_ROT = _build_rotations()


def _rotate(a, r):
    """Coordinates of zeta^r * (a0 + a1 z + a2 z^2 + a3 z^3)."""
    if r == 0:
        return a
    cols = _ROT[r]
    out = [0, 0, 0, 0]
    for j, aj in enumerate(a):
        if aj:
            col = cols[j]
            for i in range(4):
                if col[i]:
                    out[i] += col[i] * aj
    return out


# -- functional interface ------------------------------------------------------

def s_add(a: Series, b: Series) -> Series:
    return a + b


def s_mul(a: Series, b: Series) -> Series:
    return a * b


def s_div(a: Series, b: Series) -> Series:
    return a / b


def s_subst(a: Series, u, k: int) -> Series:
    return a.subst(u, k)


def s_eq_to(a: Series, b: Series, order: int):
    return a.eq_to(b, order)


def geom_terms(w: Monomial, prec: int, coeff: CycNum = ONE) -> dict:
    """Terms of ``coeff / (1 - w)`` below q^prec as ``{exp: CycNum}``."""
    if w.exp == 0:
        if w.k == 0:
            raise NonGenericPole("1/(1 - w) with w == 1")
        return {0: coeff / (1 - w.unit)} if prec > 0 else {}
    if w.exp > 0:
        step, start, sign = w, Monomial(0, 0), 1
    else:
        # 1/(1-w) = -w^{-1} / (1 - w^{-1})
        step, start, sign = w.inverse(), w.inverse(), -1
    out = {}
    cur = start
    while cur.exp < prec:
        c = cur.unit * coeff
        out[cur.exp] = out.get(cur.exp, 0) + (c if sign > 0 else -c)
        cur = cur * step
    return out


def s_geom_inv_one_minus(w: Monomial, prec: int) -> Series:
    """Expansion of 1/(1 - w) in the direction that makes it a power series in q."""
    return Series.from_dict(geom_terms(w, prec), prec)


def series_sum(items: Iterable[Series], prec: Optional[int] = None) -> Series:
    total = None
    for s in items:
        total = s if total is None else total + s
    if total is None:
        return Series.zero(prec if prec is not None else 0)
    return total if prec is None else total.truncate(prec)
