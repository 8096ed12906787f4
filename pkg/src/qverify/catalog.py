"""Built-in identities and the engine that checks them.

Every entry is stored as DSL text, so the catalog doubles as a corpus for
the parser.  Families that are instantiated at several arguments (theta
transformation laws, three-term relations, closed forms of D_n) are written
once as Python builders over :class:`Monomial` and rendered to text.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from . import dsl
from .errors import QVerifyError
from .qseries import Monomial, Q

__all__ = [
    "IdentitySpec", "VerificationReport", "builtin_catalog", "catalog_by_id",
    "verify", "verify_all", "read_manifest", "spec_from_statement",
]

MOCK_ORDER = 50
THETA_ORDER = 100


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    lhs: object
    rhs: object
    default_order: int
    tags: tuple = ()

    @property
    def text(self) -> str:
        return f"{dsl.render(self.lhs)} == {dsl.render(self.rhs)}"


@dataclass
class VerificationReport:
    id: str
    order_checked: int
    passed: bool
    first_mismatch: Optional[tuple] = None
    wall_time: float = 0.0
    error: Optional[str] = field(default=None, compare=False)

    def to_json(self) -> dict:
        mm = None
        if self.first_mismatch is not None:
            e, lhs, rhs = self.first_mismatch
            mm = {"exp": e, "lhs": str(lhs), "rhs": str(rhs)}
        return {"id": self.id, "order": self.order_checked, "pass": self.passed,
                "mismatch": mm, "ms": int(round(self.wall_time * 1000))}


# -- text builders -----------------------------------------------------------------

def M(k: int, e: int) -> Monomial:
    return Monomial(k, e)


def mono(m: Monomial) -> str:
    return dsl.render_monomial(m)


def j(x: Monomial, b: Monomial) -> str:
    return f"j({mono(x)}; {mono(b)})"


def scalar(m: Monomial) -> str:
    """A monomial used as a multiplicative factor."""
    return f"({mono(m)})"


def prod(*factors: str) -> str:
    return "*".join(factors) if factors else "1"


def quot(pre: Monomial, num, den) -> str:
    """pre * prod(num) / prod(den), each list holding factor strings."""
    top = prod(*([] if pre.exp == 0 and pre.k == 0 else [scalar(pre)]), *num)
    if not den:
        return top
    return f"{top}/({prod(*den)})"


def sum_terms(terms) -> str:
    return " + ".join(f"({t})" for t in terms)


def c2(n: int) -> int:
    return n * (n - 1) // 2


ONE = M(0, 0)
NEG = M(6, 0)
W = 4  # unit index of omega
I_ = 3  # unit index of i


# -- families ------------------------------------------------------------------------

def quasi_period(x, b, n):
    # j(b^n x; b) = (-1)^n b^-C(n,2) x^-n j(x; b)
    pre = NEG ** n * b ** (-c2(n)) * x ** (-n)
    return j(b ** n * x, b), quot(pre, [j(x, b)], [])


def inversion_a(x, b):
    return j(x, b), j(b / x, b)


def inversion_b(x, b):
    return j(x, b), quot(-x, [j(x.inverse(), b)], [])


def modulus_increase(x, n):
    # base q only: j(x;q) = J_1 j(x, qx, ..., q^(n-1) x; q^n) / J_n^n
    thetas = [j(Q ** i * x, Q ** n) for i in range(n)]
    return j(x, Q), f"Jm(1)*{prod(*thetas)}/Jm({n})^{n}"


def negated_base(x):
    return j(x, -Q), f"{j(x, Q ** 2)}*{j(-(Q * x), Q ** 2)}/J(1,4)"


def dissection(z, m):
    terms = []
    for k in range(m):
        pre = NEG ** k * Q ** c2(k) * z ** k
        arg = NEG ** (m + 1) * Q ** (c2(m) + m * k) * z ** m
        terms.append(quot(pre, [j(arg, Q ** (m * m))], []))
    return j(z, Q), sum_terms(terms)


def root_product(x, n):
    # j(x^n; q^n) = J_n j(x, zeta_n x, ..., zeta_n^(n-1) x; q) / J_1^n
    step = 12 // n
    thetas = [j(M(step * i, 0) * x, Q) for i in range(n)]
    return j(x ** n, Q ** n), f"Jm({n})*{prod(*thetas)}/Jm(1)^{n}"


def cubic_a(x):
    lhs = f"{j(Q * x ** 3, Q ** 3)} + {quot(x, [j(Q ** 2 * x ** 3, Q ** 3)], [])}"
    return lhs, f"{j(-x, Q)}*{j(Q * x ** 2, Q ** 2)}/Jm(2)"


def cubic_b(x):
    return f"{j(-x, Q)}*{j(Q * x ** 2, Q ** 2)}/Jm(2)", f"Jm(1)*{j(x ** 2, Q)}/{j(x, Q)}"


def product_two(x, y):
    q2 = Q ** 2
    rhs = (f"{j(-(x * y), q2)}*{j(-(Q * y / x), q2)} - "
           f"{quot(x, [j(-(Q * x * y), q2), j(-(y / x), q2)], [])}")
    return f"{j(x, Q)}*{j(y, Q)}", rhs


def sum_two(x, y):
    q2 = Q ** 2
    lhs = f"{j(-x, Q)}*{j(y, Q)} + {j(x, Q)}*{j(-y, Q)}"
    return lhs, f"2*{j(x * y, q2)}*{j(Q * y / x, q2)}"


def weierstrass(a, b, c, d, base=Q):
    def four(u, v):
        return [j(u * v, base), j(u / v, base)]
    lhs = prod(*four(a, c), *four(b, d))
    rhs = f"{prod(*four(a, d), *four(b, c))} + {quot(b / c, four(a, b) + four(c, d), [])}"
    return lhs, rhs


def quintic(x, y):
    terms = []
    for i in range(-2, 3):
        pre = NEG ** i * Q ** ((i * i - i) // 2) * x ** i
        terms.append(quot(pre, [j(-(Q ** (3 * i + 9) * x ** 3 / y), Q ** 15),
                                j(Q ** (2 * i + 1) * x ** 2 * y, Q ** 10)], []))
    return f"{j(x, Q)}*{j(y, Q ** 6)}", sum_terms(terms)


def quintic_cubed(x):
    q10 = Q ** 10
    x5 = x ** 5
    first = (f"{quot(Q ** 3 * x ** -2, [j(-(Q ** -3 * x5), q10)], [])} - "
             f"{quot(x, [j(-(Q ** 3 * x5), q10)], [])}")
    second = (f"{j(-(Q * x5), q10)} - "
              f"{quot(Q / x, [j(-(Q ** -1 * x5), q10)], [])}")
    return f"{j(x, Q)}*{j(-(x ** 3), Q ** 6)}", f"J(3,15)*({first}) + J(6,15)*({second})"


def m_call(x, b, z):
    return f"m({mono(x)}; {mono(b)}; {mono(z)})"


def m_shift(x, b, z):
    return m_call(x, b, z), m_call(x, b, b * z)


def m_flip(x, b, z):
    return m_call(x, b, z), quot(x.inverse(), [m_call(x.inverse(), b, z.inverse())], [])


def m_reflect(x, b, z):
    return m_call(x, b, z), m_call(x, b, (x * z).inverse())


def m_change(x, b, z1, z0):
    J1 = j(b, b ** 3)
    rhs = quot(z0, [f"{J1}^3", j(z1 / z0, b), j(x * z0 * z1, b)],
               [j(z0, b), j(z1, b), j(x * z0, b), j(x * z1, b)])
    return f"{m_call(x, b, z1)} - {m_call(x, b, z0)}", rhs


def d_call(n, x, b, z, zp):
    return f"D({n}; {mono(x)}; {mono(b)}; {mono(z)}; {mono(zp)})"


def dn_closed_text(n, x, b, z, zp):
    bn, bnn = b ** n, b ** (n * n)
    Jn = j(bn, b ** (3 * n))
    mxn = (-x) ** n
    terms = []
    for r in range(n):
        pre = zp * b ** c2(r) * (-(x * z)) ** r
        num = [f"{Jn}^3", j(-(b ** (c2(n) + r)) * mxn * z * zp, bn), j(b ** (n * r) * z ** n / zp, bnn)]
        den = [j(x * z, b), j(zp, bnn), j(-(b ** c2(n)) * mxn * zp, bn), j(b ** r * z, bn)]
        terms.append(quot(pre, num, den))
    return sum_terms(terms)


def d2_closed_text(x, b, z, zp):
    b2, b4 = b ** 2, b ** 4
    J2 = j(b2, b ** 6)
    first = quot(ONE, [j(-(b * x ** 2 * z * zp), b2), j(z ** 2 / zp, b4)],
                 [j(-(b * x ** 2 * zp), b2), j(z, b2)])
    second = quot(x * z, [j(-(b2 * x ** 2 * z * zp), b2), j(b2 * z ** 2 / zp, b4)],
                  [j(-(b * x ** 2 * zp), b2), j(b * z, b2)])
    outer = quot(zp, [f"{J2}^3"], [j(x * z, b), j(zp, b4)])
    return f"{outer}*({first} - {second})"


def d3_closed_text(x, b, z, zp):
    b3, b9 = b ** 3, b ** 9
    J3 = j(b3, b9)
    x3 = x ** 3
    first = quot(z.inverse(), [j(x3 * z * zp, b3), j(z ** 3 / zp, b9)], [j(z, b3)])
    second = quot(x / b, [j(b * x3 * z * zp, b3), j(b3 * z ** 3 / zp, b9)], [j(b * z, b3)])
    third = quot(x ** 2 * z / b, [j(b ** 2 * x3 * z * zp, b3), j(b ** 6 * z ** 3 / zp, b9)],
                 [j(b ** 2 * z, b3)])
    outer = quot(zp, [f"{J3}^3"], [j(x * z, b), j(zp, b9), j(x3 * zp, b3)])
    return f"{outer}*({first} - {second} + {third})"


def f232_text(x, y):
    q10 = Q ** 10
    terms = [
        f"{j(x, Q ** 2)}*{m_call(Q ** 6 * y ** 2 / x ** 3, q10, NEG)}",
        f"-{scalar(y)}*{j(Q ** 3 * x, Q ** 2)}*{m_call(Q * y ** 2 / x ** 3, q10, NEG)}",
        f"{j(y, Q ** 2)}*{m_call(Q ** 6 * x ** 2 / y ** 3, q10, NEG)}",
        f"-{scalar(x)}*{j(Q ** 3 * y, Q ** 2)}*{m_call(Q * x ** 2 / y ** 3, q10, NEG)}",
        "-" + quot(y / (Q * x), ["Jm(5)^3", j(-(x ** 2 / y ** 2), Q ** 2), j(Q ** 3 * x * y, Q ** 5)],
                   ["Jb(0,10)", j(-(Q ** 4 * y ** 3 / x ** 2), Q ** 5), j(-(Q ** 4 * x ** 3 / y ** 2), Q ** 5)]),
    ]
    lhs = f"f(2, 3, 2; {mono(x)}, {mono(y)}; q)"
    return lhs, " + ".join(f"({t})" for t in terms)


# -- fixed statements ----------------------------------------------------------------
# (id, lhs, rhs, tags); default order comes from the tags

_FIXED = [
    # the six mock theta identities
    ("tenth-phi9-psi",
     "q^2*phi(q^9) - (psi(w*q) - psi(w^2*q))/(w - w^2)",
     "-q*J(1,2)/J(3,6)*J(3,15)*Jm(6)/Jm(3)", "mock main"),
    ("tenth-psi9-phi",
     "q^-2*psi(q^9) + (w*phi(w*q) - w^2*phi(w^2*q))/(w - w^2)",
     "J(1,2)/J(3,6)*J(6,15)*Jm(6)/Jm(3)", "mock main"),
    ("tenth-X9-chi",
     "X(q^9) - (w*chi(w*q) - w^2*chi(w^2*q))/(w - w^2)",
     "Jb(1,4)/Jb(3,12)*J(18,30)*Jm(3)/Jm(6)", "mock main"),
    ("tenth-chi9-X",
     "chi(q^9) + q^2*(X(w*q) - X(w^2*q))/(w - w^2)",
     "-q^3*Jb(1,4)/Jb(3,12)*J(6,30)*Jm(3)/Jm(6)", "mock main"),
    ("tenth-phi-psi-chi8",
     "phi(q) - q^-1*psi(-q^4) + q^-2*chi(q^8)",
     "Jb(1,2)*j(-q^2; -q^10)/J(2,8)", "mock main"),
    ("tenth-psi-phi-X8",
     "psi(q) + q*phi(-q^4) + X(q^8)",
     "Jb(1,2)*j(-q^6; -q^10)/J(2,8)", "mock main"),

    # two theta identities behind the omega-twisted ones
    ("theta-quintic-one", "J(1,5)*J(12,30) - q*J(2,5)*J(6,30)", "J(1,2)*Jb(3,12)", "theta"),
    ("theta-quintic-one-product", "J(1,2)*Jb(3,12)", "Jm(1)*J(1,6)", "theta"),
    ("theta-quintic-two", "J(4,10)*J(6,15) + q*J(2,10)*J(3,15)", "Jb(1,4)*J(3,6)", "theta"),
    ("theta-quintic-two-product", "Jb(1,4)*J(3,6)", "Jm(2)*Jb(1,3)", "theta"),

    # Hecke-type double sums
    ("hecke-phi", "J(1,2)*phi(q)", "f(2, 3, 2; q^2, q^2; q)", "mock hecke"),
    ("hecke-psi", "J(1,2)*psi(q)", "-q^2*f(2, 3, 2; q^4, q^4; q)", "mock hecke"),
    ("hecke-X", "Jb(1,4)*X(q)", "f(2, 3, 2; -q^3, -q^3; q^2)", "mock hecke"),
    ("hecke-chi", "Jb(1,4)*(2 - chi(q))", "q*f(2, 3, 2; -q^-1, -q^-1; q^2)", "mock hecke"),

    # mock theta functions as Appell-Lerch sums
    ("appell-phi", "phi(q)", "-q^-1*m(q; q^10; q) - q^-1*m(q; q^10; q^2)", "mock appell"),
    ("appell-psi", "psi(q)", "-m(q^3; q^10; q) - m(q^3; q^10; q^3)", "mock appell"),
    ("appell-X", "X(q)", "m(-q^2; q^5; q) + m(-q^2; q^5; q^4)", "mock appell"),
    ("appell-chi", "chi(q)", "m(-q; q^5; q^2) + m(-q; q^5; q^3)", "mock appell"),

    # the two D_2 values behind the Appell-Lerch form of X
    ("d2-X-first", "D(2; -q^2; q^5; q; -1)",
     "q^-2*Jm(10)^3*J(5,10)*Jb(12,20)/(Jb(2,5)*Jb(0,20)*J(1,10)*J(4,10))", "mock dsplit"),
    ("d2-X-second", "D(2; -q^2; q^5; q^4; -1)",
     "q^-2*Jm(10)^3*J(5,10)*J(3,10)*Jb(4,20)/(Jb(1,5)*Jb(0,20)*J(1,10)^2*J(4,10))", "mock dsplit"),

    # the six identities rewritten through D_n
    ("split-psi-phi-X8", "psi(q) + q*phi(-q^4) + X(q^8)",
     "-D(2; q^3; q^10; q^6; q^-8) - D(2; q^3; q^10; q^4; q^8)", "mock dsplit"),
    ("split-phi-psi-chi8", "phi(q) - q^-1*psi(-q^4) + q^-2*chi(q^8)",
     "-q^-1*D(2; q; q^10; q^8; q^-24) - q^-1*D(2; q; q^10; q^2; q^-16)", "mock dsplit"),
    ("split-phi9-psi", "q^2*phi(q^9) - (psi(w*q) - psi(w^2*q))/(w - w^2)",
     "(D(3; q^3; w*q^10; q^3; q^9) - D(3; q^3; w^2*q^10; q^3; q^9)"
     " + D(3; q^3; w*q^10; q^6; q^18) - D(3; q^3; w^2*q^10; q^6; q^18))/(w - w^2)", "mock dsplit"),
    ("split-psi9-phi", "q^-2*psi(q^9) + (w*phi(w*q) - w^2*phi(w^2*q))/(w - w^2)",
     "-q^-1*(D(3; w*q; w*q^10; q^-3; q^-9) - D(3; w^2*q; w^2*q^10; q^-3; q^-9)"
     " + D(3; w*q; w*q^10; q^-9; q^-27) - D(3; w^2*q; w^2*q^10; q^-9; q^-27))/(w - w^2)", "mock dsplit"),
    ("split-X9-chi", "X(q^9) - (w*chi(w*q) - w^2*chi(w^2*q))/(w - w^2)",
     "-(D(3; -w*q; w^2*q^5; -q^-3; -q^-9) - w*D(3; -w^2*q; w*q^5; -q^-3; -q^-9)"
     " + D(3; -w*q; w^2*q^5; q^3; q^9) - w*D(3; -w^2*q; w*q^5; q^3; q^9))/(1 - w)", "mock dsplit"),
    ("split-chi9-X", "chi(q^9) + q^2*(X(w*q) - X(w^2*q))/(w - w^2)",
     "q^2*(D(3; -w^2*q^2; w^2*q^5; q^6; q^18) - D(3; -w*q^2; w*q^5; q^6; q^18)"
     " + D(3; -w^2*q^2; w^2*q^5; q^9; q^27) - D(3; -w*q^2; w*q^5; q^9; q^27))/(w - w^2)", "mock dsplit"),

    # single-quotient values of D_2 and D_3
    ("d2-eval-psi-a", "D(2; q^3; q^10; q^6; q^-8)",
     "-Jm(20)^3*Jb(14,20)*J(20,40)/(J(1,10)*J(8,40)*Jb(8,20)*J(6,20))", "mock deval"),
    ("d2-eval-psi-b", "D(2; q^3; q^10; q^4; q^8)",
     "-q*Jm(20)^3*Jb(18,20)*J(20,40)/(J(7,10)*J(8,40)*Jb(4,20)*J(6,20))", "mock deval"),
    ("d2-eval-phi-a", "D(2; q; q^10; q^8; q^-24)",
     "-q*Jm(20)^3*Jb(6,20)*J(20,40)/(J(9,10)*J(24,40)*Jb(12,20)*J(18,20))", "mock deval"),
    ("d2-eval-phi-b", "D(2; q; q^10; q^2; q^-16)",
     "-q^2*Jm(20)^3*Jb(2,20)*J(20,40)/(J(3,10)*J(16,40)*Jb(4,20)*J(2,20))", "mock deval"),
    ("d3-eval-phi9-a", "D(3; q^3; q^10; q^3; q^9)",
     "-q^-3*Jm(30)^7*J(12,30)/(J(6,30)*J(9,30)*J(9,90)*J(18,30))/(J(5,30)*J(7,30)*J(13,30))",
     "mock deval"),
    ("d3-eval-phi9-b", "D(3; q^3; q^10; q^6; q^18)",
     "-q^-3*Jm(30)^7*J(12,30)/(J(6,30)*J(9,30)*J(18,90)*J(27,30))/(J(4,30)*J(5,30)*J(14,30))",
     "mock deval"),
    ("d3-eval-psi9-a", "D(3; q; q^10; q^-9; q^-27)",
     "-Jm(30)^7/(J(18,30)*J(27,90)*J(3,30))/(J(1,30)*J(5,30)*J(11,30))", "mock deval"),
    ("d3-eval-psi9-b", "D(3; q; q^10; q^-3; q^-9)",
     "-q^-3*Jm(30)^7/(J(18,30)*J(9,90)*J(3,30))/(J(5,30)*J(7,30)*J(13,30))", "mock deval"),
    ("d3-eval-X9-a", "D(3; -q; q^5; -q^-3; -q^-9)",
     "-Jm(15)^7/(J(12,15)*Jb(9,45)*Jb(3,15))/(Jb(2,15)*Jb(7,15)*Jb(5,15))", "mock deval"),
    ("d3-eval-X9-b", "D(3; -q; q^5; q^3; q^9)",
     "q^-1*Jm(15)^2*Jm(30)^4*J(3,15)/(J(9,45)*Jb(12,15)*J(12,30))/(J(2,30)*J(8,30)*J(5,30))",
     "mock deval"),
    ("d3-eval-chi9-a", "D(3; -q^2; q^5; q^6; q^18)",
     "-q*Jm(30)^4*Jm(15)^2*J(6,15)/(J(18,45)*Jb(9,15)*J(24,30))/(J(4,30)*J(14,30)*J(5,30))",
     "mock deval"),
    ("d3-eval-chi9-b", "D(3; -q^2; q^5; q^9; q^27)",
     "q^2*Jm(30)*Jm(15)^5*J(3,15)/(J(27,45)*Jb(3,15)*J(12,30))/(J(1,15)*J(4,15)*Jb(5,15))",
     "mock deval"),

    # products the six identities reduce to
    ("reduced-psi-phi-X8", "psi(q) + q*phi(-q^4) + X(q^8)",
     "Jm(20)^5*J(20,40)/(Jm(10)*J(8,40)*J(6,20))/(J(1,10)*J(7,10)*Jb(4,20)*Jb(8,20))"
     "*j(-q; -q^5)*j(-q^3; -q^5)", "mock reduced"),
    ("reduced-phi-psi-chi8", "phi(q) - q^-1*psi(-q^4) + q^-2*chi(q^8)",
     "Jm(20)^5*J(20,40)/(Jm(10)*J(24,40)*J(2,20))/(J(3,10)*Jb(4,20)*J(9,10)*Jb(12,20))"
     "*j(-q; -q^5)*j(q^2; -q^5)", "mock reduced"),
    ("reduced-phi9-psi", "q^2*phi(q^9) - (psi(w*q) - psi(w^2*q))/(w - w^2)",
     "q^2*Jm(30)^2/J(9,30)*J(2,5)*Jm(15)/(J(6,15)*J(3,15))"
     " - q*Jm(30)^2/J(9,30)*J(18,30)/J(6,30)*J(1,5)/J(6,15)*Jm(15)/J(3,15)", "mock reduced"),
    ("reduced-psi9-phi", "q^-2*psi(q^9) + (w*phi(w*q) - w^2*phi(w^2*q))/(w - w^2)",
     "J(1,5)*Jm(15)/(J(3,15)*J(6,15))*Jm(30)^2/J(3,30)"
     " - q*J(2,5)*Jm(15)/J(3,15)^2*Jm(30)^2/J(9,30)", "mock reduced"),
    ("reduced-X9-chi", "X(q^9) - (w*chi(w*q) - w^2*chi(w^2*q))/(w - w^2)",
     "J(4,30)*J(14,30)/Jb(6,15)*Jm(10)*Jm(15)^2/(J(6,30)*Jm(30)^2)"
     " + q*J(2,30)*J(8,30)/Jb(3,15)*Jm(10)*Jm(15)^2/(J(6,30)*Jm(30)^2)", "mock reduced"),
    ("reduced-chi9-X", "chi(q^9) + q^2*(X(w*q) - X(w^2*q))/(w - w^2)",
     "-q^3*J(4,10)/Jb(6,15)*Jm(15)^2*Jm(30)/(J(12,30)*J(6,30))"
     " - q^4*J(2,10)/Jb(3,15)*Jm(15)^2*Jm(30)/J(12,30)^2", "mock reduced"),
    ("reduced-phi9-psi-theta",
     "q^2*Jm(30)^2/J(9,30)*J(2,5)*Jm(15)/(J(6,15)*J(3,15))"
     " - q*Jm(30)^2/J(9,30)*J(18,30)/J(6,30)*J(1,5)/J(6,15)*Jm(15)/J(3,15)",
     "-q*J(1,2)/J(3,6)*J(3,15)*Jm(6)/Jm(3)", "theta reduced"),
    ("reduced-psi9-phi-theta",
     "J(1,5)*Jm(15)/(J(3,15)*J(6,15))*Jm(30)^2/J(3,30)"
     " - q*J(2,5)*Jm(15)/J(3,15)^2*Jm(30)^2/J(9,30)",
     "J(1,2)/J(3,6)*J(6,15)*Jm(6)/Jm(3)", "theta reduced"),
    ("reduced-X9-chi-theta",
     "J(4,30)*J(14,30)/Jb(6,15)*Jm(10)*Jm(15)^2/(J(6,30)*Jm(30)^2)"
     " + q*J(2,30)*J(8,30)/Jb(3,15)*Jm(10)*Jm(15)^2/(J(6,30)*Jm(30)^2)",
     "Jb(1,4)/Jb(3,12)*J(18,30)*Jm(3)/Jm(6)", "theta reduced"),
    ("reduced-chi9-X-theta",
     "-q^3*J(4,10)/Jb(6,15)*Jm(15)^2*Jm(30)/(J(12,30)*J(6,30))"
     " - q^4*J(2,10)/Jb(3,15)*Jm(15)^2*Jm(30)/J(12,30)^2",
     "-q^3*Jb(1,4)/Jb(3,12)*J(6,30)*Jm(3)/Jm(6)", "theta reduced"),
]

# D_3 values at omega-twisted bases: the base-q statement with q -> omega^e q
_TWISTED = [
    ("d3-eval-phi9-a", W), ("d3-eval-phi9-a", 2 * W),
    ("d3-eval-phi9-b", W), ("d3-eval-phi9-b", 2 * W),
    ("d3-eval-psi9-a", W), ("d3-eval-psi9-a", 2 * W),
    ("d3-eval-psi9-b", W), ("d3-eval-psi9-b", 2 * W),
    ("d3-eval-X9-a", W), ("d3-eval-X9-a", 2 * W),
    ("d3-eval-X9-b", W), ("d3-eval-X9-b", 2 * W),
    ("d3-eval-chi9-a", W), ("d3-eval-chi9-a", 2 * W),
    ("d3-eval-chi9-b", W), ("d3-eval-chi9-b", 2 * W),
]


def _generated():
    """(id, lhs, rhs, tags) for the instantiated families."""
    out = []

    def add(name, pair, tags):
        out.append((name, pair[0], pair[1], tags))

    for i, (x, b, n) in enumerate([(M(W, 1), Q, 2), (M(I_, 2), Q ** 3, -3), (M(2, -1), -(Q ** 2), 1)]):
        add(f"theta-quasi-period-{i + 1}", quasi_period(x, b, n), "theta toolkit")
    for i, (x, b) in enumerate([(M(W, 1), Q), (M(I_, -2), Q ** 3)]):
        add(f"theta-inversion-{i + 1}", inversion_a(x, b), "theta toolkit")
        add(f"theta-inversion-sign-{i + 1}", inversion_b(x, b), "theta toolkit")
    for i, (x, n) in enumerate([(M(W, 1), 2), (M(6, 2), 3)]):
        add(f"theta-modulus-increase-{i + 1}", modulus_increase(x, n), "theta toolkit")
    for i, x in enumerate([M(W, 1), M(I_, 3)]):
        add(f"theta-negated-base-{i + 1}", negated_base(x), "theta toolkit")
    for i, (z, m) in enumerate([(M(W, 1), 2), (M(I_, -1), 3)]):
        add(f"theta-dissection-{i + 1}", dissection(z, m), "theta toolkit")
    for i, (x, n) in enumerate([(M(W, 1), 2), (M(I_, 2), 3), (M(1, 1), 4), (M(W, -1), 6)]):
        add(f"theta-root-product-{i + 1}", root_product(x, n), "theta toolkit")
    for i, x in enumerate([M(W, 1), M(I_, -1)]):
        add(f"theta-cubic-{i + 1}", cubic_a(x), "theta toolkit")
        add(f"theta-cubic-product-{i + 1}", cubic_b(x), "theta toolkit")
    for i, (x, y) in enumerate([(M(W, 1), M(0, 2)), (M(I_, 2), M(6, -1))]):
        add(f"theta-product-two-{i + 1}", product_two(x, y), "theta toolkit")
        add(f"theta-sum-two-{i + 1}", sum_two(x, y), "theta toolkit")
    # three-term relation, including the choices used to evaluate the D_2 values
    for i, (a, b, c, d, base) in enumerate([
        (Q ** 4, Q ** 2, Q, M(I_, 0), Q ** 10),
        (Q ** 16, Q ** 7, Q ** 3, Q ** 2, Q ** 30),
        (Q ** 12, Q ** 10, M(2 * W, 5), M(W, 5), Q ** 30),
        (M(6, 7), Q ** 5, Q ** 3, M(6, 2), Q ** 15),
        (M(W, 1), M(I_, 2), M(1, 3), Q ** 5, Q),
    ]):
        add(f"weierstrass-{i + 1}", weierstrass(a, b, c, d, base), "theta toolkit")
    for i, (x, y) in enumerate([(Q, Q ** 2), (M(W, 1), M(6, 1)), (M(I_, 2), M(2, 3))]):
        add(f"quintic-product-{i + 1}", quintic(x, y), "theta quintic")
    for i, x in enumerate([M(6, 1), M(W, 1), M(I_, 2)]):
        add(f"quintic-cubed-{i + 1}", quintic_cubed(x), "theta quintic")

    for i, (x, b, z) in enumerate([(Q, Q ** 10, Q), (M(6, 2), Q ** 5, M(W, 1)), (M(I_, 1), Q ** 3, M(6, 0))]):
        add(f"m-shift-z-{i + 1}", m_shift(x, b, z), "mock appell")
        add(f"m-flip-{i + 1}", m_flip(x, b, z), "mock appell")
        add(f"m-reflect-z-{i + 1}", m_reflect(x, b, z), "mock appell")
    for i, (x, b, z1, z0) in enumerate([(Q, Q ** 10, Q ** 2, Q), (Q, Q ** 10, Q, NEG),
                                        (M(6, 2), Q ** 5, M(W, 1), Q ** 4)]):
        add(f"m-change-z-{i + 1}", m_change(x, b, z1, z0), "mock appell")

    for i, (x, y) in enumerate([(Q ** 2, Q ** 2), (M(W, 1), Q ** 3), (M(6, 3), M(I_, 2))]):
        add(f"f232-appell-{i + 1}", f232_text(x, y), "mock hecke")

    d_args = [
        (1, M(W, 1), Q ** 2, M(I_, 1), M(6, 3)),
        (2, M(W, 1), Q ** 2, M(I_, 1), M(6, 3)),
        (2, M(6, 2), Q ** 5, M(W, 1), M(I_, -2)),
        (3, M(W, 1), Q ** 2, M(I_, 1), M(6, 3)),
        (3, M(I_, 2), Q ** 3, M(2 * W, 1), M(W, -4)),
        (4, M(W, 1), Q, M(I_, 1), M(6, 3)),
    ]
    for i, (n, x, b, z, zp) in enumerate(d_args):
        add(f"dn-closed-{i + 1}", (d_call(n, x, b, z, zp), dn_closed_text(n, x, b, z, zp)), "mock dsplit")
    for i, (x, b, z, zp) in enumerate([(M(W, 1), Q ** 2, M(I_, 1), M(6, 3)), (Q ** 3, Q ** 10, Q ** 6, Q ** -8)]):
        add(f"d2-closed-{i + 1}", (d_call(2, x, b, z, zp), d2_closed_text(x, b, z, zp)), "mock dsplit")
    for i, (x, b, z, zp) in enumerate([(M(W, 1), Q ** 2, M(I_, 1), M(6, 3)), (Q, Q ** 10, Q ** -9, Q ** -27)]):
        add(f"d3-closed-{i + 1}", (d_call(3, x, b, z, zp), d3_closed_text(x, b, z, zp)), "mock dsplit")
    return out


def _order_for(tags: str) -> int:
    return THETA_ORDER if tags.split()[0] == "theta" else MOCK_ORDER


def _make(name, lhs, rhs, tags) -> IdentitySpec:
    return IdentitySpec(name, dsl.parse_expr(lhs), dsl.parse_expr(rhs), _order_for(tags),
                        tuple(tags.split()))


_CACHE = None


def builtin_catalog() -> list:
    """All built-in identities, in a fixed order."""
    global _CACHE
    if _CACHE is None:
        specs = [_make(*row) for row in _FIXED]
        by_id = {s.id: s for s in specs}
        for base_id, k in _TWISTED:
            s = by_id[base_id]
            suffix = "w" if k == W else "w2"
            specs.append(IdentitySpec(f"{base_id}-{suffix}", dsl.twist(s.lhs, k), dsl.twist(s.rhs, k),
                                      s.default_order, s.tags + ("twisted",)))
        specs.extend(_make(*row) for row in _generated())
        ids = [s.id for s in specs]
        if len(ids) != len(set(ids)):
            raise RuntimeError("duplicate catalog id")
        _CACHE = specs
    return list(_CACHE)


def catalog_by_id() -> dict:
    return {s.id: s for s in builtin_catalog()}


def spec_from_statement(st: dsl.Statement, default_order: int = MOCK_ORDER) -> IdentitySpec:
    return IdentitySpec(st.name, st.lhs, st.rhs, st.order or default_order, ("user",))


def read_manifest() -> list:
    """(id, order) pairs from the checked-in manifest."""
    text = resources.files("qverify").joinpath("data/manifest.txt").read_text()
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            name, order = line.split()
            rows.append((name, int(order)))
    return rows


# -- engine ----------------------------------------------------------------------------

def verify(spec: IdentitySpec, order: Optional[int] = None) -> VerificationReport:
    """Evaluate both sides independently and compare through q^order."""
    order = spec.default_order if order is None else order
    if order < 1:
        raise ValueError("order must be >= 1")
    t0 = time.perf_counter()
    try:
        lhs = dsl.evaluate(spec.lhs, order)
        rhs = dsl.evaluate(spec.rhs, order)
        ok, mismatch = lhs.eq_to(rhs, order)
        report = VerificationReport(spec.id, order, ok, mismatch)
    except (QVerifyError, ZeroDivisionError) as exc:
        report = VerificationReport(spec.id, order, False, None, error=f"{type(exc).__name__}: {exc}")
    report.wall_time = time.perf_counter() - t0
    return report


def _verify_args(args):
    return verify(*args)


def verify_all(order: Optional[int] = None, parallel: bool = False, specs=None,
               jobs: Optional[int] = None) -> list:
    """One report per spec, in catalog order; ``order=None`` uses each default."""
    specs = builtin_catalog() if specs is None else list(specs)
    work = [(s, order) for s in specs]
    if parallel and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_args, work))
    return [verify(s, o) for s, o in work]
