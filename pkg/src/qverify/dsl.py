"""A small expression language for q-series identities.

Grammar (``*`` and ``/`` bind tighter than ``+`` and ``-``; unary minus binds
tighter than both; ``^`` takes a signed integer exponent)::

    file      := { statement NEWLINE }
    statement := NAME ':' expr '==' expr [ '@' INT ]
    expr      := term { ('+' | '-') term }
    term      := unary { ('*' | '/') unary }
    unary     := '-' unary | power
    power     := primary [ '^' INT ]
    primary   := INT | monomial | call | '(' expr ')'
    monomial  := factor { '*' factor }      factor := ('q'|'w'|'I'|'z') [ '^' INT ]
    call      := NAME '(' args ')'

A run of ``q``, ``w`` (omega), ``I`` (i) and ``z`` (zeta_12) factors joined
by ``*`` is read as a single monomial literal, so ``w*q^3`` is one node and
``-q^2`` is the monomial with unit -1.  Call arguments are separated by ``;``
between groups of different kinds and by ``,`` inside a group:

    j(x; b)  J(a, m)  Jb(a, m)  Jm(m)  P(x; b; n | inf)  m(x; b; z)
    f(a, b, c; x, y; b)  D(n; x; b; z; z')  phi(b)  psi(b)  X(b)  chi(b)

Bases (and the arguments of the mock functions) need a positive q-exponent.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Union

from .cyclofield import CycNum, zeta_power
from .errors import ParseError, PrecisionTooLow, QVerifyError
from .qseries import UNIT_TEXT, Monomial, Series
from . import appell, dn, hecke, mock, theta

__all__ = [
    "Num", "Unit", "Mono", "BinOp", "Neg", "Pow", "Call", "Statement",
    "parse", "parse_expr", "parse_statement", "parse_identity_file",
    "render", "render_monomial", "render_statement", "evaluate", "eval_expr",
    "strip_positions", "k_max", "twist", "SIGNATURES",
]

# -- AST ------------------------------------------------------------------------

_POS = dict(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Num:
    value: int
    pos: Optional[tuple] = field(**_POS)


@dataclass(frozen=True)
class Unit:
    """A root of unity zeta_12**k used as a scalar (k not 0 or 6)."""
    k: int
    pos: Optional[tuple] = field(**_POS)


@dataclass(frozen=True)
class Mono:
    mono: Monomial
    pos: Optional[tuple] = field(**_POS)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    pos: Optional[tuple] = field(**_POS)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    pos: Optional[tuple] = field(**_POS)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exp: int
    pos: Optional[tuple] = field(**_POS)


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: Optional[tuple] = field(**_POS)


Expr = Union[Num, Unit, Mono, BinOp, Neg, Pow, Call]


@dataclass(frozen=True)
class Statement:
    name: str
    lhs: Expr
    rhs: Expr
    order: Optional[int] = None
    line: int = field(default=1, compare=False)


# argument groups per call: i = integer, m = monomial, b = base monomial,
# n = integer or the word inf
SIGNATURES = {
    "j": ("m", "b"),
    "J": ("ii",),
    "Jb": ("ii",),
    "Jm": ("i",),
    "P": ("m", "b", "n"),
    "m": ("m", "b", "m"),
    "f": ("iii", "mm", "b"),
    "D": ("i", "m", "b", "m", "m"),
    "phi": ("b",),
    "psi": ("b",),
    "X": ("b",),
    "chi": ("b",),
}

INF = "inf"

# -- tokenizer --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>==|[-+*/^(),;@:]))")
_CHAIN = {"q", "w", "I", "z"}


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str, line: int = 1, col0: int = 0):
    toks = []
    i = 0
    n = len(text)
    while i < n:
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m or m.end() == i:
            raise ParseError(f"unexpected character {text[i]!r}", line, col0 + i + 1)
        start = m.start(m.lastgroup)
        toks.append(_Tok(m.lastgroup, m.group(m.lastgroup), line, col0 + start + 1))
        i = m.end()
    toks.append(_Tok("eof", "", line, col0 + n + 1))
    return toks


# -- parser ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def peek(self, k=1):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def fail(self, msg, expected=(), tok=None):
        tok = tok or self.tok
        got = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"{msg}, got {got}", tok.line, tok.col, expected)

    def accept(self, text):
        if self.tok.kind in ("op", "name") and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            self.fail(f"expected {text!r}", (repr(text),))

    def pos(self):
        return (self.tok.line, self.tok.col)

    # expressions
    def expr(self):
        left = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            pos = self.pos()
            op = self.tok.text
            self.i += 1
            left = BinOp(op, left, self.term(), pos)
        return left

    def term(self):
        left = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            pos = self.pos()
            op = self.tok.text
            self.i += 1
            left = BinOp(op, left, self.unary(), pos)
        return left

    def unary(self):
        if self.tok.kind == "op" and self.tok.text == "-":
            pos = self.pos()
            nxt = self.peek()
            if nxt.kind == "int":
                self.i += 2
                return self.postfix(Num(-int(nxt.text), pos))
            if nxt.kind == "name" and nxt.text in _CHAIN:
                self.i += 1
                return self.chain_node(pos, negate=True)
            self.i += 1
            return Neg(self.unary(), pos)
        return self.power()

    def power(self):
        return self.postfix(self.primary())

    def postfix(self, node):
        if self.tok.kind == "op" and self.tok.text == "^":
            pos = self.pos()
            self.i += 1
            return Pow(node, self.signed_int(), pos)
        return node

    def signed_int(self):
        neg = self.accept("-")
        if self.tok.kind != "int":
            self.fail("expected an integer", ("INT",))
        v = int(self.tok.text)
        self.i += 1
        return -v if neg else v

    def primary(self):
        tok = self.tok
        pos = self.pos()
        if tok.kind == "int":
            self.i += 1
            return Num(int(tok.text), pos)
        if tok.kind == "name" and tok.text in _CHAIN:
            node = self.chain_node(pos)
            if self.tok.kind == "op" and self.tok.text == "^":
                self.fail("wrap a monomial in parentheses before raising it to a power")
            return node
        if tok.kind == "name":
            if tok.text not in SIGNATURES:
                self.fail(f"unknown function {tok.text!r}", sorted(SIGNATURES))
            self.i += 1
            return self.call(tok.text, pos)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        self.fail("expected an expression", ("INT", "q", "w", "I", "z", "(", "-", "NAME"))

    def chain(self):
        """Read factor {'*' factor}; return (unit index, q exponent, saw q)."""
        k, e, saw_q = 0, 0, False
        while True:
            sym = self.tok.text
            self.i += 1
            p = 1
            if self.tok.kind == "op" and self.tok.text == "^":
                self.i += 1
                p = self.signed_int()
            if sym == "q":
                e += p
                saw_q = True
            else:
                k += {"w": 4, "I": 3, "z": 1}[sym] * p
            nxt = self.peek()
            if (self.tok.kind == "op" and self.tok.text == "*"
                    and nxt.kind == "name" and nxt.text in _CHAIN):
                self.i += 1
                continue
            return k % 12, e, saw_q

    def chain_node(self, pos, negate=False):
        k, e, saw_q = self.chain()
        if negate:
            k = (k + 6) % 12
        if saw_q:
            return Mono(Monomial(k, e), pos)
        if k == 0:
            return Num(1, pos)
        if k == 6:
            return Num(-1, pos)
        return Unit(k, pos)

    def mono_arg(self, base=False):
        tok = self.tok
        neg = self.accept("-")
        if self.tok.kind == "int":
            if self.tok.text != "1":
                self.fail("monomial arguments must be units times powers of q", ("1", "q"))
            self.i += 1
            mono = Monomial(6 if neg else 0, 0)
        elif self.tok.kind == "name" and self.tok.text in _CHAIN:
            k, e, _ = self.chain()
            mono = Monomial(k + (6 if neg else 0), e)
        else:
            self.fail("expected a monomial", ("q", "w", "I", "z", "1", "-"))
        if base and mono.exp < 1:
            raise ParseError("base must have a positive power of q", tok.line, tok.col)
        return mono

    def call(self, name, pos):
        self.expect("(")
        args = []
        groups = SIGNATURES[name]
        for gi, group in enumerate(groups):
            if gi:
                self.expect(";")
            for ki, kind in enumerate(group):
                if ki:
                    self.expect(",")
                if kind == "i":
                    args.append(self.signed_int())
                elif kind == "n":
                    if self.accept(INF):
                        args.append(INF)
                    else:
                        v = self.signed_int()
                        if v < 0:
                            self.fail("Pochhammer length must be >= 0")
                        args.append(v)
                else:
                    args.append(self.mono_arg(base=(kind == "b")))
        self.expect(")")
        if name in ("J", "Jb") and args[1] < 1 or name == "Jm" and args[0] < 1:
            raise ParseError(f"{name}: modulus must be positive", pos[0], pos[1])
        if name == "D" and args[0] < 1:
            raise ParseError("D: n must be >= 1", pos[0], pos[1])
        return Call(name, tuple(args), pos)


def parse_expr(text: str, line: int = 1, col0: int = 0) -> Expr:
    p = _Parser(_tokenize(text, line, col0))
    node = p.expr()
    if p.tok.kind != "eof":
        p.fail("unexpected trailing input", ("+", "-", "*", "/", "end of input"))
    return node


_NAME = re.compile(r"\s*([A-Za-z0-9_.\-]+)\s*:")


def parse_statement(text: str, line: int = 1) -> Statement:
    m = _NAME.match(text)
    if not m:
        raise ParseError("expected 'name :' at start of statement", line, 1, ("NAME",))
    name = m.group(1)
    p = _Parser(_tokenize(text[m.end():], line, m.end()))
    lhs = p.expr()
    p.expect("==")
    rhs = p.expr()
    order = None
    if p.accept("@"):
        order = p.signed_int()
        if order < 1:
            p.fail("order must be >= 1")
    if p.tok.kind != "eof":
        p.fail("unexpected trailing input", ("@", "end of statement"))
    return Statement(name, lhs, rhs, order, line)


def parse_identity_file(text: str) -> list:
    """Parse ``name : LHS == RHS [@ order]`` lines; ``#`` starts a comment."""
    out = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        st = parse_statement(body, lineno)
        if st.name in seen:
            raise ParseError(f"duplicate identity name {st.name!r} (first on line {seen[st.name]})",
                             lineno, 1)
        seen[st.name] = lineno
        out.append(st)
    return out


def parse(text: str):
    """Parse an identity file if the text contains ``==``, else one expression."""
    if "==" in text:
        return parse_identity_file(text)
    return parse_expr(text)


def strip_positions(node):
    """Positions never take part in equality; kept for API symmetry."""
    return node


# -- rendering --------------------------------------------------------------------------

_UNIT_TEXT = UNIT_TEXT


def _mono_text(m: Monomial) -> str:
    return str(m)


def render_monomial(m: Monomial) -> str:
    """Text for a monomial argument; exponent 0 renders as a bare unit."""
    return str(m)


_LEVEL = {"+": 1, "-": 1, "*": 2, "/": 2}
_CHAIN_END = re.compile(r"(?:^|[^A-Za-z0-9_])[qwIz](?:\^-?\d+)?$")
_CHAIN_START = re.compile(r"^[qwIz](?![A-Za-z0-9_])")


def _level(node) -> int:
    if isinstance(node, BinOp):
        return _LEVEL[node.op]
    if isinstance(node, Neg):
        return 3
    if isinstance(node, Num):
        return 3 if node.value < 0 else 5
    if isinstance(node, Unit):
        return 3 if _UNIT_TEXT[node.k].startswith("-") else 5
    if isinstance(node, Mono):
        return 3 if _mono_text(node.mono).startswith("-") else 5
    if isinstance(node, Pow):
        return 4
    return 5


def _render_arg(kind, v):
    if kind in "in":
        return str(v)
    return render_monomial(v)


def render(node) -> str:
    """Canonical text that parses back to an equal AST."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Unit):
        return _UNIT_TEXT[node.k]
    if isinstance(node, Mono):
        return _mono_text(node.mono)
    if isinstance(node, Call):
        groups = []
        it = iter(node.args)
        for group in SIGNATURES[node.name]:
            groups.append(", ".join(_render_arg(kind, next(it)) for kind in group))
        return f"{node.name}({'; '.join(groups)})"
    if isinstance(node, Pow):
        inner = render(node.base)
        if _level(node.base) < 5 or isinstance(node.base, (Mono, Unit)):
            inner = f"({inner})"
        return f"{inner}^{node.exp}"
    if isinstance(node, Neg):
        inner = render(node.operand)
        # a bare digit or monomial after '-' would fold into the literal
        if _level(node.operand) < 3 or inner[0].isdigit() or _CHAIN_START.match(inner):
            inner = f"({inner})"
        return "-" + inner
    if isinstance(node, BinOp):
        lvl = _LEVEL[node.op]
        left = render(node.left)
        if _level(node.left) < lvl:
            left = f"({left})"
        right = render(node.right)
        if _level(node.right) <= lvl:
            right = f"({right})"
        elif node.op in "*/" and _CHAIN_END.search(left) and _CHAIN_START.match(right):
            # keep "a*w" followed by "*q" from merging into one monomial
            right = f"({right})"
        return f"{left} {node.op} {right}" if lvl == 1 else f"{left}{node.op}{right}"
    raise TypeError(f"not an expression node: {node!r}")


def render_statement(st: Statement) -> str:
    tail = f" @ {st.order}" if st.order is not None else ""
    return f"{st.name} : {render(st.lhs)} == {render(st.rhs)}{tail}"


# -- q -> zeta^k q ------------------------------------------------------------------------

def _twist_mono(m: Monomial, k: int) -> Monomial:
    return Monomial(m.k + k * m.exp, m.exp)


def _jcall(x: Monomial, b: Monomial) -> Call:
    return Call("j", (x, b))


def twist(node, k: int):
    """Replace q by zeta_12^k * q throughout an expression or statement.

    ``J``, ``Jb`` and ``Jm`` become explicit ``j`` calls, since their
    arguments stop being plain powers of q.  An identity stays an identity.
    """
    if isinstance(node, Statement):
        return Statement(node.name, twist(node.lhs, k), twist(node.rhs, k), node.order, node.line)
    if isinstance(node, (Num, Unit)):
        return node
    if isinstance(node, Mono):
        return Mono(_twist_mono(node.mono, k))
    if isinstance(node, Neg):
        return Neg(twist(node.operand, k))
    if isinstance(node, Pow):
        return Pow(twist(node.base, k), node.exp)
    if isinstance(node, BinOp):
        return BinOp(node.op, twist(node.left, k), twist(node.right, k))
    q = Monomial(k, 1)
    if node.name == "J":
        a, m = node.args
        return _jcall(q ** a, q ** m)
    if node.name == "Jb":
        a, m = node.args
        return _jcall(-(q ** a), q ** m)
    if node.name == "Jm":
        (m,) = node.args
        return _jcall(q ** m, q ** (3 * m))
    kinds = "".join(SIGNATURES[node.name])
    args = tuple(_twist_mono(v, k) if kind in "mb" else v for kind, v in zip(kinds, node.args))
    return Call(node.name, args)


# -- evaluation ---------------------------------------------------------------------------

class _Exact:
    """A Laurent polynomial with exact (infinite-precision) coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def scalar(cls, c):
        return cls({0: CycNum.coerce(c)})

    def single(self):
        return next(iter(self.terms.items())) if len(self.terms) == 1 else None

    def to_series(self, prec):
        return Series.from_dict(self.terms, prec)

    def span(self):
        if not self.terms:
            return 0, 0
        return min(self.terms), max(self.terms)

    def __add__(self, o):
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t.get(e, 0) + c
        return _Exact(t)

    def __neg__(self):
        return _Exact({e: -c for e, c in self.terms.items()})

    def __mul__(self, o):
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                t[e1 + e2] = t.get(e1 + e2, 0) + c1 * c2
        return _Exact(t)

    def times_series(self, s: Series) -> Series:
        out = None
        for e, c in self.terms.items():
            part = s.shift(e).scale(c)
            out = part if out is None else out + part
        return out if out is not None else Series.zero(s.prec)


def k_max(node) -> int:
    """Largest substitution stretch q -> q^k appearing in mock-function calls."""
    if isinstance(node, Call):
        if node.name in ("phi", "psi", "X", "chi"):
            return node.args[0].exp
        return 1
    if isinstance(node, BinOp):
        return max(k_max(node.left), k_max(node.right))
    if isinstance(node, (Neg,)):
        return k_max(node.operand)
    if isinstance(node, Pow):
        return k_max(node.base)
    return 1


_MOCK = {"phi": mock.MockKind.phi, "psi": mock.MockKind.psi,
         "X": mock.MockKind.bigX, "chi": mock.MockKind.chi}


def _call(node: Call, prec: int) -> Series:
    a = node.args
    name = node.name
    if name == "j":
        return theta.theta_j(a[0], a[1], prec)
    if name == "J":
        return theta.J_ab(a[0], a[1], prec)
    if name == "Jb":
        return theta.Jbar_ab(a[0], a[1], prec)
    if name == "Jm":
        return theta.J_m(a[0], prec)
    if name == "P":
        if a[2] == INF:
            return theta.poch_inf(a[0], a[1], prec)
        return theta.poch_finite(a[0], a[1], a[2], prec)
    if name == "m":
        return appell.m_series(a[0], a[1], a[2], prec)
    if name == "f":
        return hecke.f_hecke(a[0], a[1], a[2], a[3], a[4], a[5], prec)
    if name == "D":
        return dn.dn_def(a[0], a[1], a[2], a[3], a[4], prec)
    return mock.mock_at(_MOCK[name], a[0], prec)


def _describe(node) -> str:
    if isinstance(node, Call):
        return f"{node.name}(...)"
    if isinstance(node, BinOp):
        return f"'{node.op}'"
    return type(node).__name__


def _eval(node, prec: int, path: str):
    if isinstance(node, Num):
        return _Exact.scalar(node.value)
    if isinstance(node, Unit):
        return _Exact.scalar(zeta_power(node.k))
    if isinstance(node, Mono):
        return _Exact({node.mono.exp: node.mono.unit})
    if isinstance(node, Call):
        return _wrap(lambda: _call(node, prec), path + "/" + _describe(node))
    here = path + "/" + _describe(node)
    if isinstance(node, Neg):
        v = _eval(node.operand, prec, here)
        return -v
    if isinstance(node, Pow):
        v = _eval(node.base, prec, here)
        n = node.exp
        if isinstance(v, _Exact):
            one = v.single()
            if one is not None:
                e, c = one
                return _Exact({e * n: c ** n})
            if n >= 0:
                out = _Exact.scalar(1)
                for _ in range(n):
                    out = out * v
                return out
            lo, hi = v.span()
            v = v.to_series(prec + 2 * abs(lo) + (hi - lo) + 1)
        return _wrap(lambda: v ** n, here)
    left = _eval(node.left, prec, here + "/left")
    right = _eval(node.right, prec, here + "/right")
    op = node.op
    if op in "+-":
        if op == "-":
            right = -right
        if isinstance(left, _Exact) and isinstance(right, _Exact):
            return left + right
        if isinstance(left, _Exact):
            left, right = right, left
        if isinstance(right, _Exact):
            return left + right.to_series(left.prec)
        return left + right
    if op == "*":
        if isinstance(left, _Exact) and isinstance(right, _Exact):
            return left * right
        if isinstance(left, _Exact):
            return left.times_series(right)
        if isinstance(right, _Exact):
            return right.times_series(left)
        return left * right
    # division
    if isinstance(right, _Exact):
        one = right.single()
        if one is not None:
            e, c = one
            if not c:
                raise ZeroDivisionError(f"division by zero [at {here}]")
            inv = _Exact({-e: c.inverse()})
            return inv * left if isinstance(left, _Exact) else inv.times_series(left)
        lo, hi = right.span()
        top = left.prec if isinstance(left, Series) else prec
        right = right.to_series(top + 2 * abs(lo) + abs(hi) + 1)
    if isinstance(left, _Exact):
        lo, hi = left.span()
        left = left.to_series(prec + abs(lo) + abs(hi) + 1)
    return _wrap(lambda: left / right, here)


def _wrap(fn, where):
    try:
        return fn()
    except QVerifyError as exc:
        if getattr(exc, "path", None):
            raise
        new = type(exc)(f"{exc} [at {where}]")
        new.path = where
        raise new from exc


def eval_expr(node, prec: int) -> Series:
    """Evaluate with every generator asked for precision ``prec``."""
    v = _eval(node, prec, "")
    if isinstance(v, _Exact):
        lo, hi = v.span()
        return v.to_series(max(prec, hi + 1))
    return v


def evaluate(node, order: int, guard: Optional[int] = None) -> Series:
    """Evaluate ``node`` so that every coefficient through q^order is known."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if guard is None:
        guard = 8 * k_max(node)
    for _ in range(6):
        s = eval_expr(node, order + 1 + guard)
        if s.prec >= order + 1:
            return s
        guard += 2 * (order + 1 - s.prec) + 8
    raise PrecisionTooLow(f"could not reach precision {order + 1}")
