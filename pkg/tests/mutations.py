"""Small deliberate corruptions of catalog entries (negative controls)."""
from dataclasses import replace

from qverify.dsl import BinOp, Call, Mono, Neg, Pow
from qverify.qseries import Monomial, Q


def flip_sign(spec):
    return replace(spec, rhs=Neg(spec.rhs))


def add_term(spec, e=7):
    return replace(spec, rhs=BinOp("+", spec.rhs, Mono(Q ** e)))


def _first_call(node, fn):
    """Rewrite the first call for which ``fn`` returns a new node."""
    if isinstance(node, Call):
        new = fn(node)
        return (new, True) if new is not None else (node, False)
    if isinstance(node, BinOp):
        left, done = _first_call(node.left, fn)
        if done:
            return BinOp(node.op, left, node.right), True
        right, done = _first_call(node.right, fn)
        return BinOp(node.op, node.left, right), done
    if isinstance(node, Neg):
        inner, done = _first_call(node.operand, fn)
        return Neg(inner), done
    if isinstance(node, Pow):
        inner, done = _first_call(node.base, fn)
        return Pow(inner, node.exp), done
    return node, False


def bump_modulus(spec):
    """Raise the modulus of the first J, Jb or Jm call on the right side by one."""
    def fn(c):
        if c.name in ("J", "Jb", "Jm"):
            return Call(c.name, c.args[:-1] + (c.args[-1] + 1,))
    rhs, done = _first_call(spec.rhs, fn)
    assert done, spec.id
    return replace(spec, rhs=rhs)


def shift_argument(spec):
    """Multiply the first monomial argument of the first j or m call by q."""
    def fn(c):
        if c.name in ("j", "m"):
            return Call(c.name, (c.args[0] * Q,) + c.args[1:])
    rhs, done = _first_call(spec.rhs, fn)
    assert done, spec.id
    return replace(spec, rhs=rhs)


def swap_omega(spec):
    """Replace every q-free omega factor on the right by its conjugate."""
    def walk(node):
        if isinstance(node, Mono):
            m = node.mono
            return Mono(Monomial(-m.k, m.exp)) if m.k % 4 == 0 and m.k % 12 else node
        if isinstance(node, Call):
            return Call(node.name, tuple(Monomial(-a.k, a.exp) if isinstance(a, Monomial) and a.k % 4 == 0 else a
                                         for a in node.args))
        if isinstance(node, BinOp):
            return BinOp(node.op, walk(node.left), walk(node.right))
        if isinstance(node, Neg):
            return Neg(walk(node.operand))
        if isinstance(node, Pow):
            return Pow(walk(node.base), node.exp)
        return node
    return replace(spec, rhs=walk(spec.rhs))


# (catalog id, mutation) pairs used as negative controls
CONTROLS = [
    ("tenth-phi9-psi", flip_sign),
    ("tenth-X9-chi", add_term),
    ("appell-phi", shift_argument),
    ("hecke-X", flip_sign),
    ("d2-eval-psi-a", bump_modulus),
    ("theta-quintic-one", bump_modulus),
    ("d3-eval-phi9-a-w", swap_omega),
    ("weierstrass-1", add_term),
]
