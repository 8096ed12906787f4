"""Acceptance criteria, one test and one PASS/FAIL line each.

All comparisons are exact: a criterion passes only with zero coefficient
mismatches through the pinned order.  Random instances use fixed seeds.
Run ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``
to see the lines as they are produced; pytest also repeats them in its summary.
"""
import json
import random
import subprocess
import sys
import time

import jsonschema
from hypothesis import given, settings

from qverify import catalog as cat
from qverify.appell import m_numerator
from qverify.catalog import IdentitySpec, builtin_catalog, catalog_by_id, verify
from qverify.dn import dn_closed, dn_def
from qverify.dsl import parse_expr, parse_statement, render
from qverify.errors import QVerifyError
from qverify.hecke import f_hecke
from qverify.mock import MockKind, mock_series
from qverify.qseries import Monomial, Q
from qverify.theta import in_base_lattice, theta_j, theta_j_product

# pinned thresholds
MAIN_ORDER, MAIN_SECONDS = 50, 60.0
APPELL_ORDER = 50
HECKE_ORDER = 40
DN_ORDER, DN_INSTANCES = 30, 10
D_EVAL_ORDER = 40
TRIPLE_ORDER, TRIPLE_ARGS = 200, 20
LAW_ORDER, LAW_INSTANCES = 60, 50
QUINTIC_ORDER = 200
M_ORDER, M_INSTANCES = 40, 25
MIN_MUTANTS = 5
GENERATED_ASTS = 500
CLI_ORDER = 50

MAIN_IDS = ["tenth-phi9-psi", "tenth-psi9-phi", "tenth-X9-chi", "tenth-chi9-X",
            "tenth-phi-psi-chi8", "tenth-psi-phi-X8"]

RESULTS = []


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line, flush=True)
    assert ok, line


def check_ids(ids, order):
    by_id = catalog_by_id()
    reports = [verify(by_id[i], order) for i in ids]
    bad = [(r.id, r.first_mismatch, r.error) for r in reports if not r.passed]
    return not bad, bad


def check_pair(pair, order):
    lhs, rhs = pair
    return verify(IdentitySpec("instance", parse_expr(lhs), parse_expr(rhs), order), order)


def rand_mono(rng, lo=-6, hi=6):
    return Monomial(rng.randrange(12), rng.randint(lo, hi))


def rand_base(rng, hi=3):
    return Monomial(rng.randrange(12), rng.randint(1, hi))


def random_instances(rng, make, count, order, attempts=400):
    """Verify ``count`` instances of a family, skipping non-generic draws.

    Returns (passed, failed ids, skipped)."""
    passed, failed, skipped = 0, [], 0
    for _ in range(attempts):
        if passed + len(failed) == count:
            break
        args = make(rng)
        r = check_pair(args[0], order)
        if r.error:
            skipped += 1
        elif r.passed:
            passed += 1
        else:
            failed.append((args[1], r.first_mismatch))
    return passed, failed, skipped


def test_criterion_1_main_identities():
    cmd = [sys.executable, "-m", "qverify", "--order", str(MAIN_ORDER), "--report", "json"]
    for i in MAIN_IDS:
        cmd += ["--identity", i]
    t0 = time.perf_counter()
    proc = subprocess.run(cmd, capture_output=True, text=True)
    elapsed = time.perf_counter() - t0
    data = json.loads(proc.stdout) if proc.stdout else []
    ok = proc.returncode == 0 and len(data) == 6 and all(d["pass"] and d["order"] == MAIN_ORDER for d in data)
    record(1, ok and elapsed < MAIN_SECONDS,
           f"six mock identities to q^{MAIN_ORDER}: {sum(d['pass'] for d in data)}/6, "
           f"fresh process {elapsed:.1f} s (limit {MAIN_SECONDS:.0f} s)")


def test_criterion_2_appell_representations():
    ok, bad = check_ids(["appell-phi", "appell-psi", "appell-X", "appell-chi"], APPELL_ORDER)
    phi = mock_series(MockKind.phi, 4)
    head = [str(phi[e]) for e in range(4)]
    record(2, ok and head == ["1", "2", "2", "3"],
           f"four representations to q^{APPELL_ORDER} {'ok' if ok else bad}; phi head {' '.join(head)}")


HECKE_ARGS = [(Q ** 2, Q), (Q ** 4, Q), (-(Q ** 3), Q ** 2), (-(Q ** -1), Q ** 2)]


def test_criterion_3_hecke_rewrites():
    ok, bad = check_ids(["hecke-phi", "hecke-psi", "hecke-X", "hecke-chi"], HECKE_ORDER)
    stable = all(
        f_hecke(2, 3, 2, x, x, b, HECKE_ORDER + 2, quiet_rings=2).coeffs()
        == f_hecke(2, 3, 2, x, x, b, HECKE_ORDER + 2, quiet_rings=8).coeffs()
        for x, b in HECKE_ARGS)
    record(3, ok and stable,
           f"four rewrites to q^{HECKE_ORDER} {'ok' if ok else bad}; window doubling stable: {stable}")


def test_criterion_4_dn_closed_form():
    rng = random.Random(4)
    counts, bad = {}, []
    for n in (1, 2, 3):
        counts[n] = 0
        while counts[n] < DN_INSTANCES:
            x, z, zp = rand_mono(rng, -4, 4), rand_mono(rng, -4, 4), rand_mono(rng, -4, 4)
            try:
                a = dn_def(n, x, Q, z, zp, DN_ORDER + 1)
                b = dn_closed(n, x, Q, z, zp, DN_ORDER + 1)
            except QVerifyError:
                continue
            good, mm = a.eq_to(b, DN_ORDER)
            counts[n] += 1
            if not good:
                bad.append((n, x, z, zp, mm))
    args = (Monomial(4, 1), Q, Monomial(3, 1), Monomial(8, 2), DN_ORDER + 1)
    spot, _ = dn_def(4, *args).eq_to(dn_closed(4, *args), DN_ORDER)
    record(4, not bad and spot,
           f"D_n definition = closed form to q^{DN_ORDER} on {counts} generic quadruples "
           f"(failures {len(bad)}); n=4 spot check {spot}")


def test_criterion_5_d_evaluations():
    singles = [s.id for s in builtin_catalog()
               if (s.id.startswith("d2-eval-") or s.id.startswith("d3-eval-")) and "twisted" not in s.tags]
    twisted = [s for s in builtin_catalog() if s.id.startswith("d3-eval-") and "twisted" in s.tags]
    ids = singles + ["d2-X-first", "d2-X-second"] + [s.id for s in twisted]
    ok, bad = check_ids(ids, D_EVAL_ORDER)
    bases = {str(b) for s in twisted for b in _d_bases(s.lhs)}
    need = {str(Monomial(4, 10)), str(Monomial(4, 5)), str(Monomial(8, 5))}
    record(5, ok and len(singles) == 12 and need <= bases,
           f"{len(singles)} single-quotient D values, 2 D_2 values for X and {len(twisted)} unit-base "
           f"D_3 values to q^{D_EVAL_ORDER} {'ok' if ok else bad}; unit bases {sorted(need & bases)}")


def _d_bases(node):
    from qverify.dsl import BinOp, Call, Neg, Pow
    if isinstance(node, Call):
        return [node.args[2]] if node.name == "D" else []
    if isinstance(node, BinOp):
        return _d_bases(node.left) + _d_bases(node.right)
    if isinstance(node, (Neg, Pow)):
        return _d_bases(node.operand if isinstance(node, Neg) else node.base)
    return []


def _generic(x, b, *others):
    return not any(in_base_lattice(v, b) for v in (x,) + others)


THETA_FAMILIES = {
    "quasi-period": lambda r: (lambda x, b, n: (cat.quasi_period(x, b, n), (x, b, n)))(
        rand_mono(r), rand_base(r), r.randint(-4, 4)),
    "inversion": lambda r: (lambda x, b: (cat.inversion_a(x, b), (x, b)))(rand_mono(r), rand_base(r)),
    "inversion-sign": lambda r: (lambda x, b: (cat.inversion_b(x, b), (x, b)))(rand_mono(r), rand_base(r)),
    "modulus-increase": lambda r: (lambda x, n: (cat.modulus_increase(x, n), (x, n)))(
        rand_mono(r), r.randint(2, 4)),
    "negated-base": lambda r: (lambda x: (cat.negated_base(x), x))(rand_mono(r)),
    "dissection": lambda r: (lambda z, m: (cat.dissection(z, m), (z, m)))(rand_mono(r), r.randint(1, 4)),
    "root-product": lambda r: (lambda x, n: (cat.root_product(x, n), (x, n)))(
        rand_mono(r, -4, 4), r.choice([2, 3, 4, 6])),
    "cubic": lambda r: (lambda x: (cat.cubic_a(x), x))(rand_mono(r, -4, 4)),
    "cubic-product": lambda r: (lambda x: (cat.cubic_b(x), x))(rand_mono(r, -4, 4)),
    "product-two": lambda r: (lambda x, y: (cat.product_two(x, y), (x, y)))(rand_mono(r), rand_mono(r)),
    "sum-two": lambda r: (lambda x, y: (cat.sum_two(x, y), (x, y)))(rand_mono(r), rand_mono(r)),
    "weierstrass": lambda r: (lambda a, b, c, d, base: (cat.weierstrass(a, b, c, d, base), (a, b, c, d, base)))(
        rand_mono(r, -4, 4), rand_mono(r, -4, 4), rand_mono(r, -4, 4), rand_mono(r, -4, 4), rand_base(r, 2)),
}


def test_criterion_6_theta_toolkit():
    rng = random.Random(6)
    triple_bad = []
    args = 0
    while args < TRIPLE_ARGS:
        # the product side needs 0 <= exp(x) <= exp(base)
        b = rand_base(rng, 4)
        x = rand_mono(rng, 0, b.exp)
        if in_base_lattice(x, b):
            continue
        args += 1
        good, mm = theta_j(x, b, TRIPLE_ORDER + 1).eq_to(theta_j_product(x, b, TRIPLE_ORDER + 1), TRIPLE_ORDER)
        if not good:
            triple_bad.append((x, b, mm))
    family = {}
    for name, make in THETA_FAMILIES.items():
        family[name] = random_instances(rng, make, LAW_INSTANCES, LAW_ORDER)
    laws_ok = all(p == LAW_INSTANCES and not f for p, f, _ in family.values())
    quint_ok, quint_bad = check_ids(["theta-quintic-one", "theta-quintic-two"], QUINTIC_ORDER)
    summary = ", ".join(f"{k} {p}/{LAW_INSTANCES}" for k, (p, f, s) in family.items())
    record(6, not triple_bad and laws_ok and quint_ok,
           f"triple product {args - len(triple_bad)}/{args} at q^{TRIPLE_ORDER}; laws at q^{LAW_ORDER}: "
           f"{summary}; quintic pair at q^{QUINTIC_ORDER} {'ok' if quint_ok else quint_bad}")


def _m_triple(r):
    while True:
        b = rand_base(r, 5)
        x, z = rand_mono(r, -5, 5), rand_mono(r, -5, 5)
        if _generic(z, b, x * z):
            return x, b, z


M_FAMILIES = {
    "shift-z": lambda r: (lambda t: (cat.m_shift(*t), t))(_m_triple(r)),
    "flip": lambda r: (lambda t: (cat.m_flip(*t), t))(_m_triple(r)),
    "reflect-z": lambda r: (lambda t: (cat.m_reflect(*t), t))(_m_triple(r)),
    "change-z": lambda r: (lambda t, z0: (cat.m_change(*t, z0), t + (z0,)))(_m_triple(r), rand_mono(r, -5, 5)),
}


def test_criterion_7_appell_functional_equations():
    rng = random.Random(7)
    family = {name: random_instances(rng, make, M_INSTANCES, M_ORDER) for name, make in M_FAMILIES.items()}
    eq_ok = all(p == M_INSTANCES and not f for p, f, _ in family.values())
    changed = 0
    checked = 0
    while checked < M_INSTANCES:
        x, b, z = _m_triple(rng)
        try:
            a = m_numerator(x, b, z, M_ORDER + 1, stop_after=20)
            w = m_numerator(x, b, z, M_ORDER + 1, stop_after=40)
        except QVerifyError:
            continue
        checked += 1
        changed += (a.coeffs() != w.coeffs())
    summary = ", ".join(f"{k} {p}/{M_INSTANCES}" for k, (p, f, s) in family.items())
    record(7, eq_ok and changed == 0,
           f"m functional equations at q^{M_ORDER}: {summary}; window doubling changed "
           f"{changed}/{checked} sums")


def test_criterion_8_mutants_fail():
    sys.path.insert(0, __file__.rsplit("/", 1)[0])
    from mutations import CONTROLS
    by_id = catalog_by_id()
    caught = []
    for name, mutate in CONTROLS:
        r = verify(mutate(by_id[name]), 40)
        if not r.passed and r.first_mismatch is not None:
            caught.append(f"{name}@q^{r.first_mismatch[0]}")
    record(8, len(caught) >= MIN_MUTANTS and len(caught) == len(CONTROLS),
           f"{len(caught)}/{len(CONTROLS)} mutated entries fail with a first mismatch: {', '.join(caught)}")


def test_criterion_9_dsl_and_cli():
    sys.path.insert(0, __file__.rsplit("/", 1)[0])
    from test_dsl import asts
    from report_schema import REPORT_SCHEMA

    builtin_bad = []
    for s in builtin_catalog():
        st = parse_statement(f"{s.id} : {s.text}")
        if (st.lhs, st.rhs) != (s.lhs, s.rhs):
            builtin_bad.append(s.id)

    seen = []

    @settings(max_examples=GENERATED_ASTS, derandomize=True, database=None)
    @given(asts)
    def round_trip(node):
        seen.append(node)
        assert parse_expr(render(node)) == node

    try:
        round_trip()
        gen_ok = True
    except AssertionError:
        gen_ok = False

    proc = subprocess.run([sys.executable, "-m", "qverify", "--all", "--order", str(CLI_ORDER),
                           "--report", "json"], capture_output=True, text=True)
    try:
        jsonschema.validate(json.loads(proc.stdout), REPORT_SCHEMA)
        schema_ok = True
    except (ValueError, jsonschema.ValidationError):
        schema_ok = False
    record(9, not builtin_bad and gen_ok and len(seen) >= GENERATED_ASTS and schema_ok and proc.returncode == 0,
           f"round trip on {len(builtin_catalog()) - len(builtin_bad)}/{len(builtin_catalog())} builtin entries "
           f"and {len(seen)} generated ASTs ({'ok' if gen_ok else 'FAILED'}); --all --order {CLI_ORDER} "
           f"json schema {'ok' if schema_ok else 'BAD'}, exit {proc.returncode}")


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
