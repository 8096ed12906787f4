"""
Writing identities as text
==========================

Any identity between the supported objects can be written in the small
expression language and checked to a chosen order, from Python or from the
``qverify`` command.
"""
import subprocess
import sys
import tempfile
from pathlib import Path

from qverify import evaluate, parse_expr, render
from qverify.catalog import spec_from_statement, verify
from qverify.dsl import parse_identity_file

# Calls take ';' between argument groups of different kinds.
node = parse_expr("J(1,2)*phi(q) - f(2,3,2; q^2, q^2; q)")
print(render(node))
print("through q^30:", evaluate(node, 30).truncate(31))

###############################################################################
# An identity file
# ----------------
# ``name : LHS == RHS [@ order]``, one per line.  The second statement below
# is wrong in its q^4 coefficient.

text = """\
# Euler's pentagonal number theorem, with J_1 = (q; q)_inf
euler : Jm(1) == j(q; q^3) @ 80
# a wrong guess for phi
phi-guess : phi(q) == 1 + 2*q + 2*q^2 + 3*q^3 + 3*q^4
"""
for st in parse_identity_file(text):
    r = verify(spec_from_statement(st, 20))
    if r.passed:
        print(f"{st.name:10s} q^{r.order_checked:<3d} pass")
    else:
        e, a, b = r.first_mismatch
        print(f"{st.name:10s} q^{r.order_checked:<3d} first mismatch at q^{e}: {a} vs {b}")

###############################################################################
# Same file from the command line
# -------------------------------
# The exit status is 0 only when everything passes.

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "mine.ids"
    path.write_text(text, encoding="utf-8")
    proc = subprocess.run([sys.executable, "-m", "qverify", "--file", str(path), "--order", "20"],
                          capture_output=True, text=True)
    print(proc.stdout, "exit status", proc.returncode)
