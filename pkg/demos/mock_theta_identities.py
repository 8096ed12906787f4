"""
The tenth-order mock theta functions
====================================

phi, psi, X and chi are defined by Eulerian sums.  Six identities tie the
value at q^9 (or at q^8 and -q^4) to values at omega q and omega^2 q, with a
theta quotient left over.  Here one of them is checked by hand, then all six
through the built-in catalog.
"""
import time

from qverify import MockKind, Monomial, Q, mock_at, mock_series
from qverify.catalog import catalog_by_id, verify
from qverify.theta import J_ab, J_m

print("phi =", mock_series(MockKind.phi, 8))
print("psi =", mock_series(MockKind.psi, 8))
print("X   =", mock_series(MockKind.bigX, 8))
print("chi =", mock_series(MockKind.chi, 8))

###############################################################################
# One identity, assembled from the modules
# ----------------------------------------
#
#   q^2 phi(q^9) - (psi(w q) - psi(w^2 q)) / (w - w^2)
#       = -q J_{1,2} J_{3,15} J_6 / (J_{3,6} J_3)
#
# ``mock_at`` substitutes q -> (unit) q^k into the stored series.

N = 40
w, w2 = Monomial(4, 0), Monomial(8, 0)
lhs = (mock_at(MockKind.phi, Q ** 9, N).shift(2)
       - (mock_at(MockKind.psi, Monomial(4, 1), N) - mock_at(MockKind.psi, Monomial(8, 1), N))
       .scale(1 / (w.unit - w2.unit)))
rhs = -(J_ab(1, 2, N) * J_ab(3, 15, N) * J_m(6, N) / (J_ab(3, 6, N) * J_m(3, N))).shift(1)
ok, mismatch = lhs.eq_to(rhs, N - 1)
print("by hand through q^%d:" % (N - 1), "agree" if ok else mismatch)

# The omega terms cancel in pairs, so both sides have rational coefficients.
print("rational:", lhs.truncate(N).is_rational())

###############################################################################
# All six through the catalog
# ---------------------------

by_id = catalog_by_id()
t0 = time.perf_counter()
for name in ["tenth-phi9-psi", "tenth-psi9-phi", "tenth-X9-chi", "tenth-chi9-X",
             "tenth-phi-psi-chi8", "tenth-psi-phi-X8"]:
    r = verify(by_id[name], 50)
    print(f"{name:22s} q^{r.order_checked}  {'pass' if r.passed else r.first_mismatch}")
print(f"{time.perf_counter() - t0:.2f} s")
