"""
Truncated q-series and theta functions
======================================

Coefficients live in Q(zeta_12), the smallest field holding both the cube
roots and the fourth roots of unity.  A series remembers how many of its
coefficients are known, and every operation keeps that bookkeeping honest.
"""
from qverify import OMEGA, Monomial, Q, Series, theta_j, theta_j_product

# A monomial is a twelfth root of unity times a power of q.  Unit index 4 is
# omega = exp(2 pi i / 3); index 6 is -1.
w_q = Monomial(4, 1)
print(w_q, "   squared:", w_q ** 2, "   negated:", -w_q)

###############################################################################
# Series arithmetic
# -----------------
# ``prec`` is the first exponent whose coefficient is unknown.  Dividing by
# 1 - q gives the geometric series, known as far as the inputs allow.

one_minus_q = Series.from_dict({0: 1, 1: -1}, 12)
geometric = 1 / one_minus_q
print(geometric)

# A product is known below min(prec_a + val_b, prec_b + val_a), so a factor
# that starts at q^3 buys three extra coefficients.
cubed = Series.from_dict({3: 1}, 20)
print("prec of product:", (geometric * cubed).prec)

###############################################################################
# Field arithmetic behind the scenes
# ----------------------------------
# omega satisfies omega^2 + omega + 1 = 0.

print("1 + w + w^2 =", 1 + OMEGA + OMEGA * OMEGA)

###############################################################################
# Jacobi's triple product
# -----------------------
# ``theta_j`` sums the bilateral series directly; ``theta_j_product`` multiplies
# the three infinite products.  They agree coefficient by coefficient.

x, base = Monomial(4, 1), Q ** 3
lhs = theta_j(x, base, 60)
rhs = theta_j_product(x, base, 60)
ok, mismatch = lhs.eq_to(rhs, 59)
print("j(w q; q^3) through q^59:", "agree" if ok else mismatch)
# Coefficients print in the power basis of zeta_12, written z; omega is z^4,
# which reduces to z^2 - 1.
print(lhs.truncate(12))
