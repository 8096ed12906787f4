"""
Appell-Lerch sums and Hecke-type double sums
============================================

The mock functions are also indefinite theta series.  ``f_hecke`` sums
f_{a,b,c}(x, y; q) over two opposite quadrants; ``m_series`` evaluates the
Appell-Lerch sum m(x, q, z).  The example checks J_{1,2} phi(q) against the
double sum and then against its Appell-Lerch expansion.
"""
from qverify import MockKind, Monomial, Q, f232_appell, f_hecke, m_series, mock_series
from qverify.appell import m_numerator
from qverify.theta import J_ab

N = 41
phi_side = J_ab(1, 2, N) * mock_series(MockKind.phi, N)
double_sum = f_hecke(2, 3, 2, Q ** 2, Q ** 2, Q, N)
print("J_{1,2} phi(q) = f_{2,3,2}(q^2, q^2; q):", phi_side.eq_to(double_sum, N - 1)[0])

# The box of summation grows until two consecutive rings add nothing below
# q^N.  Demanding eight quiet rings does not change a coefficient.
wider = f_hecke(2, 3, 2, Q ** 2, Q ** 2, Q, N, quiet_rings=8)
print("window doubling stable:", wider.coeffs() == double_sum.coeffs())

###############################################################################
# Appell-Lerch form
# -----------------
# f_{2,3,2} splits into four theta-times-m terms plus a theta quotient.

expanded = f232_appell(Q ** 2, Q ** 2, Q, N)
print("Appell-Lerch expansion agrees:", double_sum.eq_to(expanded, N - 1)[0])

###############################################################################
# m(x, q, z) itself
# -----------------
# m is unchanged by z -> z q (the base), and by z -> 1/(x z).

x, base, z = Monomial(6, 2), Q ** 5, Monomial(4, 1)
m0 = m_series(x, base, z, 30)
print("m(-q^2, q^5, w q) =", m0.truncate(8))
print("shift z by base:", m0.eq_to(m_series(x, base, base * z, 30), 29)[0])
print("reflect z:", m0.eq_to(m_series(x, base, (x * z).inverse(), 30), 29)[0])

# The numerator sum stops after twenty consecutive r contribute nothing;
# forty gives the same series.
print("window doubling:", m_numerator(x, base, z, 30).coeffs()
      == m_numerator(x, base, z, 30, stop_after=40).coeffs())
