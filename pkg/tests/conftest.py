import os
import sys

from hypothesis import HealthCheck, settings, strategies as st

from qverify.qseries import Monomial

settings.register_profile(
    "default", deadline=None, max_examples=50,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile(os.environ.get("QVERIFY_HYPOTHESIS", "default"))

units = st.integers(min_value=0, max_value=11)


def monomials(lo=-4, hi=4):
    return st.builds(Monomial, units, st.integers(min_value=lo, max_value=hi))


def bases(hi=4):
    return st.builds(Monomial, units, st.integers(min_value=1, max_value=hi))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS):
            terminalreporter.write_line(line)
