"""Exact q-series over Q(zeta_12): theta functions, Appell-Lerch sums,
Hecke-type double sums, tenth-order mock theta functions, and an engine
that checks identities between them coefficient by coefficient.
"""
from .cyclofield import CycNum, ZETA, OMEGA, I, field_add, field_mul, field_inv, root_of_unity
from .qseries import Monomial, Series, Q, s_add, s_mul, s_div, s_subst, s_eq_to, s_geom_inv_one_minus
from .theta import poch_finite, poch_inf, theta_j, theta_j_product, J_ab, Jbar_ab, J_m
from .appell import m_series, m_changing_z
from .hecke import f_hecke, f232_appell
from .mock import MockKind, mock_series, mock_at
from .dn import dn_def, dn_closed, d2_closed, d3_closed
from .dsl import parse, parse_expr, render, evaluate
from .catalog import IdentitySpec, VerificationReport, builtin_catalog, verify, verify_all
from .errors import *  # noqa: F401,F403

__version__ = "0.1.0"
