"""Lowest zeros of Dedekind zeta functions: effective bounds and direct computation.

Quick start::

    from lowzero import parse_field_spec, theorem1_bound, tau_quadratic
    K = parse_field_spec("x^2+510510")
    theorem1_bound(K.alpha)     # 22.2098...
    tau_quadratic(K.disc)[0].tau  # 0.195366...
"""

from .bounds import (
    BoundReport,
    ConstantAudit,
    bound_report,
    central_order_bound,
    derive_inequality_constants,
    lemma3_threshold,
    neugebauer_bound,
    remark_variant_bound,
    theorem1_bound,
    theorem2_bound,
)
from .explicit_formula import ExplicitFormulaBreakdown, weil_residual
from .fields import RATIONALS, KroneckerCharacter, NumberField, parse_field_spec
from .lfunctions import LFunctionSpec, hardy_z
from .primes import mangoldt_sieve
from .testfn import f_eval, fhat_closed, fhat_T
from .zeros import lowest_zero, scan_zeros, tau_quadratic

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ConstantAudit",
    "ExplicitFormulaBreakdown",
    "KroneckerCharacter",
    "LFunctionSpec",
    "NumberField",
    "RATIONALS",
    "bound_report",
    "central_order_bound",
    "derive_inequality_constants",
    "f_eval",
    "fhat_T",
    "fhat_closed",
    "hardy_z",
    "lemma3_threshold",
    "lowest_zero",
    "mangoldt_sieve",
    "neugebauer_bound",
    "parse_field_spec",
    "remark_variant_bound",
    "scan_zeros",
    "tau_quadratic",
    "theorem1_bound",
    "theorem2_bound",
    "weil_residual",
]
