"""The calculus as data: axioms, rules, derivations and their checking."""

from ..kinds import StepKind, TraceStep
from .core import (
    CheckResult, Derivation, apply_rule, check_derivation, format_derivation,
    instantiate_derived,
    match_axiom, same_formula,
)
from .saturation import DESK_PROFILE, Saturation, exponent_pool, formula_universe, saturate
from .witness import NOT_DERIVABLE, NotDerivable, compose, derive_witness

__all__ = [
    "StepKind", "TraceStep", "Derivation", "CheckResult", "match_axiom",
    "apply_rule", "check_derivation", "format_derivation", "instantiate_derived", "same_formula",
    "NotDerivable", "NOT_DERIVABLE", "derive_witness", "compose",
    "saturate", "Saturation", "exponent_pool", "formula_universe", "DESK_PROFILE",
]
