"""The Turing-Schmerl calculus: ordinal modalities, normal forms, derivability.

Typical use::

    from tsc import parse_formula, normalize, decide
    phi = parse_formula("<0^1><1^1>(<0^w^w*2>T /\\ <2^1>T)")
    print(normalize(phi))          # <0^w^(w*2)*2>T /\\ <1^w*2>T /\\ <2^1>T
"""

from .calculus import (
    Derivation, NotDerivable, apply_rule, check_derivation, derive_witness,
    match_axiom, saturate,
)
from .decision import (
    Verdict, consequence_bound, decide, decide_mnf, equiv_level, equivalent,
    pi_fragment,
)
from .errors import (
    InvalidDivisor, InvariantViolation, NotDivisible, OrdinalUnderflow, ParseError,
    PreconditionViolation, ResourceLimit, RuleMismatch, TSCError,
)
from .kinds import StepKind, TraceStep
from .normalform import (
    Inf, Mnf, Monomial, check_inf, check_mnf, embed, inf_to_mnf, insert_monomial,
    merge_mnf, mnf_to_inf, normalize, normalize_to_inf, normalize_traced,
    push_modality,
)
from .ordinal import (
    OMEGA, ONE, ZERO, Ordinal, Ordering, cnf_terms, hyper_exp, ord_add, ord_compare,
    ord_format, ord_left_divide, ord_left_subtract, ord_multiply, ord_parse,
)
from .syntax import (
    TOP, And, Diamond, Sequent, Top, Worm, as_worm, format_formula, format_sequent,
    in_fragment, n_mod, o_mod, parse_formula, parse_sequent,
)

__all__ = [name for name in dir() if not name.startswith("_")]
