"""JSON forms of normal forms, verdicts and derivations, with their schemas.

Bases are JSON integers; ordinals and formulas are strings in the
canonical text syntax, so every string re-parses with :func:`ord_parse`
or :func:`parse_formula`.  Key order is fixed, which keeps the output
byte-stable across runs.

Derivation node::

    {"kind": "R2", "params": {"alpha": "w+1", "n": 0},
     "conclusion": {"antecedent": "...", "succedent": "..."},
     "premises": [<node>, ...]}
"""

from .calculus.core import Derivation
from .kinds import ALL_TAGS, StepKind
from .normalform import Mnf, Monomial, mnf_to_inf
from .ordinal import Ordinal, ord_format, ord_parse
from .syntax import Sequent, format_formula, parse_formula

__all__ = [
    "ORDINAL_PARAMS", "mnf_to_json", "mnf_from_json", "verdict_to_json",
    "derivation_to_json", "derivation_from_json", "sequent_to_json",
    "MNF_SCHEMA", "VERDICT_SCHEMA", "DERIVATION_SCHEMA",
]

ORDINAL_PARAMS = frozenset({"alpha", "beta"})


def _encode(value):
    if isinstance(value, Ordinal):
        return ord_format(value)
    return value


def mnf_to_json(psi, with_inf=False):
    out = {
        "formula": format_formula(psi.formula()),
        "monomials": [{"base": m.base, "exponent": ord_format(m.exponent)}
                      for m in psi.monomials],
    }
    if with_inf:
        out["inf"] = format_formula(mnf_to_inf(psi).formula())
    return out


def mnf_from_json(data):
    return Mnf(tuple(Monomial(m["base"], ord_parse(m["exponent"]))
                     for m in data["monomials"]))


def _report_to_json(r):
    return {"m": r.m, "beta": ord_format(r.beta), "n": r.n, "bound": ord_format(r.bound)}


def verdict_to_json(v):
    failure = None
    if v.failure is not None:
        f = v.failure
        failure = {
            "kind": f.kind,
            "message": f.describe(),
            "report": None if f.report is None else _report_to_json(f.report),
        }
    return {
        "derivable": v.derivable,
        "antecedent": mnf_to_json(v.antecedent),
        "succedent": mnf_to_json(v.succedent),
        "reports": [_report_to_json(r) for r in v.reports],
        "failure": failure,
    }


def sequent_to_json(s):
    return {"antecedent": format_formula(s.antecedent),
            "succedent": format_formula(s.succedent)}


def derivation_to_json(d):
    memo = {}

    def node(x):
        key = id(x)
        if key not in memo:
            memo[key] = {
                "kind": x.kind.tag,
                "params": {k: _encode(v) for k, v in x.kind.params},
                "conclusion": sequent_to_json(x.conclusion),
                "premises": [node(p) for p in x.premises],
            }
        return memo[key]

    return node(d)


def derivation_from_json(data):
    params = {k: ord_parse(v) if k in ORDINAL_PARAMS else v
              for k, v in data["params"].items()}
    c = data["conclusion"]
    return Derivation(
        Sequent(parse_formula(c["antecedent"]), parse_formula(c["succedent"])),
        StepKind.of(data["kind"], **params),
        tuple(derivation_from_json(p) for p in data["premises"]),
    )


# schemas (JSON Schema draft 2020-12)

_ORD = {"type": "string", "minLength": 1}
_NAT = {"type": "integer", "minimum": 0}

MNF_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Mnf",
    "type": "object",
    "required": ["formula", "monomials"],
    "properties": {
        "formula": {"type": "string"},
        "inf": {"type": "string"},
        "monomials": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["base", "exponent"],
                "properties": {"base": _NAT, "exponent": _ORD},
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

_REPORT = {
    "type": "object",
    "required": ["m", "beta", "n", "bound"],
    "properties": {"m": _NAT, "beta": _ORD, "n": _NAT, "bound": _ORD},
    "additionalProperties": False,
}

_NODE = {
    "type": "object",
    "required": ["kind", "params", "conclusion", "premises"],
    "properties": {
        "kind": {"enum": list(ALL_TAGS)},
        "params": {
            "type": "object",
            "properties": {
                "n": _NAT, "m": _NAT, "alpha": _ORD, "beta": _ORD,
                "dir": {"enum": ["lr", "rl"]},
            },
            "additionalProperties": False,
        },
        "conclusion": {
            "type": "object",
            "required": ["antecedent", "succedent"],
            "properties": {"antecedent": {"type": "string"},
                           "succedent": {"type": "string"}},
            "additionalProperties": False,
        },
        "premises": {"type": "array", "items": {"$ref": "#/$defs/node"}},
    },
    "additionalProperties": False,
}

VERDICT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Verdict",
    "$defs": {"node": _NODE},
    "type": "object",
    "required": ["derivable", "antecedent", "succedent", "reports", "failure"],
    "properties": {
        "derivable": {"type": "boolean"},
        "antecedent": MNF_SCHEMA,
        "succedent": MNF_SCHEMA,
        "reports": {"type": "array", "items": _REPORT},
        "witness": {"$ref": "#/$defs/node"},
        "failure": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["kind", "message", "report"],
                    "properties": {
                        "kind": {"enum": ["empty-antecedent", "base-overflow", "bound"]},
                        "message": {"type": "string"},
                        "report": {"oneOf": [{"type": "null"}, _REPORT]},
                    },
                    "additionalProperties": False,
                },
            ]
        },
    },
    "additionalProperties": False,
}

DERIVATION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Derivation",
    "$ref": "#/$defs/node",
    "$defs": {"node": _NODE},
}
