"""Axiom matching, rule application and derivation checking.

Sequents are compared modulo the zero-exponent convention: ``<n^0>phi``
is read as ``phi`` everywhere, so every comparison below goes through
:func:`strip_zero` first.

Derived principles (PS1, PS2, EqualBase, ConNF, MonoMax) are accepted as
leaves.  Each carries ``dir="lr"`` or ``dir="rl"``; the checker recomputes
the principle's right-hand side from its left-hand side with the code in
this module and compares the result with the node's conclusion.
"""

from dataclasses import dataclass
from typing import Tuple

from ..errors import RuleMismatch
from ..kinds import AXIOMS, DERIVED, RULE_ARITY, RULES, StepKind
from ..normalform import check_mnf
from ..ordinal import (
    ONE, ZERO, Ordinal, cnf_terms, hyper_exp, ord_add, ord_max, ord_multiply, ord_sum,
)
from ..syntax import TOP, And, Diamond, Sequent, Top, conjuncts, strip_zero

__all__ = [
    "Derivation", "CheckResult", "match_axiom", "apply_rule", "check_derivation",
    "instantiate_derived", "same_formula", "format_derivation",
]


@dataclass(frozen=True)
class Derivation:
    """A proof tree node: ``conclusion`` justified by ``kind`` from ``premises``."""

    conclusion: Sequent
    kind: StepKind
    premises: Tuple["Derivation", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))

    def size(self):
        """Number of nodes, counting shared subtrees once per occurrence."""
        total, stack = 0, [self]
        while stack:
            d = stack.pop()
            total += 1
            stack.extend(d.premises)
        return total

    def depth(self):
        memo = {}
        order, stack = [], [self]
        while stack:
            d = stack.pop()
            if id(d) in memo:
                continue
            memo[id(d)] = None
            order.append(d)
            stack.extend(d.premises)
        for d in reversed(order):
            memo[id(d)] = 1 + max((memo[id(p)] for p in d.premises), default=0)
        return memo[id(self)]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of :func:`check_derivation`.

    On failure ``path`` lists premise indices from the root to the first
    bad node (in pre-order) and ``reason`` says what is wrong with it.
    """

    ok: bool
    path: Tuple[int, ...] = ()
    reason: str = ""

    def __bool__(self):
        return self.ok


def same_formula(f, g):
    return f is g or strip_zero(f) == strip_zero(g)


def _is_monomial(f):
    return isinstance(f, Diamond) and isinstance(f.body, Top) and not f.exponent.is_zero()


def _mnf_head(body):
    """First monomial of a nonempty MNF body, else None."""
    if isinstance(body, Top) or not check_mnf(body):
        return None
    return conjuncts(body)[0]


# axioms


def match_axiom(s):
    """All axiom instances (with parameters) whose schema yields exactly s."""
    left, right = strip_zero(s.antecedent), strip_zero(s.succedent)
    found = set()
    if left == right:
        found.add(StepKind.of("Ax1a"))
    if isinstance(right, Top):
        found.add(StepKind.of("Ax1b"))
    if isinstance(left, And):
        if left.left == right:
            found.add(StepKind.of("Ax2L"))
        if left.right == right:
            found.add(StepKind.of("Ax2R"))
    if isinstance(left, Diamond) and isinstance(right, Diamond):
        _match_modal_pair(left, right, found)
    if isinstance(left, Diamond) and left.body == right:
        # <n^a>phi |- <n^0>phi, the target modality being invisible
        found.add(StepKind.of("Ax3", n=left.base, alpha=left.exponent, beta=ZERO))
    if isinstance(right, And) and right.right == left:
        # Schmerl with alpha = 0: psi |- <n^mu>T /\ psi
        n = _schmerl_zero(right.left, left)
        if n is not None:
            found.add(StepKind.of("Ax6L", n=n, alpha=ZERO))
    if isinstance(left, And) and left.right == right:
        n = _schmerl_zero(left.left, right)
        if n is not None:
            found.add(StepKind.of("Ax6R", n=n, alpha=ZERO))
    if isinstance(left, Diamond) and isinstance(right, And):
        kind = _match_schmerl(left, right)
        if kind is not None:
            found.add(StepKind.of("Ax6L", n=left.base, alpha=kind))
    if isinstance(right, Diamond) and isinstance(left, And):
        kind = _match_schmerl(right, left)
        if kind is not None:
            found.add(StepKind.of("Ax6R", n=right.base, alpha=kind))
    return found


def _match_modal_pair(left, right, found):
    n = left.base
    if right.base == n and right.body == left.body and right.exponent <= left.exponent:
        found.add(StepKind.of("Ax3", n=n, alpha=left.exponent, beta=right.exponent))
    # <n^(a+b)>phi |- <n^b><n^a>phi
    inner = right.body
    if (isinstance(inner, Diamond) and right.base == n and inner.base == n
            and inner.body == left.body
            and ord_add(inner.exponent, right.exponent) == left.exponent):
        found.add(StepKind.of("Ax4L", n=n, alpha=inner.exponent, beta=right.exponent))
    inner = left.body
    if (isinstance(inner, Diamond) and right.base == n and inner.base == n
            and inner.body == right.body
            and ord_add(inner.exponent, left.exponent) == right.exponent):
        found.add(StepKind.of("Ax4R", n=n, alpha=inner.exponent, beta=left.exponent))
    if right.base <= n and right.body == left.body:
        k = n - right.base
        if hyper_exp(k, left.exponent) == right.exponent:
            found.add(StepKind.of("Ax5", m=right.base, n=k, alpha=left.exponent))


def _match_schmerl(modal, conj):
    """alpha if ``modal |- conj`` (or its converse) is a Schmerl instance."""
    mono, rest = conj.left, conj.right
    if not _is_monomial(mono) or mono.base != modal.base or rest != modal.body:
        return None
    head = _mnf_head(rest)
    if head is None or modal.base >= head.base:
        return None
    mu = hyper_exp(head.base - modal.base, head.exponent)
    if ord_multiply(mu, ord_add(ONE, modal.exponent)) != mono.exponent:
        return None
    return modal.exponent


def _schmerl_zero(mono, body):
    if not _is_monomial(mono):
        return None
    head = _mnf_head(body)
    if head is None or mono.base >= head.base:
        return None
    if hyper_exp(head.base - mono.base, head.exponent) != mono.exponent:
        return None
    return mono.base


# rules


def _param(kind, params, name):
    value = (params or {}).get(name, kind.get(name))
    if value is None:
        raise RuleMismatch(f"{kind.tag} needs parameter {name!r}")
    return value


def apply_rule(kind, premises, params=None):
    """Conclusion of the rule ``kind`` applied to the premise sequents.

    ``kind`` is a StepKind or a tag; parameters may come from the kind or
    from ``params``.  RuleMismatch if the premises have the wrong shape.
    """
    if isinstance(kind, str):
        kind = StepKind.of(kind, **(params or {}))
    tag = kind.tag
    if tag not in RULES:
        raise RuleMismatch(f"{tag} is not a rule")
    premises = list(premises)
    if len(premises) != RULE_ARITY[tag]:
        raise RuleMismatch(f"{tag} takes {RULE_ARITY[tag]} premise(s), got {len(premises)}")
    if tag == "R1":
        a, b = premises
        if not same_formula(a.antecedent, b.antecedent):
            raise RuleMismatch("R1 premises must share their antecedent")
        return Sequent(a.antecedent, And(a.succedent, b.succedent))
    if tag == "R2":
        a, b = premises
        if not same_formula(a.succedent, b.antecedent):
            raise RuleMismatch("R2: the succedent of the first premise is not the "
                               "antecedent of the second")
        return Sequent(a.antecedent, b.succedent)
    if tag == "R3":
        (a,) = premises
        n = _param(kind, params, "n")
        alpha = Ordinal.of(_param(kind, params, "alpha"))
        return Sequent(Diamond(n, alpha, a.antecedent), Diamond(n, alpha, a.succedent))
    (a,) = premises
    n = _param(kind, params, "n")
    m = _param(kind, params, "m")
    alpha = Ordinal.of(_param(kind, params, "alpha"))
    beta = Ordinal.of(_param(kind, params, "beta"))
    if not m < n:
        raise RuleMismatch(f"R4 needs m < n, got m={m}, n={n}")
    pushed = Diamond(m, ord_add(beta, ONE), a.succedent)
    return Sequent(And(Diamond(n, alpha, a.antecedent), pushed),
                   Diamond(n, alpha, And(a.antecedent, pushed)))


# derived principles


def _monomial_chain(f):
    """Leaves of a conjunction of monomials, or None if some leaf is not one."""
    if isinstance(f, Top):
        return []
    leaves = conjuncts(f)
    return leaves if all(_is_monomial(g) for g in leaves) else None


def _split_head(body):
    """``body`` as (first monomial, rest); rest is T when body is one monomial."""
    if _is_monomial(body):
        return body, TOP
    if isinstance(body, And) and _is_monomial(body.left):
        return body.left, body.right
    return None, None


def instantiate_derived(tag, left):
    """Right-hand side of a derived principle instantiated at ``left``.

    RuleMismatch when ``left`` does not have the principle's shape or its
    side condition fails.
    """
    left = strip_zero(left)
    if tag == "MonoMax":
        if not (isinstance(left, And) and _is_monomial(left.left) and _is_monomial(left.right)
                and left.left.base == left.right.base):
            raise RuleMismatch("MonoMax needs two monomials with the same base")
        return Diamond(left.left.base, ord_max(left.left.exponent, left.right.exponent), TOP)
    if tag == "ConNF":
        return _instantiate_connf(left)
    if not isinstance(left, Diamond):
        raise RuleMismatch(f"{tag} needs a modality over a conjunction of monomials")
    n, alpha = left.base, left.exponent
    head, rest = _split_head(left.body)
    if head is None:
        raise RuleMismatch(f"{tag}: the body does not start with a monomial")
    if tag == "PS1":
        if _monomial_chain(rest) is None:
            raise RuleMismatch("PS1: the body is not a conjunction of monomials")
        if not n > head.base:
            raise RuleMismatch(f"PS1 needs n > n0, got n={n}, n0={head.base}")
        grown = ord_add(head.exponent, hyper_exp(n - head.base, alpha))
        return And(Diamond(head.base, grown, TOP), Diamond(n, alpha, rest))
    if tag not in ("PS2", "EqualBase"):
        raise RuleMismatch(f"{tag} is not a derived principle")
    if not check_mnf(left.body):
        raise RuleMismatch(f"{tag}: the body is not an MNF")
    if isinstance(rest, Top):
        raise RuleMismatch(f"{tag} needs an MNF with at least two monomials")
    if head.base != n:
        raise RuleMismatch(f"{tag} needs the modality base to equal the first MNF base")
    nxt = conjuncts(rest)[0]
    mu = hyper_exp(nxt.base - n, nxt.exponent)
    grown = Diamond(n, ord_add(head.exponent, ord_multiply(mu, alpha)), TOP)
    if tag == "PS2":
        return And(grown, rest)
    return And(grown, Diamond(n, alpha, rest))


def _instantiate_connf(left):
    if not (isinstance(left, And) and _is_monomial(left.left)):
        raise RuleMismatch("ConNF needs a monomial conjoined with an MNF")
    n, beta = left.left.base, left.left.exponent
    head = _mnf_head(left.right)
    if head is None:
        raise RuleMismatch("ConNF: the right conjunct is not a nonempty MNF")
    if not n < head.base:
        raise RuleMismatch(f"ConNF needs n < n0, got n={n}, n0={head.base}")
    mu = hyper_exp(head.base - n, head.exponent)
    if beta <= mu:
        return left.right
    terms = cnf_terms(beta)
    for j, term in enumerate(terms):
        if term < mu:
            beta = ord_add(ord_sum(terms[:j]), mu)
            return And(Diamond(n, beta, TOP), left.right)
    return left


def _check_derived(kind, s):
    direction = kind.get("dir", "lr")
    if direction == "lr":
        source, target = s.antecedent, s.succedent
    elif direction == "rl":
        source, target = s.succedent, s.antecedent
    else:
        return f"{kind.tag}: dir must be 'lr' or 'rl', got {direction!r}"
    try:
        expected = instantiate_derived(kind.tag, source)
    except RuleMismatch as exc:
        return str(exc)
    if not same_formula(expected, target):
        return f"{kind.tag} yields {expected}, not {strip_zero(target)}"
    return None


# checking


def _check_node(d):
    kind = d.kind
    if not isinstance(kind, StepKind):
        return f"unknown kind {kind!r}"
    tag = kind.tag
    arity = RULE_ARITY.get(tag, 0)
    if len(d.premises) != arity:
        return f"{tag} takes {arity} premise(s), got {len(d.premises)}"
    if tag in AXIOMS:
        matched = match_axiom(d.conclusion)
        if kind in matched:
            return None
        if any(k.tag == tag for k in matched):
            return f"{tag} matches, but not with parameters {kind.param_dict}"
        return f"{d.conclusion} is not an instance of {tag}"
    if tag in DERIVED:
        return _check_derived(kind, d.conclusion)
    try:
        expected = apply_rule(kind, [p.conclusion for p in d.premises])
    except RuleMismatch as exc:
        return str(exc)
    got = d.conclusion
    if not (same_formula(expected.antecedent, got.antecedent)
            and same_formula(expected.succedent, got.succedent)):
        return f"{tag} concludes {expected}, not {got}"
    return None


def check_derivation(d):
    """Verify every node of d; report the first failure in pre-order."""
    seen = set()
    stack = [(d, ())]
    while stack:
        node, path = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        reason = _check_node(node)
        if reason is not None:
            return CheckResult(False, path, reason)
        for i in range(len(node.premises) - 1, -1, -1):
            stack.append((node.premises[i], path + (i,)))
    return CheckResult(True)


def format_derivation(d, indent="  "):
    """One line per node, premises indented under their conclusion."""
    lines, stack = [], [(d, 0)]
    while stack:
        node, depth = stack.pop()
        lines.append(f"{indent * depth}{node.kind}: {node.conclusion}")
        for p in reversed(node.premises):
            stack.append((p, depth + 1))
    return "\n".join(lines)
