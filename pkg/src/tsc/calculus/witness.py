"""Constructing checkable derivations for derivable sequents.

A witness for ``phi |- psi`` is assembled as

    phi |- embed(N phi)         replayed normalization trace of phi
        |- psi'                 per-monomial projection, Ax5, Ax3; R1
        |- psi                  when psi is not already a conjunction of
                                monomials: the trace of psi, run backwards

glued with R2.  Rewrites inside a context are lifted with R3 (under a
modality) or with Ax2 projections, R2 and R1 (inside a conjunction).
"""

from ..decision import decide
from ..kinds import CONVERSE, DERIVED, StepKind
from ..normalform import embed, normalize_traced
from ..ordinal import hyper_exp
from ..syntax import And, Diamond, Sequent, Top
from .core import Derivation, apply_rule, match_axiom

__all__ = ["NotDerivable", "NOT_DERIVABLE", "derive_witness", "compose"]


class NotDerivable:
    """Returned by :func:`derive_witness` when the sequent is not derivable."""

    def __init__(self, verdict=None):
        self.verdict = verdict

    def __bool__(self):
        return False

    def __repr__(self):
        return "NotDerivable()"

    def __eq__(self, other):
        return isinstance(other, NotDerivable)

    def __hash__(self):
        return hash(NotDerivable)


NOT_DERIVABLE = NotDerivable()


def _axiom(tag, left, right):
    s = Sequent(left, right)
    for kind in match_axiom(s):
        if kind.tag == tag:
            return Derivation(s, kind)
    raise AssertionError(f"{s} is not an instance of {tag}")


def _rule(tag, premises, **params):
    kind = StepKind.of(tag, **params)
    conclusion = apply_rule(kind, [p.conclusion for p in premises])
    return Derivation(conclusion, kind, tuple(premises))


def compose(parts):
    """Chain derivations ``a0|-a1, a1|-a2, ...`` with R2 in a balanced tree."""
    parts = [p for p in parts if p is not None]
    if not parts:
        return None
    while len(parts) > 1:
        paired = [_rule("R2", parts[i:i + 2]) if i + 1 < len(parts) else parts[i]
                  for i in range(0, len(parts), 2)]
        parts = paired
    return parts[0]


# conjunction plumbing


def _find(f, target, path=()):
    """Path of conjunction steps from f down to a subtree equal to target."""
    if f == target:
        return path
    if isinstance(f, And):
        found = _find(f.left, target, path + ("L",))
        if found is None:
            found = _find(f.right, target, path + ("R",))
        return found
    return None


def project(f, target):
    """``f |- target`` for target a conjunct subtree of f; None when equal."""
    path = _find(f, target)
    if path is None:
        return None
    steps, cur = [], f
    for step in path:
        if step == "L":
            steps.append(_axiom("Ax2L", cur, cur.left))
            cur = cur.left
        else:
            steps.append(_axiom("Ax2R", cur, cur.right))
            cur = cur.right
    return compose(steps)


def assemble(f, target):
    """``f |- target`` where every conjunct leaf of target occurs in f (or is T)."""
    if f == target:
        return _axiom("Ax1a", f, f)
    if isinstance(target, Top):
        return _axiom("Ax1b", f, target)
    d = project(f, target)
    if d is not None:
        return d
    if isinstance(target, And):
        return _rule("R1", [assemble(f, target.left), assemble(f, target.right)])
    raise ValueError(f"{target} is not assembled from conjuncts of {f}")


# replaying normalization traces


def _local(step, forward):
    kind = step.kind
    left, right = step.local_before, step.local_after
    if not forward:
        left, right = right, left
    tag = kind.tag
    if tag == "Ax1a":
        return _axiom("Ax1a", left, right)
    if tag == "R1":
        return assemble(left, right)
    if tag in DERIVED:
        params = kind.param_dict
        params["dir"] = "lr" if forward else "rl"
        return Derivation(Sequent(left, right), StepKind.of(tag, **params))
    if not forward:
        tag = CONVERSE[tag]
    return _axiom(tag, left, right)


def lift(d, whole, path):
    """From ``a |- b`` with ``a`` at path in whole, derive ``whole |- whole[b]``."""
    if not path:
        return d
    step = path[0]
    if step == "B":
        inner = lift(d, whole.body, path[1:])
        return _rule("R3", [inner], n=whole.base, alpha=whole.exponent)
    if step == "L":
        inner = lift(d, whole.left, path[1:])
        moved = compose([_axiom("Ax2L", whole, whole.left), inner])
        kept = _axiom("Ax2R", whole, whole.right)
        return _rule("R1", [moved, kept])
    inner = lift(d, whole.right, path[1:])
    kept = _axiom("Ax2L", whole, whole.left)
    moved = compose([_axiom("Ax2R", whole, whole.right), inner])
    return _rule("R1", [kept, moved])


def replay(trace, forward=True):
    """Chain a normalization trace into ``first.before |- last.after``
    (or the reverse sequent when ``forward`` is false).  None for no steps."""
    steps = [lift(_local(st, forward), st.before if forward else st.after, st.path)
             for st in trace]
    if not forward:
        steps.reverse()
    return compose(steps)


# the characterization, constructively


def _monomial_step(source, mnf, m, beta):
    """``embed(mnf) |- <m^beta>T`` by projection, Ax5 and Ax3."""
    host = next(mono for mono in mnf.monomials if mono.base >= m)
    here = host.formula()
    steps = [project(source, here)]
    bound = hyper_exp(host.base - m, host.exponent)
    if host.base > m:
        down = Diamond(m, bound, here.body)
        steps.append(_axiom("Ax5", here, down))
        here = down
    if beta < bound:
        target = Diamond(m, beta, here.body)
        steps.append(_axiom("Ax3", here, target))
    d = compose(steps)
    return d if d is not None else _axiom("Ax1a", source, source)


def _towards(source, mnf, target):
    """``source |- target`` for source = embed(mnf), target a consequence."""
    if source == target:
        return _axiom("Ax1a", source, target)
    if isinstance(target, Top):
        return _axiom("Ax1b", source, target)
    if isinstance(target, And):
        return _rule("R1", [_towards(source, mnf, target.left),
                            _towards(source, mnf, target.right)])
    if target.exponent.is_zero():
        inner = _towards(source, mnf, target.body)
        return compose([inner, _axiom("Ax1a", target.body, target)])
    if isinstance(target.body, Top):
        return _monomial_step(source, mnf, target.base, target.exponent)
    normal, trace = normalize_traced(target)
    middle = _towards(source, mnf, embed(normal))
    return compose([middle, replay(trace, forward=False)])


def derive_witness(phi, psi):
    """A Derivation of ``phi |- psi``, or NotDerivable when decide says no."""
    if phi == psi:
        return _axiom("Ax1a", phi, psi)
    verdict = decide(phi, psi)
    if not verdict:
        return NotDerivable(verdict)
    normal, trace = normalize_traced(phi)
    source = embed(normal)
    return compose([replay(trace, forward=True), _towards(source, normal, psi)])
