"""Monomial and increasing normal forms.

An MNF is a conjunction of monomials ``<n^a>T`` with strictly ascending
bases where each exponent is ``e^(n'-n)(a') * (2 + b)`` for its right
neighbour ``<n'^a'>T``.  An INF is a worm with strictly ascending bases and
positive exponents.  :func:`mnf_to_inf` and :func:`inf_to_mnf` are mutually
inverse bijections; :func:`normalize` maps every formula to its (unique) MNF.
"""

from dataclasses import dataclass
from typing import Tuple

from .errors import InvariantViolation, NotDivisible, PreconditionViolation
from .kinds import StepKind, TraceStep
from .ordinal import (
    ONE, TWO, Ordinal, hyper_exp, ord_add, ord_left_divide,
    ord_left_subtract, ord_max, ord_multiply,
)
from .syntax import (
    TOP, And, Diamond, Top, Worm, conj, conjuncts, replace_at, subformula_at,
)

__all__ = [
    "Monomial", "Mnf", "Inf", "check_mnf", "check_inf", "mnf_to_inf",
    "inf_to_mnf", "insert_monomial", "merge_mnf", "push_modality",
    "normalize", "normalize_to_inf", "normalize_traced", "embed",
    "mnf_from_formula", "truncate_to_threshold",
]


@dataclass(frozen=True)
class Monomial:
    base: int
    exponent: Ordinal

    def __post_init__(self):
        if not isinstance(self.exponent, Ordinal):
            object.__setattr__(self, "exponent", Ordinal.of(self.exponent))
        if self.exponent.is_zero():
            raise InvariantViolation("monomial exponents must be positive")

    def formula(self):
        return Diamond(self.base, self.exponent, TOP)

    def __str__(self):
        return str(self.formula())


@dataclass(frozen=True)
class Mnf:
    monomials: Tuple[Monomial, ...] = ()

    def __iter__(self):
        return iter(self.monomials)

    def __len__(self):
        return len(self.monomials)

    def __getitem__(self, i):
        return self.monomials[i]

    @property
    def bases(self):
        return [m.base for m in self.monomials]

    def tail(self):
        return Mnf(self.monomials[1:])

    def formula(self):
        return embed(self)

    def is_valid(self):
        return _mnf_ok(self.monomials)

    def __str__(self):
        return str(embed(self))


@dataclass(frozen=True)
class Inf:
    modalities: Tuple[Tuple[int, Ordinal], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "modalities",
                           tuple((n, Ordinal.of(a)) for n, a in self.modalities))

    def __len__(self):
        return len(self.modalities)

    def tail(self):
        return Inf(self.modalities[1:])

    def worm(self):
        return Worm(self.modalities)

    def formula(self):
        return self.worm().formula()

    def is_valid(self):
        return check_inf(self)

    def __str__(self):
        return str(self.formula())


def embed(psi):
    """An MNF as a right-nested conjunction of monomials (T when empty)."""
    return conj(*(m.formula() for m in psi.monomials))


# recognition


def _divisible_by_two_or_more(alpha, mu):
    try:
        q = ord_left_divide(alpha, mu)
    except NotDivisible:
        return False
    return q >= TWO


def _mnf_ok(monos):
    for m in monos:
        if not isinstance(m, Monomial) or m.exponent.is_zero():
            return False
    for left, right in zip(monos, monos[1:]):
        if left.base >= right.base:
            return False
        mu = hyper_exp(right.base - left.base, right.exponent)
        if not _divisible_by_two_or_more(left.exponent, mu):
            return False
    return True


def mnf_from_formula(f):
    """Read a conjunction of monomials as an Mnf; InvariantViolation if it is not one."""
    if isinstance(f, Top):
        return Mnf()
    monos = []
    for leaf in conjuncts(f):
        if not (isinstance(leaf, Diamond) and isinstance(leaf.body, Top)
                and not leaf.exponent.is_zero()):
            raise InvariantViolation(f"{leaf} is not a monomial with positive exponent")
        monos.append(Monomial(leaf.base, leaf.exponent))
    if not _mnf_ok(monos):
        raise InvariantViolation(f"{f} violates the MNF ordering/divisibility conditions")
    return Mnf(tuple(monos))


def check_mnf(f):
    if isinstance(f, Mnf):
        return f.is_valid()
    try:
        mnf_from_formula(f)
    except InvariantViolation:
        return False
    return True


def check_inf(w):
    mods = w.modalities
    if any(a.is_zero() for _, a in mods):
        return False
    return all(n < m for (n, _), (m, _) in zip(mods, mods[1:]))


# MNF <-> INF


def mnf_to_inf(psi):
    monos = psi.monomials
    if not monos:
        return Inf()
    out = []
    for here, nxt in zip(monos, monos[1:]):
        if here.base >= nxt.base:
            raise InvariantViolation("MNF bases must be strictly ascending")
        mu = hyper_exp(nxt.base - here.base, nxt.exponent)
        try:
            q = ord_left_divide(here.exponent, mu)
        except NotDivisible as exc:
            raise InvariantViolation(str(exc)) from None
        if q < TWO:
            raise InvariantViolation(f"quotient {q} of {here.exponent} by {mu} is below 2")
        out.append((here.base, ord_left_subtract(ONE, q)))
    out.append((monos[-1].base, monos[-1].exponent))
    return Inf(tuple(out))


def inf_to_mnf(worm):
    mods = worm.modalities
    if not check_inf(worm):
        raise InvariantViolation(f"{worm} is not in increasing normal form")
    if not mods:
        return Mnf()
    base, exponent = mods[-1]
    out = [Monomial(base, exponent)]
    for base, beta in reversed(mods[:-1]):
        nxt = out[-1]
        mu = hyper_exp(nxt.base - base, nxt.exponent)
        out.append(Monomial(base, ord_multiply(mu, ord_add(ONE, beta))))
    return Mnf(tuple(reversed(out)))


# conjunction


def truncate_to_threshold(beta, mu):
    """Keep the Cantor normal form terms of beta that are >= mu, then add mu.

    mu must be a power of omega.  If no term is dropped beta is returned.
    """
    delta = mu.terms[0][0]
    kept = []
    for e, c in beta.terms:
        if e < delta:
            return ord_add(Ordinal._make(tuple(kept)), mu)
        kept.append((e, c))
    return beta


def insert_monomial(m, psi):
    """MNF equivalent to ``m /\\ psi``; m's base must not exceed psi's first base."""
    monos = psi.monomials
    if not monos:
        return Mnf((m,))
    head = monos[0]
    if m.base > head.base:
        raise PreconditionViolation(
            f"cannot insert base {m.base} in front of base {head.base}")
    if m.base == head.base:
        top = Monomial(m.base, ord_max(m.exponent, head.exponent))
        if top.exponent == head.exponent:
            return psi
        return insert_monomial(top, Mnf(monos[1:]))
    mu = hyper_exp(head.base - m.base, head.exponent)
    if m.exponent <= mu:
        return psi
    return Mnf((Monomial(m.base, truncate_to_threshold(m.exponent, mu)),) + monos)


def merge_mnf(a, b):
    monos = sorted(a.monomials + b.monomials, key=lambda m: m.base, reverse=True)
    out = Mnf()
    for m in monos:
        out = insert_monomial(m, out)
    return out


# modalities


def push_modality(n, alpha, psi):
    """MNF equivalent to ``<n^alpha> psi``."""
    if alpha.is_zero():
        raise PreconditionViolation("pushed modality must have a positive exponent")
    monos = psi.monomials
    byproducts = []
    i = 0
    while i < len(monos) and monos[i].base < n:
        here = monos[i]
        byproducts.append(
            Monomial(here.base, ord_add(here.exponent, hyper_exp(n - here.base, alpha))))
        i += 1
    remainder = _push_front(n, alpha, monos[i:])
    out = Mnf(remainder)
    for m in reversed(byproducts):
        out = insert_monomial(m, out)
    return out


def _push_front(n, alpha, monos):
    """<n^alpha> over an MNF whose first base is >= n."""
    if not monos:
        return (Monomial(n, alpha),)
    head = monos[0]
    if head.base == n and len(monos) == 1:
        return (Monomial(n, ord_add(head.exponent, alpha)),)
    if head.base == n:
        nxt = monos[1]
        mu = hyper_exp(nxt.base - n, nxt.exponent)
        return (Monomial(n, ord_add(head.exponent, ord_multiply(mu, alpha))),) + monos[1:]
    mu = hyper_exp(head.base - n, head.exponent)
    return (Monomial(n, ord_multiply(mu, ord_add(ONE, alpha))),) + monos


def normalize(f):
    if isinstance(f, Top):
        return Mnf()
    if isinstance(f, And):
        return merge_mnf(normalize(f.left), normalize(f.right))
    inner = normalize(f.body)
    if f.exponent.is_zero():
        return inner
    return push_modality(f.base, f.exponent, inner)


def normalize_to_inf(f):
    return mnf_to_inf(normalize(f))


# traced normalization


class _Tracer:
    """Runs normalization as in-place rewrites of the whole formula."""

    def __init__(self, f):
        self.whole = f
        self.steps = []

    def rewrite(self, path, new, kind):
        before = self.whole
        local = subformula_at(before, path)
        if local == new:
            return
        after = replace_at(before, path, new)
        self.steps.append(TraceStep(before, after, kind, tuple(path), local, new))
        self.whole = after

    def run(self, path):
        f = subformula_at(self.whole, path)
        if isinstance(f, Top):
            return ()
        if isinstance(f, And):
            left = self.run(path + ("L",))
            right = self.run(path + ("R",))
            return self.merge(path, left, right)
        if f.exponent.is_zero():
            self.rewrite(path, f.body, StepKind.of("Ax1a"))
            return self.run(path)
        inner = self.run(path + ("B",))
        return self.push(path, f.base, f.exponent, inner)

    def merge(self, path, left, right):
        if not left or not right:
            self.rewrite(path, embed(Mnf(left or right)), StepKind.of("R1"))
            return left or right
        ordered = sorted(left + right, key=lambda m: m.base)
        self.rewrite(path, embed(Mnf(tuple(ordered))), StepKind.of("R1"))
        cur = (ordered[-1],)
        for j in range(len(ordered) - 2, -1, -1):
            cur = self.insert(path + ("R",) * j, ordered[j], cur)
        return cur

    def insert(self, path, m, cur):
        """Rewrite ``m /\\ embed(cur)`` at path into an MNF."""
        head = cur[0]
        if m.base < head.base:
            new = insert_monomial(m, Mnf(cur)).monomials
            self.rewrite(path, embed(Mnf(new)),
                         StepKind.of("ConNF", dir="lr", n=m.base, beta=m.exponent))
            return new
        top = Monomial(m.base, ord_max(m.exponent, head.exponent))
        max_kind = StepKind.of("MonoMax", dir="lr", n=m.base)
        if len(cur) == 1:
            self.rewrite(path, top.formula(), max_kind)
            return (top,)
        tail = cur[1:]
        self.rewrite(path, And(And(m.formula(), head.formula()), embed(Mnf(tail))),
                     StepKind.of("R1"))
        self.rewrite(path + ("L",), top.formula(), max_kind)
        return self.insert(path, top, tail)

    def push(self, path, n, alpha, psi):
        monos = psi
        byproducts = []
        p = path
        i = 0
        while i < len(monos) and monos[i].base < n:
            here = monos[i]
            bp = Monomial(here.base, ord_add(here.exponent, hyper_exp(n - here.base, alpha)))
            self.rewrite(p, And(bp.formula(), Diamond(n, alpha, embed(Mnf(monos[i + 1:])))),
                         StepKind.of("PS1", dir="lr", n=n, alpha=alpha))
            byproducts.append(bp)
            p = p + ("R",)
            i += 1
        rest = monos[i:]
        remainder = _push_front(n, alpha, rest)
        if rest:
            head = rest[0]
            if head.base == n and len(rest) == 1:
                kind = StepKind.of("Ax4R", n=n, alpha=head.exponent, beta=alpha)
            elif head.base == n:
                kind = StepKind.of("PS2", dir="lr", n=n, alpha=alpha)
            else:
                kind = StepKind.of("Ax6L", n=n, alpha=alpha)
            self.rewrite(p, embed(Mnf(remainder)), kind)
        cur = remainder
        for j in range(len(byproducts) - 1, -1, -1):
            cur = self.insert(path + ("R",) * j, byproducts[j], cur)
        return cur


def normalize_traced(f):
    """Normalize f and return ``(mnf, trace)``.

    The trace's steps chain from ``f`` to ``embed(mnf)``; each one rewrites a
    single subformula by an equivalence named by its kind.
    """
    tracer = _Tracer(f)
    monos = tracer.run(())
    return Mnf(tuple(monos)), tuple(tracer.steps)
