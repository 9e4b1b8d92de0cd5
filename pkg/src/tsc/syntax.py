"""Strictly positive modal formulas with ordinal modalities.

Formulas are built from ``T`` (top), binary conjunction and ordinal
modalities ``<n^a>``.  Text grammar::

    formula := unit (('/\\' | '&') unit)*      right-nested
    unit    := 'T' | '<' nat '^' ord '>' unit | '(' formula ')'
    sequent := formula '|-' formula

A modality binds tighter than conjunction, so ``<1^w>T /\\ T`` is
``(<1^w>T) /\\ T``.  Zero exponents are kept in the tree; normalization
drops them.
"""

from dataclasses import dataclass, field
from typing import Tuple, Union

from ._scan import Scanner
from .ordinal import Ordinal, ZERO, ord_format, parse_ordinal_from

__all__ = [
    "Top", "And", "Diamond", "Formula", "TOP", "Worm", "Sequent", "NotAWorm",
    "parse_formula", "format_formula", "parse_sequent", "format_sequent",
    "n_mod", "o_mod", "in_fragment", "as_worm", "worm_prepend", "conj",
    "conjuncts", "size", "strip_zero", "diamond", "subformula_at", "replace_at",
]


@dataclass(frozen=True)
class Top:
    def __str__(self):
        return "T"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"
    _hash: int = field(default=None, init=False, compare=False, repr=False)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(("and", self.left, self.right))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return format_formula(self)


@dataclass(frozen=True)
class Diamond:
    base: int
    exponent: Ordinal
    body: "Formula"
    _hash: int = field(default=None, init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.base < 0:
            raise ValueError("modality base must be a natural number")
        if not isinstance(self.exponent, Ordinal):
            object.__setattr__(self, "exponent", Ordinal.of(self.exponent))

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(("dia", self.base, self.exponent, self.body))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return format_formula(self)


Formula = Union[Top, And, Diamond]
TOP = Top()


def diamond(base, exponent, body=TOP):
    return Diamond(base, Ordinal.of(exponent), body)


def conj(*parts):
    """Right-nested conjunction; the empty conjunction is T."""
    if not parts:
        return TOP
    out = parts[-1]
    for f in reversed(parts[:-1]):
        out = And(f, out)
    return out


def conjuncts(f):
    """Leaves of the top-level conjunction tree, left to right."""
    out, stack = [], [f]
    while stack:
        g = stack.pop()
        if isinstance(g, And):
            stack.append(g.right)
            stack.append(g.left)
        else:
            out.append(g)
    return out


@dataclass(frozen=True)
class Worm:
    """Modalities ``((n0, a0), ..., (nk, ak))`` applied head first to T."""

    modalities: Tuple[Tuple[int, Ordinal], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "modalities",
                           tuple((n, Ordinal.of(a)) for n, a in self.modalities))

    def formula(self):
        return worm_prepend(self, TOP)

    def __len__(self):
        return len(self.modalities)

    def __str__(self):
        return format_formula(self.formula())


@dataclass(frozen=True)
class Sequent:
    antecedent: Formula
    succedent: Formula

    def __str__(self):
        return format_sequent(self)


class NotAWorm:
    """Result of :func:`as_worm` on a formula that contains a conjunction."""

    def __repr__(self):
        return "NotAWorm()"

    def __eq__(self, other):
        return isinstance(other, NotAWorm)

    def __hash__(self):
        return hash(NotAWorm)


# parsing


def _parse_conj(sc):
    parts = [_parse_unit(sc)]
    while sc.accept("/\\") or sc.accept("&") or sc.accept("∧"):
        parts.append(_parse_unit(sc))
    return conj(*parts)


def _parse_unit(sc):
    if sc.accept("T") or sc.accept("⊤"):
        return TOP
    if sc.accept("<"):
        base = sc.nat()
        sc.expect("^")
        exponent = parse_ordinal_from(sc)
        sc.expect(">")
        return Diamond(base, exponent, _parse_unit(sc))
    if sc.accept("("):
        f = _parse_conj(sc)
        sc.expect(")")
        return f
    sc.fail("expected 'T', '<' or '('")


def parse_formula(text):
    sc = Scanner(text)
    f = _parse_conj(sc)
    sc.finish()
    return f


def parse_sequent(text):
    sc = Scanner(text)
    left = _parse_conj(sc)
    sc.expect("|-")
    right = _parse_conj(sc)
    sc.finish()
    return Sequent(left, right)


def _format_unit(f):
    if isinstance(f, And):
        return f"({format_formula(f)})"
    return format_formula(f)


def format_formula(f):
    if isinstance(f, Top):
        return "T"
    if isinstance(f, Diamond):
        return f"<{f.base}^{ord_format(f.exponent)}>{_format_unit(f.body)}"
    return f"{_format_unit(f.left)} /\\ {format_formula(f.right)}"


def format_sequent(s):
    return f"{format_formula(s.antecedent)} |- {format_formula(s.succedent)}"


# structural queries


def n_mod(f):
    if isinstance(f, Top):
        return frozenset()
    if isinstance(f, And):
        return n_mod(f.left) | n_mod(f.right)
    return frozenset({f.base}) | n_mod(f.body)


def o_mod(f):
    if isinstance(f, Top):
        return frozenset()
    if isinstance(f, And):
        return o_mod(f.left) | o_mod(f.right)
    return frozenset({f.exponent}) | o_mod(f.body)


def in_fragment(f, n):
    """Membership in F_{<n}: every modality base is below n."""
    return all(b < n for b in n_mod(f))


def as_worm(f):
    mods = []
    while isinstance(f, Diamond):
        mods.append((f.base, f.exponent))
        f = f.body
    if isinstance(f, Top):
        return Worm(tuple(mods))
    return NotAWorm()


def worm_prepend(worm, f):
    for base, exponent in reversed(worm.modalities):
        f = Diamond(base, exponent, f)
    return f


def size(f):
    """Number of nodes, counting each T."""
    if isinstance(f, Top):
        return 1
    if isinstance(f, And):
        return 1 + size(f.left) + size(f.right)
    return 1 + size(f.body)


def strip_zero(f):
    """Drop every ``<n^0>``, reading ``<n^0>phi`` as ``phi``."""
    if isinstance(f, Top):
        return f
    if isinstance(f, And):
        left, right = strip_zero(f.left), strip_zero(f.right)
        if left is f.left and right is f.right:
            return f
        return And(left, right)
    body = strip_zero(f.body)
    if f.exponent == ZERO:
        return body
    return f if body is f.body else Diamond(f.base, f.exponent, body)


# positions: "L"/"R" select conjuncts, "B" the body of a modality


def subformula_at(f, path):
    for step in path:
        if step == "B":
            f = f.body
        elif step == "L":
            f = f.left
        else:
            f = f.right
    return f


def replace_at(f, path, new):
    if not path:
        return new
    step, rest = path[0], path[1:]
    if step == "B":
        return Diamond(f.base, f.exponent, replace_at(f.body, rest, new))
    if step == "L":
        return And(replace_at(f.left, rest, new), f.right)
    return And(f.left, replace_at(f.right, rest, new))
