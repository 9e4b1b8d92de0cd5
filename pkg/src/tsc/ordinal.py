"""Ordinals below epsilon_0 in Cantor normal form.

An :class:`Ordinal` is the sum ``w^e1*c1 + ... + w^ek*ck`` stored as the tuple
of ``(exponent, coefficient)`` pairs with strictly descending exponents and
positive coefficients.  The representation is canonical, so ``==`` on values
is ordinal equality and ordinals can be used as dict keys.

The text syntax (shared by the formula parser) is::

    ord   := sum
    sum   := prod ('+' prod)*
    prod  := power ('*' power)*
    power := 'w' ('^' atom)? | nat | '(' ord ')' | 'e' ('^' nat)? '(' ord ')'
    atom  := nat | 'w' ('^' atom)? | '(' ord ')' | 'e' ('^' nat)? '(' ord ')'

``e^n(x)`` is the hyper-exponential.  Expressions are evaluated eagerly, so
``ord_parse("1+w")`` is simply ``w``.  :func:`ord_format` prints the canonical
form: descending terms, ``w^1`` as ``w``, ``*1`` omitted, and an infinite
exponent parenthesised when it is a sum or carries a coefficient.
"""

from enum import IntEnum

from ._scan import Scanner
from .errors import InvalidDivisor, NotDivisible, OrdinalUnderflow

__all__ = [
    "Ordinal", "Ordering", "ZERO", "ONE", "TWO", "OMEGA",
    "ord_compare", "ord_add", "ord_left_subtract", "ord_multiply",
    "ord_omega_power", "hyper_exp", "ord_left_divide", "cnf_terms",
    "ord_parse", "ord_format", "parse_ordinal_from", "ord_max", "ord_sum",
]


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Ordinal:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=()):
        terms = tuple((e if isinstance(e, Ordinal) else Ordinal.of(e), int(c))
                      for e, c in terms)
        for i, (e, c) in enumerate(terms):
            if c < 1:
                raise ValueError("coefficients must be positive")
            if i and _cmp(terms[i - 1][0], e) <= 0:
                raise ValueError("exponents must be strictly descending")
        self.terms = terms
        self._hash = hash(terms)

    @classmethod
    def _make(cls, terms):
        self = object.__new__(cls)
        self.terms = terms
        self._hash = hash(terms)
        return self

    @classmethod
    def of(cls, value):
        """Coerce an int (or an Ordinal) to an Ordinal."""
        if isinstance(value, Ordinal):
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot make an ordinal from {value!r}")
        if value < 0:
            raise ValueError("ordinals are non-negative")
        if value == 0:
            return ZERO
        return cls._make(((ZERO, value),))

    # queries

    def is_zero(self):
        return not self.terms

    def is_finite(self):
        return not self.terms or not self.terms[0][0].terms

    def is_successor(self):
        return bool(self.terms) and not self.terms[-1][0].terms

    def is_omega_power(self):
        return len(self.terms) == 1 and self.terms[0][1] == 1

    def leading_exponent(self):
        return self.terms[0][0] if self.terms else None

    def depth(self):
        """Height of the exponent tree (0 for finite ordinals)."""
        if self.is_finite():
            return 0
        return 1 + max(e.depth() for e, _ in self.terms)

    def __int__(self):
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        return self.terms[0][1] if self.terms else 0

    # protocol

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = Ordinal.of(other) if other >= 0 else None
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self is other or (self._hash == other._hash and self.terms == other.terms)

    def __hash__(self):
        return self._hash

    def _coerce(self, other):
        if isinstance(other, Ordinal):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Ordinal.of(other)
        return None

    def __lt__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else _cmp(self, other) < 0

    def __le__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else _cmp(self, other) <= 0

    def __gt__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else _cmp(self, other) > 0

    def __ge__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else _cmp(self, other) >= 0

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ord_add(self, other)

    def __radd__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ord_add(other, self)

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ord_multiply(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ord_multiply(other, self)

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return ord_format(self)

    def __repr__(self):
        return f"Ordinal({ord_format(self)!r})"


ZERO = Ordinal._make(())
ONE = Ordinal._make(((ZERO, 1),))
TWO = Ordinal._make(((ZERO, 2),))
OMEGA = Ordinal._make(((ONE, 1),))


def _cmp(a, b):
    if a is b:
        return 0
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        if ea is not eb:
            k = _cmp(ea, eb)
            if k:
                return k
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def ord_compare(a, b):
    """Total order on Cantor normal forms."""
    return Ordering(_cmp(a, b))


def ord_max(a, b):
    return a if _cmp(a, b) >= 0 else b


def ord_add(a, b):
    if not b.terms:
        return a
    if not a.terms:
        return b
    lead_e, lead_c = b.terms[0]
    kept = []
    for e, c in a.terms:
        k = _cmp(e, lead_e)
        if k > 0:
            kept.append((e, c))
        elif k == 0:
            kept.append((e, c + lead_c))
            return Ordinal._make(tuple(kept) + b.terms[1:])
        else:
            break
    return Ordinal._make(tuple(kept) + b.terms)


def ord_sum(items):
    total = ZERO
    for x in items:
        total = ord_add(total, x)
    return total


def ord_left_subtract(b, a):
    """The unique x with ``b + x == a`` (written -b + a); needs b <= a."""
    for i, ((eb, cb), (ea, ca)) in enumerate(zip(b.terms, a.terms)):
        k = _cmp(eb, ea)
        if k > 0:
            raise OrdinalUnderflow(f"{b} > {a}")
        if k < 0:
            return Ordinal._make(a.terms[i:])
        if cb > ca:
            raise OrdinalUnderflow(f"{b} > {a}")
        if cb < ca:
            # the rest of b is absorbed by w^e*(ca - cb)
            return Ordinal._make(((ea, ca - cb),) + a.terms[i + 1:])
    if len(b.terms) > len(a.terms):
        raise OrdinalUnderflow(f"{b} > {a}")
    return Ordinal._make(a.terms[len(b.terms):])


def ord_multiply(a, b):
    if not a.terms or not b.terms:
        return ZERO
    a0, c0 = a.terms[0]
    out = []
    for e, c in b.terms:
        if e.terms:
            out.append((ord_add(a0, e), c))
        else:
            out.append((a0, c0 * c))
            out.extend(a.terms[1:])
    return Ordinal._make(tuple(out))


def ord_omega_power(a):
    return Ordinal._make(((a, 1),))


def hyper_exp(n, a):
    """n-fold iterate of ``x -> -1 + w^x``; fixes 0."""
    if n < 0:
        raise ValueError("hyper-exponential index must be a natural number")
    for _ in range(n):
        if not a.terms:
            return a
        a = Ordinal._make(((a, 1),))
    return a


def ord_left_divide(a, mu):
    """The x with ``mu * x == a`` for mu a power of omega, else NotDivisible."""
    if not mu.is_omega_power():
        raise InvalidDivisor(f"{mu} is not a power of omega")
    delta = mu.terms[0][0]
    if not delta.terms:
        return a
    out = []
    for e, c in a.terms:
        if _cmp(e, delta) < 0:
            raise NotDivisible(f"{a} is not left-divisible by {mu}")
        out.append((ord_left_subtract(delta, e), c))
    return Ordinal._make(tuple(out))


def cnf_terms(a):
    """Additively indecomposable summands of a, in descending order."""
    out = []
    for e, c in a.terms:
        term = Ordinal._make(((e, 1),))
        out.extend([term] * c)
    return out


# text


def _format_exponent(e):
    text = ord_format(e)
    if len(e.terms) > 1 or (e.terms[0][1] > 1 and not e.is_finite()):
        return f"({text})"
    return text


def _format_term(e, c):
    if not e.terms:
        return str(c)
    head = "w" if e == ONE else "w^" + _format_exponent(e)
    return head if c == 1 else f"{head}*{c}"


def ord_format(a):
    if not a.terms:
        return "0"
    return "+".join(_format_term(e, c) for e, c in a.terms)


def _accept_omega(sc):
    return sc.accept("w") or sc.accept("ω")


def _parse_sum(sc):
    value = _parse_prod(sc)
    while sc.accept("+"):
        value = ord_add(value, _parse_prod(sc))
    return value


def _parse_prod(sc):
    value = _parse_power(sc)
    while sc.accept("*"):
        value = ord_multiply(value, _parse_power(sc))
    return value


def _parse_hyper(sc):
    n = sc.nat() if sc.accept("^") else 1
    sc.expect("(")
    value = _parse_sum(sc)
    sc.expect(")")
    return hyper_exp(n, value)


def _no_power(sc):
    if sc.peek("^"):
        sc.fail("only w can be raised to a power")


def _parse_power(sc):
    if _accept_omega(sc):
        return ord_omega_power(_parse_atom(sc)) if sc.accept("^") else OMEGA
    if sc.accept("e"):
        return _parse_hyper(sc)
    if sc.accept("("):
        value = _parse_sum(sc)
        sc.expect(")")
        _no_power(sc)
        return value
    if sc.peek_digit():
        value = Ordinal.of(sc.nat())
        _no_power(sc)
        return value
    sc.fail("expected an ordinal")


def _parse_atom(sc):
    if sc.peek_digit():
        return Ordinal.of(sc.nat())
    if _accept_omega(sc):
        return ord_omega_power(_parse_atom(sc)) if sc.accept("^") else OMEGA
    if sc.accept("e"):
        return _parse_hyper(sc)
    if sc.accept("("):
        value = _parse_sum(sc)
        sc.expect(")")
        return value
    sc.fail("expected an exponent")


def parse_ordinal_from(sc):
    """Parse an ordinal expression at the scanner's position."""
    return _parse_sum(sc)


def ord_parse(text):
    sc = Scanner(text)
    value = _parse_sum(sc)
    sc.finish()
    return value

