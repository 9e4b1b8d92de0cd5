"""Bounded forward chaining over the calculus.

The search universe is finite:

* bases ``0..bases_max``;
* exponents from :func:`exponent_pool`, the positive ordinals ``<= cap``
  whose Cantor normal form uses coefficients ``<= coefficient_cap`` at
  every level (a finite set, growing with both caps);
* formulas of :func:`~tsc.syntax.size` ``<= length_cap`` over those
  modalities.

Level 0 holds every axiom instance inside the universe.  Level ``k`` adds
the conclusions of R1-R4 whose premises come from levels ``< k``, at least
one of them from level ``k-1``; so ``depth`` bounds the height of the
derivation tree.  Formulas are interned as integers and, for each
antecedent, the known succedents are kept as an int bitset.
"""

from itertools import product

from ..errors import ResourceLimit
from ..normalform import check_mnf
from ..ordinal import (
    ONE, ZERO, Ordinal, hyper_exp, ord_add, ord_left_subtract, ord_multiply,
)
from ..syntax import TOP, And, Diamond, Sequent, Top, conjuncts

__all__ = ["exponent_pool", "formula_universe", "saturate", "Saturation", "DESK_PROFILE"]

DESK_PROFILE = dict(bases_max=2, exponent_cap=Ordinal(((1, 1),)) * 2, length_cap=4, depth=4)


def _pool_with_zero(cap, k):
    if cap.is_finite():
        return [Ordinal.of(c) for c in range(min(int(cap), k) + 1)]
    exponents = [e for e in _pool_with_zero(cap.leading_exponent(), k)]
    exponents.sort(reverse=True)
    out = {ZERO}
    # every descending choice of exponents, each with a coefficient 1..k
    for mask in range(1, 1 << len(exponents)):
        chosen = [e for i, e in enumerate(exponents) if mask >> i & 1]
        for coefficients in product(range(1, k + 1), repeat=len(chosen)):
            value = Ordinal(tuple(zip(chosen, coefficients)))
            if value <= cap:
                out.add(value)
    return sorted(out)


def exponent_pool(cap, coefficient_cap=2):
    """Positive ordinals ``<= cap`` with every CNF coefficient ``<= coefficient_cap``."""
    cap = Ordinal.of(cap)
    return [a for a in _pool_with_zero(cap, coefficient_cap) if not a.is_zero()]


def formula_universe(bases_max, pool, length_cap):
    """All formulas of size ``<= length_cap``, ordered by size then by construction."""
    by_size = {1: [TOP]}
    modalities = [(n, a) for n in range(bases_max + 1) for a in pool]
    for s in range(2, length_cap + 1):
        level = [Diamond(n, a, body) for body in by_size[s - 1] for n, a in modalities]
        for ls in range(1, s - 1):
            rs = s - 1 - ls
            level.extend(And(x, y) for x in by_size[ls] for y in by_size[rs])
        by_size[s] = level
    return [f for s in range(1, length_cap + 1) for f in by_size[s]]


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Saturation:
    """The closed set, as a read-only container of Sequents.

    Iteration is in a fixed order (antecedent id, then succedent id), so
    two runs with the same caps produce identical sequences.
    """

    def __init__(self, formulas, succedents):
        self.formulas = formulas
        self._index = {f: i for i, f in enumerate(formulas)}
        self._succ = succedents

    def __len__(self):
        return sum(bin(m).count("1") for m in self._succ)

    def __contains__(self, s):
        i = self._index.get(s.antecedent)
        j = self._index.get(s.succedent)
        return i is not None and j is not None and bool(self._succ[i] >> j & 1)

    def __iter__(self):
        for i, mask in enumerate(self._succ):
            for j in _bits(mask):
                yield Sequent(self.formulas[i], self.formulas[j])

    def by_antecedent(self):
        """Yield ``(antecedent, [succedents])`` for antecedents with any succedent."""
        for i, mask in enumerate(self._succ):
            if mask:
                yield self.formulas[i], [self.formulas[j] for j in _bits(mask)]


class _Closure:
    def __init__(self, formulas, pool, bases_max, max_sequents):
        self.formulas = formulas
        self.index = {f: i for i, f in enumerate(formulas)}
        self.pool = pool
        self.bases_max = bases_max
        self.max_sequents = max_sequents
        size = len(formulas)
        self.known = [0] * size
        self.known_rev = [0] * size
        self.count = 0
        # formula structure tables
        self.wraps = [[] for _ in range(size)]       # (key, id of <n^a> f)
        self.ands = []                               # (id, left id, right id)
        for i, f in enumerate(formulas):
            if isinstance(f, Diamond):
                self.wraps[self.index[f.body]].append(((f.base, f.exponent), i))
            elif isinstance(f, And):
                self.ands.append((i, self.index[f.left], self.index[f.right]))
        self.wrap_map = [dict(w) for w in self.wraps]

    def dia(self, n, a, body_id):
        return self.wrap_map[body_id].get((n, a))

    def axioms(self):
        delta = [0] * len(self.formulas)
        top = self.index[TOP]
        for i, f in enumerate(self.formulas):
            delta[i] |= (1 << i) | (1 << top)
            if isinstance(f, And):
                delta[i] |= (1 << self.index[f.left]) | (1 << self.index[f.right])
                continue
            if not isinstance(f, Diamond):
                continue
            n, alpha, body = f.base, f.exponent, self.index[f.body]
            for beta in self.pool:
                if beta <= alpha:
                    j = self.dia(n, beta, body)
                    if j is not None:
                        delta[i] |= 1 << j
                    # Ax4L: <n^(beta+rest)>phi |- <n^rest><n^beta>phi
                    rest = ord_left_subtract(beta, alpha)
                    inner = self.dia(n, beta, body)
                    if not rest.is_zero() and inner is not None:
                        j = self.dia(n, rest, inner)
                        if j is not None:
                            delta[i] |= 1 << j
                            delta[j] |= 1 << i
            for m in range(n + 1):
                j = self.dia(m, hyper_exp(n - m, alpha), body)
                if j is not None:
                    delta[i] |= 1 << j
            body_f = f.body
            if not isinstance(body_f, Top) and check_mnf(body_f):
                head = conjuncts(body_f)[0]
                if n < head.base:
                    mu = hyper_exp(head.base - n, head.exponent)
                    mono = Diamond(n, ord_multiply(mu, ord_add(ONE, alpha)), TOP)
                    j = self.index.get(And(mono, body_f))
                    if j is not None:
                        delta[i] |= 1 << j
                        delta[j] |= 1 << i
        return delta

    def absorb(self, delta):
        """Drop already-known sequents from delta and record the rest."""
        fresh = [0] * len(delta)
        for i, mask in enumerate(delta):
            new = mask & ~self.known[i]
            if new:
                fresh[i] = new
                self.known[i] |= new
                for j in _bits(new):
                    self.known_rev[j] |= 1 << i
                self.count += bin(new).count("1")
        if self.count > self.max_sequents:
            raise ResourceLimit(
                f"saturation exceeded {self.max_sequents} sequents ({self.count})")
        return fresh

    def step(self, delta):
        known, formulas = self.known, self.formulas
        out = [0] * len(formulas)
        # R2: a |- b, b |- c  with at least one premise new
        delta_rev = [0] * len(formulas)
        for a, mask in enumerate(delta):
            for b in _bits(mask):
                delta_rev[b] |= 1 << a
        for b in range(len(formulas)):
            d_in, d_out = delta_rev[b], delta[b]
            if d_in:
                k_out = known[b]
                for a in _bits(d_in):
                    out[a] |= k_out
            if d_out:
                for a in _bits(self.known_rev[b] & ~d_in):
                    out[a] |= d_out
        # R1: a |- l, a |- r  gives  a |- l /\ r
        for c, left, right in self.ands:
            lmask, rmask = 1 << left, 1 << right
            for a in range(len(formulas)):
                k = known[a]
                if k & lmask and k & rmask and (delta[a] & (lmask | rmask)):
                    out[a] |= 1 << c
        # R3: a |- b  gives  <n^x>a |- <n^x>b
        for a, mask in enumerate(delta):
            if not mask or not self.wraps[a]:
                continue
            for key, wa in self.wraps[a]:
                for b in _bits(mask):
                    wb = self.wrap_map[b].get(key)
                    if wb is not None:
                        out[wa] |= 1 << wb
        # R4: phi |- psi  gives  <n^x>phi /\ <m^(y+1)>psi |- <n^x>(phi /\ <m^(y+1)>psi)
        for c, left, right in self.ands:
            lf, rf = formulas[left], formulas[right]
            if not (isinstance(lf, Diamond) and isinstance(rf, Diamond)):
                continue
            if not (rf.base < lf.base and rf.exponent.is_successor()):
                continue
            phi, psi = self.index[lf.body], self.index[rf.body]
            if not delta[phi] >> psi & 1:
                continue
            inner = self.index.get(And(lf.body, rf))
            if inner is None:
                continue
            j = self.dia(lf.base, lf.exponent, inner)
            if j is not None:
                out[c] |= 1 << j
        return out


def saturate(bases_max, exponent_cap, length_cap, depth, *, coefficient_cap=2,
             max_sequents=20_000_000):
    """Sequents derivable within the caps using at most ``depth`` rule levels.

    ResourceLimit when more than ``max_sequents`` sequents accumulate.
    """
    pool = exponent_pool(exponent_cap, coefficient_cap)
    formulas = formula_universe(bases_max, pool, length_cap)
    closure = _Closure(formulas, pool, bases_max, max_sequents)
    delta = closure.absorb(closure.axioms())
    for _ in range(depth):
        if not any(delta):
            break
        delta = closure.absorb(closure.step(delta))
    return Saturation(formulas, closure.known)
