"""Deciding derivability between formulas.

Both sides are normalized.  ``psi0 |- psi1`` then holds iff every monomial
``<m^b>T`` of psi1 satisfies ``b <= e^(n-m)(a)``, where ``<n^a>T`` is the
monomial of psi0 with the least base ``n >= m``.  When psi0 has no base
``>= m`` the sequent fails; for the last monomial of psi1 this is the
"base overflow" condition.  The succedent T is always derivable and the
antecedent T derives nothing else.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

from .errors import InvariantViolation
from .normalform import Mnf, normalize
from .ordinal import ZERO, Ordinal, hyper_exp

__all__ = [
    "BoundReport", "Failure", "Verdict", "decide_mnf", "decide", "equivalent",
    "consequence_bound", "pi_fragment", "equiv_level", "level_bounds",
]


@dataclass(frozen=True)
class BoundReport:
    """Succedent monomial ``<m^beta>T`` checked against the antecedent
    monomial of base ``n`` (None when there is none), with
    ``bound = e^(n-m)(alpha)``."""

    m: int
    beta: Ordinal
    n: Optional[int]
    bound: Ordinal

    @property
    def ok(self):
        return self.beta <= self.bound


@dataclass(frozen=True)
class Failure:
    """Why a sequent is not derivable.

    ``kind`` is ``"empty-antecedent"``, ``"base-overflow"`` (largest
    succedent base exceeds the largest antecedent base) or ``"bound"``.
    """

    kind: str
    report: Optional[BoundReport] = None
    succedent_max_base: Optional[int] = None
    antecedent_max_base: Optional[int] = None

    def describe(self):
        if self.kind == "empty-antecedent":
            return "the antecedent is T, which derives no modal formula"
        if self.kind == "base-overflow":
            return (f"succedent base {self.succedent_max_base} exceeds the largest "
                    f"antecedent base {self.antecedent_max_base}")
        r = self.report
        return (f"<{r.m}^{r.beta}>T exceeds the bound {r.bound} given by the "
                f"antecedent monomial of base {r.n}")


@dataclass(frozen=True)
class Verdict:
    derivable: bool
    reports: Tuple[BoundReport, ...] = ()
    failure: Optional[Failure] = None
    antecedent: Mnf = field(default_factory=Mnf)
    succedent: Mnf = field(default_factory=Mnf)

    def __bool__(self):
        return self.derivable

    def describe(self):
        if self.failure is not None:
            return self.failure.describe()
        if not self.reports:
            return "the succedent is T"
        return "; ".join(f"<{r.m}^{r.beta}>T <= bound {r.bound} (from base {r.n})"
                         for r in self.reports)


def _least_base_at_least(psi, m):
    for mono in psi.monomials:
        if mono.base >= m:
            return mono
    return None


def consequence_bound(psi, m):
    """Largest g with ``psi |- <m^g>T`` (0 when no base of psi is >= m)."""
    mono = _least_base_at_least(psi, m)
    if mono is None:
        return ZERO
    return hyper_exp(mono.base - m, mono.exponent)


def decide_mnf(psi0, psi1):
    for side in (psi0, psi1):
        if not side.is_valid():
            raise InvariantViolation(f"{side} is not a monomial normal form")
    if not psi1.monomials:
        return Verdict(True, antecedent=psi0, succedent=psi1)
    if not psi0.monomials:
        return Verdict(False, failure=Failure("empty-antecedent"),
                       antecedent=psi0, succedent=psi1)
    top0, top1 = psi0.monomials[-1].base, psi1.monomials[-1].base
    if top1 > top0:
        return Verdict(False, failure=Failure("base-overflow", succedent_max_base=top1,
                                              antecedent_max_base=top0),
                       antecedent=psi0, succedent=psi1)
    reports = []
    for mono in psi1.monomials:
        host = _least_base_at_least(psi0, mono.base)
        bound = hyper_exp(host.base - mono.base, host.exponent)
        report = BoundReport(mono.base, mono.exponent, host.base, bound)
        if not report.ok:
            return Verdict(False, tuple(reports), Failure("bound", report),
                           antecedent=psi0, succedent=psi1)
        reports.append(report)
    return Verdict(True, tuple(reports), antecedent=psi0, succedent=psi1)


def decide(phi, psi):
    return decide_mnf(normalize(phi), normalize(psi))


def equivalent(phi, psi):
    return normalize(phi) == normalize(psi)


def pi_fragment(psi, n):
    """Prefix of psi through its first monomial of base >= n (all of psi if none)."""
    monos = psi.monomials
    for j, mono in enumerate(monos):
        if mono.base >= n:
            return Mnf(monos[:j + 1])
    return psi


def level_bounds(psi, n):
    """``[consequence_bound(psi, m) for m in 0..n]``."""
    return [consequence_bound(psi, m) for m in range(n + 1)]


def equiv_level(phi, psi, n):
    """phi and psi have the same consequences among formulas with all bases <= n."""
    return level_bounds(normalize(phi), n) == level_bounds(normalize(psi), n)
