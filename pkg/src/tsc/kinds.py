"""Step tags shared by normalization traces and derivations."""

from dataclasses import dataclass
from typing import Any, Tuple

from .syntax import Formula

AXIOMS = ("Ax1a", "Ax1b", "Ax2L", "Ax2R", "Ax3", "Ax4L", "Ax4R", "Ax5", "Ax6L", "Ax6R")
RULES = ("R1", "R2", "R3", "R4")
DERIVED = ("PS1", "PS2", "EqualBase", "ConNF", "MonoMax")
ALL_TAGS = AXIOMS + RULES + DERIVED

RULE_ARITY = {"R1": 2, "R2": 2, "R3": 1, "R4": 1}

# Ax4L:  <n^(a+b)>phi |- <n^b><n^a>phi      Ax4R: the converse
# Ax6L:  <n^a>psi |- <n^(e^(n0-n)(a0)*(1+a))>T /\ psi     Ax6R: the converse
CONVERSE = {"Ax4L": "Ax4R", "Ax4R": "Ax4L", "Ax6L": "Ax6R", "Ax6R": "Ax6L"}


@dataclass(frozen=True)
class StepKind:
    """A tag plus the parameters instantiating its schema.

    ``params`` is a sorted tuple of ``(name, value)`` pairs so kinds hash
    and compare structurally.
    """

    tag: str
    params: Tuple[Tuple[str, Any], ...] = ()

    def __post_init__(self):
        if self.tag not in ALL_TAGS:
            raise ValueError(f"unknown step tag {self.tag!r}")

    @classmethod
    def of(cls, tag, **params):
        return cls(tag, tuple(sorted(params.items())))

    def get(self, name, default=None):
        for key, value in self.params:
            if key == name:
                return value
        return default

    @property
    def param_dict(self):
        return dict(self.params)

    def __str__(self):
        if not self.params:
            return self.tag
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.tag}({inner})"


@dataclass(frozen=True)
class TraceStep:
    """One rewrite performed by normalization.

    ``before``/``after`` are whole formulas; the rewrite replaced
    ``local_before`` by ``local_after`` at ``path``.  ``kind`` justifies
    ``local_before |- local_after``; every step is an equivalence.
    """

    before: Formula
    after: Formula
    kind: StepKind
    path: Tuple[str, ...] = ()
    local_before: Formula = None
    local_after: Formula = None


Trace = Tuple[TraceStep, ...]
