"""Immediate consequence operator, models, least models and subsumption."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Interpretation, Program, Rule, as_interpretation, same_alphabet
from .errors import AlphabetTooLarge

ENUMERATION_LIMIT = 20


def _guard(p: Program) -> None:
    if len(p.alphabet) > ENUMERATION_LIMIT:
        raise AlphabetTooLarge(len(p.alphabet), ENUMERATION_LIMIT)


def _tp(p: Program, atoms: frozenset[str]) -> frozenset[str]:
    return frozenset(r.head for r in p.rules if r.body <= atoms)


def tp_step(p: Program, i: Interpretation | Program) -> Interpretation:
    """``T_P(I)``: heads of the rules whose bodies hold in ``I``."""
    i = as_interpretation(i)
    same_alphabet(p, i)
    return Interpretation(p.alphabet, _tp(p, i.atoms))


@dataclass(frozen=True)
class FixpointTrace:
    """The stages ``T_P^0 = ∅, T_P^1, ...`` up to and including the first repeat."""

    stages: tuple[Interpretation, ...]

    def __len__(self) -> int:
        return len(self.stages)

    @property
    def fixpoint(self) -> Interpretation:
        return self.stages[-1]


def fixpoint_trace(p: Program) -> FixpointTrace:
    current: frozenset[str] = frozenset()
    stages = [current]
    while True:
        nxt = _tp(p, current)
        stages.append(nxt)
        if nxt == current:
            break
        current = nxt
    return FixpointTrace(tuple(Interpretation(p.alphabet, s) for s in stages))


def least_model(p: Program) -> tuple[Interpretation, FixpointTrace]:
    trace = fixpoint_trace(p)
    return trace.fixpoint, trace


def lm(p: Program) -> Interpretation:
    """Least model without the trace."""
    return least_model(p)[0]


def is_model(p: Program, i: Interpretation | Program) -> bool:
    i = as_interpretation(i)
    same_alphabet(p, i)
    return _tp(p, i.atoms) <= i.atoms


def models(p: Program) -> list[Interpretation]:
    """Every model of ``p``, in the alphabet's subset order."""
    _guard(p)
    return [i for i in p.alphabet.interpretations() if _tp(p, i.atoms) <= i.atoms]


def supported_models(p: Program) -> list[Interpretation]:
    _guard(p)
    return [i for i in p.alphabet.interpretations() if _tp(p, i.atoms) == i.atoms]


def least_model_oracle(p: Program) -> Interpretation:
    """Brute force: the ⊆-least element among all enumerated models."""
    found = models(p)
    least = found[0]
    for m in found:
        if m.atoms < least.atoms:
            least = m
    if any(not least.atoms <= m.atoms for m in found):
        raise AssertionError(f"models of {p} have no least element")
    return least


def ss_witness(p: Program, r: Program) -> Interpretation | None:
    """First interpretation ``I`` with ``T_P(I) ⊄ T_R(I)``, if any."""
    same_alphabet(p, r)
    _guard(p)
    for s in p.alphabet.subsets():
        if not _tp(p, s) <= _tp(r, s):
            return Interpretation(p.alphabet, s)
    return None


def ss_leq(p: Program, r: Program) -> bool:
    return ss_witness(p, r) is None


def ss_equiv(p: Program, r: Program) -> bool:
    same_alphabet(p, r)
    _guard(p)
    return all(_tp(p, s) == _tp(r, s) for s in p.alphabet.subsets())


def ss_reduce(p: Program) -> Program:
    """Drop every rule whose body strictly contains another body for the same head."""
    kept: list[Rule] = []
    for head, bodies in p.by_head.items():
        for b in bodies:
            if not any(c < b for c in bodies):
                kept.append(Rule(head, b))
    return p.with_rules(kept)


def index(p: Program) -> int:
    """Least ``n`` with ``T_P^n(∅) = LM(P)``."""
    trace = fixpoint_trace(p)
    return trace.stages.index(trace.fixpoint)


def atom_index(p: Program, atom: str) -> int | float:
    """First stage ``n ≥ 1`` at which ``atom`` is derived; ``math.inf`` if never."""
    for n, stage in enumerate(fixpoint_trace(p).stages):
        if n >= 1 and atom in stage:
            return n
    return math.inf
