"""Sequential composition and the set-like operations on rule bodies."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .core import (
    Alphabet,
    Interpretation,
    Program,
    Rule,
    all_facts,
    as_interpretation,
    as_program,
    facts,
    heads,
    same_alphabet,
    subsets_of,
    unit_program,
)
from .errors import AlphabetMismatch, BlowupLimitExceeded
from . import semantics

DEFAULT_RULE_LIMIT = 100_000


# -- composition ------------------------------------------------------------

def compose(p: Program, r: Program | Interpretation, limit: int = DEFAULT_RULE_LIMIT) -> Program:
    """``P ∘ R``: resolve every body atom of ``P`` against the rules of ``R``.

    Per rule the possible bodies are accumulated one body atom at a time, so
    duplicate unions are merged early instead of enumerating the full cross
    product.
    """
    r = as_program(r)
    same_alphabet(p, r)
    r_bodies = r.by_head
    out: set[Rule] = set()
    for rule in p.sorted_rules:
        partial: set[frozenset[str]] = {frozenset()}
        for b in rule.sorted_body():
            options = r_bodies.get(b)
            if not options:
                partial = set()
                break
            partial = {acc | c for acc in partial for c in options}
            if len(partial) > limit:
                raise BlowupLimitExceeded(len(partial), limit)
        out.update(Rule(rule.head, body) for body in partial)
        if len(out) > limit:
            raise BlowupLimitExceeded(len(out), limit)
    return p.with_rules(out)


def power(p: Program, n: int, limit: int = DEFAULT_RULE_LIMIT) -> Program:
    """Left-nested power ``(..(PP)P..)P``; ``P^0`` is the unit program."""
    if n < 0:
        raise ValueError("power exponent must be non-negative")
    result = unit_program(p.alphabet)
    for _ in range(n):
        result = compose(result, p, limit)
    return result


def power_sequence(p: Program, limit: int = DEFAULT_RULE_LIMIT) -> tuple[list[Program], int]:
    """Powers ``P^0, P^1, ...`` up to the first repeated value.

    Returns the distinct powers and the position at which the cycle starts,
    i.e. ``P^len == P^start``.
    """
    seen: dict[Program, int] = {}
    powers: list[Program] = []
    current = unit_program(p.alphabet)
    while current not in seen:
        seen[current] = len(powers)
        powers.append(current)
        current = compose(current, p, limit)
    return powers, seen[current]


def star(p: Program, limit: int = DEFAULT_RULE_LIMIT) -> Program:
    """Kleene star ``⋃ P^n``; the power sequence is eventually periodic."""
    powers, _ = power_sequence(p, limit)
    rules: set[Rule] = set()
    for q in powers:
        rules |= q.rules
    return p.with_rules(rules)


def omega(p: Program) -> Interpretation:
    """Least model, via the fixpoint of the immediate consequence operator."""
    return semantics.lm(p)


def omega_via_star(p: Program, limit: int = DEFAULT_RULE_LIMIT) -> Interpretation:
    """Slow path: heads of the facts of ``P*``."""
    return heads(facts(star(p, limit)))


# -- reducts ----------------------------------------------------------------

def head_reduct(i: Interpretation | Program, p: Program) -> Program:
    """``^I P``: the rules of ``P`` whose head lies in ``I``."""
    i = as_interpretation(i)
    same_alphabet(p, i)
    return p.with_rules(r for r in p.rules if r.head in i.atoms)


def body_reduct(p: Program, i: Interpretation | Program) -> Program:
    """``P^I``: the rules of ``P`` whose body is contained in ``I``."""
    i = as_interpretation(i)
    same_alphabet(p, i)
    return p.with_rules(r for r in p.rules if r.body <= i.atoms)


# -- body operations --------------------------------------------------------

def _pairwise(p: Program | Interpretation, r: Program | Interpretation,
              combine: Callable[[frozenset[str], frozenset[str]], frozenset[str]]) -> Program:
    p, r = as_program(p), as_program(r)
    same_alphabet(p, r)
    r_bodies = r.by_head
    out = set()
    for head, bs in p.by_head.items():
        for b in bs:
            for c in r_bodies.get(head, ()):
                out.add(Rule(head, combine(b, c)))
    return p.with_rules(out)


def body_union(p: Program | Interpretation, r: Program | Interpretation) -> Program:
    return _pairwise(p, r, frozenset.union)


def body_inter(p: Program | Interpretation, r: Program | Interpretation) -> Program:
    return _pairwise(p, r, frozenset.intersection)


def body_sub(p: Program | Interpretation, r: Program | Interpretation) -> Program:
    return _pairwise(p, r, frozenset.difference)


def body_symdiff(p: Program | Interpretation, r: Program | Interpretation) -> Program:
    return _pairwise(p, r, frozenset.symmetric_difference)


def black_symdiff(p: Program | Interpretation, r: Program | Interpretation) -> Program:
    """``(P ⊟ R) ⊔ (R ⊟ P)``."""
    return body_union(body_sub(p, r), body_sub(r, p))


def body_comp(p: Program | Interpretation) -> Program:
    p = as_program(p)
    everything = frozenset(p.alphabet)
    return p.with_rules(Rule(r.head, everything - r.body) for r in p.rules)


def body_powerset(p: Program | Interpretation) -> Program:
    p = as_program(p)
    out = set()
    for r in p.rules:
        out.update(Rule(r.head, s) for s in subsets_of(r.body))
    return p.with_rules(out)


def ltimes(p: Program, r: Program) -> Program:
    """Rules of ``P`` with some same-head rule of ``R`` whose body is disjoint."""
    same_alphabet(p, r)
    r_bodies = r.by_head
    return p.with_rules(
        rule for rule in p.rules
        if any(not (rule.body & c) for c in r_bodies.get(rule.head, ()))
    )


def bowtie(p: Program, r: Program) -> Program:
    return ltimes(p, r) | ltimes(r, p)


def fold_body_union(programs: list[Program], alphabet: Alphabet) -> Program:
    """``⊔`` over a list; the unit of ``⊔`` (all facts) for an empty list."""
    result = all_facts(alphabet)
    for q in programs:
        result = body_union(result, q)
    return result


# -- homomorphisms ----------------------------------------------------------

@dataclass(frozen=True)
class BlowupMap:
    """Sends each source atom to a set of target atoms; sets map by union."""

    source: Alphabet
    target: Alphabet
    image: Mapping[str, frozenset[str]]

    def __post_init__(self) -> None:
        if set(self.image) != set(self.source):
            raise AlphabetMismatch(self.source, Alphabet(tuple(self.image)))
        normal = {}
        for a in self.source:
            img = frozenset(self.image[a])
            if not img <= set(self.target):
                raise AlphabetMismatch(self.target, Alphabet(tuple(img)))
            normal[a] = img
        object.__setattr__(self, "image", normal)

    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(sorted((k, tuple(sorted(v))) for k, v in self.image.items()))))

    def of_set(self, atoms: frozenset[str]) -> frozenset[str]:
        return frozenset().union(*(self.image[a] for a in atoms))

    def apply(self, i: Interpretation) -> Interpretation:
        if i.alphabet != self.source:
            raise AlphabetMismatch(self.source, i.alphabet)
        return Interpretation(self.target, self.of_set(i.atoms))


def bullet_extend(m: BlowupMap, p: Program | Interpretation) -> Program:
    """``P• = {a' ← B• | a ← B ∈ P, a' ∈ {a}•}`` over the target alphabet."""
    p = as_program(p)
    if p.alphabet != m.source:
        raise AlphabetMismatch(m.source, p.alphabet)
    return Program(m.target, frozenset(
        Rule(a2, m.of_set(r.body)) for r in p.rules for a2 in m.image[r.head]
    ))
