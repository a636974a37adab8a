"""Atoms, alphabets, interpretations, rules and programs.

All values are immutable.  A program always carries the alphabet it lives
over, because complement, ``A⊕``, the full program and friends are only
meaningful relative to a fixed alphabet.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping

from .errors import AlphabetMismatch, AtomNotInAlphabet, InvalidAtomName, NotAnInterpretation

ATOM_PATTERN = re.compile(r"[a-z][a-zA-Z0-9_]*")


def check_atom(name: str) -> str:
    if not isinstance(name, str) or ATOM_PATTERN.fullmatch(name) is None:
        raise InvalidAtomName(name)
    return name


def subsets_of(atoms: Iterable[str]) -> Iterator[frozenset[str]]:
    atoms = sorted(atoms)
    for k in range(len(atoms) + 1):
        for combo in combinations(atoms, k):
            yield frozenset(combo)


@dataclass(frozen=True)
class Alphabet:
    """A finite, duplicate-free set of atoms kept in lexicographic order."""

    atoms: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        atoms = tuple(sorted({check_atom(a) for a in self.atoms}))
        object.__setattr__(self, "atoms", atoms)

    @classmethod
    def of(cls, *atoms: str) -> Alphabet:
        return cls(atoms)

    def __iter__(self) -> Iterator[str]:
        return iter(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def __contains__(self, atom: object) -> bool:
        return atom in self._members

    def __str__(self) -> str:
        return "{" + ", ".join(self.atoms) + "}"

    @cached_property
    def _members(self) -> frozenset[str]:
        return frozenset(self.atoms)

    def union(self, other: Alphabet) -> Alphabet:
        return Alphabet(self.atoms + other.atoms)

    def subsets(self) -> Iterator[frozenset[str]]:
        """All subsets, ordered by size and then lexicographically."""
        return subsets_of(self.atoms)

    def interpretations(self) -> Iterator[Interpretation]:
        for s in self.subsets():
            yield Interpretation(self, s)


@dataclass(frozen=True)
class Interpretation:
    """A set of atoms over an alphabet; identified with the program of its facts."""

    alphabet: Alphabet
    atoms: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        atoms = frozenset(self.atoms)
        for a in atoms:
            if a not in self.alphabet:
                raise AtomNotInAlphabet(a)
        object.__setattr__(self, "atoms", atoms)

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.atoms))

    def __len__(self) -> int:
        return len(self.atoms)

    def __contains__(self, atom: object) -> bool:
        return atom in self.atoms

    def __le__(self, other: Interpretation) -> bool:
        return self.atoms <= other.atoms

    def __lt__(self, other: Interpretation) -> bool:
        return self.atoms < other.atoms

    def __or__(self, other: Interpretation) -> Interpretation:
        _same(self.alphabet, other.alphabet)
        return Interpretation(self.alphabet, self.atoms | other.atoms)

    def __and__(self, other: Interpretation) -> Interpretation:
        _same(self.alphabet, other.alphabet)
        return Interpretation(self.alphabet, self.atoms & other.atoms)

    def __sub__(self, other: Interpretation) -> Interpretation:
        _same(self.alphabet, other.alphabet)
        return Interpretation(self.alphabet, self.atoms - other.atoms)

    def complement(self) -> Interpretation:
        return Interpretation(self.alphabet, self.alphabet._members - self.atoms)

    def __str__(self) -> str:
        return "{" + ", ".join(self) + "}"

    def as_program(self) -> Program:
        return Program(self.alphabet, frozenset(Rule(a) for a in self.atoms))


@dataclass(frozen=True)
class Rule:
    """``head :- body``; a fact when the body is empty."""

    head: str
    body: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        check_atom(self.head)
        body = frozenset(self.body)
        for b in body:
            check_atom(b)
        object.__setattr__(self, "body", body)

    @property
    def is_fact(self) -> bool:
        return not self.body

    @property
    def width(self) -> int:
        return len(self.body)

    def sorted_body(self) -> tuple[str, ...]:
        return tuple(sorted(self.body))

    def sort_key(self) -> tuple:
        return (self.head, len(self.body), self.sorted_body())

    def __str__(self) -> str:
        if not self.body:
            return f"{self.head}."
        return f"{self.head} :- {', '.join(self.sorted_body())}."


@dataclass(frozen=True)
class Program:
    """A finite set of rules over an explicit alphabet."""

    alphabet: Alphabet
    rules: frozenset[Rule] = field(default=frozenset())

    def __post_init__(self) -> None:
        rules = frozenset(self.rules)
        members = self.alphabet._members
        for r in rules:
            if r.head not in members:
                raise AtomNotInAlphabet(r.head, r)
            if not r.body <= members:
                missing = min(r.body - members)
                raise AtomNotInAlphabet(missing, r)
        object.__setattr__(self, "rules", rules)

    @classmethod
    def empty(cls, alphabet: Alphabet) -> Program:
        return cls(alphabet, frozenset())

    @classmethod
    def of(cls, alphabet: Alphabet, *rules: Rule | tuple) -> Program:
        """Build from rules or ``(head, body)`` pairs; a bare string is a fact."""
        built = []
        for r in rules:
            if isinstance(r, Rule):
                built.append(r)
            elif isinstance(r, str):
                built.append(Rule(r))
            else:
                head, body = r
                built.append(Rule(head, frozenset(body)))
        return cls(alphabet, frozenset(built))

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.sorted_rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __contains__(self, rule: object) -> bool:
        return rule in self.rules

    def __str__(self) -> str:
        return "{" + " ".join(str(r) for r in self) + "}"

    @cached_property
    def sorted_rules(self) -> tuple[Rule, ...]:
        return tuple(sorted(self.rules, key=Rule.sort_key))

    @cached_property
    def by_head(self) -> Mapping[str, tuple[frozenset[str], ...]]:
        """Bodies of the rules for each head, in canonical order."""
        index: dict[str, list[frozenset[str]]] = {}
        for r in self.sorted_rules:
            index.setdefault(r.head, []).append(r.body)
        return {h: tuple(bs) for h, bs in index.items()}

    def with_rules(self, rules: Iterable[Rule]) -> Program:
        return Program(self.alphabet, frozenset(rules))

    def __or__(self, other: Program) -> Program:
        _same(self.alphabet, other.alphabet)
        return self.with_rules(self.rules | other.rules)

    def __and__(self, other: Program) -> Program:
        _same(self.alphabet, other.alphabet)
        return self.with_rules(self.rules & other.rules)

    def __sub__(self, other: Program) -> Program:
        _same(self.alphabet, other.alphabet)
        return self.with_rules(self.rules - other.rules)

    def __le__(self, other: Program) -> bool:
        _same(self.alphabet, other.alphabet)
        return self.rules <= other.rules

    def __lt__(self, other: Program) -> bool:
        _same(self.alphabet, other.alphabet)
        return self.rules < other.rules

    def is_interpretation(self) -> bool:
        return all(r.is_fact for r in self.rules)

    def as_interpretation(self) -> Interpretation:
        if not self.is_interpretation():
            raise NotAnInterpretation(self)
        return Interpretation(self.alphabet, frozenset(r.head for r in self.rules))


def _same(left: Alphabet, right: Alphabet) -> None:
    if left != right:
        raise AlphabetMismatch(left, right)


def same_alphabet(*values: Program | Interpretation) -> Alphabet:
    """Return the common alphabet of ``values`` or raise AlphabetMismatch."""
    first = values[0].alphabet
    for v in values[1:]:
        _same(first, v.alphabet)
    return first


def as_program(value: Program | Interpretation) -> Program:
    return value.as_program() if isinstance(value, Interpretation) else value


def as_interpretation(value: Program | Interpretation) -> Interpretation:
    return value if isinstance(value, Interpretation) else value.as_interpretation()


def validate_program(alphabet: Alphabet, rules: Iterable[Rule]) -> Program:
    """Canonical program from ``rules``; rejects atoms outside ``alphabet``."""
    return Program(alphabet, frozenset(rules))


# -- inspection -------------------------------------------------------------

def heads(p: Program) -> Interpretation:
    return Interpretation(p.alphabet, frozenset(r.head for r in p.rules))


def bodies(p: Program) -> Interpretation:
    return Interpretation(p.alphabet, frozenset().union(*(r.body for r in p.rules)))


def facts(p: Program) -> Program:
    return p.with_rules(r for r in p.rules if r.is_fact)


def proper(p: Program) -> Program:
    return p.with_rules(r for r in p.rules if not r.is_fact)


def width(p: Program) -> int:
    return max((r.width for r in p.rules), default=0)


def is_krom(p: Program) -> bool:
    return all(r.width <= 1 for r in p.rules)


def is_minimalist(p: Program) -> bool:
    return all(len(bs) == 1 for bs in p.by_head.values())


# -- canonical programs -----------------------------------------------------

@dataclass(frozen=True)
class PermutationMap:
    """A bijection of an alphabet onto itself."""

    alphabet: Alphabet
    mapping: Mapping[str, str]

    def __post_init__(self) -> None:
        full = {a: self.mapping.get(a, a) for a in self.alphabet}
        if set(self.mapping) - set(self.alphabet):
            extra = sorted(set(self.mapping) - set(self.alphabet))[0]
            raise AtomNotInAlphabet(extra)
        if sorted(full.values()) != list(self.alphabet.atoms):
            raise ValueError(f"not a permutation of {self.alphabet}: {dict(self.mapping)}")
        object.__setattr__(self, "mapping", dict(sorted(full.items())))

    def __hash__(self) -> int:
        return hash((self.alphabet, tuple(self.mapping.items())))

    def __call__(self, atom: str) -> str:
        return self.mapping[atom]

    @classmethod
    def from_cycles(cls, alphabet: Alphabet, *cycles: Iterable[str]) -> PermutationMap:
        """``from_cycles(A, "abc")`` is the cycle a→b→c→a; unlisted atoms are fixed."""
        mapping: dict[str, str] = {}
        for cycle in cycles:
            cycle = list(cycle)
            for i, a in enumerate(cycle):
                mapping[a] = cycle[(i + 1) % len(cycle)]
        return cls(alphabet, mapping)


def unit_program(alphabet: Alphabet) -> Program:
    return Program(alphabet, frozenset(Rule(a, frozenset({a})) for a in alphabet))


def full_program(alphabet: Alphabet) -> Program:
    return Program(alphabet, frozenset(Rule(a, s) for a in alphabet for s in alphabet.subsets()))


def oplus(i: Interpretation) -> Program:
    """``I⊕ = {a ← {a} ∪ I | a ∈ A}``."""
    return Program(i.alphabet, frozenset(Rule(a, i.atoms | {a}) for a in i.alphabet))


def a_oplus(alphabet: Alphabet) -> Program:
    return oplus(Interpretation(alphabet, frozenset(alphabet)))


def all_facts(alphabet: Alphabet) -> Program:
    """The alphabet itself read as a program of facts."""
    return Interpretation(alphabet, frozenset(alphabet)).as_program()


def diagonal_program(alphabet: Alphabet) -> Program:
    members = frozenset(alphabet)
    return Program(alphabet, frozenset(Rule(a, members - {a}) for a in alphabet))


def permutation_program(pi: PermutationMap) -> Program:
    return Program(pi.alphabet, frozenset(Rule(pi(a), frozenset({a})) for a in pi.alphabet))


def square(i: Interpretation) -> Program:
    """``I□ = {a ← I | a ∈ A}``: embeds interpretations into minimalist programs."""
    return Program(i.alphabet, frozenset(Rule(a, i.atoms) for a in i.alphabet))


def canonical_program(kind: str, alphabet: Alphabet,
                      extra: Interpretation | PermutationMap | None = None) -> Program:
    """Dispatch to one of the named constructors above."""
    if kind in ("oplus", "permutation", "square"):
        if extra is None:
            raise ValueError(f"{kind} needs an extra argument")
        if extra.alphabet != alphabet:
            raise AlphabetMismatch(alphabet, extra.alphabet)
    if kind == "unit":
        return unit_program(alphabet)
    if kind == "full":
        return full_program(alphabet)
    if kind == "oplus":
        return oplus(extra)
    if kind == "diagonal":
        return diagonal_program(alphabet)
    if kind == "permutation":
        return permutation_program(extra)
    if kind == "square":
        return square(extra)
    raise ValueError(f"unknown canonical program kind {kind!r}")
