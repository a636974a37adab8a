"""Seeded random programs, interpretations and maps.

Every generator consumes draws in a fixed order (atoms in alphabet order), so
a seed determines its output on every platform.
"""

from __future__ import annotations

from fractions import Fraction

from ..algebra import BlowupMap
from ..core import Alphabet, Interpretation, PermutationMap, Program, Rule
from .rng import SplitMix64

DEFAULT_RULES_PER_HEAD = 2
DEFAULT_BODY_PROB = Fraction(2, 5)

_LETTERS = "abcdefgh"


def letters(n: int) -> Alphabet:
    if not 0 <= n <= len(_LETTERS):
        raise ValueError(f"alphabet size must be between 0 and {len(_LETTERS)}")
    return Alphabet(tuple(_LETTERS[:n]))


def _body(rng: SplitMix64, alphabet: Alphabet, body_prob: Fraction,
          pool: frozenset[str] | None = None) -> frozenset[str]:
    atoms = alphabet if pool is None else sorted(pool)
    return frozenset(b for b in atoms if rng.bernoulli(body_prob))


def gen_program(rng: SplitMix64, alphabet: Alphabet,
                max_rules_per_head: int = DEFAULT_RULES_PER_HEAD,
                body_prob: Fraction = DEFAULT_BODY_PROB) -> Program:
    rules = set()
    for head in alphabet:
        for _ in range(rng.next() % (max_rules_per_head + 1)):
            rules.add(Rule(head, _body(rng, alphabet, body_prob)))
    return Program(alphabet, frozenset(rules))


def gen_minimalist(rng: SplitMix64, alphabet: Alphabet,
                   body_prob: Fraction = DEFAULT_BODY_PROB,
                   max_width: int | None = None) -> Program:
    """At most one rule per head; bodies over ``max_width`` are trimmed at random."""
    rules = set()
    for head in alphabet:
        if rng.next() % 2 == 0:
            continue
        body = sorted(_body(rng, alphabet, body_prob))
        if max_width is not None and len(body) > max_width:
            body = rng.shuffled(body)[:max_width]
        rules.add(Rule(head, frozenset(body)))
    return Program(alphabet, frozenset(rules))


def gen_krom(rng: SplitMix64, alphabet: Alphabet,
             max_rules_per_head: int = DEFAULT_RULES_PER_HEAD) -> Program:
    """Rules with at most one body atom; a fact with probability one in ``|A|+1``."""
    rules = set()
    atoms = list(alphabet)
    for head in alphabet:
        for _ in range(rng.next() % (max_rules_per_head + 1)):
            k = rng.below(len(atoms) + 1)
            rules.add(Rule(head, frozenset() if k == len(atoms) else frozenset({atoms[k]})))
    return Program(alphabet, frozenset(rules))


def gen_interpretation(rng: SplitMix64, alphabet: Alphabet) -> Interpretation:
    return Interpretation(alphabet, frozenset(a for a in alphabet if rng.next() % 2))


def gen_ss_variant(rng: SplitMix64, p: Program, extra: int = 2) -> Program:
    """``P`` plus up to ``extra`` rules subsumed by rules of ``P``; ``≡ss P`` by construction."""
    rules = set(p.rules)
    source = p.sorted_rules
    for _ in range(extra):
        if not source:
            break
        r = rng.choice(source)
        grown = r.body | _body(rng, p.alphabet, Fraction(1, 2))
        rules.add(Rule(r.head, grown))
    return p.with_rules(rules)


def gen_permutation(rng: SplitMix64, alphabet: Alphabet) -> PermutationMap:
    atoms = list(alphabet)
    return PermutationMap(alphabet, dict(zip(atoms, rng.shuffled(atoms))))


def gen_blowup_map(rng: SplitMix64, source: Alphabet, max_image: int = 2) -> BlowupMap:
    """Pairwise disjoint, nonempty images into a fresh target alphabet ``a1, a2, b1, ...``."""
    image = {}
    for a in source:
        k = 1 + rng.below(max_image)
        image[a] = frozenset(f"{a}{i}" for i in range(1, k + 1))
    target = Alphabet(tuple(t for img in image.values() for t in img))
    return BlowupMap(source, target, image)


def gen_shift_triple(rng: SplitMix64, alphabet: Alphabet,
                     body_prob: Fraction = DEFAULT_BODY_PROB) -> tuple[Program, Program, Program]:
    """``(P, Q, R)`` where ``P`` and ``R`` bodies avoid the same-head bodies of ``Q``.

    ``Q`` is arbitrary, so heads of ``P`` may have zero or several rules in ``Q``.
    """
    q = gen_program(rng, alphabet, body_prob=body_prob)
    return _avoiding(rng, alphabet, q, body_prob), q, _avoiding(rng, alphabet, q, body_prob)


def gen_guarded_shift_triple(rng: SplitMix64, alphabet: Alphabet,
                             body_prob: Fraction = DEFAULT_BODY_PROB) -> tuple[Program, Program, Program]:
    """Like :func:`gen_shift_triple` but ``Q`` has exactly one rule for every head."""
    q = Program(alphabet, frozenset(Rule(h, _body(rng, alphabet, body_prob)) for h in alphabet))
    return _avoiding(rng, alphabet, q, body_prob), q, _avoiding(rng, alphabet, q, body_prob)


def _avoiding(rng: SplitMix64, alphabet: Alphabet, q: Program, body_prob: Fraction) -> Program:
    rules = set()
    q_bodies = q.by_head
    for head in alphabet:
        blocked = frozenset().union(*q_bodies.get(head, ()))
        pool = frozenset(alphabet) - blocked
        for _ in range(rng.next() % (DEFAULT_RULES_PER_HEAD + 1)):
            rules.add(Rule(head, _body(rng, alphabet, body_prob, pool)))
    return Program(alphabet, frozenset(rules))
