"""Hypothesis strategies for small programs."""

from __future__ import annotations

from hypothesis import strategies as st

from hornalg.core import Alphabet, Interpretation, Program, Rule

LETTERS = "abcde"


def alphabets(min_size: int = 1, max_size: int = 4):
    return st.integers(min_size, max_size).map(lambda n: Alphabet(tuple(LETTERS[:n])))


def rules(alphabet: Alphabet, max_width: int | None = None):
    atoms = list(alphabet)
    width = len(atoms) if max_width is None else max_width
    return st.builds(Rule, st.sampled_from(atoms), st.frozensets(st.sampled_from(atoms), max_size=width))


def programs_over(alphabet: Alphabet, max_rules: int = 6, max_width: int | None = None):
    return st.frozensets(rules(alphabet, max_width), max_size=max_rules).map(lambda rs: Program(alphabet, rs))


def minimalist_over(alphabet: Alphabet):
    atoms = list(alphabet)
    bodies = st.one_of(st.none(), st.frozensets(st.sampled_from(atoms)))
    return st.lists(bodies, min_size=len(atoms), max_size=len(atoms)).map(
        lambda bs: Program(alphabet, frozenset(Rule(a, b) for a, b in zip(atoms, bs) if b is not None)))


def interpretations_over(alphabet: Alphabet):
    return st.frozensets(st.sampled_from(list(alphabet))).map(lambda s: Interpretation(alphabet, s))


programs = alphabets().flatmap(programs_over)


def program_pairs(n: int = 2, **kw):
    return alphabets().flatmap(lambda a: st.tuples(*(programs_over(a, **kw) for _ in range(n))))
