from itertools import product

import pytest
from hypothesis import given

from hornalg.algebra import (
    BlowupMap,
    black_symdiff,
    body_comp,
    body_inter,
    body_powerset,
    body_reduct,
    body_sub,
    body_symdiff,
    body_union,
    bowtie,
    bullet_extend,
    compose,
    fold_body_union,
    head_reduct,
    ltimes,
    omega,
    omega_via_star,
    power,
    power_sequence,
    star,
)
from hornalg.core import Alphabet, Interpretation, Program, Rule, all_facts, heads, is_minimalist, unit_program
from hornalg.errors import AlphabetMismatch, BlowupLimitExceeded
from hornalg.semantics import lm, ss_equiv, tp_step
from hornalg.textio import parse_program

from strategies import alphabets, interpretations_over, minimalist_over, program_pairs, programs, programs_over

ABC = Alphabet.of("a", "b", "c")
ABCD = Alphabet.of("a", "b", "c", "d")


def compose_oracle(p: Program, r: Program) -> Program:
    """Cross product of one R-rule per body atom, written without shortcuts."""
    by_head = {}
    for rule in r.rules:
        by_head.setdefault(rule.head, []).append(rule.body)
    out = set()
    for rule in p.rules:
        atoms = sorted(rule.body)
        choices = [by_head.get(b, []) for b in atoms]
        for pick in product(*choices):
            out.add(Rule(rule.head, frozenset().union(*pick)))
    return Program(p.alphabet, frozenset(out))


@given(program_pairs())
def test_compose_matches_oracle(pr):
    p, r = pr
    assert compose(p, r) == compose_oracle(p, r)


@given(program_pairs())
def test_compose_is_operator_composition(pr):
    p, r = pr
    for i in p.alphabet.interpretations():
        assert tp_step(compose(p, r), i) == tp_step(p, tp_step(r, i))


@given(program_pairs(3))
def test_compose_associative_up_to_equality_of_operators(triple):
    p, q, r = triple
    assert ss_equiv(compose(compose(p, q), r), compose(p, compose(q, r)))


@given(programs)
def test_unit_is_neutral(p):
    one = unit_program(p.alphabet)
    assert compose(p, one) == p and compose(one, p) == p


def test_compose_with_interpretation_and_limit():
    p = parse_program("c :- a, b.", ABC)
    i = Interpretation(ABC, frozenset({"a", "b"}))
    assert compose(p, i) == parse_program("c.", ABC)
    wide = parse_program("a :- a, b, c. b :- a, b, c. c :- a, b, c.", ABC)
    r = parse_program("a :- a. a :- b. b :- b. b :- c. c :- c. c :- a.", ABC)
    with pytest.raises(BlowupLimitExceeded):
        compose(wide, r, limit=3)


def test_alphabets_must_agree():
    with pytest.raises(AlphabetMismatch):
        compose(Program.empty(ABC), Program.empty(ABCD))
    with pytest.raises(AlphabetMismatch):
        body_union(Program.empty(ABC), Program.empty(ABCD))


def test_powers_and_star():
    p = parse_program("b :- a. c :- b.", ABC)
    assert power(p, 0) == unit_program(ABC)
    assert power(p, 2) == parse_program("c :- a.", ABC)
    powers, start = power_sequence(p)
    assert len(powers) == 4 and start == 3
    assert star(p) == unit_program(ABC) | parse_program("b :- a. c :- b. c :- a.", ABC)
    with pytest.raises(ValueError):
        power(p, -1)


@given(programs)
def test_omega_is_least_model_and_star_agrees(p):
    assert omega(p) == lm(p) == omega_via_star(p)


@given(programs)
def test_star_is_reflexive_and_unfolds(p):
    s = star(p)
    assert unit_program(p.alphabet) <= s and p <= s
    assert s == unit_program(p.alphabet) | compose(s, p)


def test_reducts():
    p = parse_program("a. b :- a. c :- a, b.", ABC)
    i = Interpretation(ABC, frozenset({"a"}))
    assert head_reduct(i, p) == parse_program("a.", ABC)
    assert body_reduct(p, i) == parse_program("a. b :- a.", ABC)


def test_black_symdiff_follows_its_definition():
    p = parse_program("a :- b. a :- c.", ABCD)
    r = parse_program("a :- b. a :- d.", ABCD)
    expected = parse_program("a. a :- b. a :- c. a :- d. a :- b, c. a :- b, d. a :- c, d.", ABCD)
    assert black_symdiff(p, r) == expected == body_union(body_sub(p, r), body_sub(r, p))
    assert body_symdiff(p, r) <= black_symdiff(p, r)


def test_body_operations_on_interpretations():
    i = Interpretation(ABC, frozenset({"a", "b"}))
    j = Interpretation(ABC, frozenset({"b", "c"}))
    assert body_union(i, j) == parse_program("b.", ABC)
    assert body_inter(i, j) == parse_program("b.", ABC)
    assert body_powerset(i) == i.as_program()
    assert body_comp(i) == parse_program("a :- a, b, c. b :- a, b, c.", ABC)


def test_ltimes_and_bowtie():
    p = parse_program("a :- b. a :- c.", ABC)
    r = parse_program("a :- b.", ABC)
    assert ltimes(p, r) == parse_program("a :- c.", ABC)
    assert bowtie(p, r) == parse_program("a :- c. a :- b.", ABC)


def test_fold_of_nothing_is_the_unit():
    assert fold_body_union([], ABC) == all_facts(ABC)


@given(program_pairs())
def test_body_union_commutes_and_has_unit(pr):
    p, r = pr
    assert body_union(p, r) == body_union(r, p)
    assert body_union(p, all_facts(p.alphabet)) == p


@given(programs)
def test_complement_is_involutive(p):
    assert body_comp(body_comp(p)) == p


@given(programs_over(ABC).flatmap(
    lambda p: interpretations_over(ABC).map(lambda i: (p, i))))
def test_reducts_agree_with_interpretations(pi):
    p, i = pi
    assert head_reduct(i, p) | head_reduct(i.complement(), p) == p
    assert body_reduct(p, Interpretation(ABC, frozenset(ABC))) == p


@given(alphabets().flatmap(minimalist_over))
def test_minimalist_self_subtraction(m):
    assert is_minimalist(m)
    assert body_sub(m, m) == heads(m).as_program()


def test_blowup_map_validation_and_extension():
    src, tgt = Alphabet.of("a", "b"), Alphabet.of("a1", "a2", "b1")
    m = BlowupMap(src, tgt, {"a": {"a1", "a2"}, "b": {"b1"}})
    p = parse_program("b :- a.", src)
    assert bullet_extend(m, p) == parse_program("b1 :- a1, a2.", tgt)
    with pytest.raises(AlphabetMismatch):
        BlowupMap(src, tgt, {"a": {"a1"}})
    with pytest.raises(AlphabetMismatch):
        BlowupMap(src, tgt, {"a": {"zz"}, "b": {"b1"}})
    with pytest.raises(AlphabetMismatch):
        bullet_extend(m, Program.empty(tgt))
