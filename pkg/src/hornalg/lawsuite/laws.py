"""Every algebraic law and counterexample the library is checked against.

Positive laws run once per trial on freshly generated operands.  Negative
fixtures are fixed programs for which an identity is known to break; they
pass as long as the two sides still differ.

Some identities only hold under extra side conditions (for instance a
minimalist right operand).  Those are registered twice: once as commonly
stated, which is expected to report counterexamples, and once with the side
condition or as an inclusion.
"""

from __future__ import annotations

import itertools
import math

from .. import analogy, textio
from ..algebra import (
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
    head_reduct,
    ltimes,
    omega,
    omega_via_star,
    power,
    star,
)
from ..core import (
    Alphabet,
    Interpretation,
    PermutationMap,
    Program,
    Rule,
    a_oplus,
    all_facts,
    bodies,
    diagonal_program,
    facts,
    full_program,
    heads,
    is_krom,
    is_minimalist,
    permutation_program,
    proper,
    square,
    unit_program,
)
from ..decomposition import (
    compose_via_singletons,
    compose_via_singletons_literal,
    body_or,
    krom_cover,
    krom_decompose,
    lexicographic_order,
    singleton_decompose,
    verify_decomposition,
    FAIL,
)
from ..semantics import (
    atom_index,
    fixpoint_trace,
    index,
    is_model,
    least_model_oracle,
    lm,
    models,
    ss_equiv,
    ss_leq,
    ss_reduce,
    supported_models,
    tp_step,
)
from . import generators
from .harness import (
    Mismatch,
    Registry,
    Trial,
    expect_differ,
    expect_equal,
    expect_subset,
    expect_true,
    first,
)

REGISTRY = Registry()
law = REGISTRY.law
negative = REGISTRY.negative


def _prog(alphabet: str, *rules) -> Program:
    return Program.of(Alphabet(tuple(alphabet)), *rules)


def _hp(p: Program) -> Program:
    """``h(P)`` as a program of facts."""
    return heads(p).as_program()


def _ss(left: Program, right: Program, **operands) -> Mismatch | None:
    if ss_equiv(left, right):
        return None
    return Mismatch(operands, f"{left} ≡ss {right}", "not subsumption equivalent")


def _not_ss(left: Program, right: Program, **operands) -> Mismatch | None:
    if not ss_equiv(left, right):
        return None
    return Mismatch(operands, "sides not subsumption equivalent", f"{left} ≡ss {right}")


# -- syntax -------------------------------------------------------------------

@law("heads-union", "syntax/head-operator")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_equal(heads(p | r), heads(p) | heads(r), P=p, R=r)


@law("bodies-union", "syntax/body-operator")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_equal(bodies(p | r), bodies(p) | bodies(r), P=p, R=r)


@law("facts-union", "syntax/facts-and-proper")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_equal(facts(p | r), facts(p) | facts(r), P=p, R=r)


@law("proper-union", "syntax/facts-and-proper")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_equal(proper(p | r), proper(p) | proper(r), P=p, R=r)


@law("facts-proper-partition", "syntax/facts-and-proper")
def _(t: Trial):
    p = t.program()
    return first(expect_equal(facts(p) | proper(p), p, P=p),
                 expect_equal(facts(p) & proper(p), Program.empty(p.alphabet), P=p))


@law("serialize-roundtrip", "syntax/canonical-form")
def _(t: Trial):
    p = t.program()
    text = textio.serialize_program(p)
    return first(expect_equal(textio.parse_program(text), p, P=p),
                 expect_equal(textio.serialize_program(textio.parse_program(text)), text, P=p))


@law("json-roundtrip", "syntax/canonical-form")
def _(t: Trial):
    p = t.program()
    return expect_equal(textio.json_import(textio.json_export(p)), p, P=p)


@law("diagonal-one-atom", "analogy/diagonal-program")
def _(t: Trial):
    one = Alphabet.of("a")
    return expect_equal(diagonal_program(one), unit_program(one))


@law("diagonal-two-atoms", "analogy/diagonal-program")
def _(t: Trial):
    two = Alphabet.of("a", "b")
    return expect_equal(diagonal_program(two), permutation_program(PermutationMap.from_cycles(two, "ab")))


@law("permutation-krom-minimalist", "analogy/permutation-program")
def _(t: Trial):
    pi = permutation_program(generators.gen_permutation(t.rng, t.alphabet))
    return expect_true(is_krom(pi) and is_minimalist(pi), "Krom and minimalist", pi=pi)


# -- semantics ----------------------------------------------------------------

@law("lm-oracle", "semantics/least-model")
def _(t: Trial):
    p = t.program()
    return expect_equal(lm(p), least_model_oracle(p), P=p)


@law("fixpoint-trace-shape", "semantics/least-model")
def _(t: Trial):
    p = t.program()
    stages = fixpoint_trace(p).stages
    ok = (not stages[0].atoms
          and all(a <= b for a, b in zip(stages, stages[1:]))
          and stages[-1] == stages[-2]
          and len(stages) <= len(p.alphabet) + 2)
    return expect_true(ok, "monotone from ∅, stable within |A|+1 steps", P=p, trace=list(stages))


@law("lm-least-model", "semantics/models")
def _(t: Trial):
    p = t.program()
    m = lm(p)
    ms = models(p)
    supp = supported_models(p)
    return first(expect_true(m in ms and all(m <= n for n in ms), "LM is the least model", P=p),
                 expect_true(all(s in ms for s in supp), "supported models are models", P=p),
                 expect_true(m in supp, "LM is supported", P=p))


@law("model-iff-closed", "semantics/models")
def _(t: Trial):
    p, i = t.program(), t.interp()
    return expect_equal(is_model(p, i), tp_step(p, i) <= i, P=p, I=i)


@law("tp-via-compose", "semantics/immediate-consequence")
def _(t: Trial):
    p, i = t.program(), t.interp()
    return expect_equal(tp_step(p, i), heads(facts(compose(p, i))), P=p, I=i)


@law("power-facts-trace", "semantics/immediate-consequence")
def _(t: Trial):
    p = t.program()
    stage = Interpretation(p.alphabet, frozenset())
    for n in range(5):
        got = heads(facts(power(p, n)))
        if got != stage:
            return Mismatch({"P": p, "n": n}, str(stage), str(got))
        stage = tp_step(p, stage)
    return None


@law("index-definition", "semantics/index")
def _(t: Trial):
    p = t.program()
    target = lm(p)
    n = 0
    while heads(facts(power(p, n))) != target:
        n += 1
    return expect_equal(index(p), n, P=p)


@law("atom-index-interpretation", "semantics/index")
def _(t: Trial):
    i = t.interp()
    want = [1 if a in i else math.inf for a in i.alphabet]
    return expect_equal([atom_index(i.as_program(), a) for a in i.alphabet], want, I=i)


@law("atom-index-consistent", "semantics/index")
def _(t: Trial):
    p = t.program()
    m = lm(p)
    idx = {a: atom_index(p, a) for a in p.alphabet}
    ok = all((idx[a] <= index(p)) if a in m else idx[a] == math.inf for a in p.alphabet)
    return expect_true(ok, "derived atoms have index ≤ i(P), others ∞", P=p, indices=idx)


@law("ss-congruence-compose", "semantics/subsumption-congruence")
def _(t: Trial):
    p, r = t.programs(2)
    p2, r2 = t.variant(p), t.variant(r)
    return first(_ss(p, p2, P=p, P2=p2), _ss(r, r2, R=r, R2=r2),
                 _ss(compose(p, r), compose(p2, r2), P=p, P2=p2, R=r, R2=r2))


@law("ss-congruence-union", "semantics/subsumption-congruence")
def _(t: Trial):
    p, r = t.programs(2)
    p2, r2 = t.variant(p), t.variant(r)
    return _ss(p | r, p2 | r2, P=p, P2=p2, R=r, R2=r2)


@law("ss-equiv-same-lm", "semantics/subsumption")
def _(t: Trial):
    p = t.program()
    p2 = t.variant(p)
    return expect_equal(lm(p), lm(p2), P=p, P2=p2)


@law("ss-reduce-agreement", "semantics/subsumption")
def _(t: Trial):
    p = t.program()
    r = t.variant(p) if t.rng.next() % 2 else t.program()
    agree = ss_equiv(p, r) == (ss_reduce(p) == ss_reduce(r))
    return first(expect_true(agree, "ss_equiv ⇔ equal ss_reduce", P=p, R=r),
                 _ss(ss_reduce(p), p, P=p))


@law("ss-leq-order", "semantics/subsumption")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_equal(ss_equiv(p, r), ss_leq(p, r) and ss_leq(r, p), P=p, R=r)


# -- composition ----------------------------------------------------------------

def _compose_oracle(p: Program, r: Program) -> Program:
    """Literal definition: one R-rule per body atom, via a full cross product."""
    out = set()
    for rule in p.rules:
        body = sorted(rule.body)
        choices = [[x for x in r.rules if x.head == b] for b in body]
        for pick in itertools.product(*choices):
            out.add(Rule(rule.head, frozenset().union(*(x.body for x in pick))))
    return p.with_rules(out)


@law("compose-oracle", "composition/definition")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_equal(compose(p, r), _compose_oracle(p, r), P=p, R=r)


@law("compose-unit", "composition/unit")
def _(t: Trial):
    p = t.program()
    one = unit_program(p.alphabet)
    return first(expect_equal(compose(p, one), p, P=p), expect_equal(compose(one, p), p, P=p))


@law("compose-right-union", "composition/union")
def _(t: Trial):
    p, r, q = t.programs(3)
    return expect_equal(compose(p | r, q), compose(p, q) | compose(r, q), P=p, R=r, Q=q)


@law("krom-left-union", "composition/krom")
def _(t: Trial):
    k, p, r = t.krom(), t.program(), t.program()
    return expect_equal(compose(k, p | r), compose(k, p) | compose(k, r), K=k, P=p, R=r)


@law("krom-associative", "composition/krom")
def _(t: Trial):
    k, p, r = t.krom(), t.program(), t.program()
    return expect_equal(compose(k, compose(p, r)), compose(compose(k, p), r), K=k, P=p, R=r)


@law("compose-empty", "composition/facts")
def _(t: Trial):
    p = t.program()
    return expect_equal(compose(p, Program.empty(p.alphabet)), facts(p), P=p)


@law("compose-all-facts", "composition/heads")
def _(t: Trial):
    p = t.program()
    return expect_equal(compose(p, all_facts(p.alphabet)), _hp(p), P=p)


@law("power-interpretation", "composition/powers")
def _(t: Trial):
    i = t.interp().as_program()
    return expect_equal(power(i, 2), i, I=i)


@law("star-interpretation", "composition/star")
def _(t: Trial):
    i = t.interp().as_program()
    return expect_equal(star(i), unit_program(i.alphabet) | i, I=i)


@law("star-unfold", "composition/star")
def _(t: Trial):
    p = t.program()
    s = star(p)
    return expect_equal(s, unit_program(p.alphabet) | compose(s, p), P=p)


@law("omega-slow-path", "composition/omega")
def _(t: Trial):
    p = t.program()
    return expect_equal(omega(p), omega_via_star(p), P=p)


@law("omega-interpretation", "composition/omega")
def _(t: Trial):
    i = t.interp()
    return expect_equal(omega(i.as_program()), i, I=i)


# -- reducts ----------------------------------------------------------------------

@law("reducts-on-interpretations", "reducts/interpretations")
def _(t: Trial):
    i, j = t.interp(), t.interp()
    return first(expect_equal(body_reduct(i.as_program(), j), i.as_program(), I=i, J=j),
                 expect_equal(head_reduct(j, i.as_program()), (i & j).as_program(), I=i, J=j))


@law("body-reduct-endomorphism", "reducts/endomorphism")
def _(t: Trial):
    p, r = t.programs(2)
    i = t.interp()
    alphabet = p.alphabet
    return first(expect_equal(body_reduct(p | r, i), body_reduct(p, i) | body_reduct(r, i), P=p, R=r, I=i),
                 expect_equal(body_reduct(p & r, i), body_reduct(p, i) & body_reduct(r, i), P=p, R=r, I=i),
                 expect_equal(body_reduct(Program.empty(alphabet), i), Program.empty(alphabet), I=i),
                 expect_equal(body_reduct(all_facts(alphabet), i), all_facts(alphabet), I=i))


@law("head-reduct-endomorphism", "reducts/endomorphism")
def _(t: Trial):
    p, r = t.programs(2)
    i = t.interp()
    return first(expect_equal(head_reduct(i, p | r), head_reduct(i, p) | head_reduct(i, r), P=p, R=r, I=i),
                 expect_equal(head_reduct(i, p & r), head_reduct(i, p) & head_reduct(i, r), P=p, R=r, I=i),
                 expect_equal(head_reduct(i, Program.empty(p.alphabet)), Program.empty(p.alphabet), I=i))


@law("reducts-via-unit", "reducts/composition")
def _(t: Trial):
    p, i = t.program(), t.interp()
    one_i = body_reduct(unit_program(p.alphabet), i)
    return first(expect_equal(head_reduct(i, p), compose(one_i, p), P=p, I=i),
                 expect_equal(body_reduct(p, i), compose(p, one_i), P=p, I=i))


@law("reducts-and-composition", "reducts/composition")
def _(t: Trial):
    p, r = t.programs(2)
    i = t.interp()
    return first(expect_equal(body_reduct(compose(p, r), i), compose(p, body_reduct(r, i)), P=p, R=r, I=i),
                 expect_equal(head_reduct(i, compose(p, r)), compose(head_reduct(i, p), r), P=p, R=r, I=i))


# -- body-union ----------------------------------------------------------------------

@law("sqcup-right-distributive", "body-union/composition")
def _(t: Trial):
    p, r, q = t.programs(3)
    return expect_equal(compose(body_union(p, r), q), body_union(compose(p, q), compose(r, q)), P=p, R=r, Q=q)


@law("sqcup-right-distributive-minimalist", "body-union/composition")
def _(t: Trial):
    p, r = t.programs(2)
    q = t.minimalist()
    return expect_equal(compose(body_union(p, r), q), body_union(compose(p, q), compose(r, q)), P=p, R=r, Q=q)


@law("sqcup-right-distributive-inclusion", "body-union/composition")
def _(t: Trial):
    p, r, q = t.programs(3)
    left, right = compose(body_union(p, r), q), body_union(compose(p, q), compose(r, q))
    return first(expect_subset(left, right, P=p, R=r, Q=q), _ss(left, right, P=p, R=r, Q=q))


@law("sqcup-commutative-monoid", "body-union/monoid")
def _(t: Trial):
    p, q, r = t.programs(3)
    unit = all_facts(p.alphabet)
    return first(expect_equal(body_union(body_union(p, q), r), body_union(p, body_union(q, r)), P=p, Q=q, R=r),
                 expect_equal(body_union(p, unit), p, P=p),
                 expect_equal(body_union(unit, p), p, P=p),
                 expect_equal(body_union(p, r), body_union(r, p), P=p, R=r))


@law("cup-sqcup-semiring", "body-union/semiring")
def _(t: Trial):
    p, r, q = t.programs(3)
    empty = Program.empty(p.alphabet)
    return first(expect_equal(body_union(p | r, q), body_union(p, q) | body_union(r, q), P=p, R=r, Q=q),
                 expect_equal(body_union(q, p | r), body_union(q, p) | body_union(q, r), P=p, R=r, Q=q),
                 expect_equal(body_union(empty, p), empty, P=p),
                 expect_equal(body_union(p, empty), empty, P=p))


@law("cup-over-sqcup-ss", "body-union/subsumption")
def _(t: Trial):
    p, r, q = t.programs(3)
    return _ss(body_union(p, r) | q, body_union(p | q, r | q), P=p, R=r, Q=q)


@law("sqcup-idempotent-ss", "body-union/subsumption")
def _(t: Trial):
    p = t.program()
    return _ss(body_union(p, p), p, P=p)


@law("sqcup-ss-absorption", "body-union/subsumption")
def _(t: Trial):
    p = t.program()
    r = t.variant(p) if t.rng.next() % 2 else t.program()
    return expect_equal(ss_equiv(body_union(p, r), p), ss_leq(p, r), P=p, R=r)


@law("sqcup-models", "body-union/models")
def _(t: Trial):
    p, r = t.programs(2)
    pr = body_union(p, r)
    return expect_true(all(is_model(pr, m) for m in models(p)), "Mod(P) ⊆ Mod(P⊔R)", P=p, R=r)


@law("sqcup-supported-models", "body-union/models")
def _(t: Trial):
    p, r = t.programs(2)
    want = [i for i in p.alphabet.interpretations() if (tp_step(p, i) & tp_step(r, i)) == i]
    return expect_equal(supported_models(body_union(p, r)), want, P=p, R=r)


@law("sqcup-over-cap", "body-union/intersection")
def _(t: Trial):
    q, p, r = t.programs(3)
    return expect_equal(body_union(q, p & r), body_union(q, p) & body_union(q, r), Q=q, P=p, R=r)


@law("sqcup-over-cap-inclusion", "body-union/intersection")
def _(t: Trial):
    q, p, r = t.programs(3)
    return expect_subset(body_union(q, p & r), body_union(q, p) & body_union(q, r), Q=q, P=p, R=r)


@law("sqcup-heads-facts", "body-union/heads-and-facts")
def _(t: Trial):
    p, r = t.programs(2)
    pr = body_union(p, r)
    return first(expect_equal(heads(pr), heads(p) & heads(r), P=p, R=r),
                 expect_equal(facts(pr), facts(p) & facts(r), P=p, R=r))


@law("sqcup-interpretations", "body-union/interpretations")
def _(t: Trial):
    i, j = t.interp(), t.interp()
    return expect_equal(body_union(i, j), (i & j).as_program(), I=i, J=j)


@law("body-reduct-sqcup", "body-union/reducts")
def _(t: Trial):
    p, r = t.programs(2)
    i = t.interp()
    return expect_equal(body_reduct(body_union(p, r), i), body_union(body_reduct(p, i), body_reduct(r, i)),
                        P=p, R=r, I=i)


@law("head-reduct-sqcup", "body-union/reducts")
def _(t: Trial):
    p, r = t.programs(2)
    i = t.interp()
    return expect_equal(head_reduct(i, body_union(p, r)), body_union(head_reduct(i, p), head_reduct(i, r)),
                        P=p, R=r, I=i)


@law("interpretation-sqcup-is-head-reduct", "body-union/reducts")
def _(t: Trial):
    p, i = t.program(), t.interp()
    return expect_equal(body_union(i, p), head_reduct(i, p), P=p, I=i)


@law("interpretation-union-sqcup", "body-union/reducts")
def _(t: Trial):
    p, r = t.programs(2)
    i = t.interp()
    ip = i.as_program()
    want = ip | head_reduct(i, p) | head_reduct(i, r) | body_union(p, r)
    return expect_equal(body_union(p | ip, r | ip), want, P=p, R=r, I=i)


# -- body-intersection ---------------------------------------------------------------

@law("sqcap-commutative-monoid", "body-intersection/monoid")
def _(t: Trial):
    p, q, r = t.programs(3)
    unit = a_oplus(p.alphabet)
    return first(expect_equal(body_inter(body_inter(p, q), r), body_inter(p, body_inter(q, r)), P=p, Q=q, R=r),
                 expect_equal(body_inter(p, unit), p, P=p),
                 expect_equal(body_inter(unit, p), p, P=p),
                 expect_equal(body_inter(p, r), body_inter(r, p), P=p, R=r))


@law("sqcap-interpretations", "body-intersection/interpretations")
def _(t: Trial):
    i, j = t.interp(), t.interp()
    return expect_equal(body_inter(i, j), (i & j).as_program(), I=i, J=j)


@law("sqcap-heads", "body-intersection/heads")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_equal(heads(body_inter(p, r)), heads(p) & heads(r), P=p, R=r)


@law("head-reduct-via-sqcap", "body-intersection/reducts")
def _(t: Trial):
    p, i = t.program(), t.interp()
    return expect_equal(head_reduct(i, p), body_inter(head_reduct(i, a_oplus(p.alphabet)), p), P=p, I=i)


@law("head-reduct-sqcap", "body-intersection/reducts")
def _(t: Trial):
    p, r = t.programs(2)
    i = t.interp()
    return expect_equal(head_reduct(i, body_inter(p, r)), body_inter(head_reduct(i, p), head_reduct(i, r)),
                        P=p, R=r, I=i)


@law("body-reduct-sqcap-inclusion", "body-intersection/reducts")
def _(t: Trial):
    p, r = t.programs(2)
    i = t.interp()
    return expect_subset(body_inter(body_reduct(p, i), body_reduct(r, i)), body_reduct(body_inter(p, r), i),
                         P=p, R=r, I=i)


@law("sqcap-facts-bowtie", "body-intersection/bowtie")
def _(t: Trial):
    p, r = t.programs(2)
    want = facts(body_union(p, r)) | _hp(bowtie(p, r))
    return first(expect_equal(facts(body_inter(p, r)), want, P=p, R=r),
                 expect_equal(bowtie(p, r), ltimes(p, r) | ltimes(r, p), P=p, R=r))


# -- body-complement -----------------------------------------------------------------

@law("de-morgan", "body-complement/de-morgan")
def _(t: Trial):
    p, r = t.programs(2)
    return first(expect_equal(body_comp(body_union(p, r)), body_inter(body_comp(p), body_comp(r)), P=p, R=r),
                 expect_equal(body_comp(body_inter(p, r)), body_union(body_comp(p), body_comp(r)), P=p, R=r))


@law("sqcup-sqcap-distributive", "body-complement/distributivity")
def _(t: Trial):
    p, r, q = t.programs(3)
    return first(
        expect_equal(body_inter(body_union(p, r), q), body_union(body_inter(p, q), body_inter(r, q)), P=p, R=r, Q=q),
        expect_equal(body_union(body_inter(p, r), q), body_inter(body_union(p, q), body_union(r, q)), P=p, R=r, Q=q))


@law("sqcup-sqcap-distributive-minimalist", "body-complement/distributivity")
def _(t: Trial):
    p, r = t.programs(2)
    q = t.minimalist()
    return first(
        expect_equal(body_inter(body_union(p, r), q), body_union(body_inter(p, q), body_inter(r, q)), P=p, R=r, Q=q),
        expect_equal(body_union(body_inter(p, r), q), body_inter(body_union(p, q), body_union(r, q)), P=p, R=r, Q=q))


@law("sqcup-sqcap-distributive-inclusion", "body-complement/distributivity")
def _(t: Trial):
    p, r, q = t.programs(3)
    return first(
        expect_subset(body_inter(body_union(p, r), q), body_union(body_inter(p, q), body_inter(r, q)), P=p, R=r, Q=q),
        expect_subset(body_union(body_inter(p, r), q), body_inter(body_union(p, q), body_union(r, q)), P=p, R=r, Q=q))


@law("complement-involution", "body-complement/involution")
def _(t: Trial):
    p = t.program()
    return expect_equal(body_comp(body_comp(p)), p, P=p)


@law("complement-of-facts", "body-complement/constants")
def _(t: Trial):
    i = t.interp()
    alphabet = i.alphabet
    return first(expect_equal(body_comp(all_facts(alphabet)), a_oplus(alphabet)),
                 expect_equal(body_comp(i), head_reduct(i, a_oplus(alphabet)), I=i))


@law("complement-endomorphism", "body-complement/endomorphism")
def _(t: Trial):
    p, r = t.programs(2)
    alphabet = p.alphabet
    full = full_program(alphabet)
    return first(expect_equal(body_comp(p | r), body_comp(p) | body_comp(r), P=p, R=r),
                 expect_equal(body_comp(p & r), body_comp(p) & body_comp(r), P=p, R=r),
                 expect_equal(body_comp(Program.empty(alphabet)), Program.empty(alphabet)),
                 expect_equal(body_comp(full), full))


@law("complement-head-reduct", "body-complement/reducts")
def _(t: Trial):
    p, i = t.program(), t.interp()
    return expect_equal(head_reduct(i, body_comp(p)), body_comp(head_reduct(i, p)), P=p, I=i)


@law("complement-body-reduct-full", "body-complement/reducts")
def _(t: Trial):
    p = t.program()
    everything = Interpretation(p.alphabet, frozenset(p.alphabet))
    return expect_equal(body_reduct(body_comp(p), everything), body_comp(body_reduct(p, everything)), P=p)


@law("complement-krom", "body-complement/krom")
def _(t: Trial):
    k = t.krom()
    want = head_reduct(heads(facts(k)), a_oplus(k.alphabet)) | body_comp(proper(k))
    return expect_equal(body_comp(k), want, K=k)


# -- body-subtraction ----------------------------------------------------------------

@law("bsub-via-sqcap", "body-subtraction/de-morgan")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_equal(body_sub(p, r), body_inter(p, body_comp(r)), P=p, R=r)


@law("bsub-interpretation", "body-subtraction/reducts")
def _(t: Trial):
    p, i = t.program(), t.interp()
    return expect_equal(body_sub(p, i), head_reduct(i, p), P=p, I=i)


@law("bsub-constants", "body-subtraction/constants")
def _(t: Trial):
    p = t.program()
    alphabet = p.alphabet
    empty = Program.empty(alphabet)
    return first(expect_equal(body_sub(p, empty), empty, P=p),
                 expect_equal(body_sub(empty, p), empty, P=p),
                 expect_equal(body_sub(p, all_facts(alphabet)), p, P=p),
                 expect_equal(body_sub(p, a_oplus(alphabet)), _hp(p), P=p))


@law("bsub-full", "body-subtraction/constants")
def _(t: Trial):
    p = t.program()
    return expect_equal(body_sub(p, full_program(p.alphabet)), _hp(p), P=p)


@law("bsub-full-is-powerset", "body-subtraction/constants")
def _(t: Trial):
    p = t.program()
    return expect_equal(body_sub(p, full_program(p.alphabet)), body_powerset(p), P=p)


@law("bsub-self-contains-heads", "body-subtraction/self")
def _(t: Trial):
    p = t.program()
    return expect_subset(_hp(p), body_sub(p, p), P=p)


@law("bsub-self-minimalist", "body-subtraction/self")
def _(t: Trial):
    m = t.minimalist()
    return expect_equal(body_sub(m, m), _hp(m), M=m)


@law("bsub-sqcup", "body-subtraction/body-union")
def _(t: Trial):
    p, r, q = t.programs(3)
    return expect_equal(body_sub(body_union(p, r), q), body_union(body_sub(p, q), body_sub(r, q)), P=p, R=r, Q=q)


@law("bsub-sqcup-minimalist", "body-subtraction/body-union")
def _(t: Trial):
    p, r = t.programs(2)
    q = t.minimalist()
    return expect_equal(body_sub(body_union(p, r), q), body_union(body_sub(p, q), body_sub(r, q)), P=p, R=r, Q=q)


@law("bsub-sqcup-inclusion", "body-subtraction/body-union")
def _(t: Trial):
    p, r, q = t.programs(3)
    return expect_subset(body_sub(body_union(p, r), q), body_union(body_sub(p, q), body_sub(r, q)), P=p, R=r, Q=q)


@law("complement-via-bsub", "body-subtraction/complement")
def _(t: Trial):
    p = t.program()
    return expect_equal(body_comp(p), body_sub(a_oplus(p.alphabet), p), P=p)


@law("head-reduct-bsub", "body-subtraction/reducts")
def _(t: Trial):
    p, r = t.programs(2)
    i = t.interp()
    return expect_equal(head_reduct(i, body_sub(p, r)), body_sub(head_reduct(i, p), head_reduct(i, r)),
                        P=p, R=r, I=i)


@law("bsub-omega", "body-subtraction/omega")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_subset(omega(p), omega(body_sub(p, r)), P=p, R=r)


@law("bsub-omega-covered-heads", "body-subtraction/omega")
def _(t: Trial):
    p, r = t.programs(2)
    # every head of P needs a partner rule in R, otherwise its rules vanish
    r = r | Program(p.alphabet, frozenset(Rule(h, frozenset()) for h in heads(p) if h not in r.by_head))
    return expect_subset(omega(p), omega(body_sub(p, r)), P=p, R=r)


# -- symmetric differences -----------------------------------------------------------

@law("symdiff-inclusion", "body-symmetric-difference/inclusion")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_subset(body_symdiff(p, r), black_symdiff(p, r), P=p, R=r)


@law("symdiff-minimalist", "body-symmetric-difference/minimalist")
def _(t: Trial):
    m, n = t.minimalist(), t.minimalist()
    return expect_equal(body_symdiff(m, n), black_symdiff(m, n), M=m, N=n)


# -- body-power-set ------------------------------------------------------------------

@law("bpow-union", "body-power-set/endomorphism")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_equal(body_powerset(p | r), body_powerset(p) | body_powerset(r), P=p, R=r)


@law("bpow-intersection", "body-power-set/endomorphism")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_equal(body_powerset(p & r), body_powerset(p) & body_powerset(r), P=p, R=r)


@law("bpow-intersection-inclusion", "body-power-set/endomorphism")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_subset(body_powerset(p & r), body_powerset(p) & body_powerset(r), P=p, R=r)


@law("bpow-constants", "body-power-set/constants")
def _(t: Trial):
    i = t.interp()
    alphabet = i.alphabet
    empty, full = Program.empty(alphabet), full_program(alphabet)
    return first(expect_equal(body_powerset(empty), empty),
                 expect_equal(body_powerset(full), full),
                 expect_equal(body_powerset(i), i.as_program(), I=i),
                 expect_equal(body_powerset(a_oplus(alphabet)), full))


@law("bpow-idempotent", "body-power-set/idempotent")
def _(t: Trial):
    p = t.program()
    once = body_powerset(p)
    return expect_equal(body_powerset(once), once, P=p)


@law("bpow-sqcup", "body-power-set/body-union")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_equal(body_powerset(body_union(p, r)), body_union(body_powerset(p), body_powerset(r)), P=p, R=r)


@law("bpow-unit-star", "body-power-set/unit")
def _(t: Trial):
    one = unit_program(t.alphabet)
    return expect_equal(body_powerset(one), star(one))


@law("bpow-unit", "body-power-set/unit")
def _(t: Trial):
    alphabet = t.alphabet
    return expect_equal(body_powerset(unit_program(alphabet)), star(all_facts(alphabet)))


@law("bpow-via-compose", "body-power-set/composition")
def _(t: Trial):
    p = t.program()
    return expect_equal(body_powerset(p), compose(p, star(all_facts(p.alphabet))), P=p)


@law("bpow-omega", "body-power-set/omega")
def _(t: Trial):
    p = t.program()
    return expect_equal(omega(body_powerset(p)), heads(p), P=p)


@law("bpow-krom", "body-power-set/krom")
def _(t: Trial):
    k = t.krom()
    return expect_equal(body_powerset(k), k | _hp(k), K=k)


@law("bpow-krom-compose", "body-power-set/krom")
def _(t: Trial):
    k, l = t.krom(), t.program()
    return expect_equal(compose(k, body_powerset(l)), body_powerset(compose(k, l)), K=k, L=l)


@law("bpow-compose-ss", "body-power-set/composition")
def _(t: Trial):
    p, r = t.programs(2)
    return _ss(body_powerset(compose(p, r)), compose(p, body_powerset(r)), P=p, R=r)


# -- homomorphisms -------------------------------------------------------------------

@law("square-monomorphism", "homomorphisms/square")
def _(t: Trial):
    i, j = t.interp(), t.interp()
    alphabet = i.alphabet
    empty = Interpretation(alphabet, frozenset())
    everything = Interpretation(alphabet, frozenset(alphabet))
    return first(expect_equal(square(i | j), body_union(square(i), square(j)), I=i, J=j),
                 expect_equal(square(i & j), body_inter(square(i), square(j)), I=i, J=j),
                 expect_equal(square(i.complement()), body_comp(square(i)), I=i),
                 expect_equal(square(empty), all_facts(alphabet)),
                 expect_equal(square(everything), a_oplus(alphabet)),
                 expect_true(is_minimalist(square(i)), "I□ minimalist", I=i),
                 expect_true((square(i) == square(j)) == (i == j), "□ injective", I=i, J=j))


EXAMPLE_BLOWUP = BlowupMap(Alphabet.of("a", "b"), Alphabet.of("a1", "b1", "c1"),
                           {"a": frozenset({"a1", "c1"}), "b": frozenset({"b1"})})


@law("bullet-union", "homomorphisms/bullet")
def _(t: Trial):
    m = generators.gen_blowup_map(t.rng, t.alphabet)
    p, r = t.programs(2)
    return expect_equal(bullet_extend(m, p | r), bullet_extend(m, p) | bullet_extend(m, r), P=p, R=r)


@law("bullet-sqcup-example-map", "homomorphisms/bullet", size=2)
def _(t: Trial):
    p, r = t.programs(2)
    m = EXAMPLE_BLOWUP
    return expect_equal(bullet_extend(m, body_union(p, r)),
                        body_union(bullet_extend(m, p), bullet_extend(m, r)), P=p, R=r)


@law("bullet-sqcup", "homomorphisms/bullet")
def _(t: Trial):
    m = generators.gen_blowup_map(t.rng, t.alphabet)
    p, r = t.programs(2)
    return expect_equal(bullet_extend(m, body_union(p, r)),
                        body_union(bullet_extend(m, p), bullet_extend(m, r)), P=p, R=r)


@law("bullet-interpretations", "homomorphisms/bullet")
def _(t: Trial):
    m = generators.gen_blowup_map(t.rng, t.alphabet)
    p = t.program() if t.rng.next() % 2 else t.interp().as_program()
    return expect_equal(bullet_extend(m, p).is_interpretation(), p.is_interpretation(), P=p)


@law("bullet-identity", "homomorphisms/bullet")
def _(t: Trial):
    p = t.program()
    ident = BlowupMap(p.alphabet, p.alphabet, {a: frozenset({a}) for a in p.alphabet})
    return expect_equal(bullet_extend(ident, p), p, P=p)


# -- decomposition -------------------------------------------------------------------

@law("singleton-roundtrip", "decomposition/singleton")
def _(t: Trial):
    p = t.program()
    return expect_equal(singleton_decompose(p).rebuild(), p, P=p)


@law("composition-representation", "decomposition/composition")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_equal(compose(p, r), compose_via_singletons_literal(p, r), P=p, R=r)


@law("composition-representation-all-rules", "decomposition/composition")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_equal(compose(p, r), compose_via_singletons(p, r), P=p, R=r)


@law("sqcup-omega", "decomposition/omega")
def _(t: Trial):
    p, r = t.programs(2)
    return expect_subset(omega(body_union(p, r)), omega(p) & omega(r), P=p, R=r)


@law("body-or-krom", "decomposition/body-or")
def _(t: Trial):
    p, k = t.program(), t.krom()
    return first(expect_true(is_krom(body_or(p)), "P∨ is Krom", P=p),
                 expect_equal(body_or(k), k, K=k))


def _report_failure(name, report, **operands) -> Mismatch | None:
    bad = [c for c in report.checks if c.status == FAIL]
    if not bad:
        return None
    return Mismatch(operands, f"all {name} checks pass", "; ".join(f"{c.name}: {c.witness}" for c in bad))


@law("mdt-exactness", "decomposition/minimalist-theorem")
def _(t: Trial):
    m = t.minimalist(max_width=4)
    return _report_failure("MDT", verify_decomposition(krom_decompose(m)), M=m)


@law("dt-cover", "decomposition/general-theorem")
def _(t: Trial):
    p = t.program()
    return _report_failure("cover", verify_decomposition(krom_cover(p)), P=p)


@law("dt-cover-minimalist-agrees", "decomposition/general-theorem")
def _(t: Trial):
    m = t.minimalist()
    return expect_equal(krom_cover(m).components, krom_decompose(m).components, M=m)


# -- analogy -------------------------------------------------------------------------

@law("proportion-by-arrows", "analogy/proportions")
def _(t: Trial):
    p, r, c = t.programs(3)
    f = analogy.op("bunion", analogy.X, c)
    g = analogy.op("bsub", analogy.X, c)
    q = body_union(p, c) if t.rng.next() % 2 else t.program()
    s = body_union(r, c) if t.rng.next() % 2 else t.program()
    j = analogy.Justification(f, g)
    want = analogy.check_arrow(p, q, r, s, f) and analogy.check_arrow(q, p, s, r, g)
    return expect_equal(analogy.check_proportion(p, q, r, s, j), want, P=p, Q=q, R=r, S=s, C=c)


@law("complement-proportion", "analogy/complement-family")
def _(t: Trial):
    p, r = t.programs(2)
    quad, j = analogy.complement_proportion(p, r)
    return expect_true(analogy.check_proportion(*quad, j), "P : P© :: R : R© verifies", P=p, R=r)


@law("union-shift-disjointness", "analogy/union-shift-family")
def _(t: Trial):
    p, q, r = generators.gen_shift_triple(t.rng, t.alphabet)
    j = analogy.Justification(analogy.op("bunion", analogy.X, q), analogy.op("bsub", analogy.X, q))
    ok = analogy.check_proportion(p, body_union(p, q), r, body_union(r, q), j)
    return expect_true(ok, "P : P⊔Q :: R : R⊔Q under disjoint bodies", P=p, Q=q, R=r)


@law("union-shift-proportion", "analogy/union-shift-family")
def _(t: Trial):
    if t.rng.next() % 2:
        p, q, r = generators.gen_guarded_shift_triple(t.rng, t.alphabet)
    else:
        p, q, r = generators.gen_shift_triple(t.rng, t.alphabet)
    result = analogy.union_shift_proportion(p, q, r)
    if result is None:
        return None
    quad, j = result
    return expect_true(analogy.check_proportion(*quad, j), "returned proportion verifies", P=p, Q=q, R=r)


_DIRECT = {
    "union": lambda a, b: a | b,
    "inter": lambda a, b: a & b,
    "diff": lambda a, b: a - b,
    "compose": compose,
    "bunion": body_union,
    "binter": body_inter,
    "bsub": body_sub,
    "bsymdiff": body_symdiff,
    "bbsymdiff": black_symdiff,
    "bcomp": body_comp,
    "bpow": body_powerset,
    "bor": body_or,
    "facts": facts,
    "proper": proper,
    "heads": _hp,
    "lm": lambda a: lm(a).as_program(),
    "omega": lambda a: omega(a).as_program(),
    "star": star,
    "hred": lambda i, a: head_reduct(i.as_interpretation(), a),
    "bred": lambda a, i: body_reduct(a, i.as_interpretation()),
}


def _random_expr(t: Trial, depth: int, consts: list[Program]):
    """Random Const-only schema paired with its text form and direct value."""
    if depth == 0 or t.rng.next() % 3 == 0:
        p = t.program()
        consts.append(p)
        name = f"P{len(consts) - 1}"
        return analogy.Const(p), name, p
    op = t.rng.choice(sorted(_DIRECT))
    if op in ("hred", "bred"):
        i = t.interp().as_program()
        consts.append(i)
        iname = f"P{len(consts) - 1}"
        sub, text, val = _random_expr(t, depth - 1, consts)
        if op == "hred":
            return analogy.Op(op, (analogy.Const(i), sub)), f"hred({iname}, {text})", _DIRECT[op](i, val)
        return analogy.Op(op, (sub, analogy.Const(i))), f"bred({text}, {iname})", _DIRECT[op](val, i)
    arity = analogy.OPERATORS[op][0]
    parts = [_random_expr(t, depth - 1, consts) for _ in range(arity)]
    node = analogy.Op(op, tuple(p[0] for p in parts))
    text = f"{op}({', '.join(p[1] for p in parts)})"
    return node, text, _DIRECT[op](*(p[2] for p in parts))


@law("schema-const-eval", "analogy/schemas")
def _(t: Trial):
    consts: list[Program] = []
    node, text, direct = _random_expr(t, 2, consts)
    env = {f"P{k}": c for k, c in enumerate(consts)}
    via_text = analogy.eval_schema(textio.parse_expr(text), env=env)
    return first(expect_equal(analogy.eval_schema(node), direct, expr=text),
                 expect_equal(via_text, direct, expr=text))


# -- negative fixtures -------------------------------------------------------------

ABC = "abc"


@negative("neg-sqcup-not-idempotent", "body-union/idempotence")
def _():
    k = _prog(ABC, ("a", "b"), ("a", "c"))
    return expect_differ(body_union(k, k), k, K=k)


@negative("neg-cup-over-sqcup", "body-union/semiring")
def _():
    i, k, l = _prog(ABC, "a"), _prog(ABC, ("a", "b")), _prog(ABC, ("a", "c"))
    return expect_differ(body_union(i, k) | l, body_union(i | l, k | l), I=i, K=k, L=l)


@negative("neg-left-sqcup-compose", "body-union/composition")
def _():
    k = _prog(ABC, ("a", "b"), ("a", "c"))
    l, n = _prog(ABC, ("b", "b")), _prog(ABC, ("c", "c"))
    return _not_ss(compose(k, body_union(l, n)), body_union(compose(k, l), compose(k, n)), K=k, L=l, N=n)


@negative("neg-sqcap-not-idempotent", "body-intersection/idempotence")
def _():
    k = _prog(ABC, ("a", "b"), ("a", "c"))
    return expect_differ(body_inter(k, k), k, K=k)


@negative("neg-left-sqcap-compose", "body-intersection/composition")
def _():
    m = _prog(ABC, ("a", "b"), ("a", "c"))
    k, l = _prog(ABC, ("b", "b")), _prog(ABC, ("c", "c"))
    return _not_ss(compose(m, body_inter(k, l)), body_inter(compose(m, k), compose(m, l)), M=m, K=k, L=l)


@negative("neg-right-sqcap-compose", "body-intersection/composition")
def _():
    m, n, i = _prog("abcd", ("a", "bc")), _prog("abcd", ("a", "cd")), _prog("abcd", "c")
    return expect_differ(compose(body_inter(m, n), i), body_inter(compose(m, i), compose(n, i)), M=m, N=n, I=i)


@negative("neg-sqcap-body-reduct", "body-intersection/reducts")
def _():
    p, r = _prog(ABC, ("a", "b")), _prog(ABC, ("a", "c"))
    i = Interpretation(p.alphabet, frozenset("b"))
    left, right = body_reduct(body_inter(p, r), i), body_inter(body_reduct(p, i), body_reduct(r, i))
    return expect_true(not left <= right, "(P⊓R)^I ⊄ P^I⊓R^I", P=p, R=r, I=i)


@negative("neg-complement-body-reduct", "body-complement/reducts")
def _():
    p = _prog("ab", "a")
    i = Interpretation(p.alphabet, frozenset())
    return expect_differ(body_reduct(body_comp(p), i), body_comp(body_reduct(p, i)), P=p, I=i)


@negative("neg-right-bsub-compose", "body-subtraction/composition")
def _():
    k, i = _prog("ab", ("a", "b")), _prog("ab", "a")
    return expect_differ(compose(body_sub(k, k), i), body_sub(compose(k, i), compose(k, i)), K=k, I=i)


@negative("neg-left-bsub-compose", "body-subtraction/composition")
def _():
    k = _prog(ABC, ("a", "b"), ("a", "c"))
    l, i = _prog(ABC, ("b", "b")), _prog(ABC, "c")
    return expect_differ(compose(k, body_sub(l, i)), body_sub(compose(k, l), compose(k, i)), K=k, L=l, I=i)


@negative("neg-bsub-self-nonminimalist", "body-subtraction/self")
def _():
    p = _prog(ABC, ("a", "b"), ("a", "c"))
    return expect_differ(body_sub(p, p), _hp(p), P=p)


@negative("neg-sqcup-omega-strict", "decomposition/omega")
def _():
    k, i = _prog("ab", "a", ("b", "a")), _prog("ab", "b")
    left, right = omega(k) & omega(i), omega(body_union(k, i))
    return expect_true(not left <= right, "K^ω ⊔ I^ω ⊄ (K⊔I)^ω", K=k, I=i)


@negative("neg-compose-left-union", "composition/union")
def _():
    p, b, c = _prog(ABC, ("a", "bc")), _prog(ABC, "b"), _prog(ABC, "c")
    return expect_differ(compose(p, b | c), compose(p, b) | compose(p, c), P=p, B=b, C=c)


@negative("neg-dt-cover-strict", "decomposition/general-theorem")
def _():
    p = _prog("abcde", ("a", "bc"), ("a", "de"))
    folded = krom_cover(p).fold()
    return expect_true(p < folded, "P ⊊ ⊔-fold of the cover", P=p, fold=folded)


@negative("neg-mdt-lexicographic", "decomposition/minimalist-theorem")
def _():
    m = _prog("apqz", "p", "q", ("a", "pz"), ("z", "aq"))
    report = verify_decomposition(krom_decompose(m, order=lexicographic_order))
    return expect_true(report.check("omega-equals-meet").status == FAIL,
                       "lexicographic stage order loses ω(M) = ⋂ω(K_i)", M=m)


# counterexamples to identities that only hold under extra conditions

@negative("neg-diagonal-one-atom", "analogy/diagonal-program")
def _():
    one = Alphabet.of("a")
    return expect_differ(diagonal_program(one), unit_program(one))


@negative("neg-sqcup-over-cap", "body-union/intersection")
def _():
    q, p, r = _prog("ab", ("a", "b")), _prog("ab", "a"), _prog("ab", ("a", "b"))
    return expect_differ(body_union(q, p & r), body_union(q, p) & body_union(q, r), Q=q, P=p, R=r)


@negative("neg-sqcup-right-distributive", "body-union/composition")
def _():
    p = _prog(ABC, ("c", "a"))
    q = _prog(ABC, ("a", "b"), ("a", "c"))
    return expect_differ(compose(body_union(p, p), q), body_union(compose(p, q), compose(p, q)), P=p, R=p, Q=q)


@negative("neg-sqcup-sqcap-distributive", "body-complement/distributivity")
def _():
    q = _prog(ABC, ("a", "b"), ("a", "c"))
    p, r = _prog(ABC, ("a", "b")), _prog(ABC, ("a", "c"))
    return first(
        expect_differ(body_inter(body_union(p, r), q), body_union(body_inter(p, q), body_inter(r, q)), P=p, R=r, Q=q),
        expect_differ(body_union(body_inter(p, r), q), body_inter(body_union(p, q), body_union(r, q)), P=p, R=r, Q=q))


@negative("neg-bsub-sqcup", "body-subtraction/body-union")
def _():
    q = _prog(ABC, ("a", "b"), ("a", "c"))
    p, r = _prog(ABC, ("a", "b")), _prog(ABC, ("a", "c"))
    return expect_differ(body_sub(body_union(p, r), q), body_union(body_sub(p, q), body_sub(r, q)), P=p, R=r, Q=q)


@negative("neg-bsub-full", "body-subtraction/constants")
def _():
    p = _prog("ab", ("a", "b"))
    return expect_differ(body_sub(p, full_program(p.alphabet)), _hp(p), P=p)


@negative("neg-bsub-omega", "body-subtraction/omega")
def _():
    p = _prog("a", "a")
    r = Program.empty(p.alphabet)
    return expect_true(not omega(p) <= omega(body_sub(p, r)), "P^ω ⊄ (P⊟R)^ω", P=p, R=r)


@negative("neg-bpow-unit-star", "body-power-set/unit")
def _():
    one = unit_program(Alphabet.of("a"))
    return expect_differ(body_powerset(one), star(one), one=one)


@negative("neg-bpow-intersection", "body-power-set/endomorphism")
def _():
    p, r = _prog(ABC, ("a", "b")), _prog(ABC, ("a", "c"))
    return expect_differ(body_powerset(p & r), body_powerset(p) & body_powerset(r), P=p, R=r)


@negative("neg-composition-representation-proper", "decomposition/composition")
def _():
    p, r = _prog("ab", ("a", "b")), _prog("ab", "b")
    return expect_differ(compose(p, r), compose_via_singletons_literal(p, r), P=p, R=r)


@negative("neg-bullet-overlapping-images", "homomorphisms/bullet")
def _():
    m = BlowupMap(Alphabet.of("a", "b"), Alphabet.of("x"), {"a": frozenset("x"), "b": frozenset("x")})
    p, r = _prog("ab", "a"), _prog("ab", "b")
    return expect_differ(bullet_extend(m, body_union(p, r)), body_union(bullet_extend(m, p), bullet_extend(m, r)),
                         P=p, R=r)


@negative("neg-union-shift-unmatched-head", "analogy/union-shift-family")
def _():
    p, q = _prog("acd", "a", "d"), _prog("acd", ("a", "c"))
    shifted = body_union(p, q)
    return expect_differ(body_sub(shifted, q), p, P=p, Q=q)


@negative("neg-union-shift-two-bodies", "analogy/union-shift-family")
def _():
    p, q = _prog(ABC, "a"), _prog(ABC, ("a", "b"), ("a", "c"))
    return expect_differ(body_sub(body_union(p, q), q), p, P=p, Q=q)
