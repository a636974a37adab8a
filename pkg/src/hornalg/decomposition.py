"""Body-or, singleton decomposition and Krom decompositions under ``⊔``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .core import Interpretation, Program, Rule, facts, is_krom, is_minimalist, proper, same_alphabet, width
from .algebra import body_union, fold_body_union
from .errors import AlphabetMismatch, NotMinimalist
from .semantics import lm

MINIMALIST_EXACT = "minimalist-exact"
GENERAL_COVER = "general-cover"


def body_or(p: Program) -> Program:
    """Facts of ``P`` plus ``a ← b`` for every proper rule ``a ← B`` and ``b ∈ B``."""
    krom = {Rule(r.head, frozenset({b})) for r in proper(p).rules for b in r.body}
    return facts(p) | p.with_rules(krom)


@dataclass(frozen=True)
class SingletonDecomposition:
    facts: Program
    terms: tuple[tuple[Rule, tuple[Program, ...]], ...]

    def rebuild(self) -> Program:
        result = self.facts
        for _, singles in self.terms:
            result = result | fold_body_union(list(singles), result.alphabet)
        return result


def singleton_decompose(p: Program) -> SingletonDecomposition:
    """``P = f(P) ∪ ⋃ ⊔_{b∈B} {a ← b}`` with one term per proper rule."""
    terms = []
    for r in proper(p).sorted_rules:
        singles = tuple(Program.of(p.alphabet, (r.head, {b})) for b in r.sorted_body())
        terms.append((r, singles))
    return SingletonDecomposition(facts(p), tuple(terms))


def compose_via_singletons(p: Program, r: Program) -> Program:
    """Composition rebuilt from ``⊔``, ``∪``, facts and single-atom rules.

    For each proper rule ``a ← B`` of ``P`` and each ``b ∈ B`` the candidates
    are ``⋃_{b ← C ∈ R} ⊔_{c ∈ C} {a ← c}``, where the empty ``⊔`` for a fact
    ``b`` of ``R`` stands for the fact ``a``.
    """
    same_alphabet(p, r)
    alphabet = p.alphabet
    result = facts(p)
    for term_rule, singles in singleton_decompose(p).terms:
        a = term_rule.head
        per_atom = []
        for single in singles:
            (b,) = single.sorted_rules[0].body
            options = Program.empty(alphabet)
            for c_body in r.by_head.get(b, ()):
                if c_body:
                    unit = [Program.of(alphabet, (a, {c})) for c in sorted(c_body)]
                    options = options | _fold_nonempty(unit)
                else:
                    options = options | Program.of(alphabet, a)
            per_atom.append(options)
        result = result | _fold_nonempty(per_atom)
    return result


def compose_via_singletons_literal(p: Program, r: Program) -> Program:
    """The same formula but ranging only over proper rules of ``R``."""
    return compose_via_singletons(p, proper(r))


def _fold_nonempty(programs: list[Program]) -> Program:
    result = programs[0]
    for q in programs[1:]:
        result = body_union(result, q)
    return result


# -- Krom decompositions ----------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    components: tuple[Program, ...]
    mode: str
    source: Program

    def fold(self) -> Program:
        return fold_body_union(list(self.components), self.source.alphabet)


def _staged(p: Program, order: Callable[[str], tuple]) -> tuple[Program, ...]:
    """Split every proper rule into one body atom per stage.

    Proceeding from the widest stage down: a rule of the current width gives
    its last atom to this stage's component and loses it; a shorter rule gives
    its last atom but keeps it.  Facts go into every component.
    """
    m = max(width(p), 1)
    fact_rules = facts(p).rules
    residual = [(r.head, sorted(r.body, key=order)) for r in proper(p).sorted_rules]
    components: list[Program] = []
    for stage in range(m, 1, -1):
        krom = set(fact_rules)
        next_residual = []
        for head, body in residual:
            krom.add(Rule(head, frozenset({body[-1]})))
            next_residual.append((head, body[:-1] if len(body) == stage else body))
        components.append(p.with_rules(krom))
        residual = next_residual
    last = set(fact_rules) | {Rule(h, frozenset(b)) for h, b in residual}
    components.append(p.with_rules(last))
    components.reverse()
    return tuple(components)


def _lm_guided_order(p: Program) -> Callable[[str], tuple]:
    # Atoms outside the least model sort last, so the widest stage's component
    # only ever gets a non-derivable atom for rules with non-derivable heads.
    model = lm(p).atoms
    return lambda atom: (atom not in model, atom)


def lexicographic_order(atom: str) -> tuple:
    return (atom,)


def krom_decompose(m: Program, order: Callable[[str], tuple] | None = None) -> Decomposition:
    """``M = K_1 ⊔ … ⊔ K_w`` for minimalist ``M`` with the least model preserved."""
    for head, bs in m.by_head.items():
        if len(bs) > 1:
            raise NotMinimalist(head)
    components = _staged(m, order or _lm_guided_order(m))
    return Decomposition(components, MINIMALIST_EXACT, m)


def krom_cover(p: Program, order: Callable[[str], tuple] | None = None) -> Decomposition:
    """Krom components whose ``⊔``-fold contains ``P``; no exactness guarantee."""
    components = _staged(p, order or _lm_guided_order(p))
    return Decomposition(components, GENERAL_COVER, p)


# -- verification -----------------------------------------------------------

PASS, FAIL, NOT_APPLICABLE = "pass", "fail", "n/a"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    witness: str = ""


@dataclass(frozen=True)
class DecompositionReport:
    mode: str
    checks: tuple[Check, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def __str__(self) -> str:
        lines = [f"decomposition ({self.mode}): {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            extra = f"  [{c.witness}]" if c.witness else ""
            lines.append(f"  {c.status.upper():4} {c.name}{extra}")
        return "\n".join(lines)


def _meet(models: list[Interpretation]) -> Interpretation:
    result = models[0]
    for i in models[1:]:
        result = result & i
    return result


def verify_decomposition(d: Decomposition) -> DecompositionReport:
    src = d.source
    ks = d.components
    checks: list[Check] = []

    def add(name: str, ok: bool | None, witness: str = "") -> None:
        status = NOT_APPLICABLE if ok is None else (PASS if ok else FAIL)
        checks.append(Check(name, status, "" if ok else witness))

    try:
        same_alphabet(src, *ks)
        add("shared-alphabet", True)
    except AlphabetMismatch as exc:
        add("shared-alphabet", False, str(exc))
        return DecompositionReport(d.mode, tuple(checks))

    expected_m = max(width(src), 1)
    add("component-count", len(ks) == expected_m, f"{len(ks)} components, width {width(src)}")

    bad = [k for k in ks if not is_krom(k)]
    add("components-krom", not bad, str(bad[0]) if bad else "")

    allowed = body_or(src) | facts(src)
    outside = [r for k in ks for r in k.sorted_rules if r not in allowed.rules]
    add("components-within-body-or", not outside, str(outside[0]) if outside else "")

    folded = d.fold()
    missing = [r for r in src.sorted_rules if r not in folded.rules]
    extra = [r for r in folded.sorted_rules if r not in src.rules]
    add("fold-covers-source", not missing, f"missing {missing[0]}" if missing else "")

    source_model = lm(src)
    component_models = [lm(k) for k in ks]
    meet = _meet(component_models)
    add("omega-within-meet", source_model <= meet, f"LM(source)={source_model}, meet={meet}")

    if d.mode == MINIMALIST_EXACT:
        add("source-minimalist", is_minimalist(src))
        nonmin = [k for k in ks if not is_minimalist(k)]
        add("components-minimalist", not nonmin, str(nonmin[0]) if nonmin else "")
        add("fold-equals-source", not missing and not extra,
            f"extra {extra[0]}" if extra else (f"missing {missing[0]}" if missing else ""))
        add("omega-equals-meet", source_model == meet, f"LM(source)={source_model}, meet={meet}")
    else:
        add("fold-equals-source", None)
        add("omega-equals-meet", None)
    return DecompositionReport(d.mode, tuple(checks))
