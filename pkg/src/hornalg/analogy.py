"""Program schemas over one variable and analogical proportions between programs.

A schema is a small expression tree whose leaves are program constants,
named references (bound at evaluation time) or the single variable ``X``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Union

from . import algebra, core, decomposition, semantics
from .core import Program, as_program, same_alphabet
from .errors import AlphabetMismatch, EvaluationError, NotAnInterpretation


@dataclass(frozen=True)
class Var:
    def __str__(self) -> str:
        return "X"


@dataclass(frozen=True)
class Const:
    program: Program

    def __str__(self) -> str:
        return str(self.program)


@dataclass(frozen=True)
class Ref:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Op:
    name: str
    args: tuple[SchemaExpr, ...]

    def __post_init__(self) -> None:
        if self.name not in OPERATORS:
            raise ValueError(f"unknown operator {self.name!r}")
        arity = OPERATORS[self.name][0]
        if len(self.args) != arity:
            raise ValueError(f"{self.name} takes {arity} argument(s), got {len(self.args)}")

    def __str__(self) -> str:
        return f"{self.name}({', '.join(str(a) for a in self.args)})"


SchemaExpr = Union[Var, Const, Ref, Op]
X = Var()


def _interp(p: Program) -> core.Interpretation:
    if not p.is_interpretation():
        raise EvaluationError(f"expected an interpretation, got {p}")
    return p.as_interpretation()


def _lm_program(p: Program) -> Program:
    return semantics.lm(p).as_program()


# name -> (arity, implementation on programs)
OPERATORS: dict[str, tuple[int, Callable[..., Program]]] = {
    "union": (2, lambda p, r: p | r),
    "inter": (2, lambda p, r: p & r),
    "diff": (2, lambda p, r: p - r),
    "compose": (2, algebra.compose),
    "star": (1, algebra.star),
    "omega": (1, lambda p: algebra.omega(p).as_program()),
    "lm": (1, _lm_program),
    "bunion": (2, algebra.body_union),
    "binter": (2, algebra.body_inter),
    "bcomp": (1, algebra.body_comp),
    "bsub": (2, algebra.body_sub),
    "bsymdiff": (2, algebra.body_symdiff),
    "bbsymdiff": (2, algebra.black_symdiff),
    "bpow": (1, algebra.body_powerset),
    "bor": (1, decomposition.body_or),
    "hred": (2, lambda i, p: algebra.head_reduct(_interp(i), p)),
    "bred": (2, lambda p, i: algebra.body_reduct(p, _interp(i))),
    "facts": (1, core.facts),
    "proper": (1, core.proper),
    "heads": (1, lambda p: core.heads(p).as_program()),
}


def op(name: str, *args: SchemaExpr | Program) -> Op:
    """Build an operator node; bare programs are wrapped as constants."""
    wrapped = tuple(Const(as_program(a)) if isinstance(a, (Program, core.Interpretation)) else a
                    for a in args)
    return Op(name, wrapped)


def eval_schema(e: SchemaExpr, binding: Program | None = None,
                env: Mapping[str, Program] | None = None) -> Program:
    """Evaluate ``e`` with ``X`` bound to ``binding`` and references looked up in ``env``."""
    env = env or {}
    if isinstance(e, Var):
        if binding is None:
            raise EvaluationError("the schema variable X is unbound")
        return as_program(binding)
    if isinstance(e, Const):
        value = e.program
    elif isinstance(e, Ref):
        if e.name == "X":
            return eval_schema(X, binding, env)
        if e.name not in env:
            raise EvaluationError(f"unbound name {e.name!r}")
        value = as_program(env[e.name])
    else:
        args = [eval_schema(a, binding, env) for a in e.args]
        if len(args) > 1:
            same_alphabet(*args)
        try:
            return OPERATORS[e.name][1](*args)
        except NotAnInterpretation as exc:
            raise EvaluationError(str(exc)) from exc
    if binding is not None and value.alphabet != binding.alphabet:
        raise AlphabetMismatch(binding.alphabet, value.alphabet)
    return value


def constants(e: SchemaExpr) -> list[Program]:
    if isinstance(e, Const):
        return [e.program]
    if isinstance(e, Op):
        return [c for a in e.args for c in constants(a)]
    return []


@dataclass(frozen=True)
class Justification:
    forward: SchemaExpr
    backward: SchemaExpr

    def __str__(self) -> str:
        return f"F(X) = {self.forward}; G(X) = {self.backward}"


def check_arrow(p: Program, q: Program, r: Program, s: Program, f: SchemaExpr,
                env: Mapping[str, Program] | None = None) -> bool:
    """``P → Q :: R → S`` justified by ``f``: ``f(P) = Q`` and ``f(R) = S``."""
    p, q, r, s = (as_program(v) for v in (p, q, r, s))
    same_alphabet(p, q, r, s)
    return eval_schema(f, p, env) == q and eval_schema(f, r, env) == s


def check_proportion(p: Program, q: Program, r: Program, s: Program, j: Justification,
                     env: Mapping[str, Program] | None = None) -> bool:
    """``P : Q :: R : S`` justified by the pair ``(F, G)``."""
    return check_arrow(p, q, r, s, j.forward, env) and check_arrow(q, p, s, r, j.backward, env)


Quadruple = tuple[Program, Program, Program, Program]


def complement_proportion(p: Program, r: Program) -> tuple[Quadruple, Justification]:
    """``P : P© :: R : R©``, justified by body-complement in both directions."""
    p, r = as_program(p), as_program(r)
    same_alphabet(p, r)
    comp = Op("bcomp", (X,))
    return (p, algebra.body_comp(p), r, algebra.body_comp(r)), Justification(comp, comp)


def _disjoint_from(p: Program, q: Program) -> bool:
    q_bodies = q.by_head
    return all(not (rule.body & c) for rule in p.rules for c in q_bodies.get(rule.head, ()))


def union_shift_applies(p: Program, q: Program, r: Program) -> bool:
    """Side conditions under which ``X ↦ X ⊔ Q`` is undone by ``X ↦ X ⊟ Q`` on ``P`` and ``R``.

    Bodies of ``P`` and ``R`` must be disjoint from the same-head bodies of
    ``Q``.  In addition every head of ``P`` and ``R`` needs exactly one rule in
    ``Q``: a missing head is dropped by ``⊔``, and two ``Q``-bodies ``C ≠ C'``
    leave ``C - C'`` behind after the subtraction.
    """
    q_bodies = q.by_head
    for prog in (p, r):
        if not _disjoint_from(prog, q):
            return False
        if any(len(q_bodies.get(h, ())) != 1 for h in prog.by_head):
            return False
    return True


def union_shift_proportion(p: Program, q: Program, r: Program) -> tuple[Quadruple, Justification] | None:
    """``P : P ⊔ Q :: R : R ⊔ Q`` when :func:`union_shift_applies`, else ``None``."""
    p, q, r = (as_program(v) for v in (p, q, r))
    same_alphabet(p, q, r)
    if not union_shift_applies(p, q, r):
        return None
    j = Justification(Op("bunion", (X, Const(q))), Op("bsub", (X, Const(q))))
    return (p, algebra.body_union(p, q), r, algebra.body_union(r, q)), j
