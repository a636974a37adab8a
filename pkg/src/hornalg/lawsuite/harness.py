"""Law registry, trial driver and reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Sequence

from ..core import Alphabet, Interpretation, Program
from .. import textio
from . import generators
from .generators import letters
from .rng import SplitMix64, stream

LAW = "law"
NEGATIVE = "negative"

MAX_RECORDED_FAILURES = 5


@dataclass(frozen=True)
class Mismatch:
    """Why a single trial failed: the operands and the two sides that differ."""

    operands: Mapping[str, Any]
    expected: str
    actual: str


@dataclass
class Trial:
    """Random source and alphabet handed to a law for one trial."""

    rng: SplitMix64
    alphabet: Alphabet

    def program(self, **kw: Any) -> Program:
        return generators.gen_program(self.rng, self.alphabet, **kw)

    def programs(self, n: int) -> list[Program]:
        return [self.program() for _ in range(n)]

    def minimalist(self, **kw: Any) -> Program:
        return generators.gen_minimalist(self.rng, self.alphabet, **kw)

    def krom(self) -> Program:
        return generators.gen_krom(self.rng, self.alphabet)

    def interp(self) -> Interpretation:
        return generators.gen_interpretation(self.rng, self.alphabet)

    def variant(self, p: Program) -> Program:
        return generators.gen_ss_variant(self.rng, p)


@dataclass(frozen=True)
class Law:
    name: str
    anchor: str
    kind: str
    check: Callable[[Trial], Mismatch | None]
    # fixed alphabet size, or None to use the run's size
    size: int | None = None

    @property
    def deterministic(self) -> bool:
        return self.kind == NEGATIVE


@dataclass(frozen=True)
class Failure:
    seed: int | None
    operands: Mapping[str, str]
    expected: str
    actual: str

    def as_json(self) -> dict[str, Any]:
        return {"seed": self.seed, "operands": dict(self.operands),
                "expected": self.expected, "actual": self.actual}


@dataclass(frozen=True)
class LawReport:
    law: str
    anchor: str
    kind: str
    trials: int
    failure_count: int = 0
    failures: tuple[Failure, ...] = field(default=())
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure_count == 0 and self.error is None

    def as_json(self) -> dict[str, Any]:
        return {
            "law": self.law,
            "anchor": self.anchor,
            "kind": self.kind,
            "trials": self.trials,
            "passed": self.passed,
            "failure_count": self.failure_count,
            "failures": [f.as_json() for f in self.failures],
            "error": self.error,
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        what = "fixture" if self.kind == NEGATIVE else f"{self.trials} trials"
        line = f"{status} {self.law} ({what})"
        if self.error:
            return f"{line}\n    error: {self.error}"
        if self.failures:
            f = self.failures[0]
            seed = "fixed" if f.seed is None else f"0x{f.seed:016x}"
            ops = "; ".join(f"{k}={v}" for k, v in f.operands.items())
            line += (f"\n    {self.failure_count} failing trial(s); first at seed {seed}"
                     f"\n    operands: {ops}\n    expected: {f.expected}\n    actual:   {f.actual}")
        return line


def render(value: Any) -> str:
    if isinstance(value, (Program, Interpretation)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(render(v) for v in value) + "]"
    return str(value)


class Registry:
    def __init__(self) -> None:
        self._laws: dict[str, Law] = {}

    def add(self, law: Law) -> Law:
        if law.name in self._laws:
            raise ValueError(f"duplicate law name {law.name!r}")
        self._laws[law.name] = law
        return law

    def law(self, name: str, anchor: str, size: int | None = None):
        def wrap(fn: Callable[[Trial], Mismatch | None]) -> Callable[[Trial], Mismatch | None]:
            self.add(Law(name, anchor, LAW, fn, size))
            return fn
        return wrap

    def negative(self, name: str, anchor: str):
        def wrap(fn: Callable[[], Mismatch | None]) -> Callable[[], Mismatch | None]:
            self.add(Law(name, anchor, NEGATIVE, lambda _trial: fn()))
            return fn
        return wrap

    def __iter__(self):
        return iter(self._laws.values())

    def __len__(self) -> int:
        return len(self._laws)

    def __contains__(self, name: object) -> bool:
        return name in self._laws

    def __getitem__(self, name: str) -> Law:
        return self._laws[name]

    def names(self) -> list[str]:
        return list(self._laws)


def _failure(seed: int | None, m: Mismatch) -> Failure:
    return Failure(seed, {k: render(v) for k, v in m.operands.items()}, m.expected, m.actual)


def run_law(law: Law, seeds: Sequence[int], alphabet_size: int) -> LawReport:
    alphabet = letters(law.size if law.size is not None else alphabet_size)
    if law.deterministic:
        seeds = seeds[:1]
    failures: list[Failure] = []
    count = 0
    for seed in seeds:
        try:
            outcome = law.check(Trial(SplitMix64(seed), alphabet))
        except Exception as exc:  # a crashing law is a failing law, not a crashing run
            return LawReport(law.name, law.anchor, law.kind, len(seeds), count + 1, tuple(failures),
                             f"{type(exc).__name__} at seed 0x{seed:016x}: {exc}")
        if outcome is not None:
            count += 1
            if len(failures) < MAX_RECORDED_FAILURES:
                failures.append(_failure(None if law.deterministic else seed, outcome))
    return LawReport(law.name, law.anchor, law.kind, len(seeds), count, tuple(failures))


def run_laws(master_seed: int = 1, trials: int = 500, alphabet_size: int = 4,
             law_filter: Iterable[str] | None = None,
             registry: Registry | None = None) -> list[LawReport]:
    """Run every registered law (or those named in ``law_filter``).

    Trial ``i`` of every law uses the ``i``-th output of SplitMix64 started at
    ``master_seed``, so results do not depend on which laws run or in what order.
    """
    if not 0 <= alphabet_size <= 8:
        raise ValueError("alphabet_size must be at most 8")
    if registry is None:
        from .laws import REGISTRY as registry
    selected = list(registry)
    if law_filter is not None:
        wanted = list(law_filter)
        unknown = [n for n in wanted if n not in registry]
        if unknown:
            raise KeyError(f"unknown law(s): {', '.join(unknown)}")
        selected = [registry[n] for n in wanted]
    seeds = stream(master_seed, trials)
    return [run_law(law, seeds, alphabet_size) for law in selected]


def report_text(reports: Sequence[LawReport]) -> str:
    passed = sum(r.passed for r in reports)
    lines = [str(r) for r in reports]
    lines.append(f"{passed}/{len(reports)} laws passed")
    return "\n".join(lines)


def report_json(reports: Sequence[LawReport]) -> str:
    return textio.json_export(list(reports))


# -- helpers used by law bodies ----------------------------------------------

def expect_equal(left: Any, right: Any, **operands: Any) -> Mismatch | None:
    if left == right:
        return None
    return Mismatch(operands, render(left), render(right))


def expect_subset(left: Program | Interpretation, right: Program | Interpretation,
                  **operands: Any) -> Mismatch | None:
    if left <= right:
        return None
    return Mismatch(operands, f"{render(left)} ⊆ {render(right)}", "not a subset")


def expect_true(ok: bool, what: str, **operands: Any) -> Mismatch | None:
    return None if ok else Mismatch(operands, what, "does not hold")


def first(*outcomes: Mismatch | None) -> Mismatch | None:
    """First failing outcome among several sub-checks of one law."""
    return next((o for o in outcomes if o is not None), None)


def expect_differ(left: Any, right: Any, **operands: Any) -> Mismatch | None:
    """Negative fixtures: the two sides must NOT coincide."""
    if left != right:
        return None
    return Mismatch(operands, f"sides differ (left {render(left)})", f"both sides equal {render(right)}")
