"""Acceptance run: one PASS/FAIL line per criterion.

Run under pytest, or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import io
import json
import os
import subprocess
import sys
import time
from contextlib import redirect_stdout
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hornalg.algebra import omega, omega_via_star
from hornalg.cli import main as cli_main
from hornalg.core import Alphabet, facts, is_krom, width
from hornalg.decomposition import body_or, krom_cover, krom_decompose, verify_decomposition
from hornalg.lawsuite import run_laws
from hornalg.lawsuite.generators import gen_minimalist, gen_program, gen_ss_variant, letters
from hornalg.lawsuite.rng import SplitMix64, stream
from hornalg.semantics import least_model_oracle, lm, ss_equiv, ss_reduce
from hornalg.textio import json_export, json_import, parse_program, serialize_program

from worked_examples import CATALOG

MASTER_SEED = 1
RESULTS: dict[int, tuple[bool, str]] = {}


def _line(n: int, ok: bool, detail: str) -> str:
    return f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"


def _timed(fn):
    start = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - start


def _meet(models):
    result = models[0]
    for m in models[1:]:
        result = result & m
    return result


# -- criteria ---------------------------------------------------------------

def criterion_1():
    wrong = []
    count = 0
    for name, example in CATALOG.items():
        for i, (actual, expected) in enumerate(example()):
            count += 1
            if actual != expected:
                wrong.append(f"{name}[{i}]: got {actual}, want {expected}")
    return not wrong, f"{count - len(wrong)}/{count} example values exact" + "".join(f"; {w}" for w in wrong)


def criterion_2():
    bad = []
    programs = 0
    for k, seed in enumerate(stream(MASTER_SEED, 600)):
        p = gen_program(SplitMix64(seed), letters(4 + k % 2))
        programs += 1
        if lm(p) != least_model_oracle(p) or omega(p) != omega_via_star(p):
            bad.append(f"program seed 0x{seed:016x}")
    pairs = equivalent = 0
    for k, seed in enumerate(stream(MASTER_SEED + 1, 600)):
        rng = SplitMix64(seed)
        a = letters(4 + k % 2)
        p = gen_program(rng, a)
        r = gen_ss_variant(rng, p) if k % 2 else gen_program(rng, a)
        pairs += 1
        truth = ss_equiv(p, r)
        equivalent += truth
        if (ss_reduce(p) == ss_reduce(r)) != truth:
            bad.append(f"pair seed 0x{seed:016x}")
    detail = f"{programs} programs, {pairs} pairs ({equivalent} equivalent), {len(bad)} disagreements"
    return not bad, detail + "".join(f"; {b}" for b in bad[:3])


_LAW_REPORTS: dict[str, list[dict]] = {}


def _cli_laws(*argv: str) -> tuple[int, list[dict]]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(["laws", *argv, "--json"])
    return code, json.loads(buf.getvalue())


def law_reports(config: str) -> list[dict]:
    if config not in _LAW_REPORTS:
        if config == "A4":
            code, data = _cli_laws("--seed", "1", "--trials", "500", "--max-atoms", "4")
            _LAW_REPORTS["A4-exit"] = code
        else:
            code, data = _cli_laws("--seed", "1", "--trials", "100", "--max-atoms", "5")
        _LAW_REPORTS[config] = data
    return _LAW_REPORTS[config]


def criterion_3():
    failing = sorted({r["law"] for cfg in ("A4", "A5") for r in law_reports(cfg) if not r["passed"]})
    exit_code = _LAW_REPORTS["A4-exit"]
    total = len(law_reports("A4"))
    detail = f"{total - len(failing)}/{total} laws pass at |A|=4 x500 and |A|=5 x100; CLI exit {exit_code}"
    if failing:
        detail += "; failing: " + ", ".join(failing)
    return not failing and exit_code == 0, detail


def criterion_4():
    bad = []
    seeds = stream(MASTER_SEED, 1000)
    for k, seed in enumerate(seeds):
        a = letters(1 + k % 6)
        m = gen_minimalist(SplitMix64(seed), a, max_width=4)
        d = krom_decompose(m)
        allowed = body_or(m) | facts(m)
        ok = (len(d.components) == max(width(m), 1)
              and all(is_krom(c) and c <= allowed for c in d.components)
              and d.fold() == m
              and lm(m) == _meet([lm(c) for c in d.components])
              and verify_decomposition(d).passed)
        if not ok:
            bad.append(f"seed 0x{seed:016x}: {m}")
    return not bad, f"{len(seeds) - len(bad)}/{len(seeds)} minimalist programs decompose exactly" + \
        "".join(f"; {b}" for b in bad[:3])


def criterion_5():
    bad = []
    seeds = stream(MASTER_SEED, 500)
    for k, seed in enumerate(seeds):
        p = gen_program(SplitMix64(seed), letters(3 + k % 3))
        d = krom_cover(p)
        if not (p <= d.fold() and lm(p) <= _meet([lm(c) for c in d.components])):
            bad.append(f"seed 0x{seed:016x}")
    e = parse_program("a :- b, c. a :- d, e.", Alphabet.of("a", "b", "c", "d", "e"))
    fold = krom_cover(e).fold()
    strict = e < fold
    if not strict:
        bad.append(f"cover of {e} is not strict: {fold}")
    return not bad, f"{len(seeds) - len(bad)}/{len(seeds)} covers hold; strict cover {'yes' if strict else 'no'}"


def criterion_6():
    bad = []
    seeds = stream(MASTER_SEED, 1000)
    for k, seed in enumerate(seeds):
        p = gen_program(SplitMix64(seed), letters(k % 7))
        text = serialize_program(p)
        if parse_program(text) != p or serialize_program(parse_program(text)) != text:
            bad.append(f"text seed 0x{seed:016x}")
        if json_import(json_export(p)) != p:
            bad.append(f"json seed 0x{seed:016x}")
    return not bad, f"{len(seeds)} programs, {len(bad)} round-trip failures"


def _subprocess_report(hash_seed: str) -> bytes:
    env = dict(os.environ, PYTHONHASHSEED=hash_seed)
    cmd = [sys.executable, "-m", "hornalg.cli", "laws", "--seed", "1", "--trials", "100", "--max-atoms", "4"]
    done = subprocess.run(cmd, capture_output=True, env=env)
    return done.stdout


def criterion_7():
    first = run_laws(MASTER_SEED, 100, 4)
    second = run_laws(MASTER_SEED, 100, 4)
    same_json = json_export(first) == json_export(second)
    a, b = _subprocess_report("0"), _subprocess_report("12345")
    same_process_text = a == b and len(a) > 0
    detail = f"in-process JSON identical: {same_json}; text across hash seeds identical: {same_process_text}"
    return same_json and same_process_text, detail


LIMITS = {1: 1.0, 2: 30.0, 3: 60.0, 4: 60.0, 5: 30.0, 6: 10.0, 7: None}
CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7}


def evaluate(n: int) -> tuple[bool, str]:
    ok, detail, elapsed = _timed(CRITERIA[n])
    limit = LIMITS[n]
    in_time = limit is None or elapsed < limit
    budget = f"{elapsed:.2f}s" + (f" (limit {limit:.0f}s)" if limit is not None else "")
    RESULTS[n] = (ok and in_time, f"{detail}; {budget}")
    return RESULTS[n]


# -- pytest entry points ----------------------------------------------------

@pytest.fixture
def announce(capsys):
    def emit(n: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print("\n" + _line(n, ok, detail))
    return emit


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, announce):
    ok, detail = evaluate(n)
    announce(n, ok, detail)
    assert ok, detail


def _law_names() -> list[str]:
    from hornalg.lawsuite.laws import REGISTRY
    return REGISTRY.names()


@pytest.mark.parametrize("config", ["A4", "A5"])
@pytest.mark.parametrize("law", _law_names())
def test_law(law, config):
    report = next(r for r in law_reports(config) if r["law"] == law)
    assert report["passed"], json.dumps(report["failures"][:1] or report["error"], ensure_ascii=False)


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        print(_line(n, *evaluate(n)))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
