import json
from fractions import Fraction
from pathlib import Path

import pytest

from hornalg.core import Alphabet, is_krom, is_minimalist, width
from hornalg.lawsuite import Registry, SplitMix64, report_json, report_text, run_laws
from hornalg.lawsuite.generators import (
    gen_blowup_map,
    gen_krom,
    gen_minimalist,
    gen_program,
    gen_ss_variant,
    letters,
)
from hornalg.lawsuite.harness import NEGATIVE, Mismatch, expect_equal
from hornalg.lawsuite.laws import REGISTRY
from hornalg.lawsuite.rng import stream
from hornalg.semantics import ss_equiv
from hornalg.textio import parse_program, serialize_program

DATA = Path(__file__).parent / "data"
ABC = letters(3)


def test_splitmix_reference_values():
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_rng_helpers():
    rng = SplitMix64(5)
    assert all(0 <= rng.below(7) < 7 for _ in range(100))
    assert not any(rng.bernoulli(Fraction(0)) for _ in range(50))
    assert all(rng.bernoulli(Fraction(1)) for _ in range(50))
    assert sorted(SplitMix64(3).shuffled(list("abcde"))) == list("abcde")
    assert stream(9, 4) == stream(9, 4) and len(set(stream(9, 4))) == 4


@pytest.mark.parametrize("gen,golden", [(gen_program, "gen_program_seed42.hp"),
                                        (gen_minimalist, "gen_minimalist_seed42.hp")])
def test_generator_golden_files(gen, golden):
    expected = (DATA / golden).read_text().strip()
    assert serialize_program(gen(SplitMix64(42), ABC)) == expected


def test_generator_edge_parameters():
    assert all(r.is_fact for r in gen_program(SplitMix64(1), ABC, body_prob=Fraction(0)))
    assert not gen_program(SplitMix64(1), ABC, max_rules_per_head=0).rules
    for seed in range(50):
        assert is_minimalist(gen_minimalist(SplitMix64(seed), letters(5)))
        assert width(gen_minimalist(SplitMix64(seed), letters(6), max_width=2)) <= 2
        assert is_krom(gen_krom(SplitMix64(seed), ABC))
        p = gen_program(SplitMix64(seed), ABC)
        assert ss_equiv(gen_ss_variant(SplitMix64(seed + 1), p), p)


def test_blowup_maps_have_disjoint_nonempty_images():
    m = gen_blowup_map(SplitMix64(4), ABC)
    images = list(m.image.values())
    assert all(images)
    assert sum(len(i) for i in images) == len(m.target)


def test_every_law_has_an_anchor_and_fixtures_exist():
    assert len(REGISTRY) > 100
    assert all(law.anchor for law in REGISTRY)
    assert sum(law.kind == NEGATIVE for law in REGISTRY) >= 20


def test_law_filter():
    reports = run_laws(1, 20, 4, ["mdt-exactness"])
    assert [r.law for r in reports] == ["mdt-exactness"]
    with pytest.raises(KeyError):
        run_laws(1, 5, 4, ["no-such-law"])


def test_corrupted_law_reports_a_witness():
    reg = Registry()

    @reg.law("broken-union", "self-check")
    def _(t):
        p, r = t.programs(2)
        return expect_equal(p | r, p, p=p, r=r)

    @reg.negative("broken-fixture", "self-check")
    def _():
        p = parse_program("a.")
        return Mismatch({"p": p}, "differ", "equal")

    reports = run_laws(3, 50, 3, registry=reg)
    law, fixture = reports
    assert not law.passed and law.failure_count > 0
    first = law.failures[0]
    assert first.seed is not None and first.operands["p"] and first.expected != first.actual
    assert not fixture.passed and fixture.trials == 1
    assert "0/2 laws passed" in report_text(reports)


def test_crashing_law_is_a_failure():
    reg = Registry()

    @reg.law("crash", "self-check")
    def _(t):
        raise RuntimeError("boom")

    (report,) = run_laws(1, 3, 3, registry=reg)
    assert not report.passed and "boom" in report.error


def test_duplicate_law_names_rejected():
    reg = Registry()
    reg.law("x", "a")(lambda t: None)
    with pytest.raises(ValueError):
        reg.law("x", "a")(lambda t: None)


def test_json_report_shape():
    reports = run_laws(1, 5, 3, ["compose-oracle", "neg-sqcup-not-idempotent"])
    data = json.loads(report_json(reports))
    assert [d["law"] for d in data] == ["compose-oracle", "neg-sqcup-not-idempotent"]
    assert all(d["passed"] for d in data)


def test_alphabet_size_is_bounded():
    with pytest.raises(ValueError):
        run_laws(1, 1, 9)
    assert Alphabet(tuple("abcdefgh")) == letters(8)
