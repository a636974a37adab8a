"""Seeded generators and the registry of checked laws."""

from .generators import gen_minimalist, gen_program, letters
from .harness import LawReport, Registry, report_json, report_text, run_laws
from .rng import SplitMix64

__all__ = [
    "LawReport",
    "Registry",
    "SplitMix64",
    "gen_minimalist",
    "gen_program",
    "letters",
    "report_json",
    "report_text",
    "run_laws",
]
