"""Command-line front end: ``hornalg <command> ...``.

Exit codes: 0 success or true, 1 false or law failure, 2 syntax error,
3 alphabet error, 4 evaluation error or limit, 5 failed precondition.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import analogy, decomposition, semantics, textio
from .core import Alphabet, Program
from .errors import (
    AlphabetMismatch,
    AlphabetTooLarge,
    AtomNotInAlphabet,
    BlowupLimitExceeded,
    EvaluationError,
    InvalidAtomName,
    JsonSchemaError,
    NotAnInterpretation,
    NotMinimalist,
    ProgramSyntaxError,
)
from .lawsuite import report_json, report_text, run_laws

OK, FALSE, SYNTAX, ALPHABET, EVALUATION, PRECONDITION = range(6)


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(SYNTAX, f"{path}: cannot read: {exc.strerror}") from exc


def _parse_alphabet(text: str | None) -> Alphabet | None:
    if text is None:
        return None
    names = [a.strip() for a in text.split(",") if a.strip()]
    try:
        return Alphabet(tuple(names))
    except InvalidAtomName as exc:
        raise CliError(ALPHABET, f"--alphabet: {exc}") from exc


def load_programs(paths: Sequence[str], override: Alphabet | None) -> list[Program]:
    """Parse several files so that they end up over one alphabet where possible.

    A ``#alphabet`` directive wins; otherwise ``--alphabet``; otherwise the
    union of the alphabets of all files given on the command line.
    """
    docs = []
    for path in paths:
        text = _read(path)
        if path.endswith(".json"):
            try:
                docs.append((path, textio.json_import(text)))
            except JsonSchemaError as exc:
                raise CliError(SYNTAX, f"{path}: {exc}") from exc
            continue
        try:
            docs.append((path, textio.parse_document(text)))
        except ProgramSyntaxError as exc:
            raise CliError(SYNTAX, f"{path}:{exc.span.line}:{exc.span.column}: {exc.message}") from exc
    if override is None:
        shared = Alphabet()
        for _, doc in docs:
            if isinstance(doc, Program):
                shared = shared.union(doc.alphabet)
            else:
                shared = shared.union(Alphabet(doc.declared) if doc.declared is not None else doc.mentioned)
        override = shared
    programs = []
    for path, doc in docs:
        if isinstance(doc, Program):
            programs.append(doc)
            continue
        try:
            programs.append(doc.build(override))
        except AtomNotInAlphabet as exc:
            where = f"{exc.span.line}:{exc.span.column}: " if exc.span is not None else ""
            raise CliError(ALPHABET, f"{path}:{where}atom {exc.atom!r} is not in the alphabet") from exc
    return programs


def _bindings(lets: Sequence[str], override: Alphabet | None) -> dict[str, Program]:
    names, paths = [], []
    for item in lets:
        name, sep, path = item.partition("=")
        if not sep or not name.isidentifier():
            raise CliError(SYNTAX, f"--let expects NAME=PATH, got {item!r}")
        names.append(name)
        paths.append(path)
    return dict(zip(names, load_programs(paths, override)))


def _emit(args: argparse.Namespace, text: str, value: object) -> None:
    if getattr(args, "json", False):
        print(textio.json_export(value) if not isinstance(value, str) else value)
    elif text:
        print(text)


def _dumps(data: object) -> str:
    return textio.dumps(data)


# -- commands -----------------------------------------------------------------

def cmd_lm(args: argparse.Namespace) -> int:
    (p,) = load_programs([args.file], _parse_alphabet(args.alphabet))
    model = semantics.lm(p)
    _emit(args, textio.serialize_clauses(model.as_program()), model)
    return OK


def _evaluate(expr: analogy.SchemaExpr, env: dict[str, Program]) -> Program:
    missing = [n for n in textio.free_names(expr) if n not in env]
    if missing:
        raise CliError(EVALUATION, f"unbound name(s): {', '.join(missing)} (use --let NAME=PATH)")
    return analogy.eval_schema(expr, env.get("X"), env)


def cmd_eval(args: argparse.Namespace) -> int:
    expr = _parse_expr(args.expr)
    env = _bindings(args.let, _parse_alphabet(args.alphabet))
    result = _evaluate(expr, env)
    _emit(args, textio.serialize_program(result), result)
    return OK


def _parse_expr(text: str) -> analogy.SchemaExpr:
    try:
        return textio.parse_expr(text)
    except ProgramSyntaxError as exc:
        raise CliError(SYNTAX, f"expression:{exc.span.column}: {exc.message}") from exc


def cmd_decompose(args: argparse.Namespace) -> int:
    (p,) = load_programs([args.file], _parse_alphabet(args.alphabet))
    if args.mode == "minimalist":
        d = decomposition.krom_decompose(p)
    else:
        d = decomposition.krom_cover(p)
    report = decomposition.verify_decomposition(d)
    if args.json:
        print(textio.json_export(d))
    else:
        for n, k in enumerate(d.components, start=1):
            print(f"% K_{n}")
            body = textio.serialize_clauses(k)
            if body:
                print(body)
        print(str(report))
    return OK if report.passed else FALSE


RELATIONS = ("ss-equiv", "ss-leq", "equal", "subset")


def cmd_check(args: argparse.Namespace) -> int:
    p, r = load_programs([args.left, args.right], _parse_alphabet(args.alphabet))
    witness = None
    if args.relation == "ss-equiv":
        result = semantics.ss_equiv(p, r)
        if not result:
            witness = semantics.ss_witness(p, r) or semantics.ss_witness(r, p)
    elif args.relation == "ss-leq":
        witness = semantics.ss_witness(p, r)
        result = witness is None
    elif args.relation == "equal":
        if p.alphabet != r.alphabet:
            raise AlphabetMismatch(p.alphabet, r.alphabet)
        result = p == r
    else:
        result = p <= r
    if args.json:
        data = {"relation": args.relation, "result": result,
                "witness": None if witness is None else sorted(witness.atoms)}
        print(_dumps(data))
    else:
        print("true" if result else "false")
        if witness is not None:
            print(f"witness: I = {witness}", file=sys.stderr)
    return OK if result else FALSE


def cmd_laws(args: argparse.Namespace) -> int:
    if not 0 <= args.max_atoms <= 8:
        raise CliError(PRECONDITION, "--max-atoms must be between 0 and 8")
    try:
        reports = run_laws(args.seed, args.trials, args.max_atoms, args.law or None)
    except KeyError as exc:
        raise CliError(PRECONDITION, str(exc.args[0])) from exc
    print(report_json(reports) if args.json else report_text(reports))
    return OK if all(r.passed for r in reports) else FALSE


def cmd_analogy(args: argparse.Namespace) -> int:
    override = _parse_alphabet(args.alphabet)
    p, q, r, s = load_programs([args.p, args.q, args.r, args.s], override)
    env = _bindings(args.let, override)
    forward, backward = _parse_expr(args.forward), _parse_expr(args.backward)
    for e in (forward, backward):
        missing = [n for n in textio.free_names(e) if n not in env]
        if missing:
            raise CliError(EVALUATION, f"unbound name(s): {', '.join(missing)} (use --let NAME=PATH)")
    fwd = analogy.check_arrow(p, q, r, s, forward, env)
    bwd = analogy.check_arrow(q, p, s, r, backward, env)
    verdict = fwd and bwd
    if args.json:
        print(_dumps({"forward": fwd, "backward": bwd, "proportion": verdict}))
    else:
        print("true" if verdict else "false")
        print(f"forward {'holds' if fwd else 'fails'}; backward {'holds' if bwd else 'fails'}", file=sys.stderr)
    return OK if verdict else FALSE


def cmd_fmt(args: argparse.Namespace) -> int:
    (p,) = load_programs([args.file], _parse_alphabet(args.alphabet))
    _emit(args, textio.serialize_program(p), p)
    return OK


# -- argument parsing ---------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hornalg", description="Algebra of propositional Horn programs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--alphabet", help="comma-separated alphabet for files without #alphabet")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = common(sub.add_parser("lm", help="least model of a program"))
    p.add_argument("file")
    p.set_defaults(func=cmd_lm)

    p = common(sub.add_parser("eval", help="evaluate an expression such as 'compose(P, R)'"))
    p.add_argument("expr")
    p.add_argument("--let", action="append", default=[], metavar="NAME=PATH")
    p.set_defaults(func=cmd_eval)

    p = common(sub.add_parser("decompose", help="Krom decomposition with verification"))
    p.add_argument("file")
    p.add_argument("--mode", choices=("minimalist", "general"), default="minimalist")
    p.set_defaults(func=cmd_decompose)

    p = common(sub.add_parser("check", help="compare two programs"))
    p.add_argument("relation", choices=RELATIONS)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("laws", help="run the seeded law suite")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--max-atoms", type=int, default=4)
    p.add_argument("--law", action="append", default=[], metavar="NAME")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("analogy", help="analogical proportions")
    asub = p.add_subparsers(dest="analogy_command", required=True)
    c = common(asub.add_parser("check", help="verify P : Q :: R : S under a justification"))
    for name in ("p", "q", "r", "s"):
        c.add_argument(name, metavar=name.upper())
    c.add_argument("--forward", required=True, metavar="EXPR", help="schema F with Q = F(P), S = F(R)")
    c.add_argument("--backward", required=True, metavar="EXPR", help="schema G with P = G(Q), R = G(S)")
    c.add_argument("--let", action="append", default=[], metavar="NAME=PATH")
    c.set_defaults(func=cmd_analogy)

    p = common(sub.add_parser("fmt", help="print the canonical form of a program"))
    p.add_argument("file")
    p.set_defaults(func=cmd_fmt)
    return parser


_CODES = (
    (ProgramSyntaxError, SYNTAX),
    (JsonSchemaError, SYNTAX),
    (AtomNotInAlphabet, ALPHABET),
    (AlphabetMismatch, ALPHABET),
    (InvalidAtomName, ALPHABET),
    (BlowupLimitExceeded, EVALUATION),
    (AlphabetTooLarge, EVALUATION),
    (EvaluationError, EVALUATION),
    (NotAnInterpretation, EVALUATION),
    (NotMinimalist, PRECONDITION),
)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"hornalg: {exc}", file=sys.stderr)
        return exc.code
    except tuple(cls for cls, _ in _CODES) as exc:
        code = next(c for cls, c in _CODES if isinstance(exc, cls))
        print(f"hornalg: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
