"""Concrete syntax for programs and expressions, plus the JSON wire format.

Program files::

    #alphabet a, b, c.     % optional; otherwise the mentioned atoms
    a.
    c :- a, b.

Expressions are nested calls such as ``omega(compose(P, star(P)))``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Any, Iterable

import jsonschema

from .analogy import OPERATORS, Op, Ref, SchemaExpr, X
from .core import ATOM_PATTERN, Alphabet, Interpretation, Program, Rule
from .decomposition import Decomposition, verify_decomposition
from .errors import (
    ArityError,
    AtomNotInAlphabet,
    HornAlgebraError,
    JsonSchemaError,
    ProgramSyntaxError,
    UnknownOperator,
)


@dataclass(frozen=True)
class SourceSpan:
    line: int
    column: int
    offset: int

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}"


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "directive", "punct" or "eof"
    text: str
    span: SourceSpan


_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>%[^\n]*)
  | (?P<directive>\#[A-Za-z_]+)
  | (?P<ident>[A-Za-z0-9_]+)
  | (?P<punct>:-|[,.()])
""", re.VERBOSE)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos, line, col, offset = 0, 1, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        span = SourceSpan(line, col, offset)
        if m is None:
            raise ProgramSyntaxError(span, f"unexpected character {text[pos]!r}")
        chunk = m.group()
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, chunk, span))
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            col = len(chunk) - chunk.rfind("\n")
        else:
            col += len(chunk)
        offset += len(chunk.encode("utf-8"))
        pos = m.end()
    tokens.append(Token("eof", "", SourceSpan(line, col, offset)))
    return tokens


class _Cursor:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def expect(self, text: str, what: str) -> Token:
        tok = self.peek
        if tok.kind != "punct" or tok.text != text:
            found = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise ProgramSyntaxError(tok.span, f"expected {what}, found {found}")
        return self.advance()


def _atom(cur: _Cursor) -> Token:
    tok = cur.peek
    if tok.kind != "ident":
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ProgramSyntaxError(tok.span, f"expected an atom, found {found}")
    if not ATOM_PATTERN.fullmatch(tok.text):
        raise ProgramSyntaxError(tok.span, f"invalid atom name {tok.text!r}: must match [a-z][a-zA-Z0-9_]*")
    return cur.advance()


# -- programs ---------------------------------------------------------------

@dataclass(frozen=True)
class ParsedProgram:
    """Clauses with token positions, before an alphabet is fixed."""

    declared: tuple[str, ...] | None
    clauses: tuple[tuple[Token, tuple[Token, ...]], ...]

    @property
    def mentioned(self) -> Alphabet:
        names = {h.text for h, _ in self.clauses} | {b.text for _, body in self.clauses for b in body}
        return Alphabet(tuple(names))

    def build(self, override: Alphabet | None = None) -> Program:
        if self.declared is not None:
            alphabet = Alphabet(self.declared)
        elif override is not None:
            alphabet = override
        else:
            alphabet = self.mentioned
        rules = []
        for head, body in self.clauses:
            for tok in (head, *body):
                if tok.text not in alphabet:
                    raise AtomNotInAlphabet(tok.text, span=tok.span)
            rules.append(Rule(head.text, frozenset(b.text for b in body)))
        return Program(alphabet, frozenset(rules))


def parse_document(text: str) -> ParsedProgram:
    cur = _Cursor(tokenize(text))
    declared: list[str] | None = None
    clauses = []
    while cur.peek.kind != "eof":
        tok = cur.peek
        if tok.kind == "directive":
            if tok.text != "#alphabet":
                raise ProgramSyntaxError(tok.span, f"unknown directive {tok.text!r}")
            cur.advance()
            declared = declared or []
            # an empty directive "#alphabet." declares the empty alphabet
            if cur.peek.kind == "ident":
                declared.append(_atom(cur).text)
                while cur.peek.text == ",":
                    cur.advance()
                    declared.append(_atom(cur).text)
            cur.expect(".", "',' or '.' in the alphabet directive")
            continue
        head = _atom(cur)
        body: list[Token] = []
        if cur.peek.kind == "punct" and cur.peek.text == ":-":
            cur.advance()
            body.append(_atom(cur))
            while cur.peek.kind == "punct" and cur.peek.text == ",":
                cur.advance()
                body.append(_atom(cur))
        cur.expect(".", "',' or '.'" if body else "':-' or '.'")
        clauses.append((head, tuple(body)))
    return ParsedProgram(None if declared is None else tuple(declared), tuple(clauses))


def parse_program(text: str, override_alphabet: Alphabet | None = None) -> Program:
    return parse_document(text).build(override_alphabet)


def serialize_program(p: Program | Interpretation) -> str:
    if isinstance(p, Interpretation):
        p = p.as_program()
    directive = "#alphabet " + ", ".join(p.alphabet) + "." if len(p.alphabet) else "#alphabet."
    return "\n".join([directive, *(str(r) for r in p.sorted_rules)])


def serialize_clauses(p: Program) -> str:
    """Clauses only, one per line; used for printing results."""
    return "\n".join(str(r) for r in p.sorted_rules)


# -- expressions ------------------------------------------------------------

def parse_expr(text: str) -> SchemaExpr:
    cur = _Cursor(tokenize(text))
    expr = _expr(cur)
    tok = cur.peek
    if tok.kind != "eof":
        raise ProgramSyntaxError(tok.span, f"unexpected {tok.text!r} after expression")
    return expr


def _expr(cur: _Cursor) -> SchemaExpr:
    tok = cur.peek
    if tok.kind != "ident" or tok.text[0].isdigit():
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ProgramSyntaxError(tok.span, f"expected a name or an operator call, found {found}")
    cur.advance()
    if not (cur.peek.kind == "punct" and cur.peek.text == "("):
        return X if tok.text == "X" else Ref(tok.text)
    if tok.text not in OPERATORS:
        raise UnknownOperator(tok.span, f"unknown operator {tok.text!r}")
    cur.advance()
    args = [_expr(cur)]
    while cur.peek.kind == "punct" and cur.peek.text == ",":
        cur.advance()
        args.append(_expr(cur))
    cur.expect(")", "',' or ')'")
    arity = OPERATORS[tok.text][0]
    if len(args) != arity:
        raise ArityError(tok.span, f"{tok.text} takes {arity} argument(s), got {len(args)}")
    return Op(tok.text, tuple(args))


def free_names(e: SchemaExpr) -> list[str]:
    """Reference names in order of first occurrence."""
    seen: list[str] = []

    def walk(node: SchemaExpr) -> None:
        if isinstance(node, Ref) and node.name not in seen:
            seen.append(node.name)
        elif isinstance(node, Op):
            for a in node.args:
                walk(a)

    walk(e)
    return seen


# -- JSON -------------------------------------------------------------------

_ATOM_SCHEMA = {"type": "string", "pattern": "^[a-z][a-zA-Z0-9_]*$"}

PROGRAM_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["alphabet", "rules"],
    "additionalProperties": False,
    "properties": {
        "alphabet": {"type": "array", "items": _ATOM_SCHEMA, "uniqueItems": True},
        "rules": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["head", "body"],
                "additionalProperties": False,
                "properties": {
                    "head": _ATOM_SCHEMA,
                    "body": {"type": "array", "items": _ATOM_SCHEMA},
                },
            },
        },
    },
}


def program_to_json(p: Program) -> dict[str, Any]:
    return {
        "alphabet": list(p.alphabet),
        "rules": [{"head": r.head, "body": list(r.sorted_body())} for r in p.sorted_rules],
    }


def interpretation_to_json(i: Interpretation) -> dict[str, Any]:
    return {"alphabet": list(i.alphabet), "atoms": sorted(i.atoms)}


def decomposition_to_json(d: Decomposition) -> dict[str, Any]:
    report = verify_decomposition(d)
    return {
        "mode": d.mode,
        "source": program_to_json(d.source),
        "components": [program_to_json(k) for k in d.components],
        "report": {
            "passed": report.passed,
            "checks": [{"name": c.name, "status": c.status, "witness": c.witness} for c in report.checks],
        },
    }


def to_json_value(value: Any) -> Any:
    if isinstance(value, Program):
        return program_to_json(value)
    if isinstance(value, Interpretation):
        return interpretation_to_json(value)
    if isinstance(value, Decomposition):
        return decomposition_to_json(value)
    if hasattr(value, "as_json"):
        return value.as_json()
    if isinstance(value, (list, tuple)):
        return [to_json_value(v) for v in value]
    raise TypeError(f"cannot export {type(value).__name__} as JSON")


def dumps(data: Any) -> str:
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False)


def json_export(value: Program | Interpretation | Decomposition | Iterable[Any]) -> str:
    return dumps(to_json_value(value))


def json_import(text: str) -> Program:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JsonSchemaError(f"invalid JSON: {exc}") from exc
    try:
        jsonschema.validate(data, PROGRAM_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise JsonSchemaError(f"{where}: {exc.message}") from exc
    try:
        alphabet = Alphabet(tuple(data["alphabet"]))
        return Program(alphabet, frozenset(Rule(r["head"], frozenset(r["body"])) for r in data["rules"]))
    except HornAlgebraError as exc:
        raise JsonSchemaError(str(exc)) from exc
