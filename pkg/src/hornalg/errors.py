"""Exception hierarchy shared by every module."""

from __future__ import annotations


class HornAlgebraError(Exception):
    """Base class for all library errors."""


class InvalidAtomName(HornAlgebraError, ValueError):
    def __init__(self, name: str):
        super().__init__(f"invalid atom name {name!r}: must match [a-z][a-zA-Z0-9_]*")
        self.name = name


class AtomNotInAlphabet(HornAlgebraError):
    def __init__(self, atom: str, rule: object = None, span: object = None):
        where = f" in rule {rule}" if rule is not None else ""
        at = f" at {span}" if span is not None else ""
        super().__init__(f"atom {atom!r}{where} is not declared in the alphabet{at}")
        self.atom = atom
        self.rule = rule
        self.span = span


class AlphabetMismatch(HornAlgebraError):
    def __init__(self, left: object, right: object):
        super().__init__(f"alphabet mismatch: {left} vs {right}")
        self.left = left
        self.right = right


class AlphabetTooLarge(HornAlgebraError):
    def __init__(self, size: int, limit: int):
        super().__init__(f"alphabet of size {size} exceeds the enumeration limit {limit}")
        self.size = size
        self.limit = limit


class BlowupLimitExceeded(HornAlgebraError):
    def __init__(self, count: int, limit: int):
        super().__init__(f"intermediate program exceeds {limit} rules (reached {count})")
        self.count = count
        self.limit = limit


class NotMinimalist(HornAlgebraError):
    def __init__(self, head: str):
        super().__init__(f"program is not minimalist: several rules with head {head!r}")
        self.head = head


class NotAnInterpretation(HornAlgebraError):
    def __init__(self, what: object):
        super().__init__(f"expected an interpretation (a program of facts only), got {what}")


class EvaluationError(HornAlgebraError):
    """Raised when an expression cannot be evaluated (unbound name, bad operand)."""


class ProgramSyntaxError(HornAlgebraError):
    def __init__(self, span: object, message: str):
        super().__init__(f"{span}: {message}")
        self.span = span
        self.message = message


class UnknownOperator(ProgramSyntaxError):
    pass


class ArityError(ProgramSyntaxError):
    pass


class JsonSchemaError(HornAlgebraError):
    pass
