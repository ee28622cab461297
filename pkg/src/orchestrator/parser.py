"""
Loja Input Parsing
==================

Turns component strings into BiPoly values.

Grammar (whitespace-insensitive):
    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := power (('*'|'/') power | power)*     juxtaposition multiplies
    power   := atom ('^' ['+'|'-'] atom)?
    atom    := integer | 'x' | 'y' | 'i' | '(' expr ')'

'i' is the imaginary unit and is only accepted for the gaussian field.
The token stream is checked here, so syntax errors carry a line and a
column; the arithmetic itself is done by sympy, which also rejects
non-polynomial results such as 1/x or x^(1/2).

Usage:
    from src.orchestrator.parser import parse_component, InputDocument

    f = parse_component("y^2 - x^3")
    doc = InputDocument(components=["x + i*y", "x - i*y"], field="gaussian")
    mapping = doc.to_mapping()
"""

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Literal, Union

import sympy
from pydantic import BaseModel, Field, ValidationError
from sympy.parsing.sympy_parser import parse_expr, standard_transformations

from ..arith.numbers import GaussianRational
from ..engine.engine_models import BaseField, MappingInput
from ..errors import InputValidationError
from ..poly.bipoly import BiPoly

logger = logging.getLogger(__name__)

X, Y = sympy.symbols("x y")

_OPERATORS = "+-*/^"


class InputSyntaxError(InputValidationError):
    """Malformed component text; line and column are 1-based."""

    def __init__(self, reason: str, line: int, column: int):
        self.reason = reason
        self.line = line
        self.column = column
        super().__init__(f"{reason} (line {line}, column {column})")


@dataclass(frozen=True)
class Token:
    kind: str      # num, var, imag, op, lparen, rparen
    text: str
    line: int
    column: int


def tokenize(text: str, field: BaseField = BaseField.RATIONAL) -> List[Token]:
    tokens: List[Token] = []
    line, column = 1, 1
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch == "\n":
            line, column = line + 1, 1
            pos += 1
            continue
        if ch.isspace():
            pos += 1
            column += 1
            continue
        if ch.isdigit():
            end = pos
            while end < len(text) and text[end].isdigit():
                end += 1
            if end < len(text) and text[end] == ".":
                raise InputSyntaxError("floating-point literals are not allowed", line, column + end - pos)
            tokens.append(Token("num", text[pos:end], line, column))
            column += end - pos
            pos = end
            continue
        if ch in "xy":
            tokens.append(Token("var", ch, line, column))
        elif ch == "i":
            if field is not BaseField.GAUSSIAN:
                raise InputSyntaxError("the imaginary unit needs the gaussian field", line, column)
            tokens.append(Token("imag", ch, line, column))
        elif ch in _OPERATORS:
            tokens.append(Token("op", ch, line, column))
        elif ch == "(":
            tokens.append(Token("lparen", ch, line, column))
        elif ch == ")":
            tokens.append(Token("rparen", ch, line, column))
        elif ch.isalpha() or ch == "_":
            raise InputSyntaxError(f"unknown symbol '{ch}'", line, column)
        else:
            raise InputSyntaxError(f"unexpected character '{ch}'", line, column)
        pos += 1
        column += 1
    return tokens


def _check(tokens: List[Token], text: str) -> None:
    """Token-level grammar check; raises InputSyntaxError at the first offence."""
    if not tokens:
        raise InputSyntaxError("empty expression", 1, 1)
    depth = 0
    previous = None
    for tok in tokens:
        if tok.kind == "op":
            unary = tok.text in "+-" and (previous is None or previous.kind in ("op", "lparen"))
            if not unary and (previous is None or previous.kind in ("op", "lparen")):
                raise InputSyntaxError(f"operator '{tok.text}' is missing its left operand", tok.line, tok.column)
        elif tok.kind == "lparen":
            depth += 1
        elif tok.kind == "rparen":
            if depth == 0:
                raise InputSyntaxError("unbalanced ')'", tok.line, tok.column)
            if previous is not None and previous.kind in ("op", "lparen"):
                raise InputSyntaxError("missing operand before ')'", tok.line, tok.column)
            depth -= 1
        elif tok.kind == "num" and previous is not None and previous.kind == "num":
            raise InputSyntaxError("two numbers without an operator", tok.line, tok.column)
        previous = tok
    last = tokens[-1]
    if last.kind == "op":
        raise InputSyntaxError(f"operator '{last.text}' is missing its right operand", last.line, last.column)
    if depth:
        lines = text.split("\n")
        raise InputSyntaxError("unbalanced '('", len(lines), len(lines[-1]) + 1)


def _to_python(tokens: List[Token]) -> str:
    """Python source with explicit '*' and '**'."""
    out: List[str] = []
    previous = None
    for tok in tokens:
        implicit = (
            previous is not None
            and previous.kind in ("num", "var", "imag", "rparen")
            and tok.kind in ("var", "imag", "lparen", "num")
        )
        if implicit:
            out.append("*")
        if tok.kind == "op" and tok.text == "^":
            out.append("**")
        elif tok.kind == "imag":
            out.append("I")
        else:
            out.append(tok.text)
        previous = tok
    return " ".join(out)


def _to_fraction(value: sympy.Expr) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def parse_component(text: str, field: Union[BaseField, str] = BaseField.RATIONAL) -> BiPoly:
    """
    Parse one component.

    Raises:
        InputSyntaxError: malformed text
        InputValidationError: the expression is not a polynomial in x, y
    """
    field = BaseField(field)
    tokens = tokenize(text, field)
    _check(tokens, text)
    source = _to_python(tokens)
    try:
        expr = parse_expr(
            source,
            local_dict={"x": X, "y": Y, "I": sympy.I},
            transformations=standard_transformations,
        )
        poly = sympy.Poly(sympy.expand(expr), X, Y)
    except (SyntaxError, TypeError, ZeroDivisionError) as exc:
        raise InputSyntaxError(f"cannot parse expression: {exc}", tokens[0].line, tokens[0].column) from None
    except sympy.PolynomialError:
        raise InputValidationError(f"'{text.strip()}' is not a polynomial in x, y") from None

    terms = {}
    for (a, b), coeff in poly.terms():
        re, im = sympy.re(coeff), sympy.im(coeff)
        if not (re.is_Rational and im.is_Rational):
            raise InputValidationError(f"'{text.strip()}' has a non-rational coefficient {coeff}")
        terms[(int(a), int(b))] = GaussianRational(_to_fraction(re), _to_fraction(im))
    return BiPoly(terms)


# =============================================================================
# Documents
# =============================================================================

class InputDocument(BaseModel):
    """JSON input: {"components": [...], "field": "rational" | "gaussian"}."""
    components: List[str] = Field(min_length=1)
    field: Literal["rational", "gaussian"] = "rational"

    def to_mapping(self) -> MappingInput:
        """
        Raises:
            InputSyntaxError, InputValidationError: a component is malformed
                or does not vanish at the origin
        """
        base_field = BaseField(self.field)
        components = []
        for index, text in enumerate(self.components):
            try:
                f = parse_component(text, base_field)
            except InputSyntaxError as exc:
                raise InputSyntaxError(f"component {index + 1}: {exc.reason}", exc.line, exc.column) from None
            if not f.constant_term().is_zero():
                raise InputValidationError(f"component {index + 1} ({text.strip()}) does not vanish at the origin")
            components.append(f)
        logger.debug(f"Parsed {len(components)} component(s) over the {self.field} field")
        return MappingInput(tuple(components), base_field)


def parse(text: str) -> InputDocument:
    """
    Parse a JSON input document.

    Raises:
        InputValidationError: not JSON, or not matching the schema
    """
    try:
        return InputDocument.model_validate(json.loads(text))
    except json.JSONDecodeError as exc:
        raise InputSyntaxError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    except ValidationError as exc:
        raise InputValidationError(f"invalid input document: {exc.errors()[0]['msg']}") from None


def load_document(path: Path) -> InputDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputValidationError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)
