"""Text formats: the set file format and the expression language.

Set files hold named discrete sets, one element per line::

    # comment
    set A
      x1 : [0.2,0.4] [0.3,0.5] [0.3,0.5]
    end

Expressions combine named sets with ASCII operators. Binding tightness,
tightest first: ``~`` (complement), ``&`` (intersection), ``|`` (union),
``\\`` (difference), ``+`` (addition); all binary operators associate left.
Named functions: ``tf``/``ff`` (truth/false-favorite), ``cart``/``prod``
(cartesian and elementwise product), ``scale(k, e)`` and ``div(e, k)`` with a
positive decimal literal ``k``. The predicates ``subset``, ``eq`` and
``empty`` may only appear as the root of an expression.

Every diagnostic is a :class:`~ins.errors.SourceError` carrying a 1-based
line and column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Union as _UnionT

import numpy as np

from . import core
from .core import DiscreteINS, PairedINS, UnitInterval
from .errors import (
    InvalidInterval,
    NonPositiveScalar,
    SourceError,
    UniverseMismatch,
    LEX_ERROR,
    NON_POSITIVE_SCALAR,
    PARSE_ERROR,
    TYPE_MISMATCH,
    UNIVERSE_MISMATCH,
    UNKNOWN_IDENTIFIER,
)

__all__ = [
    "Expr",
    "Ident",
    "Complement",
    "Union",
    "Intersect",
    "Difference",
    "Add",
    "Cart",
    "Prod",
    "Scale",
    "Div",
    "TruthFav",
    "FalseFav",
    "Subset",
    "Equal",
    "Empty",
    "Environment",
    "parse_expr",
    "parse_sets",
    "evaluate",
    "format_set",
    "format_expr",
    "set_to_json",
]

Environment = Mapping[str, DiscreteINS]

EvalResult = _UnionT[DiscreteINS, PairedINS, bool]


# --------------------------------------------------------------------------
# Abstract syntax


@dataclass(frozen=True, slots=True)
class Expr:
    """Base node; source position does not participate in equality."""

    line: int = field(default=0, kw_only=True, compare=False, repr=False)
    col: int = field(default=0, kw_only=True, compare=False, repr=False)


@dataclass(frozen=True, slots=True)
class Ident(Expr):
    name: str


@dataclass(frozen=True, slots=True)
class Complement(Expr):
    operand: Expr


@dataclass(frozen=True, slots=True)
class Union(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Intersect(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Difference(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Cart(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Prod(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Scale(Expr):
    factor: float
    operand: Expr


@dataclass(frozen=True, slots=True)
class Div(Expr):
    operand: Expr
    divisor: float


@dataclass(frozen=True, slots=True)
class TruthFav(Expr):
    operand: Expr


@dataclass(frozen=True, slots=True)
class FalseFav(Expr):
    operand: Expr


@dataclass(frozen=True, slots=True)
class Subset(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Equal(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Empty(Expr):
    operand: Expr


# --------------------------------------------------------------------------
# Lexer

_PUNCT = "()|&\\+~,"


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # "ident" | "number" | one of _PUNCT | "eof"
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col
        if c.isalpha():
            j = i + 1
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if c.isdigit() or (c == "." and i + 1 < n and text[i + 1].isdigit()):
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == ".":
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            tokens.append(_Token("number", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if c in _PUNCT:
            tokens.append(_Token(c, c, line, start_col))
            i += 1
            col += 1
            continue
        raise SourceError(LEX_ERROR, line, col, f"unexpected character {c!r}")
    tokens.append(_Token("eof", "", line, col))
    return tokens


# --------------------------------------------------------------------------
# Expression parser

_SET_FUNCTIONS = {"tf", "ff", "cart", "prod", "scale", "div"}
_PREDICATES = {"subset", "eq", "empty"}


class _Parser:
    def __init__(self, tokens: list[_Token]) -> None:
        self._tokens = tokens
        self._pos = 0

    def _peek(self, ahead: int = 0) -> _Token:
        return self._tokens[min(self._pos + ahead, len(self._tokens) - 1)]

    def _advance(self) -> _Token:
        tok = self._tokens[self._pos]
        if tok.kind != "eof":
            self._pos += 1
        return tok

    def _describe(self, tok: _Token) -> str:
        return "end of input" if tok.kind == "eof" else repr(tok.text)

    def _error(self, tok: _Token, message: str) -> SourceError:
        return SourceError(PARSE_ERROR, tok.line, tok.col, message)

    def _expect(self, kind: str, what: str) -> _Token:
        tok = self._peek()
        if tok.kind != kind:
            raise self._error(tok, f"expected {what}, found {self._describe(tok)}")
        return self._advance()

    def parse(self) -> Expr:
        tok = self._peek()
        if (
            tok.kind == "ident"
            and tok.text in _PREDICATES
            and self._peek(1).kind == "("
        ):
            node = self._predicate()
        else:
            node = self._expression()
        end = self._peek()
        if end.kind != "eof":
            raise self._error(end, f"unexpected trailing input {self._describe(end)}")
        return node

    def _predicate(self) -> Expr:
        name_tok = self._advance()
        self._expect("(", "'('")
        first = self._expression()
        if name_tok.text == "empty":
            self._expect(")", "')'")
            return Empty(first, line=name_tok.line, col=name_tok.col)
        self._expect(",", "','")
        second = self._expression()
        self._expect(")", "')'")
        node_type = Subset if name_tok.text == "subset" else Equal
        return node_type(first, second, line=name_tok.line, col=name_tok.col)

    def _expression(self) -> Expr:
        return self._binary_chain(
            "+", Add, lambda: self._binary_chain(
                "\\", Difference, lambda: self._binary_chain(
                    "|", Union, lambda: self._binary_chain("&", Intersect, self._unary)
                )
            )
        )

    def _binary_chain(self, op: str, node_type, sub) -> Expr:
        node = sub()
        while self._peek().kind == op:
            tok = self._advance()
            node = node_type(node, sub(), line=tok.line, col=tok.col)
        return node

    def _unary(self) -> Expr:
        tok = self._peek()
        if tok.kind == "~":
            self._advance()
            return Complement(self._unary(), line=tok.line, col=tok.col)
        return self._atom()

    def _atom(self) -> Expr:
        tok = self._peek()
        if tok.kind == "(":
            self._advance()
            node = self._expression()
            self._expect(")", "')'")
            return node
        if tok.kind == "ident":
            self._advance()
            if self._peek().kind != "(":
                return Ident(tok.text, line=tok.line, col=tok.col)
            if tok.text in _PREDICATES:
                raise self._error(
                    tok, f"predicate {tok.text!r} is only allowed at the top level"
                )
            if tok.text not in _SET_FUNCTIONS:
                raise self._error(tok, f"unknown function {tok.text!r}")
            return self._call(tok)
        raise self._error(tok, f"expected an expression, found {self._describe(tok)}")

    def _call(self, name_tok: _Token) -> Expr:
        name = name_tok.text
        pos = {"line": name_tok.line, "col": name_tok.col}
        self._expect("(", "'('")
        if name in ("tf", "ff"):
            operand = self._expression()
            self._expect(")", "')'")
            return (TruthFav if name == "tf" else FalseFav)(operand, **pos)
        if name in ("cart", "prod"):
            left = self._expression()
            self._expect(",", "','")
            right = self._expression()
            self._expect(")", "')'")
            return (Cart if name == "cart" else Prod)(left, right, **pos)
        if name == "scale":
            factor = self._number()
            self._expect(",", "','")
            operand = self._expression()
            self._expect(")", "')'")
            return Scale(factor, operand, **pos)
        # div
        operand = self._expression()
        self._expect(",", "','")
        divisor = self._number()
        self._expect(")", "')'")
        return Div(operand, divisor, **pos)

    def _number(self) -> float:
        tok = self._expect("number", "a positive decimal literal")
        value = float(tok.text)
        if value <= 0.0:
            raise SourceError(
                NON_POSITIVE_SCALAR, tok.line, tok.col,
                f"scalar literal must be > 0, got {tok.text}",
            )
        return value


def parse_expr(text: str) -> Expr:
    """Parse one expression (or one root-level predicate)."""
    return _Parser(_tokenize(text)).parse()


# --------------------------------------------------------------------------
# Evaluation

_BINARY_OPS = {
    Union: core.union,
    Intersect: core.intersect,
    Difference: core.difference,
    Add: core.add,
    Prod: core.pointwise_product,
}

_UNARY_OPS = {
    Complement: core.complement,
    TruthFav: core.truth_favorite,
    FalseFav: core.false_favorite,
}


def evaluate(expr: Expr, env: Environment) -> EvalResult:
    """Evaluate an expression bottom-up over the named sets in ``env``.

    Predicates yield booleans, ``cart`` yields a set over a product universe,
    everything else a discrete set. Errors carry the offending node's source
    position.
    """
    node_type = type(expr)
    if node_type is Ident:
        try:
            return env[expr.name]
        except KeyError:
            raise _err(UNKNOWN_IDENTIFIER, expr, f"unknown set {expr.name!r}") from None
    if node_type in _UNARY_OPS:
        return _UNARY_OPS[node_type](_set_operand(expr.operand, env, expr))
    if node_type in _BINARY_OPS:
        left = _set_operand(expr.left, env, expr)
        right = _set_operand(expr.right, env, expr)
        return _core_call(expr, _BINARY_OPS[node_type], left, right)
    if node_type is Cart:
        left = _set_operand(expr.left, env, expr)
        right = _set_operand(expr.right, env, expr)
        return core.cartesian_product(left, right)
    if node_type is Scale:
        return _core_call(
            expr, core.scalar_mul, expr.factor, _set_operand(expr.operand, env, expr)
        )
    if node_type is Div:
        return _core_call(
            expr, core.scalar_div, _set_operand(expr.operand, env, expr), expr.divisor
        )
    if node_type is Subset:
        return _core_call(
            expr,
            core.is_contained,
            _set_operand(expr.left, env, expr),
            _set_operand(expr.right, env, expr),
        )
    if node_type is Equal:
        return _core_call(
            expr,
            core.equals,
            _set_operand(expr.left, env, expr),
            _set_operand(expr.right, env, expr),
        )
    if node_type is Empty:
        return core.is_empty(_set_operand(expr.operand, env, expr))
    raise TypeError(f"not an expression node: {expr!r}")


def _err(kind: str, node: Expr, message: str) -> SourceError:
    return SourceError(kind, node.line, node.col, message)


def _set_operand(child: Expr, env: Environment, parent: Expr) -> DiscreteINS:
    value = evaluate(child, env)
    if isinstance(value, PairedINS):
        raise _err(
            TYPE_MISMATCH, parent,
            "a cartesian product result cannot be an operand of another operator",
        )
    if isinstance(value, bool):
        # unreachable through the grammar (predicates are root-only), but
        # hand-built trees land here
        raise _err(
            TYPE_MISMATCH, parent,
            "a predicate result cannot be an operand of another operator",
        )
    return value


def _core_call(node: Expr, fn, *args):
    try:
        return fn(*args)
    except UniverseMismatch as exc:
        raise _err(UNIVERSE_MISMATCH, node, str(exc)) from None
    except NonPositiveScalar as exc:
        raise _err(NON_POSITIVE_SCALAR, node, str(exc)) from None


# --------------------------------------------------------------------------
# Set file parsing

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*$")
_NUM_RE = re.compile(r"[0-9]+(?:\.[0-9]*)?|\.[0-9]+")


def parse_sets(text: str) -> dict[str, DiscreteINS]:
    """Parse a set file into an environment, in declaration order."""
    env: dict[str, DiscreteINS] = {}
    lines = text.split("\n")
    current: str | None = None
    items: list[tuple[str, core.NeutrosophicValue]] = []
    labels_seen: set[str] = set()
    for lineno, line in enumerate(lines, 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        indent = len(line) - len(line.lstrip())
        first_col = indent + 1
        if current is None:
            words = stripped.split()
            if words[0] != "set":
                raise SourceError(
                    PARSE_ERROR, lineno, first_col,
                    f"expected 'set NAME', found {words[0]!r}",
                )
            if len(words) != 2:
                raise SourceError(
                    PARSE_ERROR, lineno, first_col, "expected 'set NAME' on its own line"
                )
            name = words[1]
            name_col = line.index(name, indent + 3) + 1
            if not _NAME_RE.match(name):
                raise SourceError(
                    PARSE_ERROR, lineno, name_col, f"invalid set name {name!r}"
                )
            if name in env:
                raise SourceError(
                    PARSE_ERROR, lineno, name_col, f"duplicate set name {name!r}"
                )
            current = name
            items = []
            labels_seen = set()
            continue
        if stripped == "end":
            env[current] = DiscreteINS(items)
            current = None
            continue
        colon = line.find(":")
        if colon < 0:
            if stripped.split()[0] == "set":
                raise SourceError(
                    PARSE_ERROR, lineno, first_col,
                    f"'set' inside block {current!r} (missing 'end'?)",
                )
            raise SourceError(
                PARSE_ERROR, lineno, first_col,
                "expected 'LABEL : T I F' element line or 'end'",
            )
        label = line[:colon].strip()
        if not label or any(ch.isspace() for ch in label):
            raise SourceError(
                PARSE_ERROR, lineno, first_col,
                "element label must be a single token before ':'",
            )
        if label in labels_seen:
            raise SourceError(
                PARSE_ERROR, lineno, first_col, f"duplicate element label {label!r}"
            )
        labels_seen.add(label)
        pos = colon + 1
        intervals = []
        for _ in range(3):
            interval, pos = _parse_interval(line, pos, lineno)
            intervals.append(interval)
        tail = line[pos:].strip()
        if tail:
            raise SourceError(
                PARSE_ERROR, lineno, pos + (len(line[pos:]) - len(line[pos:].lstrip())) + 1,
                f"unexpected trailing text {tail.split()[0]!r}",
            )
        items.append((label, core.NeutrosophicValue(*intervals)))
    if current is not None:
        last = len(lines)
        raise SourceError(
            PARSE_ERROR, last, len(lines[-1]) + 1, f"missing 'end' for set {current!r}"
        )
    return env


def _parse_interval(line: str, pos: int, lineno: int) -> tuple[UnitInterval, int]:
    n = len(line)
    while pos < n and line[pos] in " \t":
        pos += 1
    if pos >= n or line[pos] != "[":
        raise SourceError(
            PARSE_ERROR, lineno, pos + 1, "expected '[' starting an interval"
        )
    start_col = pos + 1
    pos += 1
    lo, pos = _parse_number(line, pos, lineno)
    while pos < n and line[pos] in " \t":
        pos += 1
    if pos >= n or line[pos] != ",":
        raise SourceError(PARSE_ERROR, lineno, pos + 1, "expected ',' inside interval")
    pos += 1
    hi, pos = _parse_number(line, pos, lineno)
    while pos < n and line[pos] in " \t":
        pos += 1
    if pos >= n or line[pos] != "]":
        raise SourceError(PARSE_ERROR, lineno, pos + 1, "expected ']' closing interval")
    pos += 1
    try:
        return UnitInterval(lo, hi), pos
    except InvalidInterval as exc:
        raise SourceError(PARSE_ERROR, lineno, start_col, str(exc)) from None


def _parse_number(line: str, pos: int, lineno: int) -> tuple[float, int]:
    n = len(line)
    while pos < n and line[pos] in " \t":
        pos += 1
    m = _NUM_RE.match(line, pos)
    if not m:
        raise SourceError(PARSE_ERROR, lineno, pos + 1, "expected a decimal number")
    return float(m.group()), m.end()


# --------------------------------------------------------------------------
# Formatting

def _fmt_number(value: float, precision: int) -> str:
    # Positional notation only; the file format has no exponent literals.
    if precision >= 17:
        return np.format_float_positional(value, unique=True, trim="-")
    return np.format_float_positional(
        value, precision=precision, unique=False, fractional=False, trim="-"
    )


def _label_text(label: object) -> str:
    if isinstance(label, tuple):
        return f"({label[0]},{label[1]})"
    return str(label)


def format_set(
    s: DiscreteINS | PairedINS, precision: int = 17, name: str = "result"
) -> str:
    """Render a set in the canonical file format.

    At the default precision 17 the rendering is exact: parsing it back
    reproduces every stored endpoint bit for bit.
    """
    if not 1 <= precision <= 17:
        raise ValueError("precision must be between 1 and 17")
    out = [f"set {name}"]
    for label, row in zip(s.universe, s.endpoints):
        nums = [_fmt_number(v, precision) for v in row]
        out.append(
            f"  {_label_text(label)} : "
            f"[{nums[0]},{nums[1]}] [{nums[2]},{nums[3]}] [{nums[4]},{nums[5]}]"
        )
    out.append("end")
    return "\n".join(out) + "\n"


def set_to_json(s: DiscreteINS | PairedINS, name: str = "result") -> dict:
    """JSON-ready dict: {"name", "elements": [{"label", "T", "I", "F"}]}."""
    elements = []
    for label, row in zip(s.universe, s.endpoints):
        elements.append(
            {
                "label": _label_text(label),
                "T": [float(row[0]), float(row[1])],
                "I": [float(row[2]), float(row[3])],
                "F": [float(row[4]), float(row[5])],
            }
        )
    return {"name": name, "elements": elements}


_PRECEDENCE = {Add: 1, Difference: 2, Union: 3, Intersect: 4, Complement: 5}
_BINARY_TEXT = {Add: " + ", Difference: " \\ ", Union: " | ", Intersect: " & "}
_CALL_TEXT = {TruthFav: "tf", FalseFav: "ff", Cart: "cart", Prod: "prod"}
_PREDICATE_TEXT = {Subset: "subset", Equal: "eq", Empty: "empty"}


def _prec(e: Expr) -> int:
    return _PRECEDENCE.get(type(e), 6)


def format_expr(e: Expr) -> str:
    """Render an expression with minimal parentheses; reparses to an equal
    tree."""
    t = type(e)
    if t is Ident:
        return e.name
    if t is Complement:
        inner = format_expr(e.operand)
        if _prec(e.operand) < 5:
            inner = f"({inner})"
        return f"~{inner}"
    if t in _BINARY_TEXT:
        p = _PRECEDENCE[t]
        left = format_expr(e.left)
        if _prec(e.left) < p:
            left = f"({left})"
        right = format_expr(e.right)
        if _prec(e.right) <= p:
            right = f"({right})"
        return f"{left}{_BINARY_TEXT[t]}{right}"
    if t in _CALL_TEXT:
        if t in (Cart, Prod):
            return f"{_CALL_TEXT[t]}({format_expr(e.left)},{format_expr(e.right)})"
        return f"{_CALL_TEXT[t]}({format_expr(e.operand)})"
    if t is Scale:
        return f"scale({_fmt_number(e.factor, 17)},{format_expr(e.operand)})"
    if t is Div:
        return f"div({format_expr(e.operand)},{_fmt_number(e.divisor, 17)})"
    if t in _PREDICATE_TEXT:
        if t is Empty:
            return f"empty({format_expr(e.operand)})"
        return f"{_PREDICATE_TEXT[t]}({format_expr(e.left)},{format_expr(e.right)})"
    raise TypeError(f"not an expression node: {e!r}")
