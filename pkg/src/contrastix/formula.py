"""Propositional formulas over an interned vocabulary.

The AST mirrors the grammar ``f ::= 'false' | IDENT | '!' f | f '&' f | f '|' f``
with ``true`` as sugar for ``!false``.  Formula size counts proposition symbol
occurrences, so negation is free and ``true``/``false`` cost nothing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Symbol",
    "Vocabulary",
    "Formula",
    "Bottom",
    "Atom",
    "Not",
    "And",
    "Or",
    "TOP",
    "BOTTOM",
    "FormulaSyntaxError",
    "parse_formula",
    "size",
    "atoms",
    "evaluate",
    "conjoin",
    "disjoin",
    "format_formula",
]


@dataclass(frozen=True, order=True)
class Symbol:
    """A proposition symbol: dense id within its vocabulary plus a display name."""

    id: int
    name: str


class Vocabulary:
    """Interning table assigning dense ids 0..n-1 to symbol names in first-use order."""

    def __init__(self, names: Iterable[str] = ()) -> None:
        self._by_name: dict[str, Symbol] = {}
        for name in names:
            self.intern(name)

    def intern(self, name: str) -> Symbol:
        sym = self._by_name.get(name)
        if sym is None:
            sym = Symbol(len(self._by_name), name)
            self._by_name[name] = sym
        return sym

    def get(self, name: str) -> Symbol:
        return self._by_name[name]

    def symbols(self) -> tuple[Symbol, ...]:
        return tuple(self._by_name.values())

    def __len__(self) -> int:
        return len(self._by_name)

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self._by_name.values())


class Formula:
    """Base class for formula AST nodes."""

    __slots__ = ()

    def __and__(self, other: "Formula") -> "And":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Or":
        return Or(self, other)

    def __invert__(self) -> "Not":
        return Not(self)

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True, slots=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    symbol: Symbol


@dataclass(frozen=True, slots=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


BOTTOM = Bottom()
TOP = Not(BOTTOM)


def size(f: Formula) -> int:
    """Number of proposition-symbol occurrences in ``f``."""
    if isinstance(f, Bottom):
        return 0
    if isinstance(f, Atom):
        return 1
    if isinstance(f, Not):
        return size(f.operand)
    if isinstance(f, (And, Or)):
        return size(f.left) + size(f.right)
    raise TypeError(f"not a formula: {f!r}")


def atoms(f: Formula) -> frozenset[Symbol]:
    """The set of symbols occurring in ``f``."""
    out: set[Symbol] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            out.add(g.symbol)
        elif isinstance(g, Not):
            stack.append(g.operand)
        elif isinstance(g, (And, Or)):
            stack.append(g.left)
            stack.append(g.right)
    return frozenset(out)


def evaluate(f: Formula, assignment: Mapping[int, bool]) -> bool:
    """Evaluate ``f`` under a total assignment keyed by symbol id."""
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Atom):
        return assignment[f.symbol.id]
    if isinstance(f, Not):
        return not evaluate(f.operand, assignment)
    if isinstance(f, And):
        return evaluate(f.left, assignment) and evaluate(f.right, assignment)
    if isinstance(f, Or):
        return evaluate(f.left, assignment) or evaluate(f.right, assignment)
    raise TypeError(f"not a formula: {f!r}")


def conjoin(formulas: Iterable[Formula]) -> Formula:
    """Conjunction of ``formulas``; the empty conjunction is TOP."""
    out: Formula | None = None
    for f in formulas:
        out = f if out is None else And(out, f)
    return TOP if out is None else out


def disjoin(formulas: Iterable[Formula]) -> Formula:
    """Disjunction of ``formulas``; the empty disjunction is BOTTOM."""
    out: Formula | None = None
    for f in formulas:
        out = f if out is None else Or(out, f)
    return BOTTOM if out is None else out


# --- parsing ---------------------------------------------------------------

class FormulaSyntaxError(ValueError):
    """Raised on malformed formula text; carries the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_RE = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[()&|!])|(?P<bad>\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        if m.group("bad") is not None:
            raise FormulaSyntaxError(f"unexpected character {m.group('bad')!r}", m.start("bad"))
        if m.group("ident") is not None:
            tokens.append(("ident", m.group("ident"), m.start("ident")))
        else:
            tokens.append(("punct", m.group("punct"), m.start("punct")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[tuple[str, str, int]], vocab: Vocabulary, text_len: int) -> None:
        self.tokens = tokens
        self.vocab = vocab
        self.i = 0
        self.text_len = text_len

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise FormulaSyntaxError("unexpected end of input", self.text_len)
        self.i += 1
        return tok

    def parse_disj(self) -> Formula:
        f = self.parse_conj()
        while (tok := self.peek()) is not None and tok[1] == "|":
            self.next()
            f = Or(f, self.parse_conj())
        return f

    def parse_conj(self) -> Formula:
        f = self.parse_unary()
        while (tok := self.peek()) is not None and tok[1] == "&":
            self.next()
            f = And(f, self.parse_unary())
        return f

    def parse_unary(self) -> Formula:
        tok = self.next()
        kind, value, pos = tok
        if value == "!":
            return Not(self.parse_unary())
        if value == "(":
            f = self.parse_disj()
            closing = self.next()
            if closing[1] != ")":
                raise FormulaSyntaxError("expected ')'", closing[2])
            return f
        if kind == "ident":
            if value == "false":
                return BOTTOM
            if value == "true":
                return TOP
            return Atom(self.vocab.intern(value))
        raise FormulaSyntaxError(f"unexpected token {value!r}", pos)


def parse_formula(text: str, vocab: Vocabulary) -> Formula:
    """Parse formula text, interning new atoms into ``vocab`` in occurrence order."""
    tokens = _tokenize(text)
    if not tokens:
        raise FormulaSyntaxError("empty input", 0)
    parser = _Parser(tokens, vocab, len(text))
    f = parser.parse_disj()
    trailing = parser.peek()
    if trailing is not None:
        raise FormulaSyntaxError(f"unexpected trailing token {trailing[1]!r}", trailing[2])
    return f


# --- formatting ------------------------------------------------------------

_PREC_OR, _PREC_AND, _PREC_UNARY = 1, 2, 3


def _fmt(f: Formula, required: int) -> str:
    if f == TOP:
        return "true"
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Atom):
        return f.symbol.name
    if isinstance(f, Not):
        return "!" + _fmt(f.operand, _PREC_UNARY)
    if isinstance(f, And):
        text = f"{_fmt(f.left, _PREC_AND)} & {_fmt(f.right, _PREC_AND)}"
        return f"({text})" if required > _PREC_AND else text
    if isinstance(f, Or):
        text = f"{_fmt(f.left, _PREC_OR)} | {_fmt(f.right, _PREC_OR)}"
        return f"({text})" if required > _PREC_OR else text
    raise TypeError(f"not a formula: {f!r}")


def format_formula(f: Formula) -> str:
    """Render ``f`` in the concrete grammar (parse . format is the identity up to parens)."""
    return _fmt(f, 0)
