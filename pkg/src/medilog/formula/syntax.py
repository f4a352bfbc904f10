"""Concrete syntax and AST for the propositional language.

Grammar (ASCII)::

    formula   := implied ('<->' formula)?          # right-associative
    implied   := disjunct ('->' implied)?          # right-associative
    disjunct  := conjunct ('|' conjunct)*          # left-associative
    conjunct  := unary ('&' unary)*                # left-associative
    unary     := '~' unary | 'Med' '(' formula ')'
               | 'top' | 'bot' | atom | '(' formula ')'
    atom      := [a-zA-Z_][a-zA-Z0-9_]*            # excluding keywords

Precedence: ~ and Med bind tightest, then &, |, -> and <-> loosest.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError

KEYWORDS = frozenset({"top", "bot", "Med"})

_ATOM_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class Formula:
    """Base class for AST nodes; instances are immutable and comparable."""

    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Med(Formula):
    operand: Formula


TOP = Top()
BOT = Bot()

_TOKEN_SPEC = (
    ("IFF", "<->"),
    ("IMPLIES", "->"),
    ("NOT", "~"),
    ("AND", "&"),
    ("OR", "|"),
    ("LPAREN", "("),
    ("RPAREN", ")"),
)


@dataclass(frozen=True)
class _Token:
    kind: str  # one of the _TOKEN_SPEC kinds, or ATOM/TOP/BOT/MED/EOF
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        for kind, lit in _TOKEN_SPEC:
            if text.startswith(lit, i):
                tokens.append(_Token(kind, lit, i))
                i += len(lit)
                break
        else:
            m = _ATOM_RE.match(text, i)
            if not m:
                raise ParseError(f"unexpected character {ch!r}", i)
            word = m.group(0)
            if word == "top":
                tokens.append(_Token("TOP", word, i))
            elif word == "bot":
                tokens.append(_Token("BOT", word, i))
            elif word == "Med":
                tokens.append(_Token("MED", word, i))
            else:
                tokens.append(_Token("ATOM", word, i))
            i = m.end()
    tokens.append(_Token("EOF", "", n))
    return tokens


_UNARY_EXPECTED = ("atom", "'top'", "'bot'", "'~'", "'Med'", "'('")


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def _advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _expect(self, kind: str, label: str) -> _Token:
        if self.current.kind != kind:
            raise ParseError(
                f"unexpected token {self.current.text or '<end of input>'!r}",
                self.current.offset,
                (label,),
            )
        return self._advance()

    def parse(self) -> Formula:
        f = self.formula()
        if self.current.kind != "EOF":
            raise ParseError(
                f"unexpected trailing token {self.current.text!r}",
                self.current.offset,
                ("'&'", "'|'", "'->'", "'<->'", "end of input"),
            )
        return f

    def formula(self) -> Formula:
        left = self.implied()
        if self.current.kind == "IFF":
            self._advance()
            return Iff(left, self.formula())
        return left

    def implied(self) -> Formula:
        left = self.disjunct()
        if self.current.kind == "IMPLIES":
            self._advance()
            return Implies(left, self.implied())
        return left

    def disjunct(self) -> Formula:
        node = self.conjunct()
        while self.current.kind == "OR":
            self._advance()
            node = Or(node, self.conjunct())
        return node

    def conjunct(self) -> Formula:
        node = self.unary()
        while self.current.kind == "AND":
            self._advance()
            node = And(node, self.unary())
        return node

    def unary(self) -> Formula:
        tok = self.current
        if tok.kind == "NOT":
            self._advance()
            return Not(self.unary())
        if tok.kind == "MED":
            self._advance()
            self._expect("LPAREN", "'('")
            inner = self.formula()
            self._expect("RPAREN", "')'")
            return Med(inner)
        if tok.kind == "TOP":
            self._advance()
            return TOP
        if tok.kind == "BOT":
            self._advance()
            return BOT
        if tok.kind == "ATOM":
            self._advance()
            return Atom(tok.text)
        if tok.kind == "LPAREN":
            self._advance()
            inner = self.formula()
            self._expect("RPAREN", "')'")
            return inner
        raise ParseError(
            f"unexpected token {tok.text or '<end of input>'!r}",
            tok.offset,
            _UNARY_EXPECTED,
        )


def parse(text: str) -> Formula:
    """Parse concrete syntax into an AST; raises :class:`ParseError`."""
    return _Parser(text).parse()


# Rendering.  Higher number binds tighter; unary nodes are atomic-or-prefix.
_PRECEDENCE = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5}
_ATOMIC = (Atom, Top, Bot, Med)


def _prec(f: Formula) -> int:
    if isinstance(f, _ATOMIC):
        return 6
    return _PRECEDENCE[type(f)]


def _wrap(f: Formula, min_prec: int) -> str:
    text = render(f)
    return f"({text})" if _prec(f) < min_prec else text


def render(f: Formula) -> str:
    """Serialize an AST to concrete syntax; ``parse(render(f))`` equals ``f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Top):
        return "top"
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, Med):
        return f"Med({render(f.operand)})"
    if isinstance(f, Not):
        return "~" + _wrap(f.operand, 5)
    if isinstance(f, And):
        return f"{_wrap(f.left, 4)} & {_wrap(f.right, 5)}"
    if isinstance(f, Or):
        return f"{_wrap(f.left, 3)} | {_wrap(f.right, 4)}"
    if isinstance(f, Implies):
        return f"{_wrap(f.left, 3)} -> {_wrap(f.right, 2)}"
    if isinstance(f, Iff):
        return f"{_wrap(f.left, 2)} <-> {_wrap(f.right, 1)}"
    raise TypeError(f"not a formula: {f!r}")


def formula_atoms(f: Formula) -> tuple[str, ...]:
    """Distinct atom names occurring in ``f``, sorted."""
    names: set[str] = set()

    def walk(node: Formula) -> None:
        if isinstance(node, Atom):
            names.add(node.name)
        elif isinstance(node, (Not, Med)):
            walk(node.operand)
        elif isinstance(node, (And, Or, Implies, Iff)):
            walk(node.left)
            walk(node.right)

    walk(f)
    return tuple(sorted(names))
