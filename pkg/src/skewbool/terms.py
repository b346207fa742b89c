"""Terms over the signature (meet, join, difference, zero) with a small parser and printer.

Concrete syntax: ``&`` for meet, ``|`` for join, ``\\`` for difference, ``0`` for zero.
Binding tightness is ``\\`` > ``&`` > ``|``, all left-associative; parentheses override.
The unicode spellings ``∧ ∨ ∖`` are accepted as aliases on input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "Term", "Variable", "Zero", "Meet", "Join", "Diff",
    "Alphabet", "ParseError", "parse", "format_term", "variables",
]

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class Term:
    """Base class for term AST nodes. Instances are immutable and hashable."""

    __slots__ = ()


@dataclass(frozen=True)
class Variable(Term):
    name: str


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Join(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Diff(Term):
    left: Term
    right: Term


ZERO = Zero()


class Alphabet:
    """Ordered list of distinct variable names; order fixes atom and coordinate
    order everywhere downstream."""

    __slots__ = ("names", "index")

    def __init__(self, names):
        names = tuple(names)
        for name in names:
            if not IDENT_RE.fullmatch(name):
                raise ValueError(f"invalid variable name: {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names!r}")
        self.names = names
        self.index = {name: i for i, name in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self.index

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({list(self.names)!r})"

    def extended(self, name: str) -> "Alphabet":
        if name in self.index:
            raise ValueError(f"variable {name!r} already in alphabet")
        return Alphabet(self.names + (name,))


class ParseError(ValueError):
    """Syntax error carrying the byte offset and the expected-token set."""

    def __init__(self, message: str, offset: int, expected: tuple[str, ...]):
        super().__init__(f"{message} at byte {offset} (expected {', '.join(expected)})")
        self.offset = offset
        self.expected = expected


# Token kinds: AND, OR, DIFF, LPAREN, RPAREN, ZERO, IDENT, END
_OP_ALIASES = {"&": "AND", "∧": "AND",
               "|": "OR", "∨": "OR",
               "\\": "DIFF", "∖": "DIFF",
               "(": "LPAREN", ")": "RPAREN"}


def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch in _OP_ALIASES:
            tokens.append((_OP_ALIASES[ch], ch, i))
            i += 1
            continue
        if ch == "0" and not (i + 1 < n and (text[i + 1].isalnum() or text[i + 1] == "_")):
            tokens.append(("ZERO", "0", i))
            i += 1
            continue
        m = IDENT_RE.match(text, i)
        if m:
            tokens.append(("IDENT", m.group(), i))
            i = m.end()
            continue
        raise ParseError(f"unexpected character {ch!r}", _byte_offset(text, i),
                         ("'0'", "identifier", "'('", "operator"))
    tokens.append(("END", "", n))
    return tokens


def _byte_offset(text: str, char_index: int) -> int:
    return len(text[:char_index].encode("utf-8"))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: tuple[str, ...]):
        kind, value, idx = self.peek()
        what = "end of input" if kind == "END" else repr(value)
        raise ParseError(f"unexpected {what}", _byte_offset(self.text, idx), expected)

    # join := meet ("|" meet)* ; meet := diff ("&" diff)* ; diff := atom ("\" atom)*
    def parse_expr(self) -> Term:
        t = self.parse_meet()
        while self.peek()[0] == "OR":
            self.advance()
            t = Join(t, self.parse_meet())
        return t

    def parse_meet(self) -> Term:
        t = self.parse_diff()
        while self.peek()[0] == "AND":
            self.advance()
            t = Meet(t, self.parse_diff())
        return t

    def parse_diff(self) -> Term:
        t = self.parse_atom()
        while self.peek()[0] == "DIFF":
            self.advance()
            t = Diff(t, self.parse_atom())
        return t

    def parse_atom(self) -> Term:
        kind, value, _ = self.peek()
        if kind == "ZERO":
            self.advance()
            return ZERO
        if kind == "IDENT":
            self.advance()
            return Variable(value)
        if kind == "LPAREN":
            self.advance()
            t = self.parse_expr()
            if self.peek()[0] != "RPAREN":
                self.fail(("')'", "'&'", "'|'", "'\\'"))
            self.advance()
            return t
        self.fail(("'0'", "identifier", "'('"))


def parse(text: str) -> Term:
    """Parse ``text`` into a term; raises ParseError on malformed input."""
    p = _Parser(text)
    t = p.parse_expr()
    if p.peek()[0] != "END":
        p.fail(("end of input", "'&'", "'|'", "'\\'"))
    return t


_PREC = {Join: 1, Meet: 2, Diff: 3}
_SYM = {Join: "|", Meet: "&", Diff: "\\"}


def format_term(t: Term) -> str:
    """Minimal-parenthesis rendering; ``parse(format_term(t))`` equals ``t``."""
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Variable):
        return t.name
    prec = _PREC[type(t)]
    left = format_term(t.left)
    right = format_term(t.right)
    if isinstance(t.left, (Meet, Join, Diff)) and _PREC[type(t.left)] < prec:
        left = f"({left})"
    # operators are left-associative: the right operand needs parens on equal precedence
    if isinstance(t.right, (Meet, Join, Diff)) and _PREC[type(t.right)] <= prec:
        right = f"({right})"
    return f"{left} {_SYM[type(t)]} {right}"


def variables(t: Term) -> Alphabet:
    """Distinct variables of ``t`` in first-occurrence order."""
    seen: dict[str, None] = {}

    def walk(node: Term):
        if isinstance(node, Variable):
            seen.setdefault(node.name)
        elif isinstance(node, (Meet, Join, Diff)):
            walk(node.left)
            walk(node.right)

    walk(t)
    return Alphabet(seen)
