"""Text format for formulas: tokenizer, recursive-descent parser, printer.

Grammar (UTF-8):

    formula := iff
    iff     := imp ('<->' iff)?          right associative
    imp     := or ('->' imp)?            right associative
    or      := and ('|' and)*
    and     := unary ('&' unary)*
    unary   := '~' unary | '[]' unary | '<>' unary | atom
    atom    := VAR | 'bot' | '(' formula ')'

Variables match [a-zA-Z][a-zA-Z0-9_]* ('bot' is reserved).  The arrows are
sugar: a -> b parses as ~a | b, and a <-> b as (~a | b) & (~b | a); the
resulting tree never contains arrow nodes.  Box and diamond are kept as
native operators.

render produces text that parses back to a structurally identical tree:
binary connectives are always parenthesized, unary operators bind their
argument directly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .syntax import BOT, And, Bottom, Box, Diamond, Formula, Not, Or, Var

_TOKEN_RE = re.compile(
    r"""
      (?P<WS>\s+)
    | (?P<VAR>[a-zA-Z][a-zA-Z0-9_]*)
    | (?P<IFF><->)
    | (?P<IMP>->)
    | (?P<DIA><>)
    | (?P<BOX>\[\])
    | (?P<NOT>~)
    | (?P<AND>&)
    | (?P<OR>\|)
    | (?P<LP>\()
    | (?P<RP>\))
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(
                "unexpected character",
                line,
                pos - line_start + 1,
                expected=("variable", "bot", "~", "&", "|", "->", "<->", "[]", "<>", "(", ")"),
                found=text[pos],
            )
        kind = m.lastgroup
        chunk = m.group()
        if kind == "WS":
            for i, ch in enumerate(chunk):
                if ch == "\n":
                    line += 1
                    line_start = pos + i + 1
        else:
            if kind == "VAR" and chunk == "bot":
                kind = "BOT"
            tokens.append(Token(kind, chunk, line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


_KIND_LABEL = {
    "VAR": "variable",
    "BOT": "bot",
    "NOT": "~",
    "AND": "&",
    "OR": "|",
    "IMP": "->",
    "IFF": "<->",
    "BOX": "[]",
    "DIA": "<>",
    "LP": "(",
    "RP": ")",
    "EOF": "end of input",
}


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail((kind,))
        return self.take()

    def fail(self, expected_kinds):
        tok = self.peek()
        raise ParseError(
            "syntax error",
            tok.line,
            tok.column,
            expected=tuple(_KIND_LABEL[k] for k in expected_kinds),
            found=tok.text or "end of input",
        )

    def formula(self) -> Formula:
        return self.iff()

    def iff(self) -> Formula:
        left = self.imp()
        if self.peek().kind == "IFF":
            self.take()
            right = self.iff()
            return And(Or(Not(left), right), Or(Not(right), left))
        return left

    def imp(self) -> Formula:
        left = self.or_()
        if self.peek().kind == "IMP":
            self.take()
            right = self.imp()
            return Or(Not(left), right)
        return left

    def or_(self) -> Formula:
        out = self.and_()
        while self.peek().kind == "OR":
            self.take()
            out = Or(out, self.and_())
        return out

    def and_(self) -> Formula:
        out = self.unary()
        while self.peek().kind == "AND":
            self.take()
            out = And(out, self.unary())
        return out

    def unary(self) -> Formula:
        kind = self.peek().kind
        if kind == "NOT":
            self.take()
            return Not(self.unary())
        if kind == "BOX":
            self.take()
            return Box(self.unary())
        if kind == "DIA":
            self.take()
            return Diamond(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        tok = self.peek()
        if tok.kind == "VAR":
            self.take()
            return Var(tok.text)
        if tok.kind == "BOT":
            self.take()
            return BOT
        if tok.kind == "LP":
            self.take()
            inner = self.formula()
            self.expect("RP")
            return inner
        self.fail(("VAR", "BOT", "NOT", "BOX", "DIA", "LP"))


def parse(text: str) -> Formula:
    """Parse a formula; arrows are expanded away during parsing."""
    parser = _Parser(tokenize(text))
    out = parser.formula()
    if parser.peek().kind != "EOF":
        parser.fail(("EOF", "AND", "OR", "IMP", "IFF"))
    return out


def render(f: Formula) -> str:
    """Print a formula so that parse(render(f)) == f."""
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Bottom):
        return "bot"
    if isinstance(f, Not):
        return "~" + render(f.body)
    if isinstance(f, Box):
        return "[]" + render(f.body)
    if isinstance(f, Diamond):
        return "<>" + render(f.body)
    if isinstance(f, And):
        return f"({render(f.left)} & {render(f.right)})"
    if isinstance(f, Or):
        return f"({render(f.left)} | {render(f.right)})"
    raise TypeError(f"not a formula: {f!r}")
