"""Expression grammar for algebra elements.

Grammar (whitespace is insignificant, ``*`` is required)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" ["-" | "+"] INT)?
    atom   := INT | SYMBOL | "(" expr ")"

Symbols are the scalars ``i q s``, the generators ``X<a> D<a> l`` and the
catalogued element names of the chosen space.  A symbol is read as letters
followed by the longest run of index characters (``+ - 0 3``) that still
names something, so ``X+-X-`` is ``X+ - X-`` while ``M+-`` is one name.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from ..coeff import I, Q, S, QScalar
from ..elements import element_names, element_value
from ..ncalg import AlgebraPresentation, NCPoly, algebra
from ..tensor import Space

_INDEX_CHARS = "+-03"


class ParseError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class EvalError(ValueError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "sym", "op", "end"
    text: str
    line: int
    col: int


# AST ------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str
    kind: str  # "scalar", "generator", "element"


@dataclass(frozen=True)
class Neg:
    arg: "ExprAST"


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * /
    left: "ExprAST"
    right: "ExprAST"


@dataclass(frozen=True)
class Pow:
    base: "ExprAST"
    exp: int


ExprAST = Union[Num, Sym, Neg, BinOp, Pow]


@lru_cache(maxsize=None)
def symbol_table(space: Space) -> dict[str, str]:
    """Name -> kind for every symbol of ``space``."""
    table = {"i": "scalar", "q": "scalar", "s": "scalar", "l": "generator"}
    for name in algebra(space).generator_names:
        if name != "l^-1":
            table[name] = "generator"
    for name in element_names(space):
        table.setdefault(name, "element")
    return table


def tokenize(text: str, space: "Space | str") -> list[Token]:
    table = symbol_table(Space.parse(space))
    out: list[Token] = []
    pos, line, col = 0, 1, 1
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch == "\n":
            pos, line, col = pos + 1, line + 1, 1
            continue
        if ch.isspace():
            pos, col = pos + 1, col + 1
            continue
        if ch.isdigit():
            end = pos
            while end < n and text[end].isdigit():
                end += 1
            out.append(Token("int", text[pos:end], line, col))
        elif ch.isalpha():
            end = pos
            while end < n and text[end].isalpha():
                end += 1
            stop = end
            while stop < n and text[stop] in _INDEX_CHARS and stop - end < 2:
                stop += 1
            name = next((text[pos:k] for k in range(stop, end - 1, -1) if text[pos:k] in table), None)
            if name is None:
                raise ParseError(f"unknown symbol {text[pos:stop]!r} for {Space.parse(space).value}", line, col)
            end = pos + len(name)
            out.append(Token("sym", name, line, col))
        elif ch in "+-*/^()":
            end = pos + 1
            out.append(Token("op", ch, line, col))
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
        col += end - pos
        pos = end
    out.append(Token("end", "", line, col))
    return out


class _Parser:
    def __init__(self, tokens: list[Token], table: dict[str, str]):
        self.toks = tokens
        self.table = table
        self.i = 0

    @property
    def cur(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, what: str) -> ParseError:
        t = self.cur
        found = "end of input" if t.kind == "end" else repr(t.text)
        return ParseError(f"{what}, found {found}", t.line, t.col)

    def is_op(self, chars: str) -> bool:
        return self.cur.kind == "op" and self.cur.text in chars

    def parse(self) -> ExprAST:
        node = self.expr()
        if self.cur.kind != "end":
            raise self.error("expected an operator (products need '*')")
        return node

    def expr(self) -> ExprAST:
        node = self.term()
        while self.is_op("+-"):
            op = self.take().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> ExprAST:
        node = self.unary()
        while self.is_op("*/"):
            op = self.take().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> ExprAST:
        if self.is_op("-"):
            self.take()
            return Neg(self.unary())
        if self.is_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> ExprAST:
        base = self.atom()
        if not self.is_op("^"):
            return base
        self.take()
        sign = 1
        if self.is_op("+-"):
            sign = -1 if self.take().text == "-" else 1
        if self.cur.kind != "int":
            raise self.error("expected an integer exponent")
        return Pow(base, sign * int(self.take().text))

    def atom(self) -> ExprAST:
        t = self.cur
        if t.kind == "int":
            self.take()
            return Num(int(t.text))
        if t.kind == "sym":
            self.take()
            return Sym(t.text, self.table[t.text])
        if self.is_op("("):
            self.take()
            node = self.expr()
            if not self.is_op(")"):
                raise self.error("expected ')'")
            self.take()
            return node
        raise self.error("expected a number, symbol or '('")


def parse_expr(text: str, space: "Space | str") -> ExprAST:
    sp = Space.parse(space)
    return _Parser(tokenize(text, sp), symbol_table(sp)).parse()


# evaluation -----------------------------------------------------------------

_SCALARS = {"i": I, "q": Q, "s": S}


def _as_scalar(p: NCPoly) -> QScalar | None:
    if p.is_zero():
        return QScalar()
    if len(p.terms) != 1:
        return None
    (k, a, b), c = next(iter(p.terms.items()))
    return c if k == 0 and not any(a) and not any(b) else None


def _inverse(p: NCPoly) -> NCPoly:
    """Inverse of ``c * l^k``; anything else has no inverse in the algebra."""
    if len(p.terms) == 1:
        (k, a, b), c = next(iter(p.terms.items()))
        if not any(a) and not any(b):
            return p.alg.ell(-k).scale(c.inverse())
    raise EvalError("negative powers need a non-zero scalar times a power of l")


def evaluate(node: ExprAST, alg: AlgebraPresentation) -> NCPoly:
    if isinstance(node, Num):
        return alg.scalar(node.value)
    if isinstance(node, Sym):
        if node.kind == "scalar":
            return alg.scalar(_SCALARS[node.name])
        if node.kind == "generator":
            return alg.gen(node.name)
        return element_value(alg, node.name)
    if isinstance(node, Neg):
        return -evaluate(node.arg, alg)
    if isinstance(node, Pow):
        base = evaluate(node.base, alg)
        if node.exp >= 0:
            out = alg.one()
            for _ in range(node.exp):
                out = out * base
            return out
        inv = _inverse(base)
        out = alg.one()
        for _ in range(-node.exp):
            out = out * inv
        return out
    left, right = evaluate(node.left, alg), evaluate(node.right, alg)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    c = _as_scalar(right)
    if c is None:
        raise EvalError("division is only defined by scalars")
    if c.is_zero():
        raise EvalError("division by zero")
    return left.scale(c.inverse())


def reduce_text(text: str, space: "Space | str", alg: AlgebraPresentation | None = None) -> NCPoly:
    """Parse and reduce ``text`` to normal form."""
    sp = Space.parse(space)
    return evaluate(parse_expr(text, sp), alg or algebra(sp))


__all__ = ["BinOp", "EvalError", "ExprAST", "Neg", "Num", "ParseError", "Pow", "Sym", "Token",
           "evaluate", "parse_expr", "reduce_text", "symbol_table", "tokenize"]
