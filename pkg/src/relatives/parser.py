"""Lexer and recursive-descent parser for the ASCII notation.

Term grammar, tightest to loosest:

    atom    := VAR | '0' | '1' | "1'" | "0'" | '~' atom | '(' term ')'
    junct   := atom (['*'] atom)*            # juxtaposition is intersection
    operand := VAR '_0' ';' operand | VAR '_00' ';' operand | junct
    relseq  := operand ((';' | "+'") operand)*   # one operator kind only
    term    := relseq ('+' relseq)*

Juxtaposition binds tighter than ';', so a;bc is the image of the
common part of b and c, matching the source typography.

Formula level: '<=' and '=' between terms give inclusion and equation;
'<=' between two bracketed formulas gives implication; '&' conjunction
binds tighter than right-associative '->'. Both '{...}' and '(...)'
group formulas.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .errors import ParseError
from .terms import (
    Chain,
    Complement,
    Compose,
    Conjunction,
    Const,
    Equation,
    Formula,
    Implication,
    Inclusion,
    Intersect,
    Iterate,
    RelSum,
    Term,
    Union,
    Variable,
    is_formula,
)

_CONST_KINDS = {"0": "zero", "1": "one", "1'": "diag", "0'": "antidiag"}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[_Token]:
    toks: list[_Token] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c in "01":
            if text[i + 1 : i + 2] == "'":
                toks.append(_Token("CONST", c + "'", i))
                i += 2
            else:
                toks.append(_Token("CONST", c, i))
                i += 1
        elif c in string.ascii_lowercase:
            toks.append(_Token("VAR", c, i))
            i += 1
        elif text.startswith("_00", i):
            toks.append(_Token("SUB00", "_00", i))
            i += 3
        elif text.startswith("_0", i):
            toks.append(_Token("SUB0", "_0", i))
            i += 2
        elif text.startswith("+'", i):
            toks.append(_Token("RELSUM", "+'", i))
            i += 2
        elif text.startswith("<=", i):
            toks.append(_Token("LE", "<=", i))
            i += 2
        elif text.startswith("->", i):
            toks.append(_Token("ARROW", "->", i))
            i += 2
        elif c in "~;+*(){}=&":
            kinds = {
                "~": "TILDE", ";": "SEMI", "+": "PLUS", "*": "STAR",
                "(": "LPAREN", ")": "RPAREN", "{": "LBRACE", "}": "RBRACE",
                "=": "EQ", "&": "AMP",
            }
            toks.append(_Token(kinds[c], c, i))
            i += 1
        else:
            raise ParseError(f"unknown character {c!r}", i)
    toks.append(_Token("EOF", "", len(text)))
    return toks


_TERM_STARTERS = {"VAR", "CONST", "TILDE", "LPAREN"}


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.toks = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def next(self) -> _Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, what: str) -> _Token:
        t = self.peek()
        if t.kind != kind:
            raise ParseError(f"expected {what}, found {t.text or 'end of input'!r}", t.pos)
        return self.next()

    # -- terms ---------------------------------------------------------

    def atom(self) -> Term:
        t = self.peek()
        if t.kind == "VAR":
            self.next()
            return Variable(t.text)
        if t.kind == "CONST":
            self.next()
            return Const(_CONST_KINDS[t.text])
        if t.kind == "TILDE":
            self.next()
            return Complement(self.atom())
        if t.kind == "LPAREN":
            self.next()
            inner = self.term()
            self.expect("RPAREN", "')'")
            return inner
        raise ParseError(f"expected a term, found {t.text or 'end of input'!r}", t.pos)

    def _chain_head_ahead(self) -> bool:
        return (
            self.peek().kind == "VAR"
            and self.toks[self.i + 1].kind in ("SUB0", "SUB00")
        )

    def junct(self) -> Term:
        parts = [self.atom()]
        while True:
            t = self.peek()
            if t.kind == "STAR":
                self.next()
                parts.append(self.atom())
            elif t.kind in _TERM_STARTERS and not self._chain_head_ahead():
                parts.append(self.atom())
            else:
                break
        if len(parts) == 1:
            return parts[0]
        return Intersect(tuple(parts))

    def relseq_operand(self) -> Term:
        if self._chain_head_ahead():
            var = self.next()
            sub = self.next()
            self.expect("SEMI", "';' after chain subscript")
            arg = self.relseq_operand()
            return Chain(var.text, arg) if sub.kind == "SUB0" else Iterate(var.text, arg)
        t = self.junct()
        nxt = self.peek()
        if nxt.kind in ("SUB0", "SUB00"):
            raise ParseError("chain subscript is only allowed on a plain variable", nxt.pos)
        return t

    def relseq(self) -> Term:
        left = self.relseq_operand()
        op: str | None = None
        while self.peek().kind in ("SEMI", "RELSUM"):
            t = self.next()
            if op is not None and t.kind != op:
                raise ParseError("mixing ';' and \"+'\" requires parentheses", t.pos)
            op = t.kind
            right = self.relseq_operand()
            left = Compose(left, right) if t.kind == "SEMI" else RelSum(left, right)
        return left

    def term(self) -> Term:
        parts = [self.relseq()]
        while self.peek().kind == "PLUS":
            self.next()
            parts.append(self.relseq())
        if len(parts) == 1:
            return parts[0]
        return Union(tuple(parts))

    # -- formulas ------------------------------------------------------

    def operand(self) -> Term | Formula:
        t = self.peek()
        if t.kind == "LBRACE":
            self.next()
            f = self.formula_value(self.implication(), t.pos)
            self.expect("RBRACE", "'}'")
            return f
        save = self.i
        try:
            return self.term()
        except ParseError:
            if self.toks[save].kind == "LPAREN":
                self.i = save
                self.next()
                f = self.formula_value(self.implication(), t.pos)
                self.expect("RPAREN", "')'")
                return f
            raise

    @staticmethod
    def formula_value(x: Term | Formula, pos: int) -> Formula:
        if not is_formula(x):
            raise ParseError("expected a formula, found a bare term", pos)
        return x

    def comparison(self) -> Term | Formula:
        lhs = self.operand()
        op = self.peek()
        if op.kind not in ("LE", "EQ"):
            return lhs
        self.next()
        rhs = self.operand()
        lhs_f, rhs_f = is_formula(lhs), is_formula(rhs)
        if op.kind == "LE":
            if not lhs_f and not rhs_f:
                return Inclusion(lhs, rhs)
            if lhs_f and rhs_f:
                # formula-level inclusion reads as implication
                return Implication(lhs, rhs)
            raise ParseError("'<=' cannot mix a term side with a formula side", op.pos)
        if not lhs_f and not rhs_f:
            return Equation(lhs, rhs)
        raise ParseError("'=' applies to terms only", op.pos)

    def conjunction(self) -> Term | Formula:
        t = self.peek()
        parts = [self.comparison()]
        while self.peek().kind == "AMP":
            amp = self.next()
            parts.append(self.formula_value(self.comparison(), amp.pos))
        if len(parts) == 1:
            return parts[0]
        return Conjunction(tuple(self.formula_value(p, t.pos) for p in parts))

    def implication(self) -> Term | Formula:
        lhs = self.conjunction()
        if self.peek().kind == "ARROW":
            arrow = self.next()
            ante = self.formula_value(lhs, arrow.pos)
            cons = self.formula_value(self.implication(), arrow.pos)
            return Implication(ante, cons)
        return lhs


def parse_term(text: str) -> Term:
    p = _Parser(tokenize(text))
    t = p.term()
    p.expect("EOF", "end of input")
    return t


def parse_formula(text: str) -> Formula:
    p = _Parser(tokenize(text))
    x = p.implication()
    tok = p.expect("EOF", "end of input")
    if not is_formula(x):
        raise ParseError("expected a formula, found a bare term", tok.pos)
    return x
