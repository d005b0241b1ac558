"""Boolean expressions over predicate names, e.g. ``j-reflexive & !reflexive``.

Precedence: ``!`` binds tightest, then ``&``, then ``|``; binary operators
associate to the left.  Columns in errors are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ExpressionSyntaxError, UnknownPredicate
from .predicates import PREDICATES, evaluate

_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9-]*)|(.))")


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class Not:
    arg: object


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


def _tokens(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        if m.group(1):
            out.append(("name", m.group(1), m.start(1) + 1))
        else:
            ch = m.group(2)
            if ch not in "!&|()":
                raise ExpressionSyntaxError(f"unexpected character {ch!r}", m.start(2) + 1)
            out.append((ch, ch, m.start(2) + 1))
        pos = m.end()
    out.append(("eof", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ExpressionSyntaxError(f"expected {kind}, found {found}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek()[0] == "|":
            self.i += 1
            node = Or(node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "&":
            self.i += 1
            node = And(node, self.factor())
        return node

    def factor(self):
        kind, text, col = self.peek()
        if kind == "!":
            self.i += 1
            return Not(self.factor())
        if kind == "(":
            self.i += 1
            node = self.expr()
            self.take(")")
            return node
        if kind == "name":
            self.i += 1
            name = text.lower()
            if name not in PREDICATES:
                raise UnknownPredicate(text, col)
            return Name(name)
        found = "end of input" if kind == "eof" else repr(text)
        raise ExpressionSyntaxError(f"expected a predicate name, found {found}", col)


def parse_expression(text):
    p = _Parser(text)
    node = p.expr()
    p.take("eof")
    return node


_PREC = {Or: 1, And: 2, Not: 3, Name: 4}


def to_string(node, _min=0):
    if isinstance(node, Name):
        s = node.name
    elif isinstance(node, Not):
        s = "!" + to_string(node.arg, 3)
    else:
        op = " | " if isinstance(node, Or) else " & "
        p = _PREC[type(node)]
        # right operand of the same precedence keeps its grouping
        s = to_string(node.left, p) + op + to_string(node.right, p + 1)
    return f"({s})" if _PREC[type(node)] < _min else s


def names(node):
    if isinstance(node, Name):
        return {node.name}
    if isinstance(node, Not):
        return names(node.arg)
    return names(node.left) | names(node.right)


def evaluate_expression(node, R):
    if isinstance(node, Name):
        return bool(evaluate(R, node.name))
    if isinstance(node, Not):
        return not evaluate_expression(node.arg, R)
    if isinstance(node, And):
        return evaluate_expression(node.left, R) and evaluate_expression(node.right, R)
    return evaluate_expression(node.left, R) or evaluate_expression(node.right, R)


def search(rings, text):
    """Rings satisfying the expression, in the given order."""
    node = parse_expression(text) if isinstance(text, str) else text
    return [R for R in rings if evaluate_expression(node, R)]
