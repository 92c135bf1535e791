"""A tiny arithmetic expression language for coefficients and boundary data.

Grammar (recursive descent, no general scripting on purpose):

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := primary ('^' unary)?          # right associative
    primary := NUMBER | 'x1' | 'x2' | NAME '(' expr (',' expr)* ')' | '(' expr ')'

Supported functions: exp, log, abs, min, max (min/max take two or more
arguments).  Evaluation is vectorized over numpy arrays of points.
"""
from __future__ import annotations

import math
import re

import numpy as np

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/^(),]))"
)

_FUNCTIONS = {
    "exp": (1, np.exp),
    "log": (1, np.log),
    "abs": (1, np.abs),
    "min": (2, None),
    "max": (2, None),
}


class ExpressionError(ValueError):
    """Raised on syntax errors; carries the character position."""

    def __init__(self, message: str, src: str, pos: int):
        super().__init__(f"{message} at position {pos}: {src!r}")
        self.pos = pos


class Expression:
    """Parsed expression; callable on point arrays of shape (..., n)."""

    def __init__(self, src: str, root, uses_x2: bool):
        self.src = src
        self._root = root
        self.uses_x2 = uses_x2

    def __call__(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape[-1] < 2 and self.uses_x2:
            raise ExpressionError("x2 used but points are one-dimensional", self.src, 0)
        env = {"x1": x[..., 0], "x2": x[..., 1] if x.shape[-1] > 1 else None}
        return np.asarray(self._root(env), dtype=float)

    def __repr__(self):
        return f"Expression({self.src!r})"


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = []
        pos = 0
        while pos < len(src):
            m = _TOKEN.match(src, pos)
            if m is None or m.end() == pos:
                raise ExpressionError("unrecognized character", src, pos)
            if m.lastgroup is not None:
                self.tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
            pos = m.end()
        self.i = 0
        self.uses_x2 = False

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.src))

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.next()
        if val != value:
            raise ExpressionError(f"expected {value!r}", self.src, pos)

    def parse(self):
        node = self.expr()
        kind, val, pos = self.peek()
        if kind is not None:
            raise ExpressionError(f"unexpected token {val!r}", self.src, pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            rhs = self.term()
            node = self._binop(op, node, rhs)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.next()[1]
            rhs = self.unary()
            node = self._binop(op, node, rhs)
        return node

    def unary(self):
        if self.peek()[1] == "-":
            self.next()
            inner = self.unary()
            return lambda env: -inner(env)
        return self.power()

    def power(self):
        base = self.primary()
        if self.peek()[1] == "^":
            self.next()
            expo = self.unary()
            return lambda env: np.power(base(env), expo(env))
        return base

    def primary(self):
        kind, val, pos = self.next()
        if kind == "num":
            const = float(val)
            return lambda env: const
        if kind == "name":
            if val == "x1":
                return lambda env: env["x1"]
            if val == "x2":
                self.uses_x2 = True
                return lambda env: env["x2"]
            if val in _FUNCTIONS:
                min_args, fn = _FUNCTIONS[val]
                self.expect("(")
                args = [self.expr()]
                while self.peek()[1] == ",":
                    self.next()
                    args.append(self.expr())
                self.expect(")")
                if len(args) < min_args:
                    raise ExpressionError(f"{val} needs at least {min_args} arguments", self.src, pos)
                if fn is not None:
                    arg = args[0]
                    return lambda env: fn(arg(env))
                reducer = np.minimum if val == "min" else np.maximum
                def call(env, args=args, reducer=reducer):
                    out = args[0](env)
                    for a in args[1:]:
                        out = reducer(out, a(env))
                    return out
                return call
            raise ExpressionError(f"unknown name {val!r}", self.src, pos)
        if val == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ExpressionError("expected a value", self.src, pos)

    @staticmethod
    def _binop(op, lhs, rhs):
        ops = {"+": np.add, "-": np.subtract, "*": np.multiply, "/": np.divide}
        fn = ops[op]
        return lambda env: fn(lhs(env), rhs(env))


def parse(src: str) -> Expression:
    """Parse ``src`` into a vectorized :class:`Expression`.

    Raises :class:`ExpressionError` with the offending position on bad input.
    """
    if not isinstance(src, str) or not src.strip():
        raise ExpressionError("empty expression", str(src), 0)
    parser = _Parser(src)
    root = parser.parse()
    return Expression(src, root, parser.uses_x2)


def evaluate(src: str, x: np.ndarray) -> np.ndarray:
    return parse(src)(x)


def _selftest():  # pragma: no cover - quick manual check
    x = np.array([[0.5, 0.25]])
    assert math.isclose(float(evaluate("x1 + 2*x2^2", x)[0]), 0.625)


__all__ = ["Expression", "ExpressionError", "parse", "evaluate"]
