"""Text format for polynomials.

Integers, variables, ``+ - * ^`` and parentheses, e.g. ``T^6+T^3+1`` or
``(u+1)*T^2+u``.  Juxtaposition (``2T``, ``T(T+1)``) is read as a product.
The parser produces exact integer multivariate polynomials as
``{exponent_tuple: coefficient}``; reduction mod p and the meaning of ``u``
are up to the caller.
"""

from __future__ import annotations

import re

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*^()]))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} in {text!r}", text)
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("var", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, variables):
        self.text = text
        self.vars = tuple(variables)
        self.toks = _tokenize(text)
        self.i = 0

    # polynomial helpers on {exps: int}
    def _const(self, c):
        return {(0,) * len(self.vars): c} if c else {}

    def _add(self, a, b, sign=1):
        out = dict(a)
        for k, v in b.items():
            w = out.get(k, 0) + sign * v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return out

    def _mul(self, a, b):
        out = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = tuple(x + y for x, y in zip(ka, kb))
                w = out.get(k, 0) + va * vb
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        return out

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ParseError(f"empty polynomial {self.text!r}", self.text)
        out = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}", self.text)
        return out

    def expr(self):
        out = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            sign = 1 if self.take()[1] == "+" else -1
            out = self._add(out, self.term(), sign)
        return out

    def _starts_factor(self):
        kind, val = self.peek()
        return kind in ("num", "var") or (kind, val) == ("op", "(")

    def term(self):
        out = self.unary()
        while True:
            if self.peek() == ("op", "*"):
                self.take()
                out = self._mul(out, self.unary())
            elif self._starts_factor():
                out = self._mul(out, self.power())
            else:
                return out

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return {k: -v for k, v in self.unary().items()}
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be a nonnegative integer in {self.text!r}", self.text)
            out = self._const(1)
            for _ in range(val):
                out = self._mul(out, base)
            return out
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self._const(val)
        if kind == "var":
            if val not in self.vars:
                raise ParseError(
                    f"unknown variable {val!r} in {self.text!r} (expected one of {', '.join(self.vars)})",
                    self.text,
                )
            exps = [0] * len(self.vars)
            exps[self.vars.index(val)] = 1
            return {tuple(exps): 1}
        if (kind, val) == ("op", "("):
            out = self.expr()
            if self.take() != ("op", ")"):
                raise ParseError(f"unbalanced parenthesis in {self.text!r}", self.text)
            return out
        raise ParseError(f"unexpected token {val!r} in {self.text!r}", self.text)


def parse_multivariate(text, variables):
    """Parse ``text`` into ``{exponents: int}`` over the named variables."""
    if not isinstance(text, str):
        raise ParseError(f"polynomial text expected, got {text!r}", text)
    return _Parser(text, variables).parse()


def parse_int_poly(text, var="T"):
    """Integer polynomial in one variable as a low-first coefficient list."""
    terms = parse_multivariate(text, (var,))
    if not terms:
        return []
    deg = max(k[0] for k in terms)
    out = [0] * (deg + 1)
    for (e,), c in terms.items():
        out[e] = c
    return out


def parse_int_list(text):
    """``"1,0,2"`` -> ``[1, 0, 2]``; lists pass through."""
    if isinstance(text, (list, tuple)):
        return [int(x) for x in text]
    try:
        return [int(x) for x in str(text).split(",") if x.strip()]
    except ValueError as exc:
        raise ParseError(f"comma-separated integers expected, got {text!r}", text) from exc


def split_list(text):
    """Split a comma-separated list of polynomial strings."""
    if isinstance(text, (list, tuple)):
        return [str(x) for x in text]
    return [part.strip() for part in str(text).split(",") if part.strip()]
