"""Sparse polynomials in x0..xn as ``{monomial: coefficient}`` dicts, plus text I/O.

Coefficients belong to one of the rings in :mod:`markedschemes.rings`; zero
coefficients are never stored.
"""

from __future__ import annotations

import re

from .monomials import Monomial, degree, degrevlex_key, format_monomial, multiply
from .rings import ParameterRing, ParameterVariable, ParamPoly, Ring

Poly = dict  # Monomial -> ring element


def clean(p: Poly) -> Poly:
    return {m: c for m, c in p.items() if c}


def add_scaled(target: Poly, source: Poly, scale, shift: Monomial | None = None) -> None:
    """``target += scale * shift * source`` in place."""
    for m, c in source.items():
        key = multiply(m, shift) if shift is not None else m
        v = target.get(key, 0) + scale * c if key in target else scale * c
        if v:
            target[key] = v
        else:
            target.pop(key, None)


def scale(p: Poly, c) -> Poly:
    return clean({m: c * v for m, v in p.items()})


def shift(p: Poly, mono: Monomial) -> Poly:
    return {multiply(m, mono): c for m, c in p.items()}


def sub(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for m, c in b.items():
        v = out[m] - c if m in out else -c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def homogeneous_degree(p: Poly) -> int | None:
    """The common degree of the support; None for the zero polynomial."""
    degs = {degree(m) for m in p}
    if len(degs) > 1:
        raise ValueError("polynomial is not homogeneous")
    return degs.pop() if degs else None


def map_coefficients(p: Poly, fn) -> Poly:
    return clean({m: fn(c) for m, c in p.items()})


# -- printing ---------------------------------------------------------------


def _is_compound(text: str) -> bool:
    return any(op in text[1:] for op in (" + ", " - "))


def format_polynomial(p: Poly, ring: Ring, style: str = "subscript") -> str:
    """Terms in descending DegRevLex order, e.g. ``-6*x1^2*x0 + x2*x0^2``."""
    if not p:
        return "0"
    pieces = []
    for m in sorted(p, key=degrevlex_key, reverse=True):
        c = p[m]
        text = ring.format(c, style)
        mono = format_monomial(m)
        if _is_compound(text):
            sign, body = "+", f"({text})"
        elif text.startswith("-"):
            sign, body = "-", text[1:]
        else:
            sign, body = "+", text
        if mono != "1":
            body = mono if body == "1" else f"{body}*{mono}"
        pieces.append((sign, body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<num>\d+)"
    r"|(?P<xvar>x\d+)"
    r"|(?P<bracket>C\[[\d,\s]*\|[\d,\s]*\])"
    r"|(?P<subscript>C_\{\d+,\d+\})"
    r"|(?P<name>[A-Za-z_]\w*)"
    r"|(?P<op>[-+*/^()])"
    r")"
)


def _tokenize(text: str):
    pos = 0
    text = text.strip()
    out = []
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            raise ValueError(f"unexpected input at {text[pos:pos + 12]!r}")
        kind = match.lastgroup
        out.append((kind, match.group(kind)))
        pos = match.end()
    return out


def parameter_from_token(token: str, nvars: int) -> ParameterVariable:
    """Read ``C[0,1,1|0,2,0]`` or ``C_{011,020}`` (both x0-first)."""
    if token.startswith("C["):
        head, tail = token[2:-1].split("|")
        h = tuple(int(x) for x in head.split(","))
        t = tuple(int(x) for x in tail.split(","))
    else:
        head, tail = token[3:-1].split(",")
        h = tuple(int(x) for x in head)
        t = tuple(int(x) for x in tail)
    if len(h) != nvars or len(t) != nvars:
        raise ValueError(f"parameter {token} does not match {nvars} variables")
    return ParameterVariable(h, t)


class _Parser:
    def __init__(self, text: str, nvars: int, ring: Ring):
        self.tokens = _tokenize(text)
        self.i = 0
        self.nvars = nvars
        self.ring = ring
        self.unit = (0,) * nvars

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value):
        kind, val = self.take()
        if val != value:
            raise ValueError(f"expected {value!r}, got {val!r}")

    def const(self, c) -> Poly:
        return {self.unit: c} if c else {}

    def parse(self) -> Poly:
        if not self.tokens:
            raise ValueError("empty expression")
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input near {self.peek()[1]!r}")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            q = self.term()
            p = sub(p, q) if op == "-" else sub(p, scale(q, -1))
        return p

    def term(self) -> Poly:
        p = self.unary()
        while self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            q = self.unary()
            p = self.mul(p, q) if op == "*" else self.div(p, q)
        return p

    def unary(self) -> Poly:
        if self.peek()[1] == "-":
            self.take()
            return scale(self.unary(), -1)
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponents must be non-negative integers")
            out = self.const(self.ring.one())
            for _ in range(int(val)):
                out = self.mul(out, base)
            return out
        return base

    def atom(self) -> Poly:
        kind, val = self.take()
        ring = self.ring
        if kind == "num":
            return self.const(ring.from_int(int(val)))
        if kind == "xvar":
            i = int(val[1:])
            if i >= self.nvars:
                raise ValueError(f"{val} out of range for {self.nvars} variables")
            m = [0] * self.nvars
            m[i] = 1
            return {tuple(m): ring.one()}
        if kind in ("bracket", "subscript", "name"):
            if not isinstance(ring, ParameterRing):
                raise ValueError(f"parameter {val} needs a parameter ring, not {ring}")
            key = val if kind == "name" else parameter_from_token(val, self.nvars)
            if key not in ring.index:
                raise ValueError(f"unknown parameter {val}")
            return self.const(ring.gen(key))
        if val == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ValueError(f"unexpected token {val!r}")

    def mul(self, p: Poly, q: Poly) -> Poly:
        out: Poly = {}
        for mq, cq in q.items():
            add_scaled(out, p, cq, mq)
        return out

    def div(self, p: Poly, q: Poly) -> Poly:
        if len(q) != 1 or self.unit not in q:
            raise ValueError("can only divide by a nonzero constant")
        d = q[self.unit]
        if isinstance(d, ParamPoly):
            raise ValueError("cannot divide by a parameter polynomial")
        if self.ring.is_field:
            return clean({m: self.ring.div(c, d) for m, c in p.items()})
        out = {}
        for m, c in p.items():
            if c % d:
                raise ValueError(f"{c}/{d} is not in {self.ring}")
            out[m] = c // d
        return out


def parse_polynomial(text: str, nvars: int, ring: Ring) -> Poly:
    """Parse text such as ``x2^2 + 3*x1^2 - x2*x0`` with coefficients in ``ring``."""
    p = _Parser(text, nvars, ring).parse()
    return clean({m: ring.coerce(c) for m, c in p.items()})


def parse_element(text: str, ring: Ring, nvars: int = 1):
    """Parse a coefficient (no x variables) such as ``-3``, ``2/7`` or ``C_{011,020} - 1``."""
    p = _Parser(text, nvars, ring).parse()
    unit = (0,) * nvars
    if any(m != unit for m in p):
        raise ValueError(f"{text!r} is not a constant")
    return ring.coerce(p.get(unit, ring.zero()))
