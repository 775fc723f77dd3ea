"""Polynomial expression parser and canonical printer.

Grammar (whitespace insignificant)::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := atom ('^' UINT)?
    atom    := RATIONAL | VARIABLE | '(' expr ')' | 'sqrt' '(' ['-'] UINT ')'
    RATIONAL := UINT ('/' UINT)?

``sqrt`` atoms are only accepted with ``allow_surd=True`` (used when
reading witness documents back); plain input polynomials are rational.

The printed normal form orders monomials by decreasing degree of the
first variable (ties broken by the following variables), always writes
``*`` between factors and ``^`` for exponents >= 2, and prints rational
coefficients explicitly except for +-1 on a non-constant monomial.
``parse_poly(print) == identity`` on this form.
"""

from __future__ import annotations

from fractions import Fraction

from .multipoly import MPoly
from .qmath import QuadExt


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], i))
            i = j
            continue
        if ch in "+-*^/()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("END", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens, variables, allow_surd):
        self.toks = tokens
        self.k = 0
        self.vars = list(variables)
        self.n = len(self.vars)
        self.allow_surd = allow_surd

    def peek(self):
        return self.toks[self.k]

    def take(self, kind=None):
        tok = self.toks[self.k]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1]!r}", tok[2])
        self.k += 1
        return tok

    def parse(self) -> MPoly:
        p = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self) -> MPoly:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> MPoly:
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> MPoly:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("INT")
            base = base ** tok[1]
        return base

    def atom(self) -> MPoly:
        tok = self.peek()
        if tok[0] == "INT":
            self.take()
            num = tok[1]
            if self.peek()[0] == "/":
                self.take()
                dtok = self.take("INT")
                if dtok[1] == 0:
                    raise ParseError("zero denominator", dtok[2])
                return MPoly.const(self.n, Fraction(num, dtok[1]))
            return MPoly.const(self.n, Fraction(num))
        if tok[0] == "NAME":
            self.take()
            if tok[1] == "sqrt" and self.peek()[0] == "(":
                if not self.allow_surd:
                    raise ParseError("sqrt is not allowed here", tok[2])
                self.take("(")
                neg = False
                if self.peek()[0] == "-":
                    self.take()
                    neg = True
                dtok = self.take("INT")
                self.take(")")
                d = -dtok[1] if neg else dtok[1]
                return MPoly.const(self.n, QuadExt(0, 1, d))
            if tok[1] not in self.vars:
                raise ParseError(f"undeclared variable {tok[1]!r}", tok[2])
            return MPoly.var(self.n, self.vars.index(tok[1]))
        if tok[0] == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])


def parse_poly(text: str, variables, allow_surd: bool = False) -> MPoly:
    """Parse an expression over the declared variables into an MPoly."""
    return _Parser(_tokenize(text), variables, allow_surd).parse()


# ---------------------------------------------------------------------------
# Printing


def _coeff_str(c):
    if isinstance(c, QuadExt):
        if c.b == 0:
            return _coeff_str(c.a), False
        if c.a == 0:
            if c.b == 1:
                return f"sqrt({c.d})", False
            if c.b == -1:
                return f"-sqrt({c.d})", False
            return f"{c.b}*sqrt({c.d})", False
        return f"({c.a}+{c.b}*sqrt({c.d}))".replace("+-", "-"), True
    return str(c), False


def _monomial_str(exps, names):
    parts = []
    for e, name in zip(exps, names):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def print_mpoly(p: MPoly, names) -> str:
    """Canonical textual form; parse_poly round-trips it exactly."""
    if p.is_zero():
        return "0"
    terms = []
    for exps in sorted(p.terms, key=lambda e: tuple(-x for x in e)):
        c = p.terms[exps]
        mono = _monomial_str(exps, names)
        cs, wrapped = _coeff_str(c)
        if not mono:
            terms.append(cs)
        elif not wrapped and cs == "1":
            terms.append(mono)
        elif not wrapped and cs == "-1":
            terms.append("-" + mono)
        else:
            terms.append(f"{cs}*{mono}")
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


def print_upoly(u, name: str = "t") -> str:
    p = MPoly(1, {(k,): c for k, c in enumerate(u.c) if c})
    return print_mpoly(p, [name])
