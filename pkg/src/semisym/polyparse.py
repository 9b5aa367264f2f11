"""Parser for polynomial expressions such as ``x1^2*x2 + 2 x1 x2^2``.

Grammar::

    expr   := term ('+' term)*
    term   := factor (['*'] factor)*
    factor := atom ('^' NAT)?
    atom   := VAR | ELEMENT | '(' expr ')'

Variables are ``x1 .. xN``.  Element literals are the semiring's tokens,
matched longest first; a digit string that is not a token is read as the
numeral ``1 + ... + 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .poly import MAX_DEGREE, MAX_VARS, Polynomial
from .semiring import FiniteSemiring, Semiring

_VAR = re.compile(r"x(\d+)")
_DIGITS = re.compile(r"\d+")
_SPLIT = re.compile(r"\s+|([+*^()])")


class PolyParseError(ValueError):
    def __init__(self, message: str, col: int | None = None):
        self.col = col
        super().__init__(message if col is None else f"column {col}: {message}")


@dataclass(frozen=True)
class _Tok:
    kind: str       # var | elem | op | nat
    value: object
    col: int
    text: str


def _split_word(word: str, start: int, sr: Semiring, tokens: list[str]) -> list[_Tok]:
    out = []
    i = 0
    while i < len(word):
        rest = word[i:]
        best: tuple[int, str, object] | None = None
        for t in tokens:
            if rest.startswith(t) and (best is None or len(t) > best[0]):
                best = (len(t), "elem", sr.parse_token(t))
        mv = _VAR.match(rest)
        if mv and (best is None or mv.end() > best[0]):
            best = (mv.end(), "var", int(mv.group(1)))
        md = _DIGITS.match(rest)
        if md and (best is None or md.end() > best[0]):
            best = (md.end(), "nat", int(md.group()))
        if best is None:
            raise PolyParseError(f"unknown token {rest!r}", start + i + 1)
        size, kind, value = best
        out.append(_Tok(kind, value, start + i + 1, rest[:size]))
        i += size
    return out


def tokenize(text: str, sr: Semiring) -> list[_Tok]:
    tokens = list(sr.tokens) if isinstance(sr, FiniteSemiring) else []
    out: list[_Tok] = []
    pos = 0
    for m in _SPLIT.finditer(text):
        if m.start() > pos:
            out += _split_word(text[pos:m.start()], pos, sr, tokens)
        if m.group(1):
            out.append(_Tok("op", m.group(1), m.start() + 1, m.group(1)))
        pos = m.end()
    if pos < len(text):
        out += _split_word(text[pos:], pos, sr, tokens)
    return out


class _Parser:
    def __init__(self, toks: list[_Tok], sr: Semiring, n: int | None):
        self.toks = toks
        self.i = 0
        self.sr = sr
        self.n = n if n is not None else max((t.value for t in toks if t.kind == "var"), default=0)
        if not 0 <= self.n <= MAX_VARS:
            raise PolyParseError(f"at most {MAX_VARS} variables supported")

    def peek(self) -> _Tok | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> _Tok:
        t = self.peek()
        if t is None:
            raise PolyParseError("unexpected end of input")
        self.i += 1
        return t

    def is_op(self, sym: str) -> bool:
        t = self.peek()
        return t is not None and t.kind == "op" and t.value == sym

    def expr(self) -> Polynomial:
        p = self.term()
        while self.is_op("+"):
            self.take()
            p = p + self.term()
        return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            if self.is_op("*"):
                self.take()
            else:
                t = self.peek()
                if t is None or (t.kind == "op" and t.value != "("):
                    return p
            p = p * self.factor()

    def factor(self) -> Polynomial:
        base = self.atom()
        if not self.is_op("^"):
            return base
        self.take()
        t = self.take()
        if t.kind not in ("nat", "elem") or not t.text.isdigit():
            raise PolyParseError(f"expected a natural exponent, got {t.text!r}", t.col)
        k = int(t.text)
        if k > MAX_DEGREE:
            raise PolyParseError(f"exponent {k} exceeds the cap {MAX_DEGREE}", t.col)
        try:
            return base ** k
        except ValueError as e:
            raise PolyParseError(str(e), t.col) from None

    def atom(self) -> Polynomial:
        t = self.take()
        sr, n = self.sr, self.n
        if t.kind == "var":
            if not 1 <= t.value <= n:
                raise PolyParseError(f"unknown variable {t.text} (have x1..x{n})", t.col)
            return Polynomial.variable(sr, n, t.value - 1)
        if t.kind == "elem":
            return Polynomial.constant(sr, n, t.value)
        if t.kind == "nat":
            return Polynomial.constant(sr, n, sr.numeral(t.value))
        if t.value == "(":
            p = self.expr()
            close = self.take()
            if close.kind != "op" or close.value != ")":
                raise PolyParseError("expected ')'", close.col)
            return p
        raise PolyParseError(f"unexpected {t.text!r}", t.col)


def parse_polynomial(text: str, sr: Semiring, n_vars: int | None = None) -> Polynomial:
    """Parse ``text`` into a canonical polynomial over ``sr``.

    Without ``n_vars`` the variable count is the largest index used.
    """
    toks = tokenize(text, sr)
    if not toks:
        raise PolyParseError("empty expression")
    p = _Parser(toks, sr, n_vars)
    try:
        out = p.expr()
    except ValueError as e:
        if isinstance(e, PolyParseError):
            raise
        raise PolyParseError(str(e)) from None
    if p.peek() is not None:
        t = p.peek()
        raise PolyParseError(f"unexpected {t.text!r}", t.col)
    return out
