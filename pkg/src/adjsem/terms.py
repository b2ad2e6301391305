"""Unary semigroup words.

Grammar::

    term   := factor+
    factor := atom "'"*
    atom   := letter | "(" term ")"
    letter := [a-z][0-9]* ("_" [0-9]+)*

Juxtaposition is multiplication and postfix ``'`` is reversion.  Products are
stored flattened, so two terms differing only in how a product associates are
equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Letter:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Mul:
    factors: tuple

    def __str__(self):
        return "".join(map(str, self.factors))


@dataclass(frozen=True)
class Rev:
    child: object

    def __str__(self):
        if isinstance(self.child, Mul):
            return f"({self.child})'"
        return f"{self.child}'"


Term = Union[Letter, Mul, Rev]


def mul(*terms: Term) -> Term:
    factors: list[Term] = []
    for t in terms:
        factors.extend(t.factors if isinstance(t, Mul) else (t,))
    if not factors:
        raise ValueError("empty product")
    return factors[0] if len(factors) == 1 else Mul(tuple(factors))


def rev(t: Term) -> Term:
    return Rev(t)


def letters(t: Term) -> tuple[str, ...]:
    """Alphabet of t in order of first occurrence."""
    seen: dict[str, None] = {}

    def walk(u):
        if isinstance(u, Letter):
            seen.setdefault(u.name)
        elif isinstance(u, Mul):
            for f in u.factors:
                walk(f)
        else:
            walk(u.child)

    walk(t)
    return tuple(seen)


def size(t: Term) -> int:
    """Node count with products counted as binary nodes."""
    if isinstance(t, Letter):
        return 1
    if isinstance(t, Rev):
        return 1 + size(t.child)
    return len(t.factors) - 1 + sum(size(f) for f in t.factors)


def substitute(t: Term, mapping: dict[str, Term]) -> Term:
    if isinstance(t, Letter):
        return mapping.get(t.name, t)
    if isinstance(t, Rev):
        return Rev(substitute(t.child, mapping))
    return mul(*(substitute(f, mapping) for f in t.factors))


class TermSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} at position {pos}")


_LETTER = re.compile(r"[a-z][0-9]*(?:_[0-9]+)*")


def parse_term(text: str) -> Term:
    s = "".join(text.split())
    if not s:
        raise TermSyntaxError("empty term", 0)
    pos = 0

    def term():
        factors = []
        while pos < len(s) and s[pos] != ")":
            factors.append(factor())
        if not factors:
            raise TermSyntaxError("expected a letter or '('", pos)
        return mul(*factors)

    def factor():
        nonlocal pos
        if s[pos] == "(":
            start = pos
            pos += 1
            t = term()
            if pos >= len(s) or s[pos] != ")":
                raise TermSyntaxError("unclosed '('", start)
            pos += 1
        else:
            m = _LETTER.match(s, pos)
            if not m:
                raise TermSyntaxError(f"unexpected {s[pos]!r}", pos)
            t = Letter(m.group())
            pos = m.end()
        while pos < len(s) and s[pos] == "'":
            t = Rev(t)
            pos += 1
        return t

    result = term()
    if pos != len(s):
        raise TermSyntaxError("unbalanced ')'", pos)
    return result


def print_term(t: Term) -> str:
    return str(t)


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term

    def __str__(self):
        return f"{self.lhs} ≈ {self.rhs}"

    @property
    def letters(self) -> tuple[str, ...]:
        seen = dict.fromkeys(letters(self.lhs))
        seen.update(dict.fromkeys(letters(self.rhs)))
        return tuple(seen)


def identity(lhs: str | Term, rhs: str | Term) -> Identity:
    conv = lambda t: parse_term(t) if isinstance(t, str) else t
    return Identity(conv(lhs), conv(rhs))


def parse_identity(text: str) -> Identity:
    """Parse ``u = v`` (``≈`` is accepted too)."""
    for sep in ("≈", "="):
        if sep in text:
            lhs, _, rhs = text.partition(sep)
            return identity(lhs, rhs)
    raise TermSyntaxError("expected '=' between the two sides", len(text))
