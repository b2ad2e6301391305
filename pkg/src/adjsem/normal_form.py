"""Rewriting unary words into the breadth normal form.

A word is in normal form when it reads ``u1 (v1)' u2 (v2)' ... un (vn)' u(n+1)``
where every ``ui`` and ``vi`` is a plain word over letters and reversed
letters, and every ``vi`` has length at least two.  ``n`` is the breadth.
The refined form further bounds each ``vi`` to length exactly two.

The rewriting follows the structural recursion: products concatenate, and the
reversal of a normal word is pushed inward one reversed block at a time using
the laws x'' = x, x(yz)' = (y(xz')')' and (xy)'z = ((x'z)'y)'.
"""

from __future__ import annotations

from dataclasses import dataclass

from .terms import Letter, Mul, Rev, Term, mul

# A literal is (letter, reversed?); a reversed block is a Block of literals.
Literal = tuple


@dataclass(frozen=True)
class Block:
    literals: tuple

    def __post_init__(self):
        if len(self.literals) < 2:
            raise ValueError("reversed blocks have length at least 2")


def _flip(lit: Literal) -> Literal:
    return (lit[0], not lit[1])


def _literal_term(lit: Literal) -> Term:
    return Rev(Letter(lit[0])) if lit[1] else Letter(lit[0])


def to_term(items: list) -> Term:
    parts = []
    for it in items:
        if isinstance(it, Block):
            parts.append(Rev(mul(*map(_literal_term, it.literals))))
        else:
            parts.append(_literal_term(it))
    return mul(*parts)


def _dash(items: list) -> list:
    """Normal form of the reversal of a normal word."""
    last = max((k for k, it in enumerate(items) if isinstance(it, Block)), default=None)
    if last is None:
        if len(items) == 1:
            return [_flip(items[0])]
        return [Block(tuple(items))]
    p, ys, u = items[:last], list(items[last].literals), items[last + 1:]
    y1, w, ym = ys[0], ys[1:-1], ys[-1]
    if not p and not u:
        return ys
    if p and u:
        return _dash([_flip(y1)] + u) + w + _dash(p + [_flip(ym)])
    if u:
        return _dash([_flip(y1)] + u) + w + [ym]
    return [y1] + w + _dash(p + [_flip(ym)])


def _nf(t: Term) -> list:
    if isinstance(t, Letter):
        return [(t.name, False)]
    if isinstance(t, Mul):
        return [it for f in t.factors for it in _nf(f)]
    return _dash(_nf(t.child))


def normalize(t: Term) -> Term:
    return to_term(_nf(t))


def _split_long(items: list) -> list:
    # (xyz)' = (yz)' y (xy)' with x, z single literals and y the middle word
    out = []
    for it in items:
        if isinstance(it, Block) and len(it.literals) > 2:
            x, y, z = it.literals[0], list(it.literals[1:-1]), it.literals[-1]
            out += _split_long([Block(tuple(y) + (z,))]) + y + _split_long([Block((x,) + tuple(y))])
        else:
            out.append(it)
    return out


def normalize_ref(t: Term) -> Term:
    return to_term(_split_long(_nf(t)))


@dataclass(frozen=True)
class Shape:
    in_n: bool
    breadth: int | None = None
    refined: bool = False
    reason: str = ""


def _is_literal(t: Term) -> bool:
    return isinstance(t, Letter) or (isinstance(t, Rev) and isinstance(t.child, Letter))


def normal_form_shape(t: Term) -> Shape:
    factors = t.factors if isinstance(t, Mul) else (t,)
    breadth = 0
    refined = True
    for f in factors:
        if _is_literal(f):
            continue
        if isinstance(f, Rev) and isinstance(f.child, Mul):
            if not all(_is_literal(g) for g in f.child.factors):
                return Shape(False, reason=f"nested reversion inside {f}")
            breadth += 1
            refined = refined and len(f.child.factors) <= 2
            continue
        return Shape(False, reason=f"factor {f} is not a literal or a reversed plain word")
    return Shape(True, breadth, refined)
