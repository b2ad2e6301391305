"""Universal Horn sentences in the language of graphs and their satisfaction.

Sentences come in two kinds: quasi-identities ``A1 & ... & An -> A0`` and
negated disjunctions ``!A1 | ... | !An``, where each ``Ai`` is an adjacency
``x ~ y`` or an equality ``x = y``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Union

from .graph import Graph

VARIABLE = re.compile(r"[a-z][0-9]*(?:_[0-9]+)*\Z")


@dataclass(frozen=True)
class Atom:
    kind: str  # "adj" or "eq"
    left: str
    right: str

    def __post_init__(self):
        if self.kind not in ("adj", "eq"):
            raise ValueError(f"unknown atom kind {self.kind!r}")
        for v in (self.left, self.right):
            if not VARIABLE.match(v):
                raise ValueError(f"bad variable name {v!r}")

    def __str__(self):
        return f"{self.left} {'~' if self.kind == 'adj' else '='} {self.right}"

    @property
    def variables(self) -> tuple[str, ...]:
        return (self.left, self.right)

    def holds(self, g: Graph, theta: dict[str, str]) -> bool:
        a, b = theta[self.left], theta[self.right]
        return (a, b) in g.edges if self.kind == "adj" else a == b

    def substitute(self, mapping: dict[str, str]) -> "Atom":
        return Atom(self.kind, mapping.get(self.left, self.left), mapping.get(self.right, self.right))


def adj(x: str, y: str) -> Atom:
    return Atom("adj", x, y)


def eq(x: str, y: str) -> Atom:
    return Atom("eq", x, y)


def _ordered_vars(atoms) -> tuple[str, ...]:
    seen: dict[str, None] = {}
    for a in atoms:
        for v in a.variables:
            seen.setdefault(v)
    return tuple(seen)


@dataclass(frozen=True)
class QuasiIdentity:
    premises: tuple[Atom, ...]
    conclusion: Atom

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))

    def __str__(self):
        return " & ".join(map(str, self.premises)) + (" -> " if self.premises else "-> ") + str(self.conclusion)

    @property
    def variables(self) -> tuple[str, ...]:
        return _ordered_vars(self.premises + (self.conclusion,))

    def holds_under(self, g: Graph, theta: dict[str, str]) -> bool:
        return not all(p.holds(g, theta) for p in self.premises) or self.conclusion.holds(g, theta)


@dataclass(frozen=True)
class NegDisjunction:
    negated: tuple[Atom, ...]

    def __post_init__(self):
        object.__setattr__(self, "negated", tuple(self.negated))
        if not self.negated:
            raise ValueError("a negated disjunction needs at least one atom")

    def __str__(self):
        return " | ".join(f"!{a}" for a in self.negated)

    @property
    def variables(self) -> tuple[str, ...]:
        return _ordered_vars(self.negated)

    def holds_under(self, g: Graph, theta: dict[str, str]) -> bool:
        return not all(a.holds(g, theta) for a in self.negated)


Sentence = Union[QuasiIdentity, NegDisjunction]


class SentenceSyntaxError(ValueError):
    pass


_ATOM = re.compile(r"\s*([a-z][0-9]*(?:_[0-9]+)*)\s*([~=])\s*([a-z][0-9]*(?:_[0-9]+)*)\s*\Z")


def parse_atom(text: str) -> Atom:
    m = _ATOM.match(text)
    if not m:
        raise SentenceSyntaxError(f"cannot parse atom {text.strip()!r}")
    return Atom("adj" if m.group(2) == "~" else "eq", m.group(1), m.group(3))


def parse_sentence(text: str) -> Sentence:
    text = text.strip()
    if "->" in text:
        lhs, _, rhs = text.partition("->")
        if "->" in rhs:
            raise SentenceSyntaxError("more than one '->'")
        premises = tuple(parse_atom(p) for p in lhs.split("&")) if lhs.strip() else ()
        return QuasiIdentity(premises, parse_atom(rhs))
    if text.startswith("!"):
        parts = [p.strip() for p in text.split("|")]
        if not all(p.startswith("!") for p in parts):
            raise SentenceSyntaxError("every disjunct of a second-kind sentence must be negated")
        return NegDisjunction(tuple(parse_atom(p[1:]) for p in parts))
    if text:
        return QuasiIdentity((), parse_atom(text))
    raise SentenceSyntaxError("empty sentence")


def failing_assignment(g: Graph, s: Sentence) -> dict[str, str] | None:
    """First assignment (lexicographic in vertex order) falsifying s on g."""
    vs = s.variables
    for values in itertools.product(g.vertices, repeat=len(vs)):
        theta = dict(zip(vs, values))
        if not s.holds_under(g, theta):
            return theta
    return None


def satisfies(g: Graph, s: Sentence) -> bool:
    return failing_assignment(g, s) is None


# -- standard laws and classes -------------------------------------------

LAWS: dict[str, Sentence] = {
    "reflexive": parse_sentence("-> x ~ x"),
    "antireflexive": parse_sentence("!x ~ x"),
    "symmetric": parse_sentence("x ~ y -> y ~ x"),
    "antisymmetric": parse_sentence("x ~ y & y ~ x -> x = y"),
    "transitive": parse_sentence("x ~ y & y ~ z -> x ~ z"),
    "complete": parse_sentence("-> x ~ y"),
    "one-vertex": parse_sentence("-> x = y"),
    "empty": parse_sentence("!x = x"),
}

_CLASSES: dict[str, tuple[str, ...]] = {
    "reflexive": ("reflexive",),
    "antireflexive": ("antireflexive",),
    "symmetric": ("symmetric",),
    "antisymmetric": ("antisymmetric",),
    "transitive": ("transitive",),
    "preorder": ("reflexive", "transitive"),
    "equivalence": ("reflexive", "transitive", "symmetric"),
    "partial order": ("reflexive", "transitive", "antisymmetric"),
    "antichain": ("reflexive", "transitive", "symmetric", "antisymmetric"),
    "complete-looped": ("complete",),
}


def classify_standard(g: Graph) -> set[str]:
    holds = {name: satisfies(g, LAWS[name]) for name in
             ("reflexive", "antireflexive", "symmetric", "antisymmetric", "transitive", "complete")}
    return {cls for cls, laws in _CLASSES.items() if all(holds[law] for law in laws)}


# The uH classes of preorders and their Hasse diagram (bottom to top).
PREORDER_LATTICE: dict[str, tuple[str, ...]] = {
    "trivial": ("empty",),
    "one-point": ("complete", "one-vertex"),
    "single block": ("complete",),
    "antichains": ("reflexive", "transitive", "symmetric", "antisymmetric"),
    "equivalences": ("reflexive", "transitive", "symmetric"),
    "orders": ("reflexive", "transitive", "antisymmetric"),
    "preorders": ("reflexive", "transitive"),
}

PREORDER_HASSE: tuple[tuple[str, str], ...] = (
    ("trivial", "one-point"),
    ("one-point", "single block"),
    ("one-point", "antichains"),
    ("single block", "equivalences"),
    ("antichains", "equivalences"),
    ("antichains", "orders"),
    ("equivalences", "preorders"),
    ("orders", "preorders"),
)


def preorder_classes(g: Graph) -> set[str]:
    return {name for name, laws in PREORDER_LATTICE.items() if all(satisfies(g, LAWS[l]) for l in laws)}
