"""Adjacency patterns of unary words and the identity decision procedure.

Every letter x contributes a left side ``l_x`` and a right side ``r_x``.  A
product records that the final side of the left factor meets the initial side
of the right factor; reversion swaps the initial and final markers.  Two words
agree on every adjacency semigroup exactly when these patterns coincide (in
the reflexive or symmetric setting, after closing the adjacency set).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import ONE, Graph
from .terms import Identity, Letter, Rev, Term, letters
from .usemigroup import UnarySemigroup, adjacency_semigroup, evaluate

MODES = ("plain", "reflexive", "symmetric")
_MODE_ALIASES = {"ref": "reflexive", "symm": "symmetric", "sym": "symmetric"}


def canonical_mode(mode: str) -> str:
    mode = _MODE_ALIASES.get(mode, mode)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    return mode


@dataclass(frozen=True, order=True)
class SideVertex:
    side: str  # "l" or "r"
    letter: str

    def __str__(self):
        return f"{'ℓ' if self.side == 'l' else 'r'}_{self.letter}"

    @property
    def ascii(self) -> str:
        return f"{self.side}_{self.letter}"


def L(x: str) -> SideVertex:
    return SideVertex("l", x)


def R(x: str) -> SideVertex:
    return SideVertex("r", x)


@dataclass(frozen=True)
class PatternGraph:
    vertices: frozenset
    adjacencies: frozenset
    initial: SideVertex
    final: SideVertex
    mode: str = "plain"

    def __str__(self):
        edges = ", ".join(f"({a},{b})" for a, b in sorted(self.adjacencies))
        return f"initial {self.initial}, final {self.final}, adjacencies {{{edges}}}"

    def as_graph(self) -> Graph:
        verts = sorted(self.vertices, key=lambda v: (v.letter, v.side))
        return Graph(tuple(v.ascii for v in verts),
                     frozenset((a.ascii, b.ascii) for a, b in self.adjacencies))


def _raw(t: Term):
    """(adjacencies, initial, final) by the inductive definition."""
    if isinstance(t, Letter):
        return frozenset(), L(t.name), R(t.name)
    if isinstance(t, Rev):
        s, p, q = _raw(t.child)
        return s, q, p
    s, p, q = _raw(t.factors[0])
    for f in t.factors[1:]:
        s, p, q = join(s, p, q, *_raw(f))
    return s, p, q


def join(s_v, p_v, q_v, s_w, p_w, q_w):
    """Pattern of a product vw from the patterns of v and w."""
    return s_v | s_w | {(q_v, p_w)}, p_v, q_w


def pattern_graph(t: Term, mode: str = "plain") -> PatternGraph:
    mode = canonical_mode(mode)
    s, p, q = _raw(t)
    alphabet = letters(t)
    vertices = frozenset(v for x in alphabet for v in (L(x), R(x)))
    if mode == "reflexive":
        s = s | {(v, v) for v in vertices}
    elif mode == "symmetric":
        s = s | {(b, a) for a, b in s}
    return PatternGraph(vertices, frozenset(s), p, q, mode)


def pattern_dot(pg: PatternGraph, name: str = "pattern") -> str:
    """DOT text; the initial vertex gets an arrow from an invisible source and
    the final vertex a double border."""
    out = [f"digraph {name} {{", '  start [shape=point, style=invis];']
    for v in sorted(pg.vertices):
        shape = ", peripheries=2" if v == pg.final else ""
        out.append(f'  "{v.ascii}" [label="{v}"{shape}];')
    out.append(f'  start -> "{pg.initial.ascii}";')
    for a, b in sorted(pg.adjacencies):
        out.append(f'  "{a.ascii}" -> "{b.ascii}";')
    out.append("}")
    return "\n".join(out) + "\n"


# -- decision procedure ------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Countermodel:
    semigroup: UnarySemigroup
    assignment: dict
    lhs_value: int
    rhs_value: int

    def verify(self, ident: Identity) -> bool:
        lv = evaluate(self.semigroup, ident.lhs, self.assignment)
        rv = evaluate(self.semigroup, ident.rhs, self.assignment)
        return lv == self.lhs_value and rv == self.rhs_value and lv != rv

    def describe(self) -> str:
        s = self.semigroup
        assign = ", ".join(f"{x} -> {s.label(v)}" for x, v in self.assignment.items())
        return f"in A({_graph_desc(s)}): {assign}; lhs = {s.label(self.lhs_value)}, rhs = {s.label(self.rhs_value)}"


def _graph_desc(s):
    if s.indexing is None:
        return "?"
    g = s.indexing.graph
    return "{" + ", ".join(f"{a}~{b}" for a, b in g.sorted_edges()) + "}" if g.edges else "edgeless on " + " ".join(g.vertices)


@dataclass(frozen=True)
class Decision:
    holds: bool
    countermodel: Countermodel | None = None

    def __bool__(self):
        return self.holds


class DecisionDefect(RuntimeError):
    """No candidate countermodel verified; indicates a bug, not bad input."""


def _pattern_model(pg: PatternGraph) -> tuple[UnarySemigroup, dict]:
    g = pg.as_graph()
    a = adjacency_semigroup(g)
    assignment = {}
    for v in pg.vertices:
        if v.side == "l":
            assignment[v.letter] = a.indexing.element(L(v.letter).ascii, R(v.letter).ascii)
    return a, dict(sorted(assignment.items()))


def decide_identity(ident: Identity, mode: str = "plain") -> Decision:
    mode = canonical_mode(mode)
    gu, gv = pattern_graph(ident.lhs, mode), pattern_graph(ident.rhs, mode)
    if gu == gv:
        return Decision(True)
    candidates = []
    lu, lv = set(letters(ident.lhs)), set(letters(ident.rhs))
    if lu != lv:
        one = adjacency_semigroup(ONE)
        # letters of one side -> the idempotent, the rest -> 0
        keep = lu if not lv <= lu else lv
        assignment = {x: (1 if x in keep else 0) for x in ident.letters}
        candidates.append((one, assignment))
    else:
        candidates.append(_pattern_model(gu))
        candidates.append(_pattern_model(gv))
    for semigroup, assignment in candidates:
        lval = evaluate(semigroup, ident.lhs, assignment)
        rval = evaluate(semigroup, ident.rhs, assignment)
        if lval != rval:
            cm = Countermodel(semigroup, assignment, lval, rval)
            if not cm.verify(ident):
                raise DecisionDefect(f"countermodel for {ident} does not re-verify")
            return Decision(False, cm)
    raise DecisionDefect(f"patterns of {ident} differ but no countermodel separates them")
