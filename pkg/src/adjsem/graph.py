"""Finite directed graphs: construction, text format, homomorphisms and a catalog.

A graph is a set of vertices together with a binary edge relation.  Loops are
allowed, multiple edges are not.  The empty graph is a legitimate value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Malformed graph text; ``lineno`` is 1-based (0 when not line specific)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        vertices = tuple(str(v) for v in self.vertices)
        if len(set(vertices)) != len(vertices):
            raise ValueError(f"duplicate vertices in {vertices}")
        edges = frozenset((str(a), str(b)) for a, b in self.edges)
        known = set(vertices)
        for a, b in edges:
            if a not in known or b not in known:
                raise ValueError(f"edge ({a},{b}) has an endpoint outside the vertex set")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"Graph({list(self.vertices)}, {sorted(self.edges, key=self._edge_key)})"

    def _edge_key(self, e):
        return (self.index[e[0]], self.index[e[1]])

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Out-neighbour index sets, by vertex index."""
        out = [set() for _ in self.vertices]
        for a, b in self.edges:
            out[self.index[a]].add(self.index[b])
        return tuple(frozenset(s) for s in out)

    @cached_property
    def matrix(self) -> tuple[tuple[bool, ...], ...]:
        n = len(self.vertices)
        return tuple(tuple(j in self.adjacency[i] for j in range(n)) for i in range(n))

    def adjacent(self, a: str, b: str) -> bool:
        return (a, b) in self.edges

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(self.edges, key=self._edge_key)

    @property
    def loops(self) -> list[str]:
        return [v for v in self.vertices if (v, v) in self.edges]

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[bool]], names: Sequence[str] | None = None) -> "Graph":
        n = len(matrix)
        names = [str(i) for i in range(n)] if names is None else list(names)
        edges = {(names[i], names[j]) for i in range(n) for j in range(n) if matrix[i][j]}
        return cls(tuple(names), frozenset(edges))

    def relabel(self, mapping: dict[str, str]) -> "Graph":
        return Graph(tuple(mapping[v] for v in self.vertices),
                     frozenset((mapping[a], mapping[b]) for a, b in self.edges))


EMPTY = Graph(())
ONE = Graph(("0",), frozenset({("0", "0")}))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on vertices "0".."n-1" (2**(n*n) of them)."""
    pairs = [(str(i), str(j)) for i in range(n) for j in range(n)]
    verts = tuple(str(i) for i in range(n))
    for mask in range(1 << len(pairs)):
        yield Graph(verts, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


# -- text format -----------------------------------------------------------

def parse_graph(text: str) -> Graph:
    vertices: list[str] | None = None
    edges: set[tuple[str, str]] = set()

    def check(v, lineno):
        if v not in known:
            raise GraphFormatError(f"undeclared vertex {v!r}", lineno)

    known: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if vertices is None:
            if not line.startswith("vertices:"):
                raise GraphFormatError("expected 'vertices:' declaration", lineno)
            vertices = []
            for v in line[len("vertices:"):].split():
                if v in known:
                    raise GraphFormatError(f"duplicate vertex {v!r}", lineno)
                known.add(v)
                vertices.append(v)
            continue
        tokens = line.split()
        if len(tokens) == 2 and tokens[0] == "loop":
            check(tokens[1], lineno)
            edges.add((tokens[1], tokens[1]))
        elif len(tokens) == 3 and tokens[1] in ("->", "--"):
            a, arrow, b = tokens
            check(a, lineno)
            check(b, lineno)
            edges.add((a, b))
            if arrow == "--":
                edges.add((b, a))
        elif tokens[0] == "vertices:":
            raise GraphFormatError("duplicate 'vertices:' declaration", lineno)
        else:
            raise GraphFormatError(f"cannot parse {line!r}", lineno)
    if vertices is None:
        raise GraphFormatError("missing 'vertices:' declaration")
    return Graph(tuple(vertices), frozenset(edges))


def serialize_graph(g: Graph) -> str:
    lines = ["vertices: " + " ".join(g.vertices) if g.vertices else "vertices:"]
    lines += [f"loop {v}" for v in g.loops]
    for a, b in g.sorted_edges():
        if a == b:
            continue
        if (b, a) in g.edges:
            if g.index[a] < g.index[b]:
                lines.append(f"{a} -- {b}")
        else:
            lines.append(f"{a} -> {b}")
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    out = [f"digraph {name} {{"]
    out += [f'  "{v}";' for v in g.vertices]
    out += [f'  "{a}" -> "{b}";' for a, b in g.sorted_edges()]
    out.append("}")
    return "\n".join(out) + "\n"


# -- homomorphisms ---------------------------------------------------------

def _search(g: Graph, h: Graph, constraint=None) -> Iterator[tuple[int, ...]]:
    """Backtracking over g's vertices in order, h's vertices in order.

    ``constraint`` is ``(a, b, test)`` on vertex indices of g; ``test(x, y)``
    is applied to their images as soon as both are assigned.
    """
    n, m = len(g), len(h)
    gadj, hadj = g.adjacency, h.adjacency
    gpred = [[i for i in range(n) if k in gadj[i]] for k in range(n)]
    assign = [-1] * n

    def ok(k, x):
        if k in gadj[k] and x not in hadj[x]:
            return False
        for j in gadj[k]:
            if j < k and assign[j] not in hadj[x]:
                return False
        for j in gpred[k]:
            if j < k and x not in hadj[assign[j]]:
                return False
        if constraint is not None:
            a, b, test = constraint
            if k == max(a, b):
                xa = x if a == k else assign[a]
                xb = x if b == k else assign[b]
                if not test(xa, xb):
                    return False
        return True

    def rec(k):
        if k == n:
            yield tuple(assign)
            return
        for x in range(m):
            if ok(k, x):
                assign[k] = x
                yield from rec(k + 1)
        assign[k] = -1

    yield from rec(0)


def _as_map(g: Graph, h: Graph, images: tuple[int, ...]) -> dict[str, str]:
    return {v: h.vertices[x] for v, x in zip(g.vertices, images)}


def homomorphisms(g: Graph, h: Graph, limit: int | None = None) -> list[dict[str, str]]:
    """Edge-preserving maps g -> h, in lexicographic order of g's vertex list."""
    return [_as_map(g, h, im) for im in itertools.islice(_search(g, h), limit)]


def find_homomorphism(g: Graph, h: Graph, separate: tuple[str, str] | None = None,
                      nonedge: tuple[str, str] | None = None) -> dict[str, str] | None:
    """First homomorphism g -> h, optionally forced to separate a vertex pair
    (distinct images) or a non-edge (non-adjacent images)."""
    constraint = None
    if separate is not None:
        constraint = (g.index[separate[0]], g.index[separate[1]], lambda x, y: x != y)
    elif nonedge is not None:
        hadj = h.adjacency
        constraint = (g.index[nonedge[0]], g.index[nonedge[1]], lambda x, y: y not in hadj[x])
    for im in _search(g, h, constraint):
        return _as_map(g, h, im)
    return None


def is_homomorphism(g: Graph, h: Graph, phi: dict[str, str]) -> bool:
    if set(phi) != set(g.vertices) or not set(phi.values()) <= set(h.vertices):
        return False
    return all((phi[a], phi[b]) in h.edges for a, b in g.edges)


def isomorphism(g: Graph, h: Graph) -> dict[str, str] | None:
    """A bijection g -> h preserving edges and non-edges, or None."""
    if len(g) != len(h) or len(g.edges) != len(h.edges):
        return None
    gdeg = sorted((len(s), (v, v) in g.edges) for v, s in zip(g.vertices, g.adjacency))
    hdeg = sorted((len(s), (v, v) in h.edges) for v, s in zip(h.vertices, h.adjacency))
    if gdeg != hdeg:
        return None
    for im in _search(g, h, None):
        if len(set(im)) == len(im):
            phi = _as_map(g, h, im)
            # injective + same edge count + edge preserving => edge reflecting
            return phi
    return None


# -- constructions ---------------------------------------------------------

def product(*graphs: Graph) -> Graph:
    """Direct product; the empty product is the 1-vertex looped graph."""
    if not graphs:
        return ONE
    result = graphs[0]
    for h in graphs[1:]:
        result = _product2(result, h)
    return result


def _pair_name(a: str, b: str) -> str:
    return f"({a},{b})"


def _product2(g: Graph, h: Graph) -> Graph:
    verts = tuple(_pair_name(a, b) for a in g.vertices for b in h.vertices)
    edges = {(_pair_name(a, b), _pair_name(c, d)) for a, c in g.edges for b, d in h.edges}
    return Graph(verts, frozenset(edges))


def induced_subgraph(g: Graph, subset: Iterable[str]) -> Graph:
    keep = set(subset)
    unknown = keep - set(g.vertices)
    if unknown:
        raise ValueError(f"unknown vertices {sorted(unknown)}")
    verts = tuple(v for v in g.vertices if v in keep)
    return Graph(verts, frozenset((a, b) for a, b in g.edges if a in keep and b in keep))


def reflexive_closure(g: Graph) -> Graph:
    return Graph(g.vertices, g.edges | {(v, v) for v in g.vertices})


def symmetric_closure(g: Graph) -> Graph:
    return Graph(g.vertices, g.edges | {(b, a) for a, b in g.edges})


# -- catalog ---------------------------------------------------------------

def _undirected(names, pairs, loops=(), arcs=()):
    edges = set()
    for a, b in pairs:
        edges |= {(str(a), str(b)), (str(b), str(a))}
    edges |= {(str(v), str(v)) for v in loops}
    edges |= {(str(a), str(b)) for a, b in arcs}
    return Graph(tuple(str(v) for v in names), frozenset(edges))


def complete_loopless(n: int) -> Graph:
    return _undirected(range(n), itertools.combinations(range(n), 2))


def universal(n: int) -> Graph:
    return _undirected(range(n), itertools.combinations(range(n), 2), loops=range(n))


def c_graph(k: int) -> Graph:
    """Complete loopless graph on 0..k+1 minus {0,k+1}, {0,k}, {1,k+1}."""
    if k < 2:
        raise ValueError("C_k needs k >= 2")
    missing = {(0, k + 1), (0, k), (1, k + 1)}
    pairs = [p for p in itertools.combinations(range(k + 2), 2) if p not in missing]
    return _undirected(range(k + 2), pairs)


def cycle(n: int) -> Graph:
    """Loopless undirected n-cycle."""
    return _undirected(range(n), [(i, (i + 1) % n) for i in range(n)])


_FIXED = {
    "G1": lambda: _undirected(range(4), [(0, 1), (2, 3), (1, 3)], loops=(1, 2, 3), arcs=[(1, 2)]),
    "S1": lambda: _undirected(range(4), [(0, 1), (1, 2), (2, 3)], loops=(1, 2, 3)),
    "S2": lambda: _undirected(range(2), [(0, 1)], loops=(1,)),
    "R1": lambda: _undirected(range(3), [(1, 2), (0, 2)], loops=(0, 1, 2), arcs=[(0, 1)]),
    "RS1": lambda: _undirected(range(3), [(0, 1), (1, 2)], loops=(0, 1, 2)),
    "P": lambda: _undirected((1, 2, 3), [], loops=(1, 2, 3), arcs=[(1, 2), (2, 3)]),
    "CHAIN2": lambda: _undirected(range(2), [], loops=(0, 1), arcs=[(0, 1)]),
    "LOOP1": lambda: ONE,
    "EMPTY": lambda: EMPTY,
}

_PARAMETRIC = {"C": c_graph, "K": complete_loopless, "U": universal, "CYCLE": cycle}

CATALOG_NAMES = tuple(_FIXED) + tuple(_PARAMETRIC)


def catalog(name: str, parameter: int | None = None) -> Graph:
    key = name.upper()
    if key in _FIXED:
        return _FIXED[key]()
    if key in _PARAMETRIC:
        if parameter is None:
            raise ValueError(f"catalog graph {name} needs a parameter")
        if key == "C" and parameter < 2:
            raise ValueError("C_k needs k >= 2")
        if key in ("K", "U") and parameter < 1:
            raise ValueError(f"{key}(n) needs n >= 1")
        if key == "CYCLE" and parameter < 3:
            raise ValueError("cycles need at least 3 vertices")
        return _PARAMETRIC[key](parameter)
    raise ValueError(f"unknown catalog graph {name!r}")
