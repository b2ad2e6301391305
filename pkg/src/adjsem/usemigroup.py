"""Finite unary semigroups given by tables.

The main examples are adjacency semigroups of graphs: on (V x V) u {0},
``(x,y)(z,t) = (x,t)`` when ``y ~ z`` and ``0`` otherwise, with reversion
``(x,y)' = (y,x)``.  Elements are integers; in an adjacency semigroup the zero
is ``0`` and the pair of the i-th and j-th vertex is ``1 + i*n + j``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, isomorphism as graph_isomorphism
from .terms import Identity, Letter, Mul, Rev, Term, identity, letters


class SemigroupFormatError(ValueError):
    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


class NotApplicable(Exception):
    """Raised when a semigroup fails a hypothesis of the recognition procedure."""


@dataclass(frozen=True)
class AdjacencyIndexing:
    graph: Graph

    def element(self, u: str, v: str) -> int:
        n = len(self.graph)
        return 1 + self.graph.index[u] * n + self.graph.index[v]

    def pair(self, k: int) -> tuple[str, str] | None:
        if k == 0:
            return None
        i, j = divmod(k - 1, len(self.graph))
        return self.graph.vertices[i], self.graph.vertices[j]


@dataclass(frozen=True, eq=False)
class UnarySemigroup:
    mul: np.ndarray
    inv: np.ndarray
    zero: int | None = None
    labels: tuple[str, ...] | None = None
    indexing: AdjacencyIndexing | None = field(default=None, repr=False)

    def __post_init__(self):
        mul = np.asarray(self.mul, dtype=np.int64)
        inv = np.asarray(self.inv, dtype=np.int64)
        n = len(inv)
        if n < 1:
            raise ValueError("a unary semigroup needs at least one element")
        if mul.shape != (n, n):
            raise ValueError(f"multiplication table has shape {mul.shape}, expected {(n, n)}")
        if mul.min() < 0 or mul.max() >= n or inv.min() < 0 or inv.max() >= n:
            raise ValueError("table entry out of range")
        if self.zero is not None:
            z = self.zero
            if not (0 <= z < n) or not ((mul[z, :] == z).all() and (mul[:, z] == z).all()):
                raise ValueError(f"element {z} is not a two-sided zero")
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("wrong number of labels")
        mul.setflags(write=False)
        inv.setflags(write=False)
        object.__setattr__(self, "mul", mul)
        object.__setattr__(self, "inv", inv)

    @property
    def order(self) -> int:
        return len(self.inv)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"UnarySemigroup(order={self.order}, zero={self.zero})"

    def label(self, k: int) -> str:
        if self.indexing is not None:
            p = self.indexing.pair(k)
            return "0" if p is None else f"({p[0]},{p[1]})"
        if self.labels is not None:
            return self.labels[k]
        return str(k)

    def is_associative(self) -> bool:
        m = self.mul
        return bool((m[m, :] == m[:, m]).all())

    def tables_equal(self, other: "UnarySemigroup") -> bool:
        return self.order == other.order and (self.mul == other.mul).all() and (self.inv == other.inv).all()


def find_zero(s: UnarySemigroup) -> int | None:
    for z in range(s.order):
        if (s.mul[z] == z).all() and (s.mul[:, z] == z).all():
            return z
    return None


# -- constructions ---------------------------------------------------------

def adjacency_semigroup(g: Graph) -> UnarySemigroup:
    n = len(g)
    size = n * n + 1
    mul = np.zeros((size, size), dtype=np.int64)
    inv = np.zeros(size, dtype=np.int64)
    if n:
        adjm = np.array(g.matrix, dtype=bool)
        i, j = np.divmod(np.arange(n * n), n)
        # (i,j)(k,l) = (i,l) if j ~ k
        nz = adjm[j[:, None], i[None, :]]
        prod = 1 + i[:, None] * n + j[None, :]
        mul[1:, 1:] = np.where(nz, prod, 0)
        inv[1:] = 1 + j * n + i
    return UnarySemigroup(mul, inv, zero=0, indexing=AdjacencyIndexing(g))


def trivial() -> UnarySemigroup:
    return UnarySemigroup(np.zeros((1, 1)), np.zeros(1), zero=0)


def square_band(n: int) -> UnarySemigroup:
    """I x I with (i,j)(k,l) = (i,l) and (i,j)' = (j,i); element (i,j) is i*n + j."""
    if n < 1:
        raise ValueError("square bands need a nonempty index set")
    i, j = np.divmod(np.arange(n * n), n)
    mul = i[:, None] * n + j[None, :]
    inv = j * n + i
    labels = tuple(f"[{a},{b}]" for a, b in zip(i, j))
    return UnarySemigroup(mul, inv, zero=0 if n == 1 else None, labels=labels)


def direct_product(s: UnarySemigroup, t: UnarySemigroup) -> UnarySemigroup:
    """Coordinatewise; element (a, b) is a * |t| + b."""
    n, m = s.order, t.order
    a, b = np.divmod(np.arange(n * m), m)
    mul = s.mul[a[:, None], a[None, :]] * m + t.mul[b[:, None], b[None, :]]
    inv = s.inv[a] * m + t.inv[b]
    zero = None if s.zero is None or t.zero is None else s.zero * m + t.zero
    labels = tuple(f"<{s.label(x)},{t.label(y)}>" for x, y in zip(a, b))
    return UnarySemigroup(mul, inv, zero=zero, labels=labels)


def _restrict(s: UnarySemigroup, elements: Sequence[int], zero_from=None) -> UnarySemigroup:
    elements = list(elements)
    pos = {e: k for k, e in enumerate(elements)}
    idx = np.array(elements)
    mul = np.vectorize(pos.__getitem__)(s.mul[np.ix_(idx, idx)]) if len(idx) else None
    inv = np.array([pos[int(x)] for x in s.inv[idx]])
    zero = pos.get(s.zero) if s.zero is not None else None
    return UnarySemigroup(mul, inv, zero=zero, labels=tuple(s.label(e) for e in elements))


def closure(s: UnarySemigroup, generators: Iterable[int]) -> list[int]:
    """Sorted universe of the unary subsemigroup generated by ``generators``."""
    found = set(int(g) for g in generators)
    if not found:
        raise ValueError("empty generating set")
    frontier = list(found)
    while frontier:
        new = set()
        for a in frontier:
            new.add(int(s.inv[a]))
            for b in list(found):
                new.add(int(s.mul[a, b]))
                new.add(int(s.mul[b, a]))
        new -= found
        found |= new
        frontier = list(new)
    return sorted(found)


def subalgebra_generated(s: UnarySemigroup, generators: Iterable[int]) -> UnarySemigroup:
    return _restrict(s, closure(s, generators))


def is_ideal(s: UnarySemigroup, subset: Iterable[int]) -> bool:
    """Two-sided semigroup ideal that is also closed under reversion."""
    sub = np.zeros(s.order, dtype=bool)
    sub[list(subset)] = True
    if not sub.any():
        return False
    rows = s.mul[sub]
    cols = s.mul[:, sub]
    return bool(sub[rows].all() and sub[cols].all() and sub[s.inv[sub]].all())


def rees_quotient(s: UnarySemigroup, ideal: Iterable[int]) -> UnarySemigroup:
    """Collapse ``ideal`` to a single zero (listed first)."""
    ideal = sorted(set(int(x) for x in ideal))
    if not is_ideal(s, ideal):
        raise ValueError("subset is not an ideal closed under reversion")
    rest = [x for x in range(s.order) if x not in set(ideal)]
    pos = {x: k + 1 for k, x in enumerate(rest)}
    new = lambda x: pos.get(int(x), 0)
    n = len(rest) + 1
    mul = np.zeros((n, n), dtype=np.int64)
    inv = np.zeros(n, dtype=np.int64)
    for a in rest:
        inv[pos[a]] = new(s.inv[a])
        for b in rest:
            mul[pos[a], pos[b]] = new(s.mul[a, b])
    labels = ("0",) + tuple(s.label(x) for x in rest)
    return UnarySemigroup(mul, inv, zero=0, labels=labels)


def _principal(s: UnarySemigroup):
    """Boolean matrices of a S^1, S^1 a and S^1 a S^1 membership (row = a)."""
    n = s.order
    eye = np.eye(n, dtype=bool)
    right = eye.copy()
    left = eye.copy()
    for a in range(n):
        right[a, s.mul[a, :]] = True
        left[a, s.mul[:, a]] = True
    two = left.copy()
    for a in range(n):
        for x in np.flatnonzero(left[a]):
            two[a, s.mul[x, :]] = True
    return right, left, two


def _classes(matrix: np.ndarray) -> list[frozenset[int]]:
    groups: dict[bytes, list[int]] = {}
    for a, row in enumerate(matrix):
        groups.setdefault(row.tobytes(), []).append(a)
    return sorted((frozenset(v) for v in groups.values()), key=min)


def greens_partitions(s: UnarySemigroup) -> dict[str, list[frozenset[int]]]:
    right, left, two = _principal(s)
    both = np.concatenate([right, left], axis=1)
    return {"R": _classes(right), "L": _classes(left), "J": _classes(two), "H": _classes(both)}


def maximal_ideals(s: UnarySemigroup) -> list[list[int]]:
    """Proper reversion-closed ideals not contained in another such ideal."""
    _, _, two = _principal(s)
    jclasses = _classes(two)
    # J-class c is maximal if no element outside c generates an ideal containing c
    maximal = []
    for c in jclasses:
        a = min(c)
        if not any(two[min(d), a] and d != c for d in jclasses):
            maximal.append(c)
    candidates = []
    for c in maximal:
        rest = [x for x in range(s.order) if x not in c]
        if rest and is_ideal(s, rest):
            candidates.append(rest)
    # the complement of a reversion-orbit of maximal classes is the fallback
    if not candidates:
        for c in maximal:
            orbit = set(c) | {int(x) for x in s.inv[list(c)]}
            rest = [x for x in range(s.order) if x not in orbit]
            if rest and is_ideal(s, rest) and rest not in candidates:
                candidates.append(rest)
    return candidates


# -- evaluation ------------------------------------------------------------

def evaluate(s: UnarySemigroup, t: Term, assignment: dict[str, int]) -> int:
    if isinstance(t, Letter):
        return int(assignment[t.name])
    if isinstance(t, Rev):
        return int(s.inv[evaluate(s, t.child, assignment)])
    value = evaluate(s, t.factors[0], assignment)
    for f in t.factors[1:]:
        value = int(s.mul[value, evaluate(s, f, assignment)])
    return value


def _eval_stack(t: Term, mul_flat, inv_flat, base, n, env, memo=None):
    """Evaluate t for a stack of B semigroups of order n over A assignments.

    ``base`` has shape (B, 1) holding b*n; ``env`` maps letters to (A,) arrays.
    Result has shape (B, A) with values in 0..n-1.  Products are split in the
    middle and every subterm is cached in ``memo``, so a word and its square
    cost little more than the word alone.
    """
    if memo is None:
        memo = {}

    def ev(u):
        if isinstance(u, Letter):
            return np.broadcast_to(env[u.name], (base.shape[0], env[u.name].shape[0]))
        key = u
        if key in memo:
            return memo[key]
        if isinstance(u, Rev):
            value = inv_flat[base + ev(u.child)]
        else:
            value = prod(u.factors)
        memo[key] = value
        return value

    def prod(factors):
        if len(factors) == 1:
            return ev(factors[0])
        key = ("mul", factors)
        if key not in memo:
            mid = len(factors) // 2
            memo[key] = mul_flat[(base + prod(factors[:mid])) * n + prod(factors[mid:])]
        return memo[key]

    return ev(t)


CHUNK = 1 << 18


def _domain(s: UnarySemigroup, ident: Identity) -> np.ndarray:
    """Elements worth assigning: zero can be skipped when both sides have the
    same alphabet and zero is absorbing and fixed by reversion."""
    same = set(letters(ident.lhs)) == set(letters(ident.rhs))
    z = s.zero
    if same and z is not None and s.inv[z] == z and s.order > 1:
        return np.array([x for x in range(s.order) if x != z])
    return np.arange(s.order)


def _failures(stack: Sequence[UnarySemigroup], ident: Identity, domain: np.ndarray):
    """Yield (chunk offset, (B, A) mismatch mask) over all assignments."""
    n = stack[0].order
    mul_flat = np.concatenate([s.mul.ravel() for s in stack]).astype(np.int32)
    inv_flat = np.concatenate([s.inv for s in stack]).astype(np.int32)
    base = (np.arange(len(stack), dtype=np.int32) * n)[:, None]
    names = ident.letters
    k = len(names)
    total = len(domain) ** k
    shape = (len(domain),) * k
    for start in range(0, total, CHUNK):
        flat = np.arange(start, min(total, start + CHUNK))
        digits = np.unravel_index(flat, shape) if k else ()
        env = {name: domain[d].astype(np.int32) for name, d in zip(names, digits)}
        if k == 0:
            continue
        memo = {}
        left = _eval_stack(ident.lhs, mul_flat, inv_flat, base, n, env, memo)
        right = _eval_stack(ident.rhs, mul_flat, inv_flat, base, n, env, memo)
        yield start, left != right


@dataclass(frozen=True)
class IdentityCheck:
    holds: bool
    witness: dict[str, int] | None = None

    def __bool__(self):
        return self.holds


def check_identity(s: UnarySemigroup, ident: Identity, naive: bool = False) -> IdentityCheck:
    """Exhaustive check; the witness is the first failing assignment with
    letters taken in order of first occurrence and elements in index order."""
    names = ident.letters
    if naive:
        for values in itertools.product(range(s.order), repeat=len(names)):
            env = dict(zip(names, values))
            if evaluate(s, ident.lhs, env) != evaluate(s, ident.rhs, env):
                return IdentityCheck(False, env)
        return IdentityCheck(True)
    domain = _domain(s, ident)
    for start, bad in _failures([s], ident, domain):
        hits = np.flatnonzero(bad[0])
        if len(hits):
            digits = np.unravel_index(start + hits[0], (len(domain),) * len(names))
            return IdentityCheck(False, {v: int(domain[d]) for v, d in zip(names, digits)})
    return IdentityCheck(True)


def check_identity_stack(stack: Sequence[UnarySemigroup], ident: Identity) -> np.ndarray:
    """Verdicts of ``ident`` over several semigroups of the same order at once."""
    if not stack:
        return np.zeros(0, dtype=bool)
    if len({s.order for s in stack}) != 1:
        raise ValueError("semigroups in a stack must share their order")
    ok = np.ones(len(stack), dtype=bool)
    domains = {tuple(_domain(s, ident)) for s in stack}
    domain = np.array(domains.pop()) if len(domains) == 1 else np.arange(stack[0].order)
    for _, bad in _failures(stack, ident, domain):
        ok &= ~bad.any(axis=1)
    return ok


# -- named identity sets -----------------------------------------------------

def _ids(*pairs):
    return tuple(identity(u, v) for u, v in pairs)


PSI = _ids(("x''", "x"), ("x(yz)'", "(y(xz')')'"), ("(xy)'z", "((x'z)'y)'"))

NAMED_IDENTITY_SETS: dict[str, tuple[Identity, ...]] = {
    "PSI": PSI,
    "SIGMA_REF": PSI + _ids(
        ("xx'x", "x"),
        ("(xx')'", "xx'"),
        ("xxx", "xx"),
        ("xyxzx", "xzxyxzx"),
        ("xzxyxzx", "xzxyx"),
        ("x'yxzx", "(xzx)'yxzx"),
        ("xyxzx'", "xyxz(xyx)'"),
    ),
    "EQ_SIMPLE": _ids(("xx'x", "x"), ("x''", "x"), ("(x'x)'", "x'x"), ("(xy)'", "y'(x'xyy')'x'")),
    "SQUARE_BAND": _ids(("xx", "x"), ("xyz", "xz")),
    "INVOLUTION": _ids(("x''", "x"), ("(xy)'", "y'x'")),
    "REGULAR": _ids(("xx'x", "x"),),
}


def check_identity_set(s: UnarySemigroup, name: str) -> list[tuple[Identity, IdentityCheck]]:
    return [(ident, check_identity(s, ident)) for ident in NAMED_IDENTITY_SETS[name]]


# -- isomorphism -------------------------------------------------------------

def _signatures(s: UnarySemigroup) -> list[tuple]:
    n = s.order
    right, left, two = _principal(s)
    sigs = []
    for a in range(n):
        powers = [a]
        while True:
            nxt = int(s.mul[powers[-1], a])
            if nxt in powers:
                index, period = powers.index(nxt), len(powers) - powers.index(nxt)
                break
            powers.append(nxt)
        sigs.append((
            a == s.zero,
            int(s.mul[a, a]) == a,
            int(s.inv[a]) == a,
            int(s.inv[s.inv[a]]) == a,
            index, period,
            int(right[a].sum()), int(left[a].sum()), int(two[a].sum()),
            int((s.mul[a] == a).sum()), int((s.mul[:, a] == a).sum()),
        ))
    return sigs


ISOMORPHISM_CAP = 32


def isomorphic(s: UnarySemigroup, t: UnarySemigroup, cap: int = ISOMORPHISM_CAP) -> dict[int, int] | None:
    """A bijection preserving multiplication and reversion, or None."""
    if max(s.order, t.order) > cap:
        raise ValueError(f"order exceeds isomorphism cap {cap}")
    if s.order != t.order:
        return None
    ss, ts = _signatures(s), _signatures(t)
    if sorted(ss) != sorted(ts):
        return None
    n = s.order
    cands = [[b for b in range(n) if ts[b] == ss[a]] for a in range(n)]
    order = sorted(range(n), key=lambda a: (len(cands[a]), a))
    smul, tmul = s.mul.tolist(), t.mul.tolist()
    sinv, tinv = s.inv.tolist(), t.inv.tolist()

    def propagate(phi, used, a, b):
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            if x in phi:
                if phi[x] != y:
                    return False
                continue
            if y in used or ts[y] != ss[x]:
                return False
            phi[x] = y
            used.add(y)
            queue.append((sinv[x], tinv[y]))
            for z, w in list(phi.items()):
                queue.append((smul[x][z], tmul[y][w]))
                queue.append((smul[z][x], tmul[w][y]))
        return True

    def rec(phi, used):
        if len(phi) == n:
            return phi
        a = next(x for x in order if x not in phi)
        for b in cands[a]:
            if b in used:
                continue
            p2, u2 = dict(phi), set(used)
            if propagate(p2, u2, a, b):
                found = rec(p2, u2)
                if found is not None:
                    return found
        return None

    phi = rec({}, set())
    if phi is None:
        return None
    assert all(phi[smul[a][b]] == tmul[phi[a]][phi[b]] for a in range(n) for b in range(n))
    return dict(sorted(phi.items()))


# -- recognition -------------------------------------------------------------

_PAIR_LABEL = re.compile(r"\((.+),(.+)\)\Z")


def recognize_reflexive_adjacency(s: UnarySemigroup) -> Graph:
    """Return a reflexive graph H with A(H) isomorphic to s.

    Raises NotApplicable naming the first hypothesis that fails.
    """
    for ident, verdict in check_identity_set(s, "EQ_SIMPLE"):
        if not verdict:
            raise NotApplicable(f"fails {ident}")
    if not s.is_associative():
        raise NotApplicable("multiplication is not associative")
    zero = find_zero(s)
    if zero is None:
        raise NotApplicable("no zero element (completely simple case: a square band, not an adjacency semigroup)")
    if s.order < 2:
        raise NotApplicable("trivial semigroup has no nonzero J-class")
    nonzero = [a for a in range(s.order) if a != zero]
    green = greens_partitions(s)
    if frozenset(nonzero) not in green["J"]:
        raise NotApplicable("nonzero elements do not form a single J-class (not 0-simple)")
    if not (s.mul[np.ix_(nonzero, nonzero)] != zero).any():
        raise NotApplicable("null semigroup (not 0-simple)")
    if any(len(h) > 1 for h in green["H"]):
        raise NotApplicable("nontrivial H-classes (subgroups are not trivial)")
    for a in nonzero:
        p, seen = a, []
        while p not in seen:
            seen.append(p)
            p = int(s.mul[p, a])
        if int(s.mul[p, p]) != p or len(seen) - seen.index(p) != 1:
            raise NotApplicable(f"element {s.label(a)} generates a nontrivial cyclic group")
    idem = {a for a in nonzero if s.mul[a, a] == a}
    for kind in ("R", "L"):
        for c in green[kind]:
            if zero not in c and not (c & idem):
                raise NotApplicable(f"an {kind}-class has no idempotent (not completely 0-simple)")
    fixed = [a for a in nonzero if s.inv[a] == a]
    rclass = {a: c for c in green["R"] for a in c}
    lclass = {a: c for c in green["L"] for a in c}
    for kind, table in (("R", rclass), ("L", lclass)):
        for c in green[kind]:
            if zero in c:
                continue
            if len(c & set(fixed)) != 1:
                raise NotApplicable(f"an {kind}-class does not contain exactly one fixed point of reversion")
    row_of = {a: next(e for e in fixed if e in rclass[a]) for a in nonzero}
    col_of = {a: next(e for e in fixed if e in lclass[a]) for a in nonzero}
    names = []
    for e in fixed:
        m = _PAIR_LABEL.match(s.label(e))
        names.append(m.group(1) if m and m.group(1) == m.group(2) else f"e{e}")
    if len(set(names)) != len(names):
        names = [f"e{e}" for e in fixed]
    name = dict(zip(fixed, names))
    edges = {(name[e], name[f]) for e in fixed for f in fixed if s.mul[e, f] != zero}
    h = Graph(tuple(names), frozenset(edges))
    a_h = adjacency_semigroup(h)
    phi = {zero: 0}
    for a in nonzero:
        phi[a] = a_h.indexing.element(name[row_of[a]], name[col_of[a]])
    if len(set(phi.values())) != s.order or s.order != a_h.order:
        raise NotApplicable("R/L indexing is not a bijection onto an adjacency semigroup")
    for a in range(s.order):
        if phi[int(s.inv[a])] != a_h.inv[phi[a]]:
            raise NotApplicable("reversion does not match the adjacency structure")
        for b in range(s.order):
            if phi[int(s.mul[a, b])] != a_h.mul[phi[a], phi[b]]:
                raise NotApplicable("multiplication does not match the adjacency structure")
    return h


def graphs_isomorphic(g: Graph, h: Graph) -> bool:
    if max(len(g), len(h)) > 8:
        raise ValueError("graph isomorphism is capped at 8 vertices")
    return graph_isomorphism(g, h) is not None


# -- A2 ----------------------------------------------------------------------

def _plain_letters(t: Term) -> list[str]:
    if isinstance(t, Letter):
        return [t.name]
    if isinstance(t, Mul):
        return [x for f in t.factors for x in _plain_letters(f)]
    raise ValueError("A2 identities are between reversion-free words")


def a2_identity(u: Term, v: Term) -> bool:
    """Same first letter, same last letter, same set of length-2 factors."""
    wu, wv = _plain_letters(u), _plain_letters(v)
    if not wu or not wv:
        raise ValueError("empty word")
    factors = lambda w: set(zip(w, w[1:]))
    return wu[0] == wv[0] and wu[-1] == wv[-1] and factors(wu) == factors(wv)


# -- file format -------------------------------------------------------------

def parse_semigroup(text: str) -> UnarySemigroup:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    it = iter(lines)
    order = zero = None
    labels = None
    mul_rows: list[list[int]] = []
    inv_row = None

    def ints(lineno, line):
        try:
            return [int(x) for x in line.split()]
        except ValueError:
            raise SemigroupFormatError(f"expected integers, got {line!r}", lineno) from None

    pending = list(it)
    k = 0
    while k < len(pending):
        lineno, line = pending[k]
        key, _, rest = line.partition(":")
        key = key.strip()
        if key == "order":
            order = ints(lineno, rest)
            if len(order) != 1 or order[0] < 1:
                raise SemigroupFormatError("order must be one positive integer", lineno)
            order = order[0]
        elif key == "zero":
            z = ints(lineno, rest)
            if len(z) != 1:
                raise SemigroupFormatError("zero must be one integer", lineno)
            zero = z[0]
        elif key == "labels":
            labels = tuple(rest.split())
        elif key == "mul":
            if order is None:
                raise SemigroupFormatError("'mul:' before 'order:'", lineno)
            for r in range(order):
                k += 1
                if k >= len(pending):
                    raise SemigroupFormatError(f"multiplication table has {r} rows, expected {order}", lineno)
                ln, row = pending[k]
                vals = ints(ln, row)
                if len(vals) != order:
                    raise SemigroupFormatError(f"row has {len(vals)} entries, expected {order}", ln)
                mul_rows.append(vals)
        elif key == "inv":
            if order is None:
                raise SemigroupFormatError("'inv:' before 'order:'", lineno)
            vals = ints(lineno, rest) if rest.strip() else None
            if vals is None:
                k += 1
                if k >= len(pending):
                    raise SemigroupFormatError("missing reversion row", lineno)
                lineno, row = pending[k]
                vals = ints(lineno, row)
            if len(vals) != order:
                raise SemigroupFormatError(f"reversion row has {len(vals)} entries, expected {order}", lineno)
            inv_row = vals
        else:
            raise SemigroupFormatError(f"unexpected line {line!r}", lineno)
        k += 1
    if order is None or not mul_rows or inv_row is None:
        raise SemigroupFormatError("need 'order:', 'mul:' and 'inv:' sections")
    try:
        s = UnarySemigroup(np.array(mul_rows), np.array(inv_row), zero=zero, labels=labels)
    except ValueError as exc:
        raise SemigroupFormatError(str(exc)) from None
    if not s.is_associative():
        raise SemigroupFormatError("multiplication is not associative")
    return s


def serialize_semigroup(s: UnarySemigroup) -> str:
    out = [f"order: {s.order}"]
    if s.zero is not None:
        out.append(f"zero: {s.zero}")
    if s.indexing is not None or s.labels is not None:
        out.append("labels: " + " ".join(s.label(k) for k in range(s.order)))
    out.append("mul:")
    out += [" ".join(map(str, row)) for row in s.mul.tolist()]
    out.append("inv:")
    out.append(" ".join(map(str, s.inv.tolist())))
    return "\n".join(out) + "\n"


def format_table(s: UnarySemigroup) -> str:
    """Human-readable Cayley table using element labels."""
    names = [s.label(k) for k in range(s.order)]
    width = max(len(x) for x in names) + 1
    head = " " * width + "|" + "".join(x.rjust(width) for x in names) + " |" + "'".rjust(width)
    rows = [head, "-" * len(head)]
    for a in range(s.order):
        cells = "".join(names[b].rjust(width) for b in s.mul[a])
        rows.append(names[a].rjust(width) + "|" + cells + " |" + names[s.inv[a]].rjust(width))
    return "\n".join(rows) + "\n"
