"""Compiling universal Horn sentences of graphs into unary semigroup identities.

For a reduced quasi-identity (no equalities among the premises) the compiled
identity holds in A(H) exactly when the sentence holds in H.  The premises
``u1 ~ v1 & ... & un ~ vn`` are encoded by a word D built from blocks

    w_i = (u_i v_i)' s_i (u_i v_i')' s_i (u_i' v_i)' s_i (u_i' v_i')'

chained along an index sequence that visits every ordered pair of premises,
with a fresh connector t_{i,j} between consecutive blocks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graph import Graph
from .horn import Atom, NegDisjunction, QuasiIdentity, adj, eq, failing_assignment, satisfies
from .terms import Identity, Letter, Rev, Term, mul
from .usemigroup import adjacency_semigroup, check_identity


@dataclass(frozen=True)
class ReducedQuasiIdentity:
    premises: tuple[Atom, ...]
    conclusion: Atom

    def __post_init__(self):
        object.__setattr__(self, "premises", tuple(self.premises))
        if any(p.kind != "adj" for p in self.premises):
            raise ValueError("reduced quasi-identities have only adjacencies in the premise")

    def __str__(self):
        return str(self.as_quasi_identity())

    def as_quasi_identity(self) -> QuasiIdentity:
        return QuasiIdentity(self.premises, self.conclusion)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.as_quasi_identity().variables


def reduce_quasi_identity(q: QuasiIdentity) -> ReducedQuasiIdentity:
    """Eliminate premise equalities by merging variables into the least name."""
    parent: dict[str, str] = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for p in q.premises:
        if p.kind == "eq":
            a, b = find(p.left), find(p.right)
            if a != b:
                lo, hi = sorted((a, b))
                parent[hi] = lo
    rep = {v: find(v) for v in q.variables}
    premises = []
    for p in q.premises:
        if p.kind == "adj":
            atom = p.substitute(rep)
            if atom not in premises:
                premises.append(atom)
    return ReducedQuasiIdentity(tuple(premises), q.conclusion.substitute(rep))


def _fresh(base: str, taken: set[str]) -> str:
    name, k = base, 0
    while name in taken:
        name = f"{base}_{k}"
        k += 1
    taken.add(name)
    return name


def second_kind_to_quasi(d: NegDisjunction, target: Graph) -> QuasiIdentity:
    """Replace ``!A1 | ... | !An`` (failing on target) by ``A1 & ... & An -> X``
    where X, in fresh variables, fails on target."""
    if failing_assignment(target, d) is None:
        raise ValueError("the sentence does not fail on the target graph")
    taken = set(d.variables)
    p, q = _fresh("p", taken), _fresh("q", taken)
    if len(target) >= 2:
        xi = eq(p, q)
    elif not target.edges:
        xi = adj(p, q)
    else:
        raise ValueError("every atomic formula holds on the one-vertex looped graph")
    return QuasiIdentity(d.negated, xi)


# -- the word D ---------------------------------------------------------------

def canonical_sigma(n: int) -> tuple[int, ...]:
    """1, then i, j for every ordered pair (i, j) lexicographically, then 1."""
    if n < 1:
        raise ValueError("need at least one premise")
    seq = [1]
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        seq += [i, j]
    return tuple(seq + [1])


def is_sigma_sequence(seq, n: int) -> bool:
    if not seq or seq[0] != 1 or seq[-1] != 1:
        return False
    steps = set(zip(seq, seq[1:]))
    return all((i, j) in steps for i in range(1, n + 1) for j in range(1, n + 1))


@dataclass(frozen=True)
class DWord:
    term: Term
    sigma: tuple[int, ...]
    blocks: dict
    s_names: dict
    t_names: dict

    @property
    def fresh(self) -> tuple[str, ...]:
        return tuple(self.s_names.values()) + tuple(self.t_names.values())


def _l(x: str) -> Term:
    return Letter(x)


def w_block(u: str, v: str, s: str) -> Term:
    U, V, S = _l(u), _l(v), _l(s)
    return mul(Rev(mul(U, V)), S, Rev(mul(U, Rev(V))), S, Rev(mul(Rev(U), V)), S, Rev(mul(Rev(U), Rev(V))))


def build_D(premises, sigma=None, taken: set[str] | None = None) -> DWord:
    premises = tuple(premises)
    n = len(premises)
    if n == 0:
        raise ValueError("empty premise list")
    sigma = canonical_sigma(n) if sigma is None else tuple(sigma)
    if not is_sigma_sequence(sigma, n):
        raise ValueError(f"{sigma} does not start and end with 1 and cover every ordered pair")
    taken = set(taken or ()) | {v for p in premises for v in p.variables}
    s_names = {i: _fresh(f"s{i}", taken) for i in range(1, n + 1)}
    t_names = {(i, j): _fresh(f"t{i}_{j}", taken) for i in range(1, n + 1) for j in range(1, n + 1)}
    blocks = {i: w_block(p.left, p.right, s_names[i]) for i, p in enumerate(premises, start=1)}
    parts = []
    for a, b in zip(sigma, sigma[1:]):
        parts += [blocks[a], _l(t_names[(a, b)])]
    parts.append(blocks[sigma[-1]])
    return DWord(mul(*parts), sigma, blocks, s_names, t_names)


def theta_plus(premises, dword: DWord, theta: dict[str, str], graph: Graph) -> dict[str, int]:
    """The assignment into A(graph) that sends D to (theta(v1), theta(u1))
    whenever theta satisfies the premises."""
    a = adjacency_semigroup(graph).indexing
    out = {}
    for p in premises:
        for x in p.variables:
            out[x] = a.element(theta[x], theta[x])
    for (i, j), name in dword.t_names.items():
        out[name] = a.element(theta[premises[i - 1].right], theta[premises[j - 1].left])
    for i, name in dword.s_names.items():
        out[name] = out[dword.t_names[(i, i)]]
    return out


# -- dispatch -----------------------------------------------------------------

CASE_TAGS = ("QIEQUALS", "QIEQUALS2_SOURCE", "QIEQUALS2_TARGET",
             *(f"TAU_{k}" for k in range(1, 10)), "TAU_LOOP",
             "ATOMIC_COMPLETE", "ATOMIC_REFLEXIVE", "ATOMIC_ONEVERTEX", "TAUTOLOGY")


@dataclass(frozen=True)
class CompiledIdentity:
    identity: Identity
    case_tag: str
    fresh_variables: tuple[str, ...] = ()
    dword: DWord | None = field(default=None, compare=False, repr=False)


# (role of u, role of v) -> row of the table; roles: 0 absent, 1 source, 2 target
_TAU_ROW = {(0, 0): 1, (0, 1): 2, (0, 2): 3, (1, 0): 4, (2, 0): 5,
            (1, 1): 6, (1, 2): 7, (2, 1): 8, (2, 2): 9}


def _square(t: Term) -> Term:
    return mul(t, t)


def translate(r: ReducedQuasiIdentity) -> CompiledIdentity:
    c = r.conclusion
    u, v = c.left, c.right
    x = Letter(u)
    if (c.kind == "eq" and u == v) or c in r.premises:
        return CompiledIdentity(Identity(x, x), "TAUTOLOGY")
    if not r.premises:
        if c.kind == "adj" and u != v:
            return CompiledIdentity(Identity(mul(x, x), x), "ATOMIC_COMPLETE")
        if c.kind == "adj":
            return CompiledIdentity(Identity(mul(x, Rev(x), x), x), "ATOMIC_REFLEXIVE")
        return CompiledIdentity(Identity(Rev(x), x), "ATOMIC_ONEVERTEX")

    taken = set(r.variables)
    dw = build_D(r.premises, taken=taken)
    D = dw.term
    t = lambda i, j: Letter(dw.t_names[(i, j)])
    sources = {}
    targets = {}
    for i, p in enumerate(r.premises, start=1):
        sources.setdefault(p.left, i)
        targets.setdefault(p.right, i)
    present = set(sources) | set(targets)
    fresh = dw.fresh

    if c.kind == "eq":
        if u in present and v in present:
            if u in sources:
                i = sources[u]
                ident = Identity(mul(Letter(u), t(i, 1), D), mul(Letter(v), t(i, 1), D))
                return CompiledIdentity(ident, "QIEQUALS2_SOURCE", fresh, dw)
            i = targets[u]
            ident = Identity(mul(D, t(1, i), Letter(u)), mul(D, t(1, i), Letter(v)))
            return CompiledIdentity(ident, "QIEQUALS2_TARGET", fresh, dw)
        absent = u if u not in present else v
        a = Letter(absent)
        return CompiledIdentity(Identity(mul(a, D), mul(Rev(a), D)), "QIEQUALS", fresh, dw)

    if u == v and u not in present:
        z = _fresh("z", taken)
        e = mul(Rev(mul(Letter(z), Rev(x))), D, Rev(x))
        return CompiledIdentity(Identity(e, _square(e)), "TAU_LOOP", fresh + (z,), dw)

    def uv(i):
        p = r.premises[i - 1]
        return Rev(mul(Letter(p.left), Letter(p.right)))

    # prefix from the role of v, suffix from the role of u
    if v in sources:
        j, vrole = sources[v], 1
        prefix = mul(Letter(v), t(j, 1))
    elif v in targets:
        j, vrole = targets[v], 2
        prefix = mul(uv(j), t(j, 1))
    else:
        vrole, prefix = 0, Letter(v)
    if u in sources:
        i, urole = sources[u], 1
        suffix = mul(t(1, i), uv(i))
    elif u in targets:
        i, urole = targets[u], 2
        suffix = mul(t(1, i), Letter(u))
    else:
        urole, suffix = 0, Letter(u)
    e = mul(prefix, D, suffix)
    return CompiledIdentity(Identity(e, _square(e)), f"TAU_{_TAU_ROW[urole, vrole]}", fresh, dw)


def compile_sentence(q: QuasiIdentity) -> CompiledIdentity:
    return translate(reduce_quasi_identity(q))


@dataclass(frozen=True)
class TranslationCheck:
    graph_side: bool
    semigroup_side: bool

    @property
    def agree(self) -> bool:
        return self.graph_side == self.semigroup_side


def verify_translation(h: Graph, r: ReducedQuasiIdentity) -> TranslationCheck:
    compiled = translate(r)
    graph_side = satisfies(h, r.as_quasi_identity())
    semigroup_side = check_identity(adjacency_semigroup(h), compiled.identity).holds
    return TranslationCheck(graph_side, semigroup_side)
