"""Membership of a finite graph in the uH class generated by finitely many
finite graphs, decided by separating homomorphisms.

g lies in the class generated by L when
  * g has a homomorphism into some member of L (dropped for the quasivariety),
  * every pair of distinct vertices is separated: some homomorphism into a
    member of L sends them to distinct vertices,
  * every non-edge (a, b) of g is separated: some homomorphism sends it to a
    non-edge.
The same test decides whether A(g) lies in the variety generated by the
adjacency semigroups of L.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .graph import Graph, complete_loopless, find_homomorphism, induced_subgraph, is_homomorphism, isomorphism, product

EXISTS, PAIR, NONEDGE = "exists", "pair", "nonedge"


@dataclass(frozen=True)
class Obligation:
    kind: str
    pair: tuple[str, str] | None = None

    def __str__(self):
        if self.kind == EXISTS:
            return "homomorphism"
        return f"{self.kind} ({self.pair[0]},{self.pair[1]})"

    def met_by(self, phi: dict[str, str], target: Graph) -> bool:
        if self.kind == EXISTS:
            return True
        a, b = phi[self.pair[0]], phi[self.pair[1]]
        return a != b if self.kind == PAIR else not target.adjacent(a, b)


@dataclass(frozen=True)
class Witness:
    obligation: Obligation
    generator: int
    phi: dict

    def __hash__(self):
        return hash((self.obligation, self.generator, tuple(sorted(self.phi.items()))))


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    generators: tuple[Graph, ...]
    witnesses: tuple[Witness, ...] = ()
    failed: Obligation | None = None

    def __bool__(self):
        return self.member

    def reason(self) -> str:
        if self.member:
            return "all separation requirements met"
        if self.failed.kind == EXISTS:
            return "no homomorphism into any generator"
        a, b = self.failed.pair
        if self.failed.kind == PAIR:
            return f"vertices {a} and {b} are identified by every homomorphism"
        return f"non-edge ({a},{b}) is sent to an edge by every homomorphism"

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "failed": None if self.failed is None else str(self.failed),
            "obligations": [
                {"obligation": str(w.obligation), "generator": w.generator,
                 "map": [[v, w.phi[v]] for v in w.phi]}
                for w in self.witnesses
            ],
        }


def obligations(g: Graph, existence: bool = True) -> list[Obligation]:
    out = [Obligation(EXISTS)] if existence else []
    out += [Obligation(PAIR, (a, b)) for a, b in itertools.combinations(g.vertices, 2)]
    out += [Obligation(NONEDGE, (a, b)) for a in g.vertices for b in g.vertices if not g.adjacent(a, b)]
    return out


def _solve(g: Graph, gens: tuple[Graph, ...], ob: Obligation):
    for k, h in enumerate(gens):
        kw = {"separate": ob.pair} if ob.kind == PAIR else {"nonedge": ob.pair} if ob.kind == NONEDGE else {}
        phi = find_homomorphism(g, h, **kw)
        if phi is not None:
            return k, phi
    return None


def _solve_packed(args):
    return _solve(*args)


def _decide(g: Graph, generators, existence: bool, jobs: int) -> MembershipVerdict:
    gens = tuple(generators)
    if not gens:
        raise ValueError("the generator list is empty")
    if len(g) == 0:
        return MembershipVerdict(True, gens)
    obs = obligations(g, existence)
    witnesses = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_solve_packed, [(g, gens, ob) for ob in obs]))
        for ob, res in zip(obs, results):
            if res is None:
                return MembershipVerdict(False, gens, tuple(witnesses), ob)
            witnesses.append(Witness(ob, *res))
        return MembershipVerdict(True, gens, tuple(witnesses))
    found: list[tuple[int, dict]] = []
    for ob in obs:
        hit = next(((k, phi) for k, phi in found if ob.met_by(phi, gens[k])), None)
        if hit is None:
            hit = _solve(g, gens, ob)
            if hit is None:
                return MembershipVerdict(False, gens, tuple(witnesses), ob)
            found.append(hit)
        witnesses.append(Witness(ob, *hit))
    return MembershipVerdict(True, gens, tuple(witnesses))


def uh_member(g: Graph, generators, jobs: int = 1) -> MembershipVerdict:
    return _decide(g, generators, True, jobs)


def quasivariety_member(g: Graph, generators, jobs: int = 1) -> MembershipVerdict:
    return _decide(g, generators, False, jobs)


def variety_member_adjacency(g: Graph, generators) -> bool:
    """Whether A(g) lies in the variety generated by the A(h), h in generators."""
    return uh_member(g, generators).member


def k_colorable(g: Graph, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be at least 1")
    return find_homomorphism(g, complete_loopless(k)) is not None


# -- embeddings ---------------------------------------------------------------

@dataclass(frozen=True)
class Embedding:
    ok: bool
    images: dict
    factors: tuple[Graph, ...]
    product_size: int
    materialized: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


MATERIALIZE_LIMIT = 4096


def embed_certificate(g: Graph, verdict: MembershipVerdict) -> Embedding:
    """Map g into the product of the certificate's targets and check that the
    image is an induced copy of g.  Edge-exactness and injectivity are checked
    coordinatewise; small products are also built explicitly and the image
    compared by isomorphism."""
    if not verdict.member:
        raise ValueError("not a success certificate")
    maps = []
    for w in verdict.witnesses:
        h = verdict.generators[w.generator]
        if not is_homomorphism(g, h, w.phi) or not w.obligation.met_by(w.phi, h):
            return Embedding(False, {}, (), 0, False, f"recorded map for {w.obligation} does not re-verify")
        key = (w.generator, tuple(w.phi[v] for v in g.vertices))
        if key not in maps:
            maps.append(key)
    factors = tuple(verdict.generators[k] for k, _ in maps)
    images = {v: tuple(im[i] for _, im in maps) for i, v in enumerate(g.vertices)}
    size = math.prod(len(f) for f in factors)
    if len(g) == 0:
        return Embedding(True, images, factors, size, False)
    if len(set(images.values())) != len(g):
        return Embedding(False, images, factors, size, False, "the product map is not injective")
    for a in g.vertices:
        for b in g.vertices:
            in_product = all(f.adjacent(x, y) for f, x, y in zip(factors, images[a], images[b]))
            if in_product != g.adjacent(a, b):
                return Embedding(False, images, factors, size, False, f"pair ({a},{b}) is not preserved exactly")
    if size > MATERIALIZE_LIMIT:
        return Embedding(True, images, factors, size, False)
    p = product(*factors)
    names = {v: _tuple_name(images[v]) for v in g.vertices}
    sub = induced_subgraph(p, names.values())
    iso = isomorphism(g, sub)
    if iso is None:
        return Embedding(False, images, factors, size, True, "the induced image is not isomorphic to g")
    return Embedding(True, images, factors, size, True)


def _tuple_name(t: tuple[str, ...]) -> str:
    if not t:
        return product().vertices[0]
    if len(t) == 1:
        return t[0]
    name = t[0]
    for x in t[1:]:
        name = f"({name},{x})"
    return name
