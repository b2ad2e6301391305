# Membership in the uH class generated by finitely many graphs; for the
# loopless triangle this is 3-colorability, and it is also membership of
# A(G) in the variety generated by the adjacency semigroups.

from adjsem.graph import ONE, all_graphs, catalog, complete_loopless, cycle, universal
from adjsem.membership import embed_certificate, k_colorable, uh_member, variety_member_adjacency
from adjsem.usemigroup import adjacency_semigroup, direct_product, isomorphic, maximal_ideals, rees_quotient, square_band

c3 = catalog("C", 3)
for name, g in [("K4", complete_loopless(4)), ("5-cycle", cycle(5)), ("K3", complete_loopless(3))]:
    v = uh_member(g, [c3])
    print(f"{name:8s} member={v.member!s:5s} 3-colorable={k_colorable(g, 3)!s:5s} {v.reason()}")

# a success certificate lays g inside a product of copies of the generators
v = uh_member(cycle(5), [c3])
e = embed_certificate(cycle(5), v)
print(len(e.factors), "factors, product of size", e.product_size, "embeds:", e.ok)

# variety language
print(variety_member_adjacency(complete_loopless(4), [c3]))

# G1 generates everything on three vertices
g1 = catalog("G1")
print(all(uh_member(g, [g1]) for n in range(4) for g in all_graphs(n)))

# A(1) x (2x2 square band) modulo its maximal ideal is A(U2)
p = direct_product(adjacency_semigroup(ONE), square_band(2))
(ideal,) = maximal_ideals(p)
print(isomorphic(rees_quotient(p, ideal), adjacency_semigroup(universal(2))))
