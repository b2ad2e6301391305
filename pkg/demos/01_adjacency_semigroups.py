# Adjacency semigroups: build them, look at them, and read graph properties
# off their identities.

from adjsem.graph import catalog, universal
from adjsem.terms import identity
from adjsem.usemigroup import adjacency_semigroup, check_identity, format_table, greens_partitions

chain = catalog("CHAIN2")            # 0 -> 1 with loops on both vertices
a = adjacency_semigroup(chain)
print(format_table(a))

# (u,v)(w,z) is (u,z) when v ~ w, else 0
e = a.indexing.element
print(a.label(a.mul[e("0", "0"), e("0", "1")]))   # (0,1)
print(a.label(a.mul[e("0", "1"), e("0", "1")]))   # 0, since 1 is not adjacent to 0

# sizes grow as n^2 + 1
for name in ("S2", "R1", "G1", "S1"):
    print(name, adjacency_semigroup(catalog(name)).order)
print("C3", adjacency_semigroup(catalog("C", 3)).order)

# reflexive <-> xx'x = x, symmetric <-> (xy)' = y'x'
reflexive = identity("xx'x", "x")
symmetric = identity("(xy)'", "y'x'")
for name in ("CHAIN2", "S2", "R1", "S1"):
    s = adjacency_semigroup(catalog(name))
    print(f"{name:7s} reflexive={bool(check_identity(s, reflexive))} symmetric={bool(check_identity(s, symmetric))}")

# a failing check comes with the first witness
print(check_identity(adjacency_semigroup(catalog("S2")), reflexive))

# the nonzero part of A(U2) is one J-class with trivial H-classes
parts = greens_partitions(adjacency_semigroup(universal(2)))
print(parts["J"], parts["H"])
