# Pattern graphs decide identities over all adjacency semigroups at once.

from adjsem.normal_form import normal_form_shape, normalize, normalize_ref
from adjsem.patterns import decide_identity, pattern_graph
from adjsem.terms import identity, parse_term

t = parse_term("a'(baa')'")
print(pattern_graph(t))
print(pattern_graph(t, "ref"))

# equal patterns, so the identity holds in every adjacency semigroup
print(decide_identity(identity("a(bc)'", "(b(ac')')'")).holds)
print(decide_identity(identity("(a(bcd)'e)'", "(b'e)'c(ad')'")).holds)

# xx'x = x needs loops: it holds for reflexive graphs only
d = decide_identity(identity("xx'x", "x"))
print(d.holds, d.countermodel.describe())
print(decide_identity(identity("xx'x", "x"), "ref").holds)

# (xy)' = y'x' needs symmetry
print(decide_identity(identity("(xy)'", "y'x'"), "symm").holds)

# every word can be pushed into the shape u1 (v1)' u2 ... with flat reversed blocks
for text in ("((abc)'u)'", "a'(baa')'", "((ab(cd)'e)'f)'"):
    n = normalize(parse_term(text))
    print(f"{text:18s} -> {str(n):22s} breadth {normal_form_shape(n).breadth}")

# with loops, reversed blocks of length two are enough
print(normalize_ref(parse_term("(wxyz)'")))
