# From universal Horn sentences about graphs to identities of their
# adjacency semigroups, checked on every 2-vertex graph.

from adjsem.graph import all_graphs, catalog
from adjsem.horn import parse_sentence, satisfies
from adjsem.translate import reduce_quasi_identity, second_kind_to_quasi, translate, verify_translation

for text in ["-> x ~ x", "x ~ y -> y ~ x", "x ~ y & y ~ x -> x = y", "x ~ y & y ~ z -> x ~ z"]:
    r = reduce_quasi_identity(parse_sentence(text))
    c = translate(r)
    size = len(str(c.identity.lhs)) + len(str(c.identity.rhs))
    holds = [verify_translation(g, r) for g in all_graphs(2)]
    agree = all(h.agree for h in holds)
    print(f"{text:26s} {c.case_tag:18s} identity length {size:5d}  "
          f"holds on {sum(h.graph_side for h in holds):2d}/16 graphs, sides agree: {agree}")

# equalities in the premise are substituted away first
print(reduce_quasi_identity(parse_sentence("x = y & y = z & x ~ x -> z ~ z")))

# short identities are easier to read
c = translate(reduce_quasi_identity(parse_sentence("x ~ y -> x = z")))
print(c.identity.lhs, "=", c.identity.rhs)

# a negated disjunction becomes a quasi-identity that still fails on the target
s2 = catalog("S2")
q = second_kind_to_quasi(parse_sentence("!x ~ x"), s2)
print(q, satisfies(s2, q))
