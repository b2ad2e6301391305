import itertools

import pytest

from adjsem.graph import EMPTY, ONE, all_graphs, catalog, induced_subgraph, product, universal
from adjsem.horn import (
    LAWS, PREORDER_HASSE, PREORDER_LATTICE, NegDisjunction, QuasiIdentity, SentenceSyntaxError,
    adj, classify_standard, eq, failing_assignment, parse_sentence, preorder_classes, satisfies,
)

BATTERY = [
    "x ~ y -> y ~ x",
    "x ~ y & y ~ z -> x ~ z",
    "x ~ y & y ~ x -> x = y",
    "-> x ~ x",
    "x ~ y -> x ~ x",
    "x ~ y & y ~ z -> x = z",
    "x ~ y & z ~ w -> x ~ w",
]


def test_parse_quasi_identity():
    s = parse_sentence("x ~ y & y ~ z -> x ~ z")
    assert s == QuasiIdentity((adj("x", "y"), adj("y", "z")), adj("x", "z"))
    assert s.variables == ("x", "y", "z")


def test_parse_empty_premises_and_bare_atom():
    assert parse_sentence("-> x ~ x") == QuasiIdentity((), adj("x", "x"))
    assert parse_sentence("x = y") == QuasiIdentity((), eq("x", "y"))


def test_parse_negated_disjunction():
    assert parse_sentence("!x ~ y | !y ~ x") == NegDisjunction((adj("x", "y"), adj("y", "x")))


@pytest.mark.parametrize("text", ["x ~", "x ~ y ->", "!x ~ y | y ~ x", "X ~ y", ""])
def test_parse_errors(text):
    with pytest.raises(SentenceSyntaxError):
        parse_sentence(text)


def test_satisfaction_examples():
    assert satisfies(ONE, parse_sentence("-> x ~ x"))
    assert satisfies(catalog("S2"), LAWS["symmetric"])
    assert satisfies(catalog("P"), LAWS["antisymmetric"])


def test_failing_assignment_is_lexicographically_first():
    theta = failing_assignment(catalog("CHAIN2"), LAWS["symmetric"])
    assert theta == {"x": "0", "y": "1"}


def test_empty_graph_satisfies_everything():
    for text in BATTERY + ["!x ~ x", "!x = x"]:
        assert satisfies(EMPTY, parse_sentence(text))


def test_looped_point_satisfies_quasi_identities_but_not_irreflexivity():
    for text in BATTERY:
        assert satisfies(ONE, parse_sentence(text))
    assert not satisfies(ONE, parse_sentence("!x ~ x"))


def test_quasi_identities_survive_induced_subgraphs_and_products():
    small = list(all_graphs(2)) + list(itertools.islice(all_graphs(3), 0, 512, 41))
    for text in BATTERY:
        s = parse_sentence(text)
        good = [g for g in small if satisfies(g, s)]
        for g in good:
            for k in range(len(g) + 1):
                for subset in itertools.combinations(g.vertices, k):
                    assert satisfies(induced_subgraph(g, subset), s)
        for g, h in itertools.product(good[:8], repeat=2):
            assert satisfies(product(g, h), s)


def test_classify_chain():
    classes = classify_standard(catalog("CHAIN2"))
    assert {"reflexive", "antisymmetric", "transitive", "partial order"} <= classes
    assert classes - {"reflexive", "antisymmetric", "transitive", "partial order"} == {"preorder"}


def test_classify_universal():
    assert {"complete-looped", "equivalence", "preorder"} <= classify_standard(universal(3))


def test_classify_p():
    classes = classify_standard(catalog("P"))
    assert {"reflexive", "antisymmetric"} <= classes
    assert "transitive" not in classes


def test_preorder_lattice_is_monotone_on_small_graphs():
    for g in all_graphs(2):
        inside = preorder_classes(g)
        for low, high in PREORDER_HASSE:
            assert low not in inside or high in inside
    assert set(PREORDER_LATTICE) == {c for edge in PREORDER_HASSE for c in edge}
