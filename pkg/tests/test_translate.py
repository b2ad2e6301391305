import itertools

import pytest

from adjsem.graph import ONE, Graph, all_graphs, catalog, universal
from adjsem.horn import QuasiIdentity, adj, eq, parse_sentence, satisfies
from adjsem.terms import letters, parse_term, print_term
from adjsem.translate import (
    ReducedQuasiIdentity, build_D, canonical_sigma, compile_sentence, is_sigma_sequence,
    reduce_quasi_identity, second_kind_to_quasi, theta_plus, translate, verify_translation, w_block,
)
from adjsem.usemigroup import adjacency_semigroup, evaluate

from helpers import TRANSLATION_SUITE


def reduced(text):
    return reduce_quasi_identity(parse_sentence(text))


@pytest.mark.parametrize("text,expected", [
    ("x = y & x ~ z -> y ~ z", "x ~ z -> x ~ z"),
    ("x ~ y -> x ~ y", "x ~ y -> x ~ y"),
    ("x = y & y = z & x ~ x -> z ~ z", "x ~ x -> x ~ x"),
    ("x ~ y & y = x & x ~ x -> x ~ y", "x ~ x -> x ~ x"),
])
def test_reduction(text, expected):
    assert reduced(text) == ReducedQuasiIdentity(*_parts(expected))


def _parts(text):
    q = parse_sentence(text)
    return q.premises, q.conclusion


def test_reduced_rejects_equalities():
    with pytest.raises(ValueError):
        ReducedQuasiIdentity((eq("x", "y"),), adj("x", "y"))


def test_second_kind_on_looped_point_raises():
    with pytest.raises(ValueError):
        second_kind_to_quasi(parse_sentence("!x ~ x"), ONE)


def test_second_kind_on_edgeless_point():
    point = Graph(("0",))
    q = second_kind_to_quasi(parse_sentence("!x = x"), point)
    assert q == QuasiIdentity((eq("x", "x"),), adj("p", "q"))
    assert not satisfies(point, q)


def test_second_kind_on_s2():
    s2 = catalog("S2")
    q = second_kind_to_quasi(parse_sentence("!x ~ x"), s2)
    assert q == QuasiIdentity((adj("x", "x"),), eq("p", "q"))
    assert not satisfies(s2, q)


def test_second_kind_needs_a_failure():
    with pytest.raises(ValueError):
        second_kind_to_quasi(parse_sentence("!x ~ x"), catalog("K", 2))


def test_second_kind_avoids_clashes():
    q = second_kind_to_quasi(parse_sentence("!p ~ q"), catalog("S2"))
    assert q.conclusion == eq("p_0", "q_0")


def test_w_block_literal():
    assert print_term(w_block("x", "y", "s1")) == "(xy)'s1(xy')'s1(x'y)'s1(x'y')'"


def test_canonical_sigma():
    assert canonical_sigma(1) == (1, 1, 1, 1)
    assert canonical_sigma(2) == (1, 1, 1, 1, 2, 2, 1, 2, 2, 1)
    assert len(canonical_sigma(3)) == 2 * 9 + 2
    assert is_sigma_sequence(canonical_sigma(3), 3)
    assert is_sigma_sequence((1, 2, 2, 1, 1), 2)
    assert not is_sigma_sequence((1, 2, 1), 2)


def test_build_d_single_premise():
    d = build_D([adj("x", "y")])
    w = "(xy)'s1(xy')'s1(x'y)'s1(x'y')'"
    assert print_term(d.term) == f"{w}t1_1{w}t1_1{w}t1_1{w}"


def test_build_d_with_given_sigma():
    d = build_D([adj("x", "y"), adj("y", "z")], sigma=(1, 2, 2, 1, 1))
    w1 = "(xy)'s1(xy')'s1(x'y)'s1(x'y')'"
    w2 = "(yz)'s2(yz')'s2(y'z)'s2(y'z')'"
    assert print_term(d.term) == f"{w1}t1_2{w2}t2_2{w2}t2_1{w1}t1_1{w1}"


def test_build_d_errors():
    with pytest.raises(ValueError):
        build_D([])
    with pytest.raises(ValueError):
        build_D([adj("x", "y"), adj("y", "z")], sigma=(1, 2, 1))


def test_build_d_contains_all_four_reversals():
    premises = [adj("x", "y"), adj("y", "z"), adj("z", "x")]
    text = print_term(build_D(premises).term)
    for p in premises:
        u, v = p.left, p.right
        for piece in (f"({u}{v})'", f"({u}{v}')'", f"({u}'{v})'", f"({u}'{v}')'"):
            assert piece in text


@pytest.mark.parametrize("text,tag", TRANSLATION_SUITE)
def test_dispatch(text, tag):
    assert translate(reduced(text)).case_tag == tag


def test_atomic_identities():
    assert translate(reduced("-> x ~ x")).identity == parse_identity_pair("xx'x", "x")
    assert translate(reduced("-> x ~ y")).identity == parse_identity_pair("xx", "x")
    assert translate(reduced("-> x = y")).identity == parse_identity_pair("x'", "x")


def parse_identity_pair(u, v):
    from adjsem.terms import Identity
    return Identity(parse_term(u), parse_term(v))


def test_tau_rows_literal():
    c = translate(reduced("x ~ y & y ~ z -> x ~ z"))
    d = print_term(c.dword.term)
    e = f"(yz)'t2_1{d}t1_1(xy)'"
    assert print_term(c.identity.lhs) == e
    assert print_term(c.identity.rhs) == e + e
    c = translate(reduced("x ~ y -> z ~ w"))
    d = print_term(c.dword.term)
    assert print_term(c.identity.lhs) == f"w{d}z"


def test_qiequals_forms():
    c = translate(reduced("x ~ y -> z = x"))
    d = print_term(c.dword.term)
    assert (print_term(c.identity.lhs), print_term(c.identity.rhs)) == (f"z{d}", f"z'{d}")
    c = translate(reduced("x ~ y & x ~ z -> y = z"))
    d = print_term(c.dword.term)
    assert (print_term(c.identity.lhs), print_term(c.identity.rhs)) == (f"{d}t1_1y", f"{d}t1_1z")


@pytest.mark.parametrize("text,tag", TRANSLATION_SUITE)
def test_fresh_names_never_reuse_graph_variables(text, tag):
    r = reduced(text)
    c = translate(r)
    assert not set(c.fresh_variables) & set(r.variables)
    assert set(letters(c.identity.lhs)) | set(letters(c.identity.rhs)) <= set(r.variables) | set(c.fresh_variables)


def test_fresh_names_step_around_clashes():
    c = translate(reduced("s1 ~ t1_1 -> z ~ z"))
    assert {"s1_0", "t1_1_0", "z_0"} <= set(c.fresh_variables)
    assert not {"s1", "t1_1", "z"} & set(c.fresh_variables)


def test_plus_assignment_evaluates_d():
    for premises in ([adj("x", "y")], [adj("x", "y"), adj("y", "z")], [adj("x", "x"), adj("x", "y")]):
        d = build_D(premises)
        names = sorted({v for p in premises for v in p.variables})
        for g in itertools.chain(all_graphs(2), itertools.islice(all_graphs(3), 0, 512, 31)):
            s = adjacency_semigroup(g)
            for images in itertools.product(g.vertices, repeat=len(names)):
                theta = dict(zip(names, images))
                if all(p.holds(g, theta) for p in premises):
                    env = theta_plus(premises, d, theta, g)
                    expected = s.indexing.element(theta[premises[0].right], theta[premises[0].left])
                    assert evaluate(s, d.term, env) == expected


# the two-premise sentences are covered by the acceptance battery
@pytest.mark.parametrize("text,tag", [(t, g) for t, g in TRANSLATION_SUITE if "&" not in t])
def test_equivalence_on_two_vertex_graphs(text, tag):
    r = reduced(text)
    for g in all_graphs(2):
        check = verify_translation(g, r)
        assert check.agree, (g, check)


@pytest.mark.parametrize("h,text,expected", [
    (catalog("CHAIN2"), "x ~ y & y ~ x -> x = y", True),
    (universal(2), "x ~ y & y ~ x -> x = y", False),
    (ONE, "-> x ~ x", True),
])
def test_verify_examples(h, text, expected):
    check = verify_translation(h, reduced(text))
    assert (check.graph_side, check.semigroup_side) == (expected, expected)


def test_compile_sentence_reduces_first():
    assert compile_sentence(parse_sentence("x = y & x ~ z -> y ~ z")).case_tag == "TAUTOLOGY"
