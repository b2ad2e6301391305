import pytest
from hypothesis import given, settings

from adjsem.normal_form import normal_form_shape, normalize, normalize_ref
from adjsem.patterns import pattern_graph
from adjsem.terms import parse_term, print_term

from helpers import terms


def test_shapes():
    assert normal_form_shape(parse_term("x'y(zw)'v")).breadth == 1
    assert not normal_form_shape(parse_term("(x(yz)')'")).in_n
    s = normal_form_shape(parse_term("x"))
    assert s.in_n and s.breadth == 0


@pytest.mark.parametrize("given_term,expected", [
    ("x", "x"),
    ("((abc)'u)'", "(a'u)'bc"),
    ("x''", "x"),
    ("(ab)''", "ab"),
])
def test_normalize_examples(given_term, expected):
    assert print_term(normalize(parse_term(given_term))) == expected


@pytest.mark.parametrize("given_term,expected", [
    ("(abc)'", "(bc)'b(ab)'"),
    ("x'", "x'"),
])
def test_normalize_ref_examples(given_term, expected):
    assert print_term(normalize_ref(parse_term(given_term))) == expected


def test_normalize_worked_example():
    t = parse_term("a'(baa')'")
    assert normal_form_shape(normalize(t)).in_n
    assert pattern_graph(normalize(t)) == pattern_graph(t)


def test_normalize_ref_long_block():
    t = parse_term("(wxyz)'")
    out = normalize_ref(t)
    assert normal_form_shape(out).refined
    assert pattern_graph(out, "ref") == pattern_graph(t, "ref")


def test_nested_case_keeps_pattern():
    # reversing both ends of a block when something sits on each side
    t = parse_term("((ab(cd)'e)'f)'")
    assert pattern_graph(normalize(t)) == pattern_graph(t)


@settings(max_examples=300)
@given(terms(("x", "y", "z", "w"), max_leaves=7))
def test_normalize_properties(t):
    n = normalize(t)
    assert normal_form_shape(n).in_n
    assert pattern_graph(n) == pattern_graph(t)
    assert normalize(n) == n


@settings(max_examples=300)
@given(terms(("x", "y", "z", "w"), max_leaves=7))
def test_normalize_ref_properties(t):
    n = normalize_ref(t)
    shape = normal_form_shape(n)
    assert shape.in_n and shape.refined
    assert pattern_graph(n, "ref") == pattern_graph(t, "ref")
    assert normalize_ref(n) == n
