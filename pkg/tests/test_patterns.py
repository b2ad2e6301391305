import itertools
import random

import pytest
from hypothesis import given

from adjsem.graph import all_graphs
from adjsem.patterns import L, R, decide_identity, join, pattern_dot, pattern_graph, _raw
from adjsem.terms import Mul, identity, parse_term
from adjsem.usemigroup import adjacency_semigroup, evaluate

from helpers import random_term, terms


def pg(text, mode="plain"):
    return pattern_graph(parse_term(text), mode)


def test_worked_example():
    g = pg("a'(baa')'")
    assert g.adjacencies == {(L("a"), L("a")), (R("a"), R("a")), (R("b"), L("a"))}
    assert (g.initial, g.final) == (R("a"), L("b"))


def test_letter():
    g = pg("x")
    assert g.vertices == {L("x"), R("x")}
    assert not g.adjacencies
    assert (g.initial, g.final) == (L("x"), R("x"))


def test_bend_pair_equal():
    assert pg("a(bc)'") == pg("(b(ac')')'")


def test_reflexive_example():
    assert pg("a'(baa')'", "ref") == pg("(ba)'", "ref")
    assert pg("a'(baa')'") != pg("(ba)'")


def test_symmetric_mode_is_closed():
    g = pg("ab'c", "symm")
    assert all((b, a) in g.adjacencies for a, b in g.adjacencies)


def test_text_rendering():
    assert str(pg("a'(baa')'")) == "initial r_a, final ℓ_b, adjacencies {(ℓ_a,ℓ_a), (r_a,r_a), (r_b,ℓ_a)}"


def test_dot_marks_initial_and_final():
    dot = pattern_dot(pg("ab"))
    assert 'start -> "l_a"' in dot
    assert '"r_b" [label="r_b", peripheries=2]' in dot


@given(terms(max_leaves=6))
def test_pattern_ignores_association(t):
    # rebuild every product as a left-nested binary tree
    def left_nested(u):
        if isinstance(u, Mul):
            acc = _raw(u.factors[0])
            for f in u.factors[1:]:
                acc = join(*acc, *_raw(f))
            return acc
        return _raw(u)
    assert left_nested(t) == _raw(t)


@pytest.mark.parametrize("u,v,mode,expected", [
    ("x(yz)'", "(y(xz')')'", "plain", True),
    ("(a(bcd)'e)'", "(b'e)'c(ad')'", "plain", True),
    ("xx'x", "x", "ref", True),
    ("xx'x", "x", "plain", False),
    ("a'(baa')'", "(ba)'", "ref", True),
    ("a'(baa')'", "(ba)'", "plain", False),
    ("(xy)'", "y'x'", "symm", True),
    ("(xy)'", "y'x'", "plain", False),
    ("xy", "xz", "plain", False),
    ("xy", "x", "plain", False),
])
def test_decide_examples(u, v, mode, expected):
    ident = identity(u, v)
    d = decide_identity(ident, mode)
    assert d.holds == expected
    if not expected:
        assert d.countermodel.verify(ident)


def test_values_follow_side_maps():
    """A nonzero assignment x -> (a_x, b_x) gives a nonzero value exactly when
    l_x -> a_x, r_x -> b_x maps the pattern's adjacencies to edges, and then
    the value joins the images of the initial and final sides."""
    rng = random.Random(7)
    graphs = list(all_graphs(2))
    for _ in range(60):
        t = random_term(rng, ("x", "y"), 8)
        p = pattern_graph(t)
        names = sorted({v.letter for v in p.vertices})
        for g in graphs[::3]:
            s = adjacency_semigroup(g)
            pairs = [(a, b) for a in g.vertices for b in g.vertices]
            for choice in itertools.product(pairs, repeat=len(names)):
                side = {}
                for x, (a, b) in zip(names, choice):
                    side[L(x)], side[R(x)] = a, b
                env = {x: s.indexing.element(a, b) for x, (a, b) in zip(names, choice)}
                value = evaluate(s, t, env)
                hom = all(g.adjacent(side[a], side[b]) for a, b in p.adjacencies)
                assert (value != 0) == hom
                if hom:
                    assert value == s.indexing.element(side[p.initial], side[p.final])
