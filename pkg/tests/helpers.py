import random

from hypothesis import strategies as st

from adjsem.terms import Letter, Rev, mul, size


def terms(alphabet=("x", "y", "z"), max_leaves=5):
    leaf = st.sampled_from(alphabet).map(Letter)
    return st.recursive(
        leaf,
        lambda inner: st.one_of(
            inner.map(Rev),
            st.tuples(inner, inner).map(lambda p: mul(*p)),
        ),
        max_leaves=max_leaves,
    )


def random_term(rng: random.Random, alphabet=("x", "y", "z"), max_nodes=8):
    """Random term with at most ``max_nodes`` nodes (letters, products, reversions)."""
    def build(budget):
        if budget <= 1:
            return Letter(rng.choice(alphabet))
        kind = rng.random()
        if kind < 0.3:
            return Rev(build(budget - 1))
        if kind < 0.75 and budget >= 3:
            left = rng.randint(1, budget - 2)
            return mul(build(left), build(budget - 1 - left))
        return Letter(rng.choice(alphabet))
    while True:
        t = build(rng.randint(1, max_nodes))
        if size(t) <= max_nodes:
            return t


# Reduced quasi-identities with the dispatch branch each one must reach.
TRANSLATION_SUITE = [
    ("x ~ y -> x = z", "QIEQUALS"),
    ("x ~ y -> z = x", "QIEQUALS"),
    ("x ~ y -> z = w", "QIEQUALS"),
    ("x ~ y & y ~ x -> x = y", "QIEQUALS2_SOURCE"),
    ("x ~ y & z ~ y -> x = z", "QIEQUALS2_SOURCE"),
    ("x ~ y & x ~ z -> y = z", "QIEQUALS2_TARGET"),
    ("x ~ y & y ~ z -> z = y", "QIEQUALS2_TARGET"),
    ("x ~ y -> z ~ w", "TAU_1"),
    ("x ~ y -> z ~ x", "TAU_2"),
    ("x ~ y -> z ~ y", "TAU_3"),
    ("x ~ y -> x ~ z", "TAU_4"),
    ("x ~ y -> y ~ z", "TAU_5"),
    ("x ~ y & z ~ w -> x ~ z", "TAU_6"),
    ("x ~ y -> x ~ x", "TAU_6"),
    ("x ~ y & y ~ z -> x ~ z", "TAU_7"),
    ("x ~ y -> y ~ x", "TAU_8"),
    ("x ~ y & z ~ w -> y ~ w", "TAU_9"),
    ("x ~ y -> y ~ y", "TAU_9"),
    ("x ~ y -> z ~ z", "TAU_LOOP"),
    ("-> x ~ y", "ATOMIC_COMPLETE"),
    ("-> x ~ x", "ATOMIC_REFLEXIVE"),
    ("-> x = y", "ATOMIC_ONEVERTEX"),
    ("x ~ y -> x ~ y", "TAUTOLOGY"),
    ("x ~ x -> x ~ y", "TAU_4"),
]
