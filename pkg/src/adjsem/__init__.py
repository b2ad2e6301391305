"""Adjacency semigroups of graphs and the graph/unary-semigroup correspondence."""
