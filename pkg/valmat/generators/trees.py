#!/usr/bin/env python3
"""
Trees
^^^^^

Tree metrics as rank 2 valuated matroids.

For a tree with unit length edges, a root ``z`` and a set of leaves ``X``,

.. math::

    \\omega(u, v) = d(u, v) - d(z, u) - d(z, v) = -2 d(z, z_{u, v})

(where :math:`z_{u,v}` is the branching point of ``u`` and ``v`` seen from
``z``) is a valuation on the pairs of ``X``, projectively equivalent to the
tree metric itself.
"""
import re
from itertools import combinations

import networkx as nx
import numpy as np

from ..errors import ParseError, StructuralError
from ..matroid import GroundSet, uniform_family
from ..valuation import Valuation

linearized_tree_tokenizer = re.compile(r" +|[()]|[^ ()]+")


def _tokenize_linearized_tree(s):
    toks = [
        t for t in [
            match.group(0)
            for match in linearized_tree_tokenizer.finditer(s)
        ]
        if t[0] != " "]

    return toks


def _within_bracket(toks, edges, leaves):
    try:
        label = next(toks)
    except StopIteration:
        raise ParseError("Unexpected end of tree string")
    if label in "()":
        raise ParseError(f"Expected a vertex label, got \"{label}\"")
    for tok in toks:
        if tok == "(":
            child = _within_bracket(toks, edges, leaves)
            edges.append((label, child))
        elif tok == ")":
            return label
        else:
            edges.append((label, tok))
            leaves.append(tok)
    raise ParseError("Unbalanced parentheses in tree string")


class TreeInstance(object):
    """Tree with unit length edges, a root and a set of leaves

    Args:
        edges (list): Pairs of vertex labels
        leaves (list): Labels of the leaves ``X`` (at least 2)
        root (str): Root vertex ``z``
    """

    def __init__(self, edges, leaves, root):
        self.graph = nx.Graph()
        self.graph.add_edges_from(edges)
        if root not in self.graph:
            raise StructuralError(f"Root {root} is not a vertex")
        if not nx.is_tree(self.graph):
            raise StructuralError("The edges do not form a tree")
        self.root = root
        self.leaves = list(leaves)
        if len(set(self.leaves)) != len(self.leaves):
            raise StructuralError("Duplicate leaves")
        if len(self.leaves) < 2:
            raise StructuralError("A tree metric needs at least 2 leaves")
        for leaf in self.leaves:
            if leaf not in self.graph:
                raise StructuralError(f"Leaf {leaf} is not a vertex")
        self._depth = nx.single_source_shortest_path_length(self.graph, root)

    @staticmethod
    def from_string(string):
        """Reads linearized tree from string, e.g. ``"(z (a u u') v)"``

        The root is the first label, leaves are the labels that are not
        followed by children.

        Args:
            string (str): Linearized tree

        Returns:
            TreeInstance: Tree object
        """
        toks = iter(_tokenize_linearized_tree(string))
        if next(toks, None) != "(":
            raise ParseError(f"Tree strings start with \"(\": {string}")
        edges, leaves = [], []
        root = _within_bracket(toks, edges, leaves)
        trailing = list(toks)
        if trailing:
            raise ParseError(f"Trailing tokens {' '.join(trailing)}")
        return TreeInstance(edges, leaves, root)

    def _to_string(self, vertex, parent):
        children = [
            child for child in self.graph.neighbors(vertex) if child != parent
        ]
        if not children:
            return vertex
        children_str = " ".join(
            self._to_string(child, vertex) for child in children
        )
        return f"({vertex} {children_str})"

    def __str__(self):
        return self._to_string(self.root, None)

    def distance(self, u, v):
        return nx.shortest_path_length(self.graph, u, v)

    def depth(self, u):
        """Distance to the root"""
        return self._depth[u]

    def _pair_valuation(self, value):
        ground = GroundSet(self.leaves)
        family = uniform_family(ground, 2)
        values = {}
        for base in family:
            u, v = ground.labels_of(base)
            values[base] = value(u, v)
        return Valuation(family, values)

    def distance_valuation(self):
        """The tree metric on pairs of leaves"""
        return self._pair_valuation(self.distance)

    def valuation(self):
        """``omega(u, v) = d(u, v) - d(z, u) - d(z, v)``"""
        return self._pair_valuation(
            lambda u, v: self.distance(u, v) - self.depth(u) - self.depth(v)
        )

    def four_point_condition(self):
        """For any four leaves, the maximum of
        ``d(u, v) + d(u', v')`` over the three pairings is attained twice"""
        d = self.distance
        for a, b, c, e in combinations(self.leaves, 4):
            sums = sorted([d(a, b) + d(c, e), d(a, c) + d(b, e),
                           d(a, e) + d(b, c)])
            if sums[1] != sums[2]:
                return False
        return True


def gen_tree_metric(tree):
    """Valuation ``-2 d(z, z_{u,v})`` of a :py:class:`TreeInstance`"""
    return tree.valuation()


def random_tree(seed, max_leaves=6):
    """Random tree on vertices ``v0, v1, ...`` rooted at ``v0``.

    Each new vertex is attached to a uniformly random earlier one. The
    leaves are the vertices of degree 1 (other than the root).

    Args:
        seed (int): Random seed
        max_leaves (int, optional): Maximum number of leaves (at least 2)

    Returns:
        TreeInstance: Tree object
    """
    if max_leaves < 2:
        raise StructuralError("Trees need at least 2 leaves")
    rs = np.random.RandomState(seed)
    while True:
        num_vertices = rs.randint(3, max_leaves + 2)
        edges = [
            (f"v{rs.randint(0, i)}", f"v{i}") for i in range(1, num_vertices)
        ]
        graph = nx.Graph(edges)
        leaves = [
            vertex for vertex in graph
            if graph.degree(vertex) == 1 and vertex != "v0"
        ]
        if 2 <= len(leaves) <= max_leaves:
            return TreeInstance(edges, leaves, "v0")


__all__ = [
    "TreeInstance",
    "gen_tree_metric",
    "random_tree",
]
