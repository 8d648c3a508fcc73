#!/usr/bin/env python3
"""
Export
======

Hasse diagrams of lattice intervals in the DOT language.
"""
import networkx as nx
from graphviz import Digraph

from .errors import ResourceError
from .lattice import certify, covers, interval
from .util import get_caps, mask_of, vshift


def cover_graph(v, x, y, caps=None):
    """Directed graph of the cover relation on ``[x, y]``"""
    members = interval(v, x, y, caps=caps)
    graph = nx.DiGraph()
    graph.add_nodes_from(members)
    for z in members:
        for upper in covers(v, z):
            if upper in graph:
                graph.add_edge(z, upper)
    return graph


def export_dot(v, x, y, caps=None):
    """DOT source of the Hasse diagram of ``[x, y]``.

    Nodes are labelled by their coordinates, and by the corresponding flat
    of the maximizers at ``x`` when ``y = x + 1``.

    Args:
        v (Valuation): Valuated matroid
        x (tuple): Lower lattice point
        y (tuple): Upper lattice point
        caps (Caps, optional): Caps (``dot_nodes``)

    Returns:
        str: DOT source
    """
    caps = caps or get_caps()
    x, y = certify(v, x), certify(v, y)
    limited = caps.updated(interval_size=min(caps.interval_size,
                                             caps.dot_nodes))
    try:
        graph = cover_graph(v, x, y, caps=limited)
    except ResourceError:
        raise ResourceError(
            f"The interval [{x}, {y}] has more than {caps.dot_nodes} points, "
            f"too many for a diagram"
        )
    unit = y.point == vshift(x.point, 1)
    dot = Digraph(comment=f"interval [{x}, {y}]")
    dot.attr(rankdir="BT")
    names = {}
    for idx, z in enumerate(graph.nodes):
        names[z] = f"n{idx}"
        label = "(" + ",".join(str(a) for a in z.point) + ")"
        if unit:
            flat = mask_of(i for i, (a, b) in enumerate(zip(z, x)) if a > b)
            label = f"{label}\\n{v.ground.describe(flat)}"
        dot.node(names[z], label)
    for lower, upper in graph.edges:
        dot.edge(names[lower], names[upper])
    return dot.source


__all__ = ["cover_graph", "export_dot"]
