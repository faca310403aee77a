"""
DOT export of the specialization preorder.

Points are collapsed into their equivalence classes (x <= y <= x), the
resulting partial order is reduced to its covering relation, and every
cover is drawn as an edge from the lower to the upper point. Points of one
class are chained with two-headed edges.
"""

import logging
from typing import List, Tuple

import networkx as nx
import pydot

from ..core import Topology, iter_bits

logger = logging.getLogger(__name__)


def specialization_graph(space: Topology) -> nx.DiGraph:
    """Edge x -> y for every x != y with x in cl{y} (equivalently y in M_x)."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(space.size))
    for x, row in enumerate(space.minimal_neighborhoods):
        for y in iter_bits(row):
            if y != x:
                graph.add_edge(x, y)
    return graph


def hasse_edges(space: Topology) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """
    Covering edges and equivalence edges of the specialization preorder.

    Returns:
        (covers, equivalences): covers as (lower, upper) pairs between class
        representatives, equivalences as pairs of consecutive class members;
        both sorted
    """
    graph = specialization_graph(space)
    condensed = nx.condensation(graph)
    members = {c: sorted(condensed.nodes[c]["members"]) for c in condensed.nodes}
    reduced = nx.transitive_reduction(condensed)

    covers = sorted((members[c][0], members[d][0]) for c, d in reduced.edges)
    equivalences = sorted(
        (chain[k], chain[k + 1])
        for chain in members.values()
        for k in range(len(chain) - 1)
    )
    return covers, equivalences


def dot_quote(label: str) -> str:
    """Double-quoted DOT ID; backslashes and quotes inside the label are escaped."""
    escaped = label.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def to_pydot(space: Topology, name: str = "specialization") -> pydot.Dot:
    graph = pydot.Dot(name, graph_type="digraph")
    graph.set_rankdir("BT")
    for x, label in enumerate(space.labels):
        graph.add_node(pydot.Node(f"n{x}", label=dot_quote(label)))

    covers, equivalences = hasse_edges(space)
    for x, y in covers:
        graph.add_edge(pydot.Edge(f"n{x}", f"n{y}"))
    for x, y in equivalences:
        graph.add_edge(pydot.Edge(f"n{x}", f"n{y}", dir="both"))
    logger.debug(f"DOT export: {space.size} nodes, {len(covers)} covers, {len(equivalences)} equivalences")
    return graph


def export_dot(space: Topology) -> str:
    """
    DOT text of the Hasse diagram of the specialization preorder.

    Args:
        space: Topology

    Returns:
        A digraph with nodes n0, n1, ... labelled by the point labels
    """
    return to_pydot(space).to_string()
