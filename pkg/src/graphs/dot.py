"""
Graphviz DOT export through networkx and pydot.
"""
from typing import Union

import networkx as nx

from src.models.graph import Multigraph, SimpleGraph


def to_networkx(g: Union[Multigraph, SimpleGraph]) -> nx.Graph:
    """
    Convert a graph model to networkx.

    Multigraphs become nx.MultiGraph with one edge per unit of multiplicity.
    Vertices and edges are added in row-major order.

    Args:
        g: Multigraph or SimpleGraph

    Returns:
        Equivalent networkx graph
    """
    if isinstance(g, Multigraph):
        graph = nx.MultiGraph(name='mutual_incidence' if g.is_bipartite else 'merged_self')
        graph.add_nodes_from(g.vertices)
        for u, v, count in g.edges():
            for _ in range(count):
                graph.add_edge(u, v)
        return graph

    graph = nx.Graph(name='block_intersection')
    graph.add_nodes_from(g.vertices)
    graph.add_edges_from(g.edges())
    return graph


def export_dot(g: Union[Multigraph, SimpleGraph]) -> str:
    """
    Render a graph as Graphviz DOT text.

    Args:
        g: Multigraph or SimpleGraph

    Returns:
        DOT source ending in a newline
    """
    text = nx.nx_pydot.to_pydot(to_networkx(g)).to_string()
    return text if text.endswith("\n") else text + "\n"
