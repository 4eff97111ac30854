"""Thin adapters from vertex/edge index lists to networkx graph routines."""
from __future__ import annotations

import networkx as nx


def _labels(n_vertices: int, components) -> list:
    # number components by their smallest vertex so labels are deterministic
    label = [None] * n_vertices
    for k, comp in enumerate(sorted(components, key=min)):
        for v in comp:
            label[v] = k
    return label


def connected_components(n_vertices: int, edges) -> list:
    """Component label per vertex, ignoring edge direction. ``edges`` is (u, v) pairs."""
    G = nx.Graph()
    G.add_nodes_from(range(n_vertices))
    G.add_edges_from(edges)
    return _labels(n_vertices, nx.connected_components(G))


def strongly_connected_components(n_vertices: int, edges) -> list:
    """SCC label per vertex. ``edges`` is directed (u, v) pairs."""
    G = nx.DiGraph()
    G.add_nodes_from(range(n_vertices))
    G.add_edges_from(edges)
    return _labels(n_vertices, nx.strongly_connected_components(G))


def find_cycle(n_vertices: int, arcs) -> list | None:
    """Positions into ``arcs`` of some directed cycle in traversal order, or None."""
    G = nx.MultiDiGraph()
    G.add_nodes_from(range(n_vertices))
    for a, (u, v) in enumerate(arcs):
        G.add_edge(u, v, key=a)
    try:
        return [key for _, _, key in nx.find_cycle(G, orientation=None)]
    except nx.NetworkXNoCycle:
        return None
