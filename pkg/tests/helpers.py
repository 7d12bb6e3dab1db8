import networkx as nx

from src.graph.generators import erdos_renyi, make_rng
from src.graph.graph import Graph


def to_networkx(g: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(g.node_count))
    result.add_edges_from(g.edges())
    return result


def random_connected_graphs(count: int, max_nodes: int, seed: int, min_nodes: int = 2):
    """Связные графы G(n, p) со случайными n и p"""
    rng = make_rng(seed)
    for _ in range(count):
        n = int(rng.integers(min_nodes, max_nodes + 1))
        p = float(rng.uniform(0.15, 0.6))
        yield erdos_renyi(n, p, rng)
