from src.graph.graph import (
    Graph,
    bfs_distances,
    connected_components,
    giant_component,
    induced_subgraph,
    local_clustering,
)
from src.graph.generators import GENERATORS, generate, make_rng

__all__ = [
    "Graph",
    "GENERATORS",
    "bfs_distances",
    "connected_components",
    "generate",
    "giant_component",
    "induced_subgraph",
    "local_clustering",
    "make_rng",
]
