from src.parser.edge_list import load_edge_list, parse_edge_list, serialize_edge_list
from src.parser.graph_source import GraphSource, parse_generator_spec, resolve_graph_source

__all__ = [
    "GraphSource",
    "load_edge_list",
    "parse_edge_list",
    "parse_generator_spec",
    "resolve_graph_source",
    "serialize_edge_list",
]
