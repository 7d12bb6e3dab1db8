import logging
import os
from typing import Dict, Iterable, List, TextIO, Tuple

from src.exceptions import DataError, GraphFormatError
from src.graph.graph import Graph

logger = logging.getLogger(__name__)

COMMENT_PREFIXES = ("#", "%")


def parse_edge_list(stream: Iterable[str]) -> Graph:
    """Разбор списка рёбер: по две метки на строку, '#' и '%' - комментарии.

    Id присваиваются в порядке первого появления метки; петли и повторные рёбра
    отбрасываются.
    """
    ids: Dict[str, int] = {}
    labels: List[str] = []
    edges: List[Tuple[int, int]] = []
    dropped = 0
    for line_number, line in enumerate(stream, start=1):
        line = line.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 2 tokens, got {len(tokens)}: {line!r}", line_number)
        pair = []
        for token in tokens:
            if token not in ids:
                ids[token] = len(labels)
                labels.append(token)
            pair.append(ids[token])
        if pair[0] == pair[1]:
            dropped += 1
            continue
        edges.append((pair[0], pair[1]))
    if not labels:
        raise GraphFormatError("empty edge list")
    g = Graph.from_edges(len(labels), edges, labels)
    dropped += len(edges) - g.edge_count
    if dropped:
        logger.debug(f"Dropped {dropped} self-loops and duplicate edges")
    return g


def serialize_edge_list(g: Graph, stream: TextIO) -> None:
    """Запись графа в формате списка рёбер (по метке вершины)"""
    stream.write(f"# nodes {g.node_count} edges {g.edge_count}\n")
    for u, v in g.edges():
        stream.write(f"{g.label(u)} {g.label(v)}\n")


def load_edge_list(path: str) -> Graph:
    """Чтение графа из файла"""
    if not os.path.isfile(path):
        raise DataError(f"Graph file not found: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            return parse_edge_list(f)
    except (OSError, UnicodeDecodeError) as e:
        raise DataError(f"Cannot read graph file {path}: {e}") from e
