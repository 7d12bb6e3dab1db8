import logging
from bisect import bisect_left
from collections import deque
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from src.exceptions import GraphError

logger = logging.getLogger(__name__)


class Graph:
    """Неизменяемый неориентированный простой граф с плотными id вершин"""

    __slots__ = ("_adjacency", "_edge_count", "_labels", "_label_map")

    def __init__(self, adjacency: Sequence[Iterable[int]], labels: Optional[Sequence[str]] = None):
        self._adjacency: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(set(nbrs))) for nbrs in adjacency)
        n = len(self._adjacency)
        if labels is None:
            labels = [str(v) for v in range(n)]
        if len(labels) != n:
            raise GraphError(f"Expected {n} labels, got {len(labels)}")
        self._labels: Tuple[str, ...] = tuple(labels)
        self._label_map: Optional[Dict[str, int]] = None
        total = sum(len(nbrs) for nbrs in self._adjacency)
        if total % 2:
            raise GraphError("Adjacency is not symmetric")
        self._edge_count = total // 2

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[Tuple[int, int]],
                   labels: Optional[Sequence[str]] = None) -> "Graph":
        """Построение графа по списку рёбер; петли и дубликаты отбрасываются"""
        adjacency: List[set] = [set() for _ in range(node_count)]
        for u, v in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphError(f"Edge ({u}, {v}) out of range for {node_count} nodes")
            if u == v:
                continue
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(adjacency, labels)

    @property
    def node_count(self) -> int:
        return len(self._adjacency)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        return self._adjacency

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def label_map(self) -> Dict[str, int]:
        if self._label_map is None:
            self._label_map = {label: v for v, label in enumerate(self._labels)}
        return self._label_map

    def __len__(self) -> int:
        return self.node_count

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"

    def check_node(self, v: int) -> None:
        if not 0 <= v < self.node_count:
            raise GraphError(f"Node id {v} out of range [0, {self.node_count})")

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self._adjacency[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def label(self, v: int) -> str:
        return self._labels[v]

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u, nbrs in enumerate(self._adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self._adjacency]

    def is_connected(self) -> bool:
        if self.node_count == 0:
            return False
        return all(d >= 0 for d in bfs_distances(self, 0))

    def check_invariants(self) -> None:
        """Проверка симметричности и простоты полным обходом"""
        for u, nbrs in enumerate(self._adjacency):
            for v in nbrs:
                if v == u:
                    raise GraphError(f"Self-loop at {u}")
                if not self.has_edge(v, u):
                    raise GraphError(f"Edge ({u}, {v}) has no reverse")
        if 2 * self._edge_count != sum(self.degrees()):
            raise GraphError("edge_count mismatch")


def bfs_distances(g: Graph, source: int) -> List[int]:
    """Расстояния в прыжках от source; -1 для недостижимых вершин"""
    dist = [-1] * g.node_count
    dist[source] = 0
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in adjacency[v]:
            if dist[w] < 0:
                dist[w] = dv
                queue.append(w)
    return dist


def connected_components(g: Graph) -> List[List[int]]:
    """Компоненты связности в порядке возрастания минимального id"""
    seen = [False] * g.node_count
    components = []
    for start in range(g.node_count):
        if seen[start]:
            continue
        seen[start] = True
        component = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    component.append(w)
                    queue.append(w)
        components.append(sorted(component))
    return components


def induced_subgraph(g: Graph, nodes: Sequence[int]) -> Graph:
    """Индуцированный подграф; id перенумеровываются в порядке nodes"""
    index = {v: i for i, v in enumerate(nodes)}
    adjacency = [[index[w] for w in g.adjacency[v] if w in index] for v in nodes]
    return Graph(adjacency, [g.labels[v] for v in nodes])


def _label_order(label: str) -> Tuple[int, Union[int, str]]:
    """Числовые метки сравниваются как числа и идут раньше нечисловых"""
    try:
        return 0, int(label)
    except ValueError:
        return 1, label


def giant_component(g: Graph) -> Graph:
    """Наибольшая компонента связности.

    При равных размерах выигрывает компонента с наименьшей исходной меткой
    (числовые метки сравниваются как числа), а не с наименьшим внутренним id.
    """
    if g.node_count == 0:
        raise GraphError("Cannot extract giant component of an empty graph")
    components = connected_components(g)
    largest = min(components, key=lambda c: (-len(c), min(_label_order(g.labels[v]) for v in c)))
    if len(largest) == g.node_count:
        return g
    result = induced_subgraph(g, largest)
    logger.debug(f"Giant component: {result.node_count} of {g.node_count} nodes, "
                 f"{len(components)} components")
    return result


def local_clustering(g, v: int) -> float:
    """Локальный коэффициент кластеризации; 0 при степени меньше 2.

    Принимает любой объект с методом neighbors, в том числе граф выборки.
    """
    if isinstance(g, Graph):
        g.check_node(v)
    nbrs = g.neighbors(v)
    d = len(nbrs)
    if d < 2:
        return 0.0
    nbr_set = set(nbrs)
    # Каждое ребро между соседями учтено дважды
    twice_links = sum(len(nbr_set.intersection(g.neighbors(u))) for u in nbrs)
    return twice_links / (d * (d - 1))
