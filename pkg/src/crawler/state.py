from dataclasses import dataclass, field
from enum import Enum
from typing import List, Set, Tuple

import numpy as np

from src.exceptions import CrawlError
from src.graph.graph import Graph


class SampleEdges(str, Enum):
    """Какие рёбра попадают в граф выборки S"""
    CLOSED_INCIDENT = "closed-incident"  # только рёбра с закрытым концом
    INDUCED = "induced"  # все рёбра G между вершинами V'


class SampleGraph:
    """Граф выборки S над V' = V'_c ∪ V'_o"""

    def __init__(self, node_count: int):
        self._adjacency: List[Set[int]] = [set() for _ in range(node_count)]
        self.degree = np.zeros(node_count, dtype=np.int64)
        self.edge_count = 0

    def neighbors(self, v: int) -> Set[int]:
        return self._adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency[u]

    def add_edge(self, u: int, v: int) -> bool:
        if v in self._adjacency[u]:
            return False
        self._adjacency[u].add(v)
        self._adjacency[v].add(u)
        self.degree[u] += 1
        self.degree[v] += 1
        self.edge_count += 1
        return True


@dataclass(frozen=True)
class SampleUpdate:
    """Результат одного запроса"""
    node: int
    new_nodes: Tuple[int, ...]
    new_edges: Tuple[Tuple[int, int], ...] = field(default=())


class CrawlState:
    NOT_SEEN = -1

    def __init__(self, graph: Graph, seed: int, sample_edges: SampleEdges = SampleEdges.CLOSED_INCIDENT):
        graph.check_node(seed)
        self.graph = graph
        self.seed = seed
        self.sample_edges = SampleEdges(sample_edges)
        self.closed: Set[int] = set()
        self.observed: Set[int] = {seed}
        self.sample = SampleGraph(graph.node_count)
        self.iteration = 0
        self.trace: List[int] = []
        # Итерация, на которой вершина впервые попала в V' (затравка - 0)
        self.discovered_at: List[int] = [self.NOT_SEEN] * graph.node_count
        self.discovered_at[seed] = 0

    @property
    def seen_count(self) -> int:
        return len(self.closed) + len(self.observed)

    def is_seen(self, v: int) -> bool:
        return self.discovered_at[v] != self.NOT_SEEN

    def query(self, v: int) -> SampleUpdate:
        """Закрытие вершины v: её соседи попадают в V'_o, инцидентные рёбра - в S"""
        if v not in self.observed:
            status = "closed" if v in self.closed else "unseen"
            raise CrawlError(f"Cannot query node {v}: it is {status}")
        self.observed.discard(v)
        self.closed.add(v)
        self.iteration += 1
        self.trace.append(v)

        graph = self.graph
        new_nodes = []
        new_edges = []
        for w in graph.neighbors(v):
            if self.discovered_at[w] == self.NOT_SEEN:
                self.discovered_at[w] = self.iteration
                self.observed.add(w)
                new_nodes.append(w)
            if self.sample.add_edge(v, w):
                new_edges.append((v, w))
        if self.sample_edges is SampleEdges.INDUCED:
            for x in new_nodes:
                for y in graph.neighbors(x):
                    if y != v and self.is_seen(y) and self.sample.add_edge(x, y):
                        new_edges.append((x, y))
        return SampleUpdate(v, tuple(new_nodes), tuple(new_edges))

    def check_invariants(self) -> None:
        """Полная проверка инвариантов состояния (режим отладки)"""
        if self.closed & self.observed:
            raise CrawlError("closed and observed sets intersect")
        if not (self.iteration == len(self.closed) == len(self.trace)):
            raise CrawlError("iteration, |closed| and trace length disagree")
        if self.seen_count != sum(1 for t in self.discovered_at if t != self.NOT_SEEN):
            raise CrawlError("discovery times disagree with V'")
        graph = self.graph
        for v in self.closed:
            for w in graph.neighbors(v):
                if w not in self.closed and w not in self.observed:
                    raise CrawlError(f"neighbor {w} of closed node {v} is unseen")
            if self.sample.degree[v] != graph.degree(v):
                raise CrawlError(f"closed node {v} has incomplete sample degree")
        for v in self.observed:
            if self.sample.degree[v] > graph.degree(v):
                raise CrawlError(f"node {v} has sample degree above its real degree")


def start(graph: Graph, seed: int, sample_edges: SampleEdges = SampleEdges.CLOSED_INCIDENT) -> CrawlState:
    return CrawlState(graph, seed, sample_edges)


def query(state: CrawlState, graph: Graph, v: int) -> Tuple[int, ...]:
    """Запрос вершины; возвращает впервые увиденные вершины"""
    if graph is not state.graph:
        raise CrawlError("State was started on a different graph")
    return state.query(v).new_nodes
