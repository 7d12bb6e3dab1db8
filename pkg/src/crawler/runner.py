from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Type

import numpy as np

from src.crawler.advanced import DensificationExpansionCrawler
from src.crawler.basic import (
    BreadthFirstSearchCrawler,
    Crawler,
    DepthFirstSearchCrawler,
    MaximumObservedDegreeCrawler,
    RandomCrawler,
    RandomWalkCrawler,
)
from src.crawler.state import CrawlState, SampleEdges, SampleUpdate, start
from src.exceptions import CrawlError, GraphError
from src.graph.graph import Graph

CRAWLERS: Dict[str, Type[Crawler]] = {
    cls.short: cls
    for cls in (
        RandomCrawler,
        RandomWalkCrawler,
        DepthFirstSearchCrawler,
        BreadthFirstSearchCrawler,
        MaximumObservedDegreeCrawler,
        DensificationExpansionCrawler,
    )
}

# Параметры, которые понимает каждый краулер
CRAWLER_PARAMS: Dict[str, Sequence[str]] = {
    "RW": ("hop_cap",),
    "DE": ("burst", "decay", "switch_ratio", "top_fraction"),
}


@dataclass(frozen=True)
class CrawlSnapshot:
    """Состояние после одного запроса, передаётся наблюдателям"""
    iteration: int
    node: int
    new_nodes: tuple
    closed_count: int
    observed_count: int


Observer = Callable[[CrawlState, CrawlSnapshot], None]


def check_invariants_observer(state: CrawlState, snapshot: CrawlSnapshot) -> None:
    state.check_invariants()


@dataclass(frozen=True)
class RunTrace:
    """Полная запись обхода.

    discovered_at[v] - итерация попадания v в V' (0 для затравки),
    closed_at[v] - номер запроса v (с 1); для не увиденных / не закрытых вершин - node_count + 1.
    """
    crawler: str
    seed: int
    rng_seed: int
    node_count: int
    queried: np.ndarray
    discovered_at: np.ndarray
    closed_at: np.ndarray

    @property
    def length(self) -> int:
        return int(self.queried.shape[0])

    def labels(self, graph: Graph) -> List[str]:
        return [graph.label(v) for v in self.queried.tolist()]


def make_crawler(kind: str, rng=None, **params) -> Crawler:
    key = kind.strip().upper()
    if key not in CRAWLERS:
        raise CrawlError(f"Unknown crawler: {kind}")
    allowed = CRAWLER_PARAMS.get(key, ())
    return CRAWLERS[key](rng, **{k: v for k, v in params.items() if k in allowed and v is not None})


def run_crawl(graph: Graph, kind: str, seed: int, rng_seed: int, observers: Iterable[Observer] = (),
              budget: Optional[int] = None, sample_edges: SampleEdges = SampleEdges.CLOSED_INCIDENT,
              debug: bool = False, **params) -> RunTrace:
    """Цикл select -> query до исчерпания V'_o (или бюджета запросов)"""
    if not graph.is_connected():
        raise GraphError("Crawling requires a connected graph; extract the giant component first")
    crawler = make_crawler(kind, rng_seed, **params)
    state = start(graph, seed, sample_edges)
    crawler.reset(state)
    observers = list(observers)
    if debug:
        observers.append(check_invariants_observer)
    limit = graph.node_count if budget is None else min(budget, graph.node_count)

    while state.observed and state.iteration < limit:
        v = crawler.select(state)
        update: SampleUpdate = state.query(v)
        crawler.observe(state, update)
        if observers:
            snapshot = CrawlSnapshot(state.iteration, v, update.new_nodes, len(state.closed), len(state.observed))
            for observer in observers:
                observer(state, snapshot)

    n = graph.node_count
    unseen = n + 1
    queried = np.array(state.trace, dtype=np.int64)
    discovered = np.array(state.discovered_at, dtype=np.int64)
    discovered[discovered == CrawlState.NOT_SEEN] = unseen
    closed_at = np.full(n, unseen, dtype=np.int64)
    closed_at[queried] = np.arange(1, queried.shape[0] + 1)
    return RunTrace(crawler.short, seed, rng_seed, n, queried, discovered, closed_at)
