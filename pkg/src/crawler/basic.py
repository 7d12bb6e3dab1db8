"""Базовые стратегии выбора следующей вершины: RC, RW, DFS, BFS, MOD."""
import heapq
from abc import ABC, abstractmethod
from collections import deque
from typing import ClassVar, Dict, List, Optional

from src.config.settings import settings
from src.crawler.state import CrawlState, SampleUpdate
from src.exceptions import CrawlError
from src.graph.generators import RandomState, make_rng


class Crawler(ABC):
    """Стратегия краулера: выбирает вершину из V'_o и следит за своим состоянием"""

    short: ClassVar[str] = ""

    def __init__(self, rng: RandomState = None):
        self.rng = make_rng(rng)

    def reset(self, state: CrawlState) -> None:
        """Вызывается один раз сразу после start()"""

    def observe(self, state: CrawlState, update: SampleUpdate) -> None:
        """Вызывается после каждого запроса"""

    @abstractmethod
    def _select(self, state: CrawlState) -> int:
        ...

    def select(self, state: CrawlState) -> int:
        if not state.observed:
            raise CrawlError(f"{self.short}: frontier is empty")
        return self._select(state)


class RandomCrawler(Crawler):
    """RC: равновероятный выбор из V'_o"""

    short = "RC"

    def reset(self, state: CrawlState) -> None:
        self.pool: List[int] = sorted(state.observed)
        self.index: Dict[int, int] = {v: i for i, v in enumerate(self.pool)}

    def observe(self, state: CrawlState, update: SampleUpdate) -> None:
        # Удаление перестановкой с последним элементом, O(1)
        i = self.index.pop(update.node)
        last = self.pool.pop()
        if i < len(self.pool):
            self.pool[i] = last
            self.index[last] = i
        for v in update.new_nodes:
            self.index[v] = len(self.pool)
            self.pool.append(v)

    def _select(self, state: CrawlState) -> int:
        return self.pool[int(self.rng.integers(len(self.pool)))]


class RandomWalkCrawler(Crawler):
    """RW: блуждание по S от последней закрытой вершины до первой наблюдаемой.

    Переходы по закрытым вершинам бесплатны: итерацией считается только запрос.
    """

    short = "RW"

    def __init__(self, rng: RandomState = None, hop_cap: Optional[int] = None):
        super().__init__(rng)
        self.hop_cap = hop_cap or settings.RW_HOP_CAP
        self.position: Optional[int] = None
        self.hops = 0

    def reset(self, state: CrawlState) -> None:
        self.position = None
        self.hops = 0

    def observe(self, state: CrawlState, update: SampleUpdate) -> None:
        self.position = update.node

    def _select(self, state: CrawlState) -> int:
        if self.position is None:
            return next(iter(state.observed))
        # Соседи закрытой вершины в S совпадают с её соседями в G
        adjacency = state.graph.adjacency
        observed = state.observed
        current = self.position
        for _ in range(self.hop_cap):
            nbrs = adjacency[current]
            current = nbrs[int(self.rng.integers(len(nbrs)))]
            self.hops += 1
            if current in observed:
                return current
        raise CrawlError(f"RW: walk exceeded {self.hop_cap} hops without reaching the frontier")


class DepthFirstSearchCrawler(Crawler):
    """DFS: стек вершин в порядке обнаружения"""

    short = "DFS"

    def reset(self, state: CrawlState) -> None:
        self.frontier = deque(sorted(state.observed))

    def observe(self, state: CrawlState, update: SampleUpdate) -> None:
        self.frontier.extend(sorted(update.new_nodes))

    def _pop(self) -> int:
        return self.frontier.pop()

    def _select(self, state: CrawlState) -> int:
        # Пропуск устаревших (уже закрытых) записей
        while self.frontier:
            v = self._pop()
            if v in state.observed:
                return v
        raise CrawlError(f"{self.short}: frontier structure is out of sync with the crawl state")


class BreadthFirstSearchCrawler(DepthFirstSearchCrawler):
    """BFS: очередь вершин в порядке обнаружения"""

    short = "BFS"

    def _pop(self) -> int:
        return self.frontier.popleft()


class MaximumObservedDegreeCrawler(Crawler):
    """MOD: вершина V'_o с максимальной степенью в S, при равенстве - с меньшим id.

    Куча (-deg(v, S), v) с ленивым удалением: O(log |V'_o|) на каждое изменение степени.
    """

    short = "MOD"

    def reset(self, state: CrawlState) -> None:
        self.heap = [(-int(state.sample.degree[v]), v) for v in sorted(state.observed)]
        heapq.heapify(self.heap)

    def observe(self, state: CrawlState, update: SampleUpdate) -> None:
        degree = state.sample.degree
        touched = {v for edge in update.new_edges for v in edge}
        for v in sorted(touched):
            if v in state.observed:
                heapq.heappush(self.heap, (-int(degree[v]), v))

    def _select(self, state: CrawlState) -> int:
        degree = state.sample.degree
        heap = self.heap
        while heap:
            d, v = heap[0]
            if v in state.observed and -d == degree[v]:
                return v
            heapq.heappop(heap)
        raise CrawlError("MOD: frontier structure is out of sync with the crawl state")
