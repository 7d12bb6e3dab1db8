import hashlib
import os
from typing import Optional

from src.centrality.measures import compute_scores
from src.centrality.scores import Measure, ScoreTable
from src.config.settings import settings
from src.exceptions import CentralityError, DataError
from src.graph.graph import Graph
from src.services.file_service import FileService
from src.services.log_service import LogService


def graph_digest(graph: Graph) -> str:
    """Хэш содержимого графа (метки и рёбра)"""
    digest = hashlib.sha256()
    digest.update(f"{graph.node_count} {graph.edge_count}\n".encode())
    for label in graph.labels:
        digest.update(label.encode("utf-8") + b"\n")
    for u, v in graph.edges():
        digest.update(f"{u} {v}\n".encode())
    return digest.hexdigest()


class CentralityCache:
    """Кэш таблиц центральности на диске рядом с файлом графа"""

    def __init__(self, file_service: FileService, log_service: LogService, cache_dir: Optional[str] = None,
                 enabled: bool = True):
        self.file_service = file_service
        self.log_service = log_service
        self.cache_dir = cache_dir or settings.CACHE_DIR
        self.enabled = enabled

    def cache_path(self, graph: Graph, measure: Measure, source_path: Optional[str] = None,
                   pivots: Optional[int] = None, rng_seed: int = 0) -> str:
        variant = measure.value
        if measure is Measure.BETWEENNESS and pivots is not None and pivots < graph.node_count:
            variant = f"{variant}-approx{pivots}-seed{rng_seed}"
        if source_path:
            directory, base = os.path.split(os.path.abspath(source_path))
        else:
            directory, base = self.cache_dir, "generated"
        return os.path.join(directory, f"{base}.{graph_digest(graph)[:16]}.{variant}.csv")

    def get_or_compute(self, graph: Graph, measure: Measure, source_path: Optional[str] = None,
                       pivots: Optional[int] = None, rng_seed: int = 0, workers: int = 1) -> ScoreTable:
        path = self.cache_path(graph, measure, source_path, pivots, rng_seed) if self.enabled else None
        if path and os.path.isfile(path):
            try:
                table = ScoreTable.from_frame(self.file_service.load_csv(path), graph.labels)
                self.log_service.log_to_file(f"Loaded {measure.value} scores from cache {path}", "info")
                return table
            except (CentralityError, DataError, KeyError) as e:
                self.log_service.log_to_file(f"Ignoring broken cache {path}: {e}", "warning")

        self.log_service.log_to_file(f"Computing {measure.value} scores for {graph!r}", "info")
        table = compute_scores(graph, measure, pivots=pivots, rng=rng_seed, workers=workers)
        if path:
            os.makedirs(os.path.dirname(path), exist_ok=True)
            self.file_service.save_to_csv(table.to_frame(graph.labels), path, float_format=None)
        return table
