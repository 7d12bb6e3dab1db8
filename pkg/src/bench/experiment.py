"""Запуск эксперимента: графы x краулеры x затравки, кривые покрытия и сводки.

Сиды отдельных запусков выводятся из master_seed хэшем, поэтому любой запуск
(graph, crawler, seed_index) воспроизводится отдельно от остальных.
"""
import hashlib
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, NamedTuple, Optional, Sequence

import numpy as np
import pandas as pd

from src.bench.datasets import REGISTRY
from src.bench.experiment_config import ExperimentConfig
from src.bench.overlap import emit_target_overlap
from src.centrality.scores import Measure, ScoreTable, TargetSet, build_target_set
from src.config.settings import settings
from src.crawler.runner import RunTrace, run_crawl
from src.crawler.state import SampleEdges
from src.exceptions import ConfigError
from src.graph.graph import Graph, giant_component
from src.metrics.aggregate import RunResult, budget_leaders, gap_to_best, leader_changes, winner_tally
from src.metrics.coverage import (
    CoverageCurve,
    MetricKind,
    Variant,
    average_curves,
    downsample,
    node_coverage,
    target_coverage,
)
from src.parser.graph_source import GraphSource, resolve_graph_source
from src.services.cache_service import CentralityCache
from src.services.file_service import FileService
from src.services.log_service import LogService

CURVES_FILE = "curves.csv"
GAPS_FILE = "gaps.csv"
SUMMARY_FILE = "summary.json"
WINNERS_FILE = "winners.json"
EXCEL_FILE = "auc_summary.xlsx"
TRACES_DIR = "traces"
CSV_COLUMNS = ["graph", "crawler", "seed", "metric", "measure", "iteration", "value"]
GAP_COLUMNS = ["graph", "crawler", "metric", "measure", "iteration", "gap"]
# Ключ сводки графа со сравнением краулеров между собой
AGGREGATE_KEY = "_aggregate"


def _digest_seed(text: str) -> int:
    return int.from_bytes(hashlib.blake2b(text.encode("utf-8"), digest_size=8).digest(), "little")


def derive_seed(master_seed: int, graph_name: str, crawler: str, seed_index: int) -> int:
    """Сид запуска: первые 8 байт blake2b("master|graph|crawler|index") (little endian)"""
    return _digest_seed(f"{master_seed}|{graph_name}|{crawler}|{seed_index}")


def choose_seed_nodes(graph: Graph, graph_name: str, master_seed: int, count: int) -> List[int]:
    """Равномерный выбор различных затравок из V; одни и те же вершины для всех краулеров"""
    if count > graph.node_count:
        raise ConfigError(f"seed_count={count} exceeds the {graph.node_count} nodes of graph {graph_name}")
    rng = np.random.Generator(np.random.PCG64(_digest_seed(f"{master_seed}|{graph_name}|seeds")))
    return rng.choice(graph.node_count, size=count, replace=False).tolist()


class CrawlTask(NamedTuple):
    crawler: str
    seed_index: int
    seed_node: int
    rng_seed: int
    budget: Optional[int]
    sample_edges: SampleEdges
    params: Dict[str, Any]


_WORKER_GRAPH: Optional[Graph] = None


def _init_worker(graph: Graph) -> None:
    global _WORKER_GRAPH
    _WORKER_GRAPH = graph


def _crawl(graph: Graph, task: CrawlTask) -> RunTrace:
    return run_crawl(graph, task.crawler, task.seed_node, task.rng_seed, budget=task.budget,
                     sample_edges=task.sample_edges, **task.params)


def _crawl_in_worker(task: CrawlTask) -> RunTrace:
    return _crawl(_WORKER_GRAPH, task)


def file_safe_name(name: str) -> str:
    return re.sub(r"[^\w.-]+", "_", name)


@dataclass
class GraphResult:
    name: str
    graph: Graph
    runs: List[RunResult] = field(default_factory=list)
    traces: List[RunTrace] = field(default_factory=list)
    target_overlap: Optional[dict] = None


@dataclass
class ExperimentResult:
    outputs: Dict[str, str]
    summary: dict
    winners: dict
    rows: int


class ExperimentRunner:
    def __init__(self, file_service: FileService, log_service: LogService,
                 cache: Optional[CentralityCache] = None):
        self.file_service = file_service
        self.log_service = log_service
        self.cache = cache

    def _cache_for(self, config: ExperimentConfig) -> CentralityCache:
        if self.cache is not None:
            return self.cache
        return CentralityCache(self.file_service, self.log_service, enabled=config.cache)

    def load_graph(self, source: str) -> GraphSource:
        """Граф источника, сведённый к гигантской компоненте"""
        loaded = resolve_graph_source(source, REGISTRY)
        if loaded.graph.is_connected():
            return loaded
        graph = giant_component(loaded.graph)
        self.log_service.log_to_file(
            f"Graph {loaded.name} is disconnected; using giant component "
            f"({graph.node_count} of {loaded.graph.node_count} nodes)", "info")
        return GraphSource(loaded.name, graph, loaded.path)

    def score_tables(self, source: GraphSource, config: ExperimentConfig) -> Dict[Measure, ScoreTable]:
        cache = self._cache_for(config)
        pivot_seed = _digest_seed(f"{config.master_seed}|{source.name}|pivots")
        return {
            measure: cache.get_or_compute(source.graph, measure, source.path, pivots=config.approx_pivots,
                                          rng_seed=pivot_seed, workers=config.workers)
            for measure in config.measures
        }

    def target_overlap(self, tables: Dict[Measure, ScoreTable], p: float) -> Optional[dict]:
        if len(tables) < 2:
            return None
        report = emit_target_overlap(list(tables.values()), p)
        report["fraction"] = p
        return report

    def _crawl_all(self, graph: Graph, tasks: Sequence[CrawlTask], workers: int) -> List[RunTrace]:
        if workers <= 1 or len(tasks) <= 1:
            return [_crawl(graph, task) for task in tasks]
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(graph,)) as executor:
            # порядок результатов совпадает с порядком задач
            return list(executor.map(_crawl_in_worker, tasks))

    @staticmethod
    def _curves(trace: RunTrace, config: ExperimentConfig,
                targets: Dict[Measure, TargetSet]) -> Dict[str, CoverageCurve]:
        curves: List[CoverageCurve] = []
        for metric in config.metrics:
            if metric is MetricKind.NODE_COVERAGE:
                curves.append(node_coverage(trace))
                continue
            variant = Variant.OBSERVED if metric is MetricKind.TARGET_OBSERVED else Variant.CLOSED
            curves.extend(target_coverage(trace, targets[m], variant) for m in config.measures)
        return {curve.key: curve for curve in curves}

    def run_graph(self, source: str, config: ExperimentConfig) -> GraphResult:
        loaded = self.load_graph(source)
        graph = loaded.graph
        self.log_service.log_to_file(f"Graph {loaded.name}: {graph.node_count} nodes, {graph.edge_count} edges",
                                     "info")
        result = GraphResult(loaded.name, graph)

        targets: Dict[Measure, TargetSet] = {}
        if any(m is not MetricKind.NODE_COVERAGE for m in config.metrics):
            tables = self.score_tables(loaded, config)
            targets = {m: build_target_set(table, config.target_fraction) for m, table in tables.items()}
            result.target_overlap = self.target_overlap(tables, config.target_fraction)

        seeds = choose_seed_nodes(graph, loaded.name, config.master_seed, config.seed_count)
        params = config.crawler_params()
        tasks = [
            CrawlTask(crawler, index, seed, derive_seed(config.master_seed, loaded.name, crawler, index),
                      config.budget, config.sample_edges, params)
            for crawler in config.crawlers
            for index, seed in enumerate(seeds)
        ]
        self.log_service.log_to_file(f"Running {len(tasks)} crawls on {loaded.name} "
                                     f"({config.workers} worker(s))", "info")
        traces = self._crawl_all(graph, tasks, config.workers)

        for task, trace in zip(tasks, traces):
            result.runs.append(RunResult(loaded.name, task.crawler, task.seed_node, task.seed_index,
                                         self._curves(trace, config, targets)))
        result.traces = traces
        return result

    @staticmethod
    def curves_frame(results: Sequence[GraphResult], curve_points: int = 0) -> pd.DataFrame:
        frames = []
        for result in results:
            for run in result.runs:
                seed_label = result.graph.label(run.seed)
                for curve in run.curves.values():
                    iterations, values = downsample(curve, curve_points)
                    frames.append(pd.DataFrame({
                        "graph": result.name,
                        "crawler": run.crawler,
                        "seed": seed_label,
                        "metric": curve.metric.value,
                        "measure": curve.measure.value if curve.measure is not None else "",
                        "iteration": iterations,
                        "value": values,
                    }))
        if not frames:
            return pd.DataFrame(columns=CSV_COLUMNS)
        return pd.concat(frames, ignore_index=True)[CSV_COLUMNS]

    @staticmethod
    def averaged_curves(result: GraphResult, crawlers: Sequence[str]) -> Dict[str, Dict[str, CoverageCurve]]:
        """Кривые, усреднённые по затравкам: ключ метрики -> краулер -> кривая"""
        averaged: Dict[str, Dict[str, CoverageCurve]] = {}
        for crawler in crawlers:
            runs = [run for run in result.runs if run.crawler == crawler]
            for key in runs[0].curves:
                averaged.setdefault(key, {})[crawler] = average_curves([run.curves[key] for run in runs])
        return averaged

    @classmethod
    def summarize(cls, result: GraphResult, crawlers: Sequence[str]) -> dict:
        """Сводка по графу: AUC (среднее и std по затравкам), финальное значение.

        Лидеры и пересечения V* лежат отдельно под AGGREGATE_KEY, чтобы остальные
        ключи сводки были именами краулеров.
        """
        averaged = cls.averaged_curves(result, crawlers)
        summary: Dict[str, Any] = {}
        for crawler in crawlers:
            runs = [run for run in result.runs if run.crawler == crawler]
            summary[crawler] = {}
            for key in runs[0].curves:
                aucs = np.array([run.aucs[key] for run in runs])
                summary[crawler][key] = {
                    "auc": float(aucs.mean()),
                    "auc_std": float(aucs.std()),
                    "final_value": averaged[key][crawler].final_value,
                }
        aggregate: Dict[str, Any] = {}
        if len(crawlers) >= 2:
            aggregate["leaders"] = {
                key: {
                    "budget_leaders": budget_leaders(curves, settings.LEADER_BUDGETS),
                    "leader_changes": leader_changes(curves),
                }
                for key, curves in averaged.items()
            }
        if result.target_overlap is not None:
            aggregate["target_overlap"] = result.target_overlap
        if aggregate:
            summary[AGGREGATE_KEY] = aggregate
        return summary

    @classmethod
    def gaps_frame(cls, results: Sequence[GraphResult], crawlers: Sequence[str],
                   curve_points: int = 0) -> pd.DataFrame:
        """Отставание усреднённых кривых от поточечно лучшего краулера (нужно хотя бы 2 краулера)"""
        frames = []
        for result in results:
            for key, curves in cls.averaged_curves(result, crawlers).items():
                gaps = gap_to_best(curves)
                for crawler, curve in curves.items():
                    iterations, values = downsample(CoverageCurve(gaps[crawler], curve.metric, curve.measure),
                                                    curve_points)
                    frames.append(pd.DataFrame({
                        "graph": result.name,
                        "crawler": crawler,
                        "metric": curve.metric.value,
                        "measure": curve.measure.value if curve.measure is not None else "",
                        "iteration": iterations,
                        "gap": values,
                    }))
        if not frames:
            return pd.DataFrame(columns=GAP_COLUMNS)
        return pd.concat(frames, ignore_index=True)[GAP_COLUMNS]

    @staticmethod
    def auc_table(summary: Dict[str, dict], crawlers: Sequence[str]) -> pd.DataFrame:
        rows = [
            {"graph": graph, "crawler": crawler, "metric": key, **stats}
            for graph, per_graph in summary.items()
            for crawler in crawlers
            for key, stats in per_graph[crawler].items()
        ]
        return pd.DataFrame(rows, columns=["graph", "crawler", "metric", "auc", "auc_std", "final_value"])

    @staticmethod
    def winners(table: pd.DataFrame) -> dict:
        """Подсчёт побед по AUC: цели закрытого варианта и покрытие вершин"""
        closed = table[~table["metric"].str.endswith("_observed")]
        if closed.empty:
            return {}
        return winner_tally(closed.rename(columns={"metric": "measure"}))

    def save_traces(self, result: GraphResult, output_dir: str) -> None:
        directory = os.path.join(output_dir, TRACES_DIR)
        for run, trace in zip(result.runs, result.traces):
            filename = f"{file_safe_name(result.name)}__{run.crawler}__{run.seed_index}.txt"
            self.file_service.save_lines(trace.labels(result.graph), self.file_service.path(filename, directory))

    def run_experiment(self, config: ExperimentConfig) -> ExperimentResult:
        """Все графы конфигурации; файлы результатов пишутся один раз в конце"""
        self.log_service.clear_warnings()
        results = [self.run_graph(source, config) for source in config.graphs]
        summary = {result.name: self.summarize(result, config.crawlers) for result in results}
        table = self.auc_table(summary, config.crawlers)
        winners = self.winners(table)

        outputs: Dict[str, str] = {}
        frame = self.curves_frame(results, config.curve_points)
        if "csv" in config.output_formats:
            outputs["curves"] = self.file_service.save_to_csv(
                frame, self.file_service.path(CURVES_FILE, config.output_dir))
            if len(config.crawlers) >= 2:
                outputs["gaps"] = self.file_service.save_to_csv(
                    self.gaps_frame(results, config.crawlers, config.curve_points),
                    self.file_service.path(GAPS_FILE, config.output_dir))
        if "json" in config.output_formats:
            outputs["summary"] = self.file_service.save_to_json(
                summary, self.file_service.path(SUMMARY_FILE, config.output_dir))
            outputs["winners"] = self.file_service.save_to_json(
                winners, self.file_service.path(WINNERS_FILE, config.output_dir))
        if "xlsx" in config.output_formats:
            saved = self.file_service.save_to_excel(table, self.file_service.path(EXCEL_FILE, config.output_dir))
            if saved:
                outputs["xlsx"] = saved
        if config.save_traces:
            for result in results:
                self.save_traces(result, config.output_dir)
            outputs["traces"] = os.path.join(config.output_dir, TRACES_DIR)

        self.log_service.log_to_file(f"Experiment finished: {len(frame)} curve rows, outputs {sorted(outputs)}, "
                                     f"{len(self.log_service.warnings)} warning(s)", "info")
        return ExperimentResult(outputs, summary, winners, len(frame))
