import argparse
import os
from typing import Any, Dict, List, Optional

from src.bench.datasets import REGISTRY, DatasetReport, verify_dataset
from src.bench.experiment import ExperimentRunner, file_safe_name
from src.bench.experiment_config import ExperimentConfig, load_config
from src.config.settings import settings
from src.exceptions import ConfigError, DataError
from src.services.file_service import FileService
from src.services.log_service import LogService

# Флаги, которые переносятся в ExperimentConfig (имя поля = dest)
CONFIG_FLAGS = (
    "graphs", "crawlers", "measures", "metrics", "target_fraction", "seed_count", "master_seed",
    "sample_edges", "betweenness", "pivots", "output_dir", "output_formats", "workers", "curve_points",
    "budget", "cache", "save_traces", "rw_hop_cap", "de_burst", "de_decay", "de_switch_ratio",
    "de_top_fraction",
)


def add_config_flags(parser: argparse.ArgumentParser) -> None:
    """Флаги, повторяющие поля ExperimentConfig; заданные флаги перекрывают файл"""
    parser.add_argument("--config", help="Файл конфигурации key = value")
    parser.add_argument("--graphs", "--graph", dest="graphs",
                        help="Источники графов через ';': файл, имя набора или kind:args[,seed=N]")
    parser.add_argument("--crawlers", help="Краулеры через запятую: RC,RW,DFS,BFS,MOD,DE")
    parser.add_argument("--measures", help="Меры через запятую: degree,coreness,betweenness,eccentricity")
    parser.add_argument("--metrics", help="Метрики: node_coverage,target_observed,target_closed")
    parser.add_argument("--target-fraction", type=float, dest="target_fraction")
    parser.add_argument("--seed-count", type=int, dest="seed_count")
    parser.add_argument("--master-seed", type=int, dest="master_seed")
    parser.add_argument("--sample-edges", dest="sample_edges", choices=["closed-incident", "induced"])
    parser.add_argument("--betweenness", choices=["exact", "approx"])
    parser.add_argument("--pivots", type=int)
    parser.add_argument("--output-dir", dest="output_dir")
    parser.add_argument("--output-formats", dest="output_formats", help="csv,json,xlsx")
    parser.add_argument("--workers", type=int)
    parser.add_argument("--curve-points", type=int, dest="curve_points")
    parser.add_argument("--budget", type=int)
    parser.add_argument("--no-cache", dest="cache", action="store_const", const=False, default=None)
    parser.add_argument("--save-traces", dest="save_traces", action="store_const", const=True, default=None)
    parser.add_argument("--rw-hop-cap", type=int, dest="rw_hop_cap")
    parser.add_argument("--de-burst", type=int, dest="de_burst")
    parser.add_argument("--de-decay", type=float, dest="de_decay")
    parser.add_argument("--de-switch-ratio", type=float, dest="de_switch_ratio")
    parser.add_argument("--de-top-fraction", type=float, dest="de_top_fraction")


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    overrides = {name: getattr(args, name) for name in CONFIG_FLAGS}
    if args.config is None and overrides["graphs"] is None:
        raise ConfigError("No graph given: use --graphs or a config file with 'graphs'")
    return load_config(args.config, overrides)


class CommandHandlers:
    def __init__(self, runner: ExperimentRunner, file_service: FileService, log_service: LogService):
        self.runner = runner
        self.file_service = file_service
        self.log_service = log_service

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="crawl-bench",
            description="Сравнение стратегий обхода сетей по скорости сбора центральных вершин.",
        )
        verbs = parser.add_subparsers(dest="verb", required=True)

        run = verbs.add_parser("run", help="Запуск эксперимента")
        add_config_flags(run)
        run.set_defaults(handler=self.run)

        centrality = verbs.add_parser("centrality", help="Расчёт и кэширование таблиц центральности")
        add_config_flags(centrality)
        centrality.set_defaults(handler=self.centrality)

        overlap = verbs.add_parser("overlap", help="Пересечения целевых множеств V*")
        add_config_flags(overlap)
        overlap.set_defaults(handler=self.overlap)

        verify = verbs.add_parser("verify", help="Проверка наборов данных по реестру")
        verify.add_argument("names", nargs="*", help="Имена наборов (по умолчанию все)")
        verify.add_argument("--data-dir", dest="data_dir", default=None)
        verify.add_argument("--path", help="Файл для проверки вместо DATA_DIR/<filename> (один набор)")
        verify.add_argument("--output-dir", dest="output_dir", default=None)
        verify.set_defaults(handler=self.verify)
        return parser

    def run(self, args: argparse.Namespace) -> int:
        config = config_from_args(args)
        result = self.runner.run_experiment(config)
        print(f"✅ Эксперимент завершён: {result.rows} строк кривых")
        for name, path in sorted(result.outputs.items()):
            print(f"📄 {name}: {path}")
        return 0

    def centrality(self, args: argparse.Namespace) -> int:
        config = config_from_args(args)
        for source in config.graphs:
            loaded = self.runner.load_graph(source)
            tables = self.runner.score_tables(loaded, config)
            for measure, table in tables.items():
                filename = f"{file_safe_name(loaded.name)}.{measure.value}.csv"
                path = self.file_service.save_to_csv(table.to_frame(loaded.graph.labels),
                                                     self.file_service.path(filename, config.output_dir))
                print(f"📊 {loaded.name} / {measure.value}: {path}")
        return 0

    def overlap(self, args: argparse.Namespace) -> int:
        config = config_from_args(args)
        if len(config.measures) < 2:
            raise ConfigError("Target overlap needs at least 2 measures")
        reports: Dict[str, Any] = {}
        for source in config.graphs:
            loaded = self.runner.load_graph(source)
            reports[loaded.name] = self.runner.target_overlap(self.runner.score_tables(loaded, config),
                                                              config.target_fraction)
        path = self.file_service.save_to_json(reports, self.file_service.path("overlap.json", config.output_dir))
        print(f"🔗 Пересечения V* сохранены: {path}")
        return 0

    def _dataset_paths(self, names: List[str], data_dir: Optional[str], path: Optional[str]) -> Dict[str, str]:
        unknown = [name for name in names if name not in REGISTRY]
        if unknown:
            raise ConfigError(f"Unknown dataset(s): {', '.join(unknown)}; known: {', '.join(REGISTRY)}")
        if path:
            if len(names) != 1:
                raise ConfigError("--path requires exactly one dataset name")
            return {names[0]: path}
        directory = data_dir or settings.DATA_DIR
        paths = {name: os.path.join(directory, REGISTRY[name].filename) for name in names or REGISTRY}
        missing = [name for name, p in paths.items() if not os.path.isfile(p)]
        if names and missing:
            raise DataError(f"Dataset file(s) not found: {', '.join(paths[m] for m in missing)}")
        for name in missing:
            self.log_service.log_to_file(f"Dataset {name} is not available locally ({paths[name]}), skipped",
                                         "warning")
        return {name: p for name, p in paths.items() if name not in missing}

    def verify(self, args: argparse.Namespace) -> int:
        paths = self._dataset_paths(list(args.names), args.data_dir, args.path)
        reports: List[DatasetReport] = [verify_dataset(REGISTRY[name], p, self.log_service) for name, p in paths.items()]
        for report in reports:
            mark = "✅" if report.matches else "⚠️"
            print(f"{mark} {report.name}: {report.actual_nodes} вершин, {report.actual_edges} рёбер "
                  f"(ожидалось {report.expected_nodes}, {report.expected_edges})")
        if not reports:
            print("⚠️ Ни одного набора данных не найдено локально")
        path = self.file_service.save_to_json({r.name: r.as_dict() for r in reports},
                                              self.file_service.path("datasets.json", args.output_dir))
        print(f"📄 Отчёт: {path}")
        return 0
