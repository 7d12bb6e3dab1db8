import json
import os

import numpy as np
import pandas as pd
import pytest
from pydantic import ValidationError

from src.bench.datasets import REGISTRY, DatasetRegistryEntry, verify_dataset
from src.bench.experiment import AGGREGATE_KEY, ExperimentRunner, choose_seed_nodes, derive_seed
from src.bench.experiment_config import ExperimentConfig, load_config, read_config_file
from src.bench.overlap import emit_target_overlap
from src.centrality.measures import degree_scores
from src.centrality.scores import Measure, ScoreTable
from src.crawler.state import SampleEdges
from src.exceptions import CentralityError, ConfigError, DataError, GraphError
from src.graph.generators import clique, path, preferential_attachment
from src.metrics.coverage import MetricKind
from src.parser.edge_list import serialize_edge_list
from src.parser.graph_source import parse_generator_spec, resolve_graph_source
from src.services.cache_service import CentralityCache
from src.services.file_service import FileService
from src.services.log_service import LogService


@pytest.fixture
def log_service(tmp_path):
    return LogService(str(tmp_path / "logs"))


@pytest.fixture
def file_service(log_service, tmp_path):
    return FileService(log_service, str(tmp_path / "out"))


@pytest.fixture
def runner(file_service, log_service, tmp_path):
    cache = CentralityCache(file_service, log_service, cache_dir=str(tmp_path / "cache"))
    return ExperimentRunner(file_service, log_service, cache)


def write_graph(g, path):
    with open(path, "w", encoding="utf-8") as f:
        serialize_edge_list(g, f)
    return str(path)


def test_derive_seed_is_stable_and_distinct():
    seed = derive_seed(0, "hamsterster", "MOD", 3)
    assert seed == derive_seed(0, "hamsterster", "MOD", 3)
    assert 0 <= seed < 2 ** 64
    others = {derive_seed(0, "hamsterster", "MOD", i) for i in range(8)}
    others |= {derive_seed(1, "hamsterster", "MOD", 3), derive_seed(0, "hamsterster", "DE", 3)}
    assert len(others) == 10


def test_choose_seed_nodes():
    g = clique(20)
    seeds = choose_seed_nodes(g, "g", 0, 8)
    assert seeds == choose_seed_nodes(g, "g", 0, 8)
    assert len(set(seeds)) == 8
    assert all(0 <= s < 20 for s in seeds)
    assert sorted(choose_seed_nodes(path(3), "p", 0, 3)) == [0, 1, 2]
    with pytest.raises(ConfigError):
        choose_seed_nodes(path(3), "p", 0, 4)


def test_config_defaults_and_lists():
    config = ExperimentConfig(graphs="clique:10; barbell:5,5", crawlers="mod, de", measures="Degree,coreness")
    assert config.graphs == ["clique:10", "barbell:5,5"]
    assert config.crawlers == ["MOD", "DE"]
    assert config.measures == [Measure.DEGREE, Measure.CORENESS]
    assert config.metrics == [MetricKind.NODE_COVERAGE, MetricKind.TARGET_CLOSED]
    assert config.target_fraction == 0.1
    assert config.seed_count == 8
    assert config.sample_edges is SampleEdges.CLOSED_INCIDENT


@pytest.mark.parametrize("changes", [
    {"target_fraction": 0.0},
    {"target_fraction": 1.5},
    {"seed_count": 0},
    {"crawlers": ""},
    {"crawlers": "MOD,SNOWBALL"},
    {"crawlers": "MOD,mod"},
    {"measures": "pagerank"},
    {"betweenness": "approx"},
    {"output_formats": "csv,pdf"},
    {"unknown_key": 1},
])
def test_config_validation(changes):
    with pytest.raises(ValidationError):
        ExperimentConfig(**{"graphs": "clique:5", **changes})


def test_config_file_and_overrides(tmp_path):
    path = tmp_path / "experiment.cfg"
    path.write_text("# эксперимент\nGraphs = clique:6\nseed-count = 3\ncrawlers = BFS,DFS\n", encoding="utf-8")
    assert read_config_file(str(path))["seed_count"] == "3"
    config = load_config(str(path), {"seed_count": 2, "master_seed": None})
    assert config.graphs == ["clique:6"]
    assert config.seed_count == 2
    assert config.crawlers == ["BFS", "DFS"]
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "missing.cfg"))


def test_generator_sources():
    assert parse_generator_spec("preferential_attachment:200,3,seed=42") == \
        ("preferential_attachment", [200, 3], {}, 42)
    source = resolve_graph_source("preferential_attachment:200,3,seed=42")
    assert source.path is None
    assert list(source.graph.edges()) == list(preferential_attachment(200, 3, 42).edges())
    assert resolve_graph_source("erdos_renyi:30,p=0.2,seed=1").graph.is_connected()
    with pytest.raises(GraphError):
        resolve_graph_source("barbell:5")


def test_file_and_dataset_sources(tmp_path):
    graph_path = write_graph(clique(4), tmp_path / "k4.edges")
    source = resolve_graph_source(graph_path)
    assert source.name == "k4"
    assert source.graph.edge_count == 6
    with pytest.raises(DataError):
        resolve_graph_source("hamsterster", REGISTRY, str(tmp_path))
    with pytest.raises(DataError):
        resolve_graph_source(str(tmp_path / "nothing.edges"))


def test_registry_counts():
    assert (REGISTRY["hamsterster"].nodes, REGISTRY["hamsterster"].edges) == (2000, 16097)
    assert (REGISTRY["slashdot"].nodes, REGISTRY["slashdot"].edges) == (51083, 131175)
    assert len(REGISTRY) == 6
    with pytest.raises(ValidationError):
        DatasetRegistryEntry(name="x", filename="x.edges", nodes=0, edges=1, description="")


def test_verify_dataset(tmp_path, log_service):
    graph_path = write_graph(clique(5), tmp_path / "k5.edges")
    entry = DatasetRegistryEntry(name="k5", filename="k5.edges", nodes=5, edges=10, description="clique")
    assert verify_dataset(entry, graph_path, log_service).matches

    wrong = DatasetRegistryEntry(name="k5", filename="k5.edges", nodes=6, edges=10, description="clique")
    report = verify_dataset(wrong, graph_path, log_service)
    assert not report.matches
    assert report.as_dict()["actual"] == {"nodes": 5, "edges": 10}
    assert any("k5" in w for w in log_service.warnings)
    with pytest.raises(DataError):
        verify_dataset(entry, str(tmp_path / "missing.edges"))


def test_verify_dataset_uses_giant_component(tmp_path):
    graph_path = tmp_path / "two.edges"
    graph_path.write_text("a b\nb c\nx y\n", encoding="utf-8")
    entry = DatasetRegistryEntry(name="two", filename="two.edges", nodes=3, edges=2, description="")
    assert verify_dataset(entry, str(graph_path)).matches


def test_overlap_identical_and_disjoint():
    table = degree_scores(preferential_attachment(100, 2, 1))
    same = ScoreTable(Measure.CORENESS, table.scores.copy())
    report = emit_target_overlap([table, same], 0.1)
    assert report["pairwise"] == {"degree&coreness": 10}
    assert report["sizes"] == {"degree": 10, "coreness": 10}

    first = ScoreTable(Measure.DEGREE, np.array([5, 4, 0, 0]))
    second = ScoreTable(Measure.CORENESS, np.array([0, 0, 4, 5]))
    third = ScoreTable(Measure.ECCENTRICITY, np.array([1, 2, 2, 1]))
    report = emit_target_overlap([first, second, third], 0.5)
    assert report["pairwise"]["degree&coreness"] == 0
    assert report["pairwise"]["degree&eccentricity"] == 1
    assert report["pairwise"]["coreness&eccentricity"] == 1
    assert report["triple"] == {"degree&coreness&eccentricity": 0}


def test_overlap_errors():
    table = ScoreTable(Measure.DEGREE, np.array([1, 2, 3]))
    with pytest.raises(CentralityError):
        emit_target_overlap([table], 0.1)
    with pytest.raises(CentralityError):
        emit_target_overlap([table, ScoreTable(Measure.CORENESS, np.array([1, 2]))], 0.1)


def test_degree_and_coreness_targets_overlap_on_preferential_attachment():
    from src.centrality.measures import coreness_scores
    g = preferential_attachment(2000, 3, 0)
    report = emit_target_overlap([degree_scores(g), coreness_scores(g)], 0.1)
    assert report["pairwise"]["degree&coreness"] / report["sizes"]["degree"] >= 0.5


def test_centrality_cache(tmp_path, file_service, log_service):
    graph_path = write_graph(preferential_attachment(60, 2, 3), tmp_path / "ba.edges")
    graph = resolve_graph_source(graph_path).graph
    cache = CentralityCache(file_service, log_service, cache_dir=str(tmp_path / "cache"))
    first = cache.get_or_compute(graph, Measure.BETWEENNESS, graph_path)
    path = cache.cache_path(graph, Measure.BETWEENNESS, graph_path)
    assert os.path.dirname(path) == str(tmp_path)
    assert os.path.isfile(path)
    np.testing.assert_allclose(cache.get_or_compute(graph, Measure.BETWEENNESS, graph_path).scores, first.scores)

    with open(path, "w", encoding="utf-8") as f:
        f.write("node_label,measure,score\n0,betweenness,1.0\n")
    np.testing.assert_allclose(cache.get_or_compute(graph, Measure.BETWEENNESS, graph_path).scores, first.scores)
    assert any("broken cache" in w for w in log_service.warnings)

    approx = cache.cache_path(graph, Measure.BETWEENNESS, graph_path, pivots=10, rng_seed=4)
    assert approx != path and "approx10" in approx


def test_experiment_on_clique(runner, tmp_path):
    output_dir = str(tmp_path / "run")
    config = ExperimentConfig(graphs="clique:10", measures="degree", seed_count=2, output_dir=output_dir,
                              output_formats="csv,json,xlsx")
    result = runner.run_experiment(config)
    assert result.rows == 6 * 2 * 2 * 10

    frame = pd.read_csv(result.outputs["curves"], dtype={"seed": str, "measure": str}, keep_default_na=False)
    assert list(frame.columns) == ["graph", "crawler", "seed", "metric", "measure", "iteration", "value"]
    assert len(frame) == 240
    assert set(frame["metric"]) == {"node_coverage", "target_closed"}
    assert set(frame.loc[frame["metric"] == "node_coverage", "measure"]) == {""}
    # Первый запрос в клике открывает все вершины
    nodes = frame[(frame["metric"] == "node_coverage") & (frame["iteration"] == 1)]
    assert nodes["value"].tolist() == pytest.approx([1.0] * 12)

    with open(result.outputs["summary"], encoding="utf-8") as f:
        summary = json.load(f)
    per_graph = summary["clique:10"]
    assert set(per_graph) == {"RC", "RW", "DFS", "BFS", "MOD", "DE", AGGREGATE_KEY}
    assert set(per_graph[AGGREGATE_KEY]) == {"leaders"}
    assert per_graph["MOD"]["nodes"]["auc"] == pytest.approx(1.0)
    assert per_graph["MOD"]["degree"]["final_value"] == pytest.approx(1.0)
    budgets = per_graph[AGGREGATE_KEY]["leaders"]["degree"]["budget_leaders"]
    assert set(budgets) == {"0.01", "0.05", "0.1", "0.25", "0.5", "1"}

    with open(result.outputs["winners"], encoding="utf-8") as f:
        winners = json.load(f)
    assert set(winners) == {"degree", "nodes"}
    assert winners["nodes"] == {name: 1 for name in ["BFS", "DE", "DFS", "MOD", "RC", "RW"]}
    assert os.path.isfile(result.outputs["xlsx"])


def test_experiment_summary_with_overlap_and_traces(runner, tmp_path):
    config = ExperimentConfig(graphs="barbell:5,5", crawlers="BFS,MOD", measures="degree,coreness,eccentricity",
                              metrics="node_coverage,target_observed,target_closed", seed_count=3,
                              output_dir=str(tmp_path / "run"), save_traces=True, curve_points=4)
    result = runner.run_experiment(config)
    per_graph = result.summary["barbell:5,5"]
    assert set(per_graph["MOD"]) == {"nodes", "degree", "coreness", "eccentricity", "degree_observed",
                                     "coreness_observed", "eccentricity_observed"}
    overlap = per_graph[AGGREGATE_KEY]["target_overlap"]
    assert overlap["fraction"] == 0.1
    assert overlap["sizes"] == {"degree": 1, "coreness": 1, "eccentricity": 1}
    assert set(result.winners) == {"nodes", "degree", "coreness", "eccentricity"}
    # 2 краулера x 3 затравки x 7 кривых x 4 точки
    assert result.rows == 2 * 3 * 7 * 4
    traces = sorted(os.listdir(result.outputs["traces"]))
    assert len(traces) == 6
    with open(os.path.join(result.outputs["traces"], traces[0]), encoding="utf-8") as f:
        assert len(f.read().split()) == 10


def test_experiment_extracts_giant_component(runner, tmp_path):
    graph_path = tmp_path / "split.edges"
    graph_path.write_text("a b\nb c\nc a\nx y\n", encoding="utf-8")
    config = ExperimentConfig(graphs=str(graph_path), crawlers="BFS", measures="degree", seed_count=1,
                              output_dir=str(tmp_path / "run"), output_formats="csv")
    result = runner.run_experiment(config)
    assert result.rows == 2 * 3
    assert set(result.outputs) == {"curves"}


def test_experiment_writes_gaps_to_best(runner, tmp_path):
    config = ExperimentConfig(graphs="barbell:5,5", crawlers="RC,BFS,MOD", measures="degree", seed_count=3,
                              output_dir=str(tmp_path / "run"), output_formats="csv")
    result = runner.run_experiment(config)
    gaps = pd.read_csv(result.outputs["gaps"], dtype={"measure": str}, keep_default_na=False)
    assert list(gaps.columns) == ["graph", "crawler", "metric", "measure", "iteration", "gap"]
    # 3 краулера x 2 кривые x 10 итераций
    assert len(gaps) == 3 * 2 * 10
    assert (gaps["gap"] <= 0).all()
    best = gaps.groupby(["graph", "metric", "measure", "iteration"])["gap"].max()
    assert (best == 0).all()


def test_experiment_gaps_are_downsampled(runner, tmp_path):
    config = ExperimentConfig(graphs="barbell:5,5", crawlers="BFS,MOD", measures="degree", seed_count=2,
                              output_dir=str(tmp_path / "run"), output_formats="csv", curve_points=4)
    gaps = pd.read_csv(runner.run_experiment(config).outputs["gaps"])
    assert sorted(gaps["iteration"].unique()) == [1, 4, 7, 10]


def test_single_crawler_has_no_gaps_or_aggregate(runner, tmp_path):
    config = ExperimentConfig(graphs="clique:6", crawlers="BFS", measures="degree", seed_count=1,
                              output_dir=str(tmp_path / "run"), output_formats="csv,json")
    result = runner.run_experiment(config)
    assert "gaps" not in result.outputs
    assert set(result.summary["clique:6"]) == {"BFS"}


def test_seed_count_above_graph_size_is_config_error(runner, tmp_path):
    config = ExperimentConfig(graphs="path:4", crawlers="BFS", measures="degree", seed_count=5,
                              output_dir=str(tmp_path / "run"))
    with pytest.raises(ConfigError, match="seed_count=5"):
        runner.run_experiment(config)


def test_experiment_is_deterministic(runner, tmp_path):
    outputs = []
    for name in ("first", "second"):
        config = ExperimentConfig(graphs="preferential_attachment:150,2,seed=5", crawlers="RC,RW,DE",
                                  measures="degree,betweenness", seed_count=3, master_seed=11,
                                  output_dir=str(tmp_path / name))
        outputs.append(runner.run_experiment(config).outputs["curves"])
    with open(outputs[0], "rb") as a, open(outputs[1], "rb") as b:
        assert a.read() == b.read()


def test_worker_pool_matches_serial_run(runner, tmp_path):
    frames = []
    for workers in (1, 2):
        config = ExperimentConfig(graphs="preferential_attachment:120,2,seed=1", crawlers="RC,MOD",
                                  measures="degree", seed_count=2, workers=workers,
                                  output_dir=str(tmp_path / f"w{workers}"), output_formats="csv")
        frames.append(pd.read_csv(runner.run_experiment(config).outputs["curves"]))
    pd.testing.assert_frame_equal(frames[0], frames[1])
