"""Качественные свойства краулеров на графах с известной структурой и на настольных масштабах."""
import os

import numpy as np
import pytest

from src.bench.datasets import REGISTRY
from src.bench.experiment import ExperimentRunner
from src.bench.experiment_config import ExperimentConfig
from src.centrality.measures import degree_scores
from src.centrality.scores import rank_nodes
from src.config.settings import settings
from src.crawler.runner import run_crawl
from src.graph.generators import barbell, make_rng, preferential_attachment
from src.services.cache_service import CentralityCache
from src.services.file_service import FileService
from src.services.log_service import LogService


def first_query_in(trace, nodes) -> int:
    return int(trace.closed_at[list(nodes)].min())


def test_de_leaves_the_first_community_sooner_than_mod():
    a = b = 20
    g = barbell(a, b)
    b_interior = range(a + 1, a + b)
    de, mod = [], []
    for rng_seed in range(50):
        seed = rng_seed % (a - 1)
        de.append(first_query_in(run_crawl(g, "DE", seed, rng_seed), b_interior))
        mod.append(first_query_in(run_crawl(g, "MOD", seed, rng_seed), b_interior))
    assert np.mean(de) < np.mean(mod)


@pytest.mark.slow
def test_random_walk_finds_hubs_early():
    g = preferential_attachment(10000, 3, 0)
    hubs = rank_nodes(degree_scores(g))[:10]
    budget = g.node_count // 20
    seeds = make_rng(1).choice(g.node_count, size=20, replace=False).tolist()
    shares = []
    for rng_seed, seed in enumerate(seeds):
        trace = run_crawl(g, "RW", seed, rng_seed, budget=budget)
        shares.append(np.mean(trace.discovered_at[hubs] <= budget))
    assert np.mean(shares) >= 0.7


@pytest.mark.slow
def test_crawler_ordering_at_desk_scale(tmp_path):
    dataset = os.path.join(settings.DATA_DIR, REGISTRY["hamsterster"].filename)
    source = "hamsterster" if os.path.isfile(dataset) else "preferential_attachment:2000,8,seed=42"
    log_service = LogService(str(tmp_path / "logs"))
    file_service = FileService(log_service, str(tmp_path / "out"))
    runner = ExperimentRunner(file_service, log_service,
                              CentralityCache(file_service, log_service, cache_dir=str(tmp_path / "cache")))
    config = ExperimentConfig(graphs=source, measures="degree,coreness", metrics="target_closed", seed_count=8,
                              master_seed=0, output_dir=str(tmp_path / "out"), output_formats="json")
    summary = next(iter(runner.run_experiment(config).summary.values()))

    for measure in ("degree", "coreness"):
        aucs = {crawler: summary[crawler][measure]["auc"] for crawler in config.crawlers}
        assert aucs["MOD"] >= aucs["RC"] + 0.05
        assert aucs["DE"] >= aucs["RC"] + 0.05
    coreness = {crawler: summary[crawler]["coreness"]["auc"] for crawler in config.crawlers}
    assert max(coreness, key=coreness.get) == "MOD"
