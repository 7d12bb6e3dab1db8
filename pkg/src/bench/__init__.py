from src.bench.datasets import REGISTRY, DatasetRegistryEntry, DatasetReport, verify_dataset
from src.bench.experiment import ExperimentResult, ExperimentRunner, choose_seed_nodes, derive_seed
from src.bench.experiment_config import ExperimentConfig, load_config, read_config_file
from src.bench.overlap import emit_target_overlap

__all__ = [
    "DatasetRegistryEntry",
    "DatasetReport",
    "ExperimentConfig",
    "ExperimentResult",
    "ExperimentRunner",
    "REGISTRY",
    "choose_seed_nodes",
    "derive_seed",
    "emit_target_overlap",
    "load_config",
    "read_config_file",
    "verify_dataset",
]
