import os
from typing import Any, Dict, List, Literal, Mapping, Optional

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.centrality.scores import Measure
from src.config.settings import settings
from src.crawler.runner import CRAWLERS
from src.crawler.state import SampleEdges
from src.exceptions import ConfigError
from src.metrics.coverage import MetricKind

ALL_CRAWLERS = ["RC", "RW", "DFS", "BFS", "MOD", "DE"]
ALL_MEASURES = [m for m in Measure]
LIST_FIELDS = ("crawlers", "measures", "metrics", "output_formats")


def _split(value: Any, separator: str = ",") -> Any:
    if isinstance(value, str):
        return [item.strip() for item in value.split(separator) if item.strip()]
    return value


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    graphs: List[str] = Field(min_length=1)
    crawlers: List[str] = Field(default_factory=lambda: list(ALL_CRAWLERS), min_length=1)
    measures: List[Measure] = Field(default_factory=lambda: list(ALL_MEASURES))
    metrics: List[MetricKind] = Field(
        default_factory=lambda: [MetricKind.NODE_COVERAGE, MetricKind.TARGET_CLOSED], min_length=1)
    target_fraction: float = Field(default=settings.TARGET_FRACTION, gt=0.0, le=1.0)
    seed_count: int = Field(default=settings.SEED_COUNT, ge=1)
    master_seed: int = Field(default=settings.MASTER_SEED, ge=0)
    sample_edges: SampleEdges = SampleEdges.CLOSED_INCIDENT
    betweenness: Literal["exact", "approx"] = "exact"
    pivots: Optional[int] = Field(default=None, ge=1)
    output_dir: str = settings.OUTPUT_DIR
    output_formats: List[Literal["csv", "json", "xlsx"]] = Field(default_factory=lambda: ["csv", "json"])
    workers: int = Field(default=settings.WORKERS, ge=1)
    curve_points: int = Field(default=0, ge=0)
    budget: Optional[int] = Field(default=None, ge=1)
    cache: bool = True
    save_traces: bool = False
    rw_hop_cap: Optional[int] = Field(default=None, ge=1)
    de_burst: Optional[int] = Field(default=None, ge=1)
    de_decay: Optional[float] = Field(default=None, ge=0.0, lt=1.0)
    de_switch_ratio: Optional[float] = Field(default=None, gt=0.0)
    de_top_fraction: Optional[float] = Field(default=None, gt=0.0, lt=1.0)

    @field_validator("graphs", mode="before")
    @classmethod
    def split_graphs(cls, value: Any) -> Any:
        # ';': в спецификациях генераторов уже есть запятые
        return _split(value, ";")

    @field_validator(*LIST_FIELDS, mode="before")
    @classmethod
    def split_lists(cls, value: Any) -> Any:
        return _split(value)

    @field_validator("crawlers")
    @classmethod
    def known_crawlers(cls, value: List[str]) -> List[str]:
        names = [v.upper() for v in value]
        unknown = [v for v in names if v not in CRAWLERS]
        if unknown:
            raise ValueError(f"unknown crawler(s): {', '.join(unknown)}; expected {', '.join(ALL_CRAWLERS)}")
        if len(set(names)) != len(names):
            raise ValueError("duplicate crawler names")
        return names

    @field_validator("measures", mode="before")
    @classmethod
    def lower_measures(cls, value: Any) -> Any:
        return [v.strip().lower() if isinstance(v, str) else v for v in _split(value)]

    @model_validator(mode="after")
    def check_betweenness(self) -> "ExperimentConfig":
        if self.betweenness == "approx" and self.pivots is None:
            raise ValueError("betweenness=approx requires pivots")
        needs_measures = any(m is not MetricKind.NODE_COVERAGE for m in self.metrics)
        if needs_measures and not self.measures:
            raise ValueError("target metrics require at least one measure")
        return self

    def crawler_params(self) -> Dict[str, Any]:
        """Параметры краулеров (передаются только тем, кто их понимает)"""
        return {
            "hop_cap": self.rw_hop_cap,
            "burst": self.de_burst,
            "decay": self.de_decay,
            "switch_ratio": self.de_switch_ratio,
            "top_fraction": self.de_top_fraction,
        }

    @property
    def approx_pivots(self) -> Optional[int]:
        return self.pivots if self.betweenness == "approx" else None


def normalize_key(key: str) -> str:
    return key.strip().lower().replace("-", "_")


def read_config_file(path: str) -> Dict[str, str]:
    """Плоский файл key = value; '-' в ключах равносилен '_'"""
    if not os.path.isfile(path):
        raise ConfigError(f"Config file not found: {path}")
    values = dotenv_values(path)
    return {normalize_key(k): v for k, v in values.items() if v is not None}


def load_config(path: Optional[str] = None, overrides: Optional[Mapping[str, Any]] = None) -> ExperimentConfig:
    """Конфигурация из файла и/или флагов; флаги имеют приоритет"""
    values: Dict[str, Any] = read_config_file(path) if path else {}
    for key, value in (overrides or {}).items():
        if value is not None:
            values[normalize_key(key)] = value
    return ExperimentConfig.model_validate(values)
