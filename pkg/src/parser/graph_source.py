"""Разрешение строки-источника графа: файл, имя набора данных или спецификация генератора.

Спецификация генератора: kind:arg,arg[,seed=N], например barbell:5,5 или
preferential_attachment:2000,8,seed=42.
"""
import inspect
import os
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple

from src.config.settings import settings
from src.exceptions import DataError, GraphError
from src.graph.generators import GENERATORS, generate, make_rng
from src.graph.graph import Graph
from src.parser.edge_list import load_edge_list


@dataclass(frozen=True)
class GraphSource:
    name: str
    graph: Graph
    path: Optional[str] = None  # файл графа, если источник - файл


def _number(token: str) -> Any:
    for cast in (int, float):
        try:
            return cast(token)
        except ValueError:
            pass
    raise GraphError(f"Generator argument is not a number: {token!r}")


def parse_generator_spec(spec: str) -> Tuple[str, List[Any], Dict[str, Any], int]:
    """Разбор 'kind:a,b,seed=N' в (kind, позиционные, именованные, seed)"""
    kind, _, arguments = spec.partition(":")
    kind = kind.strip()
    if kind not in GENERATORS:
        raise GraphError(f"Unknown generator kind: {kind}")
    positional: List[Any] = []
    named: Dict[str, Any] = {}
    seed = 0
    for token in filter(None, (t.strip() for t in arguments.split(","))):
        if "=" in token:
            key, value = (part.strip() for part in token.split("=", 1))
            if key == "seed":
                seed = int(value)
            else:
                named[key] = _number(value)
        else:
            positional.append(_number(token))
    return kind, positional, named, seed


def is_generator_spec(source: str) -> bool:
    kind, colon, _ = source.partition(":")
    return bool(colon) and kind.strip() in GENERATORS


def resolve_graph_source(source: str, datasets: Optional[Mapping[str, Any]] = None,
                         data_dir: Optional[str] = None) -> GraphSource:
    """Загрузка графа по строке-источнику.

    datasets - реестр наборов данных (имя -> запись с полем filename).
    """
    source = source.strip()
    if is_generator_spec(source):
        kind, positional, named, seed = parse_generator_spec(source)
        if named:
            # Именованные аргументы дополняют позиционные по порядку сигнатуры
            params: Any = dict(named)
            params.update(zip(inspect.signature(GENERATORS[kind]).parameters, positional))
        else:
            params = positional
        return GraphSource(source, generate(kind, params, make_rng(seed)))

    if datasets and source in datasets:
        path = os.path.join(data_dir or settings.DATA_DIR, datasets[source].filename)
        if not os.path.isfile(path):
            raise DataError(f"Dataset {source} is not available locally: expected {path}")
        return GraphSource(source, load_edge_list(path), path)

    if os.path.isfile(source):
        name = os.path.splitext(os.path.basename(source))[0]
        return GraphSource(name, load_edge_list(source), source)
    raise DataError(f"Graph source not found: {source}")
