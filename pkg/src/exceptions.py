from typing import Optional


class CrawlBenchError(Exception):
    """Базовая ошибка фреймворка"""


class GraphError(CrawlBenchError):
    """Некорректный граф или параметры графа"""


class GraphFormatError(GraphError):
    """Ошибка разбора списка рёбер"""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class CentralityError(CrawlBenchError):
    """Ошибка вычисления мер центральности"""


class CrawlError(CrawlBenchError):
    """Нарушение контракта краулера"""


class MetricError(CrawlBenchError):
    """Ошибка вычисления метрик"""


class ConfigError(CrawlBenchError):
    """Ошибка конфигурации эксперимента"""


class DataError(CrawlBenchError):
    """Ошибка чтения или записи данных"""
