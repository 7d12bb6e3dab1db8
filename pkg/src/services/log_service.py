import logging
import os
from typing import Optional

from src.config.settings import settings

LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
}


class LogService:
    def __init__(self, log_dir: Optional[str] = None, level: Optional[str] = None):
        self.log_dir = log_dir or settings.LOG_DIR
        os.makedirs(self.log_dir, exist_ok=True)
        log_file = os.path.join(self.log_dir, settings.LOG_FILE)
        logging.basicConfig(
            level=(level or settings.LOG_LEVEL).upper(),
            format="%(asctime)s - %(levelname)s - %(message)s",
            handlers=[
                logging.FileHandler(log_file, encoding='utf-8'),
                logging.StreamHandler()
            ],
        )
        self.logger = logging.getLogger("crawl_bench")
        self.warnings = []  # Предупреждения текущего запуска, попадают в отчёты

    def log_to_file(self, message: str, level: str = "info"):
        """Логирование в файл"""
        if level not in LEVELS:
            raise ValueError(f"Unknown log level: {level}")
        self.logger.log(LEVELS[level], message)
        if level == "warning":
            self.warnings.append(message)

    def clear_warnings(self):
        """Очистка накопленных предупреждений"""
        self.warnings = []
