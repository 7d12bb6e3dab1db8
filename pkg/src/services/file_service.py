import json
import os
from typing import Iterable, Optional

import pandas as pd

from src.config.settings import settings
from src.exceptions import DataError
from src.services.log_service import LogService


class FileService:
    def __init__(self, log_service: LogService, output_dir: Optional[str] = None):
        self.log_service = log_service
        self.output_dir = output_dir or settings.OUTPUT_DIR

    def path(self, filename: str, output_dir: Optional[str] = None) -> str:
        directory = output_dir or self.output_dir
        os.makedirs(directory, exist_ok=True)
        return os.path.join(directory, filename)

    def save_to_json(self, data: dict, path: str) -> str:
        """Сохранение данных в JSON"""
        try:
            with open(path, 'w', encoding='utf-8') as f:
                json.dump(data, f, ensure_ascii=False, indent=2, sort_keys=True)
                f.write("\n")
            self.log_service.log_to_file(f"Saved JSON to {path}", "info")
            return path
        except (OSError, TypeError) as e:
            self.log_service.log_to_file(f"Error saving JSON: {e}", "error")
            raise DataError(f"Cannot write {path}: {e}") from e

    def save_to_csv(self, frame: pd.DataFrame, path: str,
                    float_format: Optional[str] = settings.CSV_FLOAT_FORMAT) -> str:
        """Сохранение таблицы в CSV; float_format=None - без потери точности"""
        try:
            frame.to_csv(path, index=False, float_format=float_format, lineterminator="\n")
            self.log_service.log_to_file(f"Saved CSV to {path} ({len(frame)} rows)", "info")
            return path
        except OSError as e:
            self.log_service.log_to_file(f"Error saving CSV: {e}", "error")
            raise DataError(f"Cannot write {path}: {e}") from e

    def load_csv(self, path: str) -> pd.DataFrame:
        try:
            return pd.read_csv(path, dtype={"node_label": str}, keep_default_na=False, float_precision="round_trip")
        except (OSError, ValueError) as e:
            self.log_service.log_to_file(f"Error reading CSV {path}: {e}", "error")
            raise DataError(f"Cannot read {path}: {e}") from e

    def save_to_excel(self, frame: pd.DataFrame, path: str) -> Optional[str]:
        """Сохранение данных в Excel"""
        if frame.empty:
            self.log_service.log_to_file("No data to save to Excel", "warning")
            return None
        try:
            with pd.ExcelWriter(path, engine='openpyxl') as writer:
                frame.to_excel(writer, sheet_name='auc', index=False)
                worksheet = writer.sheets['auc']
                for column in ('A', 'B', 'C'):
                    worksheet.column_dimensions[column].width = 25
            self.log_service.log_to_file(f"Saved Excel to {path}", "info")
            return path
        except OSError as e:
            self.log_service.log_to_file(f"Error saving Excel: {e}", "error")
            raise DataError(f"Cannot write {path}: {e}") from e

    def save_lines(self, lines: Iterable[str], path: str) -> str:
        """Запись последовательности строк, по одной на строку файла"""
        try:
            with open(path, 'w', encoding='utf-8') as f:
                for line in lines:
                    f.write(f"{line}\n")
            return path
        except OSError as e:
            self.log_service.log_to_file(f"Error saving {path}: {e}", "error")
            raise DataError(f"Cannot write {path}: {e}") from e
