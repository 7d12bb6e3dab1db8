import os
from dotenv import load_dotenv

load_dotenv()


class Settings:
    OUTPUT_DIR = os.getenv("OUTPUT_DIR", "output")
    LOG_DIR = os.getenv("LOG_DIR", "logs")
    LOG_FILE = "crawl_bench.log"
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
    DATA_DIR = os.getenv("DATA_DIR", "data")
    CACHE_DIR = os.getenv("CACHE_DIR", "cache")

    TARGET_FRACTION = float(os.getenv("TARGET_FRACTION", "0.1"))
    SEED_COUNT = int(os.getenv("SEED_COUNT", "8"))
    MASTER_SEED = int(os.getenv("MASTER_SEED", "0"))
    WORKERS = int(os.getenv("WORKERS", "1"))

    RW_HOP_CAP = int(os.getenv("RW_HOP_CAP", str(10**8)))
    DE_BURST = int(os.getenv("DE_BURST", "10"))
    DE_DECAY = float(os.getenv("DE_DECAY", "0.5"))
    DE_SWITCH_RATIO = float(os.getenv("DE_SWITCH_RATIO", "0.5"))
    DE_TOP_FRACTION = float(os.getenv("DE_TOP_FRACTION", "0.2"))
    ER_MAX_TRIES = int(os.getenv("ER_MAX_TRIES", "100"))

    CSV_FLOAT_FORMAT = os.getenv("CSV_FLOAT_FORMAT", "%.10g")
    # Доли бюджета, на которых фиксируется лидер
    LEADER_BUDGETS = (0.01, 0.05, 0.1, 0.25, 0.5, 1.0)


settings = Settings()
