"""
Configuration management for the Persian stemmer
"""
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

# Project root (the folder holding config.py)
BASE_DIR = Path(__file__).parent.resolve()

# .env is read from the project root whatever the working directory
_ENV_FILE = BASE_DIR / ".env"
_DOTENV_LOADED = load_dotenv(_ENV_FILE)


def _env_int(name: str, default: int) -> int:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(
            f"{name} must be an integer, got {raw!r}. "
            f"Fix it in {_ENV_FILE} (file_exists={_ENV_FILE.is_file()} dotenv_ok={_DOTENV_LOADED})"
        )
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")
    return value


def _env_bool(name: str, default: bool) -> bool:
    raw = (os.getenv(name) or "").strip().lower()
    if not raw:
        return default
    return raw in ("1", "true", "yes", "on")


def _env_path(name: str) -> Optional[Path]:
    raw = (os.getenv(name) or "").strip()
    return Path(raw).expanduser() if raw else None


# Bundled data
DATA_DIR = BASE_DIR / "data"
MOKASSAR_SEED_PATH = DATA_DIR / "mokassar_seed.tsv"
INTERVENING_SEED_PATH = DATA_DIR / "intervening_seed.txt"
FIXTURES_DIR = DATA_DIR / "fixtures"

# External lexicons (override the bundled seed files)
MOKASSAR_PATH = _env_path("STEMMER_MOKASSAR_PATH")
INTERVENING_PATH = _env_path("STEMMER_INTERVENING_PATH")

# Stemming defaults
MIN_STEM_LEN = _env_int("STEMMER_MIN_STEM_LEN", 2)
ITERATE = _env_bool("STEMMER_ITERATE", False)
MAX_ITERATIONS = _env_int("STEMMER_MAX_ITERATIONS", 3)

# Output
OUTPUT_FORMAT = (os.getenv("STEMMER_OUTPUT_FORMAT") or "tsv").strip().lower()
if OUTPUT_FORMAT not in ("tsv", "jsonl"):
    raise ValueError(f"STEMMER_OUTPUT_FORMAT must be tsv or jsonl, got {OUTPUT_FORMAT!r}")

# Corpus progress logging interval (lines)
CORPUS_PROGRESS_EVERY = 100_000

# Logging (diagnostics go to stderr; LOG_FILE adds a file handler)
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
LOG_FILE = os.getenv("LOG_FILE", "").strip()
