"""
Shared pytest fixtures
"""
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).parent.resolve()
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from config import FIXTURES_DIR  # noqa: E402
from lexicon import LexiconPair, load_seed_lexicons  # noqa: E402
from stemmer import Stemmer  # noqa: E402


def read_gold_manifest(path: Path) -> dict:
    """lexicons -> (tp, tn, fp, fn)"""
    expected = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, *counts = line.split("\t")
        expected[name] = tuple(int(c) for c in counts)
    return expected


@pytest.fixture(scope="session")
def seed_lexicons() -> LexiconPair:
    return load_seed_lexicons()


@pytest.fixture(scope="session")
def empty_lexicons() -> LexiconPair:
    return LexiconPair.empty()


@pytest.fixture
def seed_stemmer(seed_lexicons) -> Stemmer:
    return Stemmer(seed_lexicons)


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def gold_path(fixtures_dir) -> Path:
    return fixtures_dir / "gold.tsv"


@pytest.fixture(scope="session")
def gold_manifest(fixtures_dir) -> dict:
    return read_gold_manifest(fixtures_dir / "gold_manifest.tsv")


@pytest.fixture(scope="session")
def corpus_path(fixtures_dir) -> Path:
    return fixtures_dir / "corpus.txt"


@pytest.fixture(scope="session")
def corpus_manifest_path(fixtures_dir) -> Path:
    return fixtures_dir / "corpus_manifest.tsv"
