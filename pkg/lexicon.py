"""
Lexicon storage
Loads and queries the two lookup tables of the hybrid stemmer: the Mokassar
(broken plural) mapping and the Intervening exemption set
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Set, TextIO, Tuple, Union

from config import INTERVENING_SEED_PATH, MOKASSAR_SEED_PATH
from errors import DuplicateKey, EmptyField, EmptyToken, InvalidToken, MalformedLine
from normalizer import NormalizedWord, normalize_word

logger = logging.getLogger(__name__)

COMMENT_PREFIX = "#"


@dataclass(frozen=True)
class MokassarLexicon:
    """Broken plural -> singular stem"""

    entries: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def get(self, word: str) -> Optional[str]:
        return self.entries.get(word)


@dataclass(frozen=True)
class InterveningLexicon:
    """Words that end like a plural suffix but must not be stripped"""

    entries: FrozenSet[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "entries", frozenset(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, word: str) -> bool:
        return word in self.entries


@dataclass(frozen=True)
class LexiconPair:
    mokassar: MokassarLexicon = field(default_factory=MokassarLexicon)
    intervening: InterveningLexicon = field(default_factory=InterveningLexicon)

    @classmethod
    def empty(cls) -> "LexiconPair":
        return cls(MokassarLexicon(), InterveningLexicon())

    def conflicts(self) -> List[str]:
        """Words listed in both tables (Intervening wins at lookup time)"""
        return sorted(w for w in self.mokassar.entries if w in self.intervening)


class LookupKind(Enum):
    INTERVENING = "intervening"
    MOKASSAR = "mokassar"
    NOT_FOUND = "not_found"


@dataclass(frozen=True)
class LookupResult:
    kind: LookupKind
    stem: Optional[str] = None

    @property
    def found(self) -> bool:
        return self.kind is not LookupKind.NOT_FOUND


NOT_FOUND = LookupResult(LookupKind.NOT_FOUND)


def _source_name(source: TextIO) -> str:
    return str(getattr(source, "name", "<stream>"))


def _data_lines(source: TextIO) -> Iterator[Tuple[int, str]]:
    """Yield (line_no, line) skipping blank and comment lines"""
    for line_no, line in enumerate(source, 1):
        line = line.rstrip("\r\n")
        stripped = line.strip()
        if not stripped or stripped.startswith(COMMENT_PREFIX):
            continue
        yield line_no, line


def _field(raw: str, what: str, name: str, line_no: int) -> NormalizedWord:
    if not raw.strip():
        raise EmptyField(f"empty {what}", name, line_no)
    try:
        return normalize_word(raw)
    except EmptyToken:
        raise EmptyField(f"{what} {raw!r} normalizes to nothing", name, line_no)
    except InvalidToken:
        raise MalformedLine(f"{what} {raw!r} contains whitespace", name, line_no)


def load_mokassar(source: TextIO, name: Optional[str] = None) -> MokassarLexicon:
    """
    Load a Mokassar TSV (PLURAL<TAB>SINGULAR per line)

    Args:
        source: Readable text stream
        name: Source name used in error messages (defaults to stream name)

    Returns:
        MokassarLexicon with both columns normalized

    Raises:
        MalformedLine: wrong column count, or plural equal to its singular
        EmptyField: a column is empty
        DuplicateKey: the same plural is mapped to two different stems
    """
    name = name or _source_name(source)
    entries: Dict[str, str] = {}
    for line_no, line in _data_lines(source):
        columns = line.split("\t")
        if len(columns) != 2:
            raise MalformedLine(f"expected 2 tab-separated columns, got {len(columns)}", name, line_no)
        plural = _field(columns[0], "plural", name, line_no)
        singular = _field(columns[1], "singular", name, line_no)
        if plural == singular:
            raise MalformedLine(f"plural {plural!r} equals its singular", name, line_no)
        known = entries.get(plural)
        if known is not None:
            if known != singular:
                raise DuplicateKey(
                    f"plural {plural!r} already maps to {known!r}, not {singular!r}", name, line_no
                )
            logger.debug(f"{name}:{line_no}: duplicate Mokassar entry {plural!r} skipped")
            continue
        entries[plural] = singular
    logger.info(f"Loaded {len(entries)} Mokassar entries from {name}")
    return MokassarLexicon(entries)


def load_intervening(source: TextIO, name: Optional[str] = None) -> InterveningLexicon:
    """
    Load an Intervening word list (one word per line)

    Args:
        source: Readable text stream
        name: Source name used in error messages (defaults to stream name)

    Returns:
        InterveningLexicon of normalized words; duplicate lines collapse

    Raises:
        MalformedLine: a line holds more than one word
    """
    name = name or _source_name(source)
    entries: Set[str] = set()
    for line_no, line in _data_lines(source):
        word = line.strip()
        if any(ch.isspace() for ch in word):
            raise MalformedLine(f"expected one word, got {word!r}", name, line_no)
        word = _field(word, "word", name, line_no)
        if word in entries:
            logger.debug(f"{name}:{line_no}: duplicate Intervening word {word!r} skipped")
        entries.add(word)
    logger.info(f"Loaded {len(entries)} Intervening words from {name}")
    return InterveningLexicon(entries)


def load_mokassar_file(path: Union[str, Path]) -> MokassarLexicon:
    with open(path, encoding="utf-8-sig") as f:
        return load_mokassar(f, str(path))


def load_intervening_file(path: Union[str, Path]) -> InterveningLexicon:
    with open(path, encoding="utf-8-sig") as f:
        return load_intervening(f, str(path))


def load_lexicons(
    mokassar_path: Optional[Union[str, Path]] = None,
    intervening_path: Optional[Union[str, Path]] = None,
) -> LexiconPair:
    """
    Load both tables, falling back to the bundled seed files

    Args:
        mokassar_path: External Mokassar TSV, or None for the seed
        intervening_path: External Intervening list, or None for the seed
    """
    return LexiconPair(
        mokassar=load_mokassar_file(mokassar_path or MOKASSAR_SEED_PATH),
        intervening=load_intervening_file(intervening_path or INTERVENING_SEED_PATH),
    )


def load_seed_lexicons() -> LexiconPair:
    return load_lexicons()


def lookup(lexicons: LexiconPair, word: str) -> LookupResult:
    """
    Exact-match lookup; Intervening takes precedence over Mokassar

    Args:
        lexicons: Loaded lexicon pair
        word: Normalized word

    Returns:
        LookupResult with kind INTERVENING, MOKASSAR (stem set) or NOT_FOUND
    """
    if word in lexicons.intervening:
        return LookupResult(LookupKind.INTERVENING, word)
    stem = lexicons.mokassar.get(word)
    if stem is not None:
        return LookupResult(LookupKind.MOKASSAR, stem)
    return NOT_FOUND


def dump_mokassar(lexicon: MokassarLexicon, out: TextIO):
    """Write entries as sorted TSV lines"""
    for plural in sorted(lexicon.entries):
        out.write(f"{plural}\t{lexicon.entries[plural]}\n")


def dump_intervening(lexicon: InterveningLexicon, out: TextIO):
    """Write words one per line, sorted"""
    for word in sorted(lexicon.entries):
        out.write(f"{word}\n")
