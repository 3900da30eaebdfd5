"""
Hybrid Persian stemmer
Dictionary lookup over the Mokassar and Intervening lexicons, then
longest-match removal of one of the thirteen inflectional suffixes
"""
import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Tuple

from lexicon import LexiconPair, LookupKind, lookup
from normalizer import FATHATAN, ZWNJ, normalize_word

logger = logging.getLogger(__name__)

# Removal list in its published order; SuffixTable reorders it longest-first
SUFFIXES = (
    "ها",
    "ی",
    "یی",
    "ش",
    "ت",
    "م",
    "تر",
    "ترین",
    "ان",
    "ات",
    FATHATAN,
    "ون",
    "ین",
)


class PluralEnding(Enum):
    OON = "ون"
    IN = "ین"
    AT = "ات"
    AN = "ان"
    HA = "ها"


class StemMethod(Enum):
    LOOKUP_INTERVENING = "intervening"
    LOOKUP_MOKASSAR = "mokassar"
    AFFIX_STRIPPED = "stripped"
    UNCHANGED = "unchanged"


@dataclass(frozen=True)
class SuffixTable:
    """Strippable suffixes, matched longest first; equal lengths keep list order"""

    suffixes: Tuple[str, ...] = SUFFIXES

    def __post_init__(self):
        # sorted() is stable, so ties keep their published order
        ordered = tuple(sorted(self.suffixes, key=len, reverse=True))
        object.__setattr__(self, "suffixes", ordered)

    def __len__(self) -> int:
        return len(self.suffixes)

    def __iter__(self) -> Iterator[str]:
        return iter(self.suffixes)

    def matches(self, word: str) -> List[str]:
        """All suffixes word ends with, longest first"""
        return [s for s in self.suffixes if len(word) > len(s) and word.endswith(s)]


DEFAULT_TABLE = SuffixTable()


@dataclass(frozen=True)
class StemConfig:
    min_stem_len: int = 2
    iterate: bool = False
    max_iterations: int = 3

    def __post_init__(self):
        if self.min_stem_len < 1:
            raise ValueError(f"min_stem_len must be >= 1, got {self.min_stem_len}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")


@dataclass(frozen=True)
class StemResult:
    """
    Outcome of stemming one word

    word is the normalized input. For AFFIX_STRIPPED, suffix is the whole
    removed tail without a leading ZWNJ and removed lists each suffix taken
    off, outermost first.
    """

    word: str
    stem: str
    method: StemMethod
    suffix: Optional[str] = None
    plural_ending: Optional[PluralEnding] = None
    removed: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def tag(self) -> str:
        if self.method is StemMethod.AFFIX_STRIPPED:
            return f"{self.method.value}:{self.suffix}"
        return self.method.value


def _drop_joiner(text: str) -> str:
    return text[:-1] if text.endswith(ZWNJ) else text


def plural_ending(word: str) -> Optional[PluralEnding]:
    """
    Five-way plural ending gate

    Args:
        word: Normalized word

    Returns:
        The ending word closes with, or None when it ends in none of them or
        the ending is the whole word (a ZWNJ before the ending is ignored)
    """
    for ending in PluralEnding:
        if word.endswith(ending.value) and _drop_joiner(word[: -len(ending.value)]):
            return ending
    return None


def _strip_once(word: str, table: SuffixTable, min_stem_len: int) -> Optional[Tuple[str, str]]:
    matches = table.matches(word)
    if not matches:
        return None
    # the floor applies to the longest match only, no shorter fallback
    suffix = matches[0]
    stem = _drop_joiner(word[: -len(suffix)])
    if len(stem) < min_stem_len:
        return None
    return stem, suffix


def strip_suffix(word: str, table: SuffixTable = DEFAULT_TABLE, config: StemConfig = StemConfig()) -> StemResult:
    """
    Remove the longest matching suffix (and a ZWNJ right before it)

    Args:
        word: Normalized, nonempty word
        table: Suffix inventory
        config: Stem length floor and iteration settings

    Returns:
        AFFIX_STRIPPED result, or UNCHANGED when no suffix matches or the
        longest match would leave a stem shorter than config.min_stem_len
    """
    ending = plural_ending(word)
    passes = config.max_iterations if config.iterate else 1
    current = word
    removed: List[str] = []
    for _ in range(passes):
        hit = _strip_once(current, table, config.min_stem_len)
        if hit is None:
            break
        current, suffix = hit
        removed.append(suffix)

    if not removed:
        return StemResult(word, word, StemMethod.UNCHANGED, plural_ending=ending)

    tail = word[len(current):]
    if tail.startswith(ZWNJ):
        tail = tail[1:]
    return StemResult(
        word,
        current,
        StemMethod.AFFIX_STRIPPED,
        suffix=tail,
        plural_ending=ending,
        removed=tuple(removed),
    )


def stem(
    word: str,
    lexicons: LexiconPair,
    table: SuffixTable = DEFAULT_TABLE,
    config: StemConfig = StemConfig(),
) -> StemResult:
    """
    Full pipeline: normalize, look up, otherwise strip

    Every word is looked up, not only the ones passing the plural ending
    gate; a lexicon hit is returned as is, without stripping.

    Args:
        word: Raw token
        lexicons: Mokassar and Intervening tables
        table: Suffix inventory
        config: Stripping settings

    Raises:
        EmptyToken: word is empty or normalizes to nothing
    """
    normalized = normalize_word(word)
    hit = lookup(lexicons, normalized)
    if hit.kind is LookupKind.INTERVENING:
        return StemResult(
            normalized, normalized, StemMethod.LOOKUP_INTERVENING, plural_ending=plural_ending(normalized)
        )
    if hit.kind is LookupKind.MOKASSAR:
        return StemResult(
            normalized, hit.stem, StemMethod.LOOKUP_MOKASSAR, plural_ending=plural_ending(normalized)
        )
    return strip_suffix(normalized, table, config)


class Stemmer:
    """Binds lexicons, suffix table and config for repeated use"""

    def __init__(
        self,
        lexicons: Optional[LexiconPair] = None,
        table: SuffixTable = DEFAULT_TABLE,
        config: StemConfig = StemConfig(),
    ):
        """
        Initialize stemmer

        Args:
            lexicons: Lexicon pair; empty tables when None
            table: Suffix inventory
            config: Stripping settings
        """
        self.lexicons = lexicons if lexicons is not None else LexiconPair.empty()
        self.table = table
        self.config = config

    def stem(self, word: str) -> StemResult:
        result = stem(word, self.lexicons, self.table, self.config)
        logger.debug(f"{result.word} -> {result.stem} ({result.tag})")
        return result

    def stem_many(self, words: Iterable[str]) -> List[StemResult]:
        return [self.stem(w) for w in words]

    def with_config(self, **changes) -> "Stemmer":
        return Stemmer(self.lexicons, self.table, replace(self.config, **changes))
