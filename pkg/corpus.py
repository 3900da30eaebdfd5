"""
Corpus tokenizer and word frequency counter
Streams text line by line so multi-million word corpora never sit in memory
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, List, Mapping, Optional, TextIO, Tuple, Union

import regex

from config import CORPUS_PROGRESS_EVERY
from errors import EmptyToken
from normalizer import ZWNJ, normalize_word

logger = logging.getLogger(__name__)

# Digit runs, or runs of anything that is neither whitespace, punctuation,
# symbol nor digit. ZWNJ (Cf) stays inside words. U+001C..U+001F are not
# White_Space for regex but str.isspace counts them, so they split too.
_TOKEN_RE = regex.compile(r"\d+|[^\s\x1c-\x1f\p{P}\p{S}\d]+")

TOTAL_PREFIX = "#total"


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int

    @property
    def position(self) -> Tuple[int, int]:
        return self.line, self.column


def _line_tokens(line: str, line_no: int) -> Iterator[Token]:
    for match in _TOKEN_RE.finditer(line):
        raw = match.group()
        column = match.start()
        # a joiner at a token edge joins nothing
        stripped = raw.lstrip(ZWNJ)
        column += len(raw) - len(stripped)
        stripped = stripped.rstrip(ZWNJ)
        if not stripped:
            continue
        try:
            # deleted tatweel or marks can expose another edge joiner
            word = normalize_word(stripped).strip(ZWNJ)
        except EmptyToken:
            # tatweel or diacritics only
            continue
        if word:
            yield Token(word, line_no, column)


def tokenize_lines(lines: Iterable[str]) -> Iterator[Token]:
    """
    Tokenize a stream of lines lazily

    Args:
        lines: Text lines (line endings are ignored)

    Yields:
        Normalized tokens with 0-based (line, column) positions
    """
    for line_no, line in enumerate(lines):
        yield from _line_tokens(line.rstrip("\r\n"), line_no)


def tokenize(text: str) -> List[Token]:
    """
    Split text on whitespace, punctuation and symbols

    Args:
        text: Raw text, LF or CRLF line endings

    Returns:
        Tokens in reading order
    """
    if not text:
        return []
    return list(tokenize_lines(text.split("\n")))


@dataclass
class FrequencyTable:
    counts: Counter = field(default_factory=Counter)
    total_tokens: int = 0

    def add(self, word: str, n: int = 1):
        self.counts[word] += n
        self.total_tokens += n

    def merge(self, other: "FrequencyTable") -> "FrequencyTable":
        """New table holding the sum of both; order of merging does not matter"""
        return FrequencyTable(self.counts + other.counts, self.total_tokens + other.total_tokens)

    def get(self, word: str) -> int:
        return self.counts.get(word, 0)

    def __len__(self) -> int:
        return len(self.counts)

    def sorted_items(self) -> List[Tuple[str, int]]:
        """Descending count, then word"""
        return sorted(self.counts.items(), key=lambda kv: (-kv[1], kv[0]))

    def as_dict(self) -> Mapping[str, int]:
        return dict(self.counts)


def count_frequencies(tokens: Iterable[Token]) -> FrequencyTable:
    """
    Count exact token frequencies

    Args:
        tokens: Tokens from tokenize / tokenize_lines (consumed once)

    Returns:
        FrequencyTable whose total equals the number of tokens
    """
    table = FrequencyTable()
    for token in tokens:
        table.add(token.text)
    return table


def count_stream(source: TextIO) -> FrequencyTable:
    """Count frequencies over a text stream, one line at a time"""
    table = FrequencyTable()
    for line_no, line in enumerate(source):
        for token in _line_tokens(line.rstrip("\r\n"), line_no):
            table.add(token.text)
        if line_no and line_no % CORPUS_PROGRESS_EVERY == 0:
            logger.info(f"{line_no} lines, {table.total_tokens} tokens counted")
    return table


def count_file(path: Union[str, Path]) -> FrequencyTable:
    """
    Count frequencies over a UTF-8 corpus file

    Args:
        path: Corpus path

    Returns:
        FrequencyTable for the whole file
    """
    with open(path, encoding="utf-8-sig") as f:
        table = count_stream(f)
    logger.info(f"Counted {table.total_tokens} tokens, {len(table)} types in {path}")
    return table


def write_frequencies(table: FrequencyTable, out: TextIO):
    """TSV word<TAB>count sorted by descending count then word, then the total line"""
    for word, count in table.sorted_items():
        out.write(f"{word}\t{count}\n")
    out.write(f"{TOTAL_PREFIX}\t{table.total_tokens}\n")


def read_frequencies(source: TextIO) -> FrequencyTable:
    """
    Parse the TSV written by write_frequencies

    Raises:
        ValueError: malformed line, or a total that disagrees with the counts
    """
    table = FrequencyTable()
    declared_total: Optional[int] = None
    for line_no, line in enumerate(source, 1):
        line = line.rstrip("\r\n")
        if not line:
            continue
        word, sep, count = line.partition("\t")
        if not sep or not count.strip().isdigit():
            raise ValueError(f"line {line_no}: expected word<TAB>count, got {line!r}")
        if word == TOTAL_PREFIX:
            declared_total = int(count)
            continue
        table.add(word, int(count))
    if declared_total is not None and declared_total != table.total_tokens:
        raise ValueError(f"declared total {declared_total} != sum of counts {table.total_tokens}")
    return table


@dataclass(frozen=True)
class QueryReport:
    counts: Tuple[Tuple[str, int], ...]
    total: int
    total_tokens: int

    @property
    def ratio(self) -> float:
        if self.total_tokens == 0:
            return 0.0
        return self.total / self.total_tokens


def query_counts(table: FrequencyTable, words: Iterable[str]) -> QueryReport:
    """
    Look up counts for chosen words

    Args:
        table: Frequency table of the corpus
        words: Raw query words (normalized before lookup)

    Returns:
        QueryReport with per-word counts (0 when absent), their sum and the
        share of the corpus they make up. A word repeated in the query (after
        normalization) is reported once.

    Raises:
        EmptyToken: a query word normalizes to nothing
    """
    counts = []
    seen = set()
    for raw in words:
        word = normalize_word(raw)
        if word in seen:
            continue
        seen.add(word)
        counts.append((word, table.get(word)))
    return QueryReport(tuple(counts), sum(c for _, c in counts), table.total_tokens)
