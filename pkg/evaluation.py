"""
Confusion-matrix evaluation of the stemmer against a gold-labeled word list
"""
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Dict, Iterable, List, Optional, TextIO, Tuple, Union

from errors import EmptyField, EmptyToken, InvalidToken, MalformedLine, WordMismatch
from lexicon import COMMENT_PREFIX, LexiconPair
from normalizer import normalize_word
from stemmer import DEFAULT_TABLE, StemConfig, StemMethod, StemResult, SuffixTable, stem

logger = logging.getLogger(__name__)


class GoldAction(Enum):
    STRIP = "strip"
    KEEP = "keep"


class Classification(Enum):
    TP = "TP"
    TN = "TN"
    FP = "FP"
    FN = "FN"


# Moves an ablation may cause, in either direction
ALLOWED_TRANSITIONS = frozenset(
    {
        frozenset({Classification.TN, Classification.FP}),
        frozenset({Classification.TN, Classification.FN}),
        frozenset({Classification.TP, Classification.FN}),
    }
)

_LOOKUP_METHODS = (StemMethod.LOOKUP_INTERVENING, StemMethod.LOOKUP_MOKASSAR)


@dataclass(frozen=True)
class GoldEntry:
    word: str
    action: GoldAction
    gold_stem: Optional[str] = None

    def __post_init__(self):
        if self.action is GoldAction.STRIP:
            if not self.gold_stem:
                raise ValueError(f"strip entry {self.word!r} needs a gold stem")
            if self.gold_stem == self.word:
                raise ValueError(f"gold stem of {self.word!r} must differ from the word")


@dataclass(frozen=True)
class EvalCounts:
    tp: int = 0
    tn: int = 0
    fp: int = 0
    fn: int = 0

    @property
    def total(self) -> int:
        return self.tp + self.tn + self.fp + self.fn

    @property
    def sensitivity(self) -> Optional[float]:
        return _ratio(self.tp, self.tp + self.fn)

    @property
    def specificity(self) -> Optional[float]:
        return _ratio(self.tn, self.tn + self.fp)

    @property
    def accuracy(self) -> Optional[float]:
        return _ratio(self.tp + self.tn, self.total)

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.tp, self.tn, self.fp, self.fn


def _ratio(num: int, den: int) -> Optional[float]:
    # 0/0 is undefined, not 0 or 1
    if den == 0:
        return None
    return num / den


@dataclass(frozen=True)
class Verdict:
    word: str
    stem: str
    method: StemMethod
    tag: str
    classification: Classification


@dataclass(frozen=True)
class EvalReport:
    counts: EvalCounts
    verdicts: Tuple[Verdict, ...] = ()

    @property
    def sensitivity(self) -> Optional[float]:
        return self.counts.sensitivity

    @property
    def specificity(self) -> Optional[float]:
        return self.counts.specificity

    @property
    def accuracy(self) -> Optional[float]:
        return self.counts.accuracy


def classify(entry: GoldEntry, result: StemResult) -> Classification:
    """
    Place one stemmed gold word in the confusion matrix

    TP: stripped to the gold stem. TN: left alone (lookup hit or unchanged) on
    a keep entry, or a Mokassar lookup producing the gold stem. FP: stripped a
    keep entry. FN: a strip entry that did not end up at its gold stem.

    Raises:
        WordMismatch: result was produced for another word
    """
    if result.word != entry.word:
        raise WordMismatch(f"result for {result.word!r} classified against {entry.word!r}")

    if entry.action is GoldAction.KEEP:
        if result.method is StemMethod.AFFIX_STRIPPED:
            return Classification.FP
        return Classification.TN

    if result.method is StemMethod.AFFIX_STRIPPED and result.stem == entry.gold_stem:
        return Classification.TP
    if result.method is StemMethod.LOOKUP_MOKASSAR and result.stem == entry.gold_stem:
        return Classification.TN
    return Classification.FN


def evaluate(
    gold: Iterable[GoldEntry],
    lexicons: LexiconPair,
    table: SuffixTable = DEFAULT_TABLE,
    config: StemConfig = StemConfig(),
) -> EvalReport:
    """
    Stem and classify every gold word

    Args:
        gold: Gold entries (nonempty)
        lexicons: Lexicon pair under test
        table: Suffix inventory
        config: Stripping settings

    Returns:
        EvalReport with counts, ratios and per-word verdicts in gold order
    """
    verdicts: List[Verdict] = []
    tally: Counter = Counter()
    for entry in gold:
        result = stem(entry.word, lexicons, table, config)
        label = classify(entry, result)
        tally[label] += 1
        verdicts.append(Verdict(entry.word, result.stem, result.method, result.tag, label))
    if not verdicts:
        raise ValueError("gold set is empty")

    counts = EvalCounts(
        tp=tally[Classification.TP],
        tn=tally[Classification.TN],
        fp=tally[Classification.FP],
        fn=tally[Classification.FN],
    )
    logger.info(f"Evaluated {counts.total} gold words: tp={counts.tp} tn={counts.tn} fp={counts.fp} fn={counts.fn}")
    return EvalReport(counts, tuple(verdicts))


def ablation_transitions(
    with_lexicons: EvalReport, without_lexicons: EvalReport
) -> Dict[Tuple[Classification, Classification], List[str]]:
    """
    Word-by-word classification changes between two runs over one gold set

    Returns:
        (before, after) -> words that moved, only for changed words
    """
    if len(with_lexicons.verdicts) != len(without_lexicons.verdicts):
        raise ValueError("reports cover different gold sets")
    moves: Dict[Tuple[Classification, Classification], List[str]] = {}
    for before, after in zip(with_lexicons.verdicts, without_lexicons.verdicts):
        if before.word != after.word:
            raise WordMismatch(f"verdict order differs at {before.word!r} / {after.word!r}")
        if before.classification is not after.classification:
            key = (before.classification, after.classification)
            moves.setdefault(key, []).append(before.word)
    return moves


def is_allowed_transition(before: Classification, after: Classification) -> bool:
    return frozenset({before, after}) in ALLOWED_TRANSITIONS


def load_gold(source: TextIO, name: Optional[str] = None) -> List[GoldEntry]:
    """
    Parse a gold file: WORD<TAB>ACTION[<TAB>STEM] with ACTION in {strip, keep}

    Args:
        source: Readable text stream
        name: Source name used in error messages

    Raises:
        MalformedLine: wrong column count, unknown action, or inconsistent stem
        EmptyField: an empty word or stem
    """
    name = name or str(getattr(source, "name", "<stream>"))
    entries: List[GoldEntry] = []
    for line_no, line in enumerate(source, 1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith(COMMENT_PREFIX):
            continue
        columns = line.split("\t")
        if len(columns) not in (2, 3):
            raise MalformedLine(f"expected 2 or 3 tab-separated columns, got {len(columns)}", name, line_no)
        try:
            action = GoldAction(columns[1].strip().lower())
        except ValueError:
            raise MalformedLine(f"unknown action {columns[1]!r} (expected strip or keep)", name, line_no)
        try:
            word = normalize_word(columns[0])
            gold_stem = normalize_word(columns[2]) if len(columns) == 3 and columns[2].strip() else None
            entries.append(GoldEntry(word, action, gold_stem))
        except EmptyToken as e:
            raise EmptyField(str(e), name, line_no)
        except (InvalidToken, ValueError) as e:
            raise MalformedLine(str(e), name, line_no)
    logger.info(f"Loaded {len(entries)} gold entries from {name}")
    return entries


def load_gold_file(path: Union[str, Path]) -> List[GoldEntry]:
    with open(path, encoding="utf-8-sig") as f:
        return load_gold(f, str(path))


def _fmt(value: Optional[float]) -> str:
    return "n/a" if value is None else f"{value:.4f}"


def render_summary(report: EvalReport) -> str:
    """Human-readable counts and ratios"""
    c = report.counts
    lines = [
        f"words evaluated: {c.total}",
        f"TP: {c.tp}  TN: {c.tn}  FP: {c.fp}  FN: {c.fn}",
        f"sensitivity: {_fmt(report.sensitivity)}",
        f"specificity: {_fmt(report.specificity)}",
        f"accuracy:    {_fmt(report.accuracy)}",
    ]
    return "\n".join(lines) + "\n"


def write_verdicts(report: EvalReport, out: TextIO):
    """TSV word, stem, method tag, classification; gold order"""
    out.write("#word\tstem\tmethod\tclass\n")
    for v in report.verdicts:
        out.write(f"{v.word}\t{v.stem}\t{v.tag}\t{v.classification.value}\n")
