#!/usr/bin/env python3
"""
Command-line entry point for the hybrid Persian stemmer

  python3 persian_stem.py stem قوانین گل‌ها
  echo کتاب | python3 persian_stem.py stem --trace --format jsonl
  python3 persian_stem.py freq corpus.txt --query آثار اسامی جزایر حوادث قوانین
  python3 persian_stem.py eval gold.tsv --ablation

Lexicons default to the bundled seed files; --mokassar / --intervening (or
STEMMER_MOKASSAR_PATH / STEMMER_INTERVENING_PATH in .env) replace them.
Data goes to stdout, diagnostics to stderr.

Exit status: 0 all inputs processed, 1 some inputs skipped, 2 load or parse failure.
"""
from __future__ import annotations

import argparse
import io
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, TextIO

from config import (
    INTERVENING_PATH,
    ITERATE,
    LOG_FILE,
    LOG_LEVEL,
    MAX_ITERATIONS,
    MIN_STEM_LEN,
    MOKASSAR_PATH,
    OUTPUT_FORMAT,
)
from corpus import FrequencyTable, count_file, query_counts, write_frequencies
from errors import EmptyToken, InvalidToken, StemmerError
from evaluation import (
    EvalReport,
    ablation_transitions,
    evaluate,
    is_allowed_transition,
    load_gold_file,
    render_summary,
    write_verdicts,
)
from lexicon import LexiconPair, load_lexicons
from normalizer import normalize_word
from stemmer import StemConfig, StemResult, Stemmer

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARTIAL = 1
EXIT_LOAD_ERROR = 2


@dataclass(frozen=True)
class CliConfig:
    mokassar_path: Optional[Path] = None
    intervening_path: Optional[Path] = None
    min_stem_len: int = MIN_STEM_LEN
    iterate: bool = ITERATE
    max_iterations: int = MAX_ITERATIONS
    output_format: str = OUTPUT_FORMAT
    trace: bool = False

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        return cls(
            mokassar_path=args.mokassar,
            intervening_path=args.intervening,
            min_stem_len=args.min_stem_len,
            iterate=args.iterate,
            max_iterations=args.max_iterations,
            output_format=args.format,
            trace=args.trace,
        )

    def stem_config(self) -> StemConfig:
        return StemConfig(
            min_stem_len=self.min_stem_len,
            iterate=self.iterate,
            max_iterations=self.max_iterations,
        )

    def missing_paths(self) -> List[Path]:
        return [p for p in (self.mokassar_path, self.intervening_path) if p is not None and not p.is_file()]


def _configure_logging(level: str):
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if LOG_FILE:
        handlers.append(logging.FileHandler(LOG_FILE))
    logging.basicConfig(
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        level=getattr(logging, level.upper(), logging.WARNING),
        handlers=handlers,
    )


def _use_utf8_stdio():
    """Words come and go as UTF-8 whatever the locale says"""
    for stream in (sys.stdin, sys.stdout):
        if isinstance(stream, io.TextIOWrapper):
            stream.reconfigure(encoding="utf-8")


def _positive_int(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a value >= 1, got {value}")
    return value


def _load_lexicons(config: CliConfig) -> Optional[LexiconPair]:
    """Load lexicons up front; None (after logging why) when they cannot be used"""
    missing = config.missing_paths()
    if missing:
        for path in missing:
            logger.error(f"Lexicon file not found: {path}")
        return None
    try:
        lexicons = load_lexicons(config.mokassar_path, config.intervening_path)
    except (OSError, UnicodeDecodeError, StemmerError) as e:
        logger.error(f"Could not load lexicons: {e}")
        return None
    for word in lexicons.conflicts():
        logger.warning(f"{word!r} is in both lexicons; the Intervening entry wins")
    return lexicons


def _emit(records: Iterable[Dict], fields: List[str], output_format: str, out: TextIO):
    for record in records:
        if output_format == "jsonl":
            out.write(json.dumps(record, ensure_ascii=False) + "\n")
        else:
            out.write("\t".join("-" if record.get(f) is None else str(record[f]) for f in fields) + "\n")


def _stem_record(raw: str, result: StemResult, trace: bool) -> Dict:
    record = {"input": raw, "stem": result.stem, "method": result.tag}
    if trace:
        record["plural_ending"] = result.plural_ending.value if result.plural_ending else None
        record["suffix"] = result.suffix
    return record


def _input_words(words: List[str]) -> Iterable[str]:
    if words:
        return words
    return (line.rstrip("\r\n") for line in sys.stdin)


def cmd_stem(words: List[str], config: CliConfig, out: Optional[TextIO] = None) -> int:
    """
    Stem words given as arguments, or one per line on stdin

    Args:
        words: Raw tokens; empty means read stdin
        config: CLI settings
        out: Output stream (stdout by default)

    Returns:
        Exit status
    """
    out = out or sys.stdout
    lexicons = _load_lexicons(config)
    if lexicons is None:
        return EXIT_LOAD_ERROR
    stemmer = Stemmer(lexicons, config=config.stem_config())

    fields = ["input", "stem", "method"]
    if config.trace:
        fields += ["plural_ending", "suffix"]

    status = EXIT_OK
    for n, raw in enumerate(_input_words(words), 1):
        token = raw.strip()
        try:
            result = stemmer.stem(token)
        except EmptyToken:
            logger.warning(f"input {n}: empty token skipped")
            continue
        except InvalidToken as e:
            logger.error(f"input {n}: {e}")
            status = EXIT_PARTIAL
            continue
        _emit([_stem_record(token, result, config.trace)], fields, config.output_format, out)
    return status


def _write_table(table: FrequencyTable, output_format: str, out: TextIO):
    if output_format == "jsonl":
        records = [{"word": w, "count": c} for w, c in table.sorted_items()]
        records.append({"total": table.total_tokens})
        _emit(records, [], "jsonl", out)
    else:
        write_frequencies(table, out)


def _write_query(table: FrequencyTable, query_words: List[str], output_format: str, out: TextIO) -> int:
    usable = []
    status = EXIT_OK
    for word in query_words:
        try:
            usable.append(normalize_word(word))
        except (EmptyToken, InvalidToken):
            logger.warning(f"query word {word!r} skipped")
            status = EXIT_PARTIAL
    report = query_counts(table, usable)
    if output_format == "jsonl":
        records = [{"word": w, "count": c} for w, c in report.counts]
        records.append({"sum": report.total, "total": report.total_tokens, "ratio": report.ratio})
        _emit(records, [], "jsonl", out)
    else:
        for word, count in report.counts:
            out.write(f"{word}\t{count}\n")
        out.write(f"#sum\t{report.total}\n")
        out.write(f"#total\t{report.total_tokens}\n")
        out.write(f"#ratio\t{report.ratio:.8f}\n")
    return status


def _write_freq(table: FrequencyTable, query_words: Optional[List[str]], output_format: str, out: TextIO) -> int:
    if not query_words:
        _write_table(table, output_format, out)
        return EXIT_OK
    return _write_query(table, query_words, output_format, out)


def cmd_freq(
    corpus_path: Path,
    query_words: Optional[List[str]],
    config: CliConfig,
    out: Optional[TextIO] = None,
    output_path: Optional[Path] = None,
) -> int:
    """
    Count word frequencies in a corpus, or report counts for chosen words

    Args:
        corpus_path: UTF-8 corpus file
        query_words: Words to report (full table when None or empty)
        config: CLI settings
        out: Output stream (stdout by default)
        output_path: Write here instead; opened only once the corpus is counted

    Returns:
        Exit status
    """
    try:
        table = count_file(corpus_path)
    except (OSError, UnicodeDecodeError) as e:
        logger.error(f"Could not read corpus {corpus_path}: {e}")
        return EXIT_LOAD_ERROR

    if output_path is None:
        return _write_freq(table, query_words, config.output_format, out or sys.stdout)
    try:
        with open(output_path, "w", encoding="utf-8") as f:
            return _write_freq(table, query_words, config.output_format, f)
    except OSError as e:
        logger.error(f"Could not write {output_path}: {e}")
        return EXIT_LOAD_ERROR


def cmd_eval(gold_path: Path, config: CliConfig, out: Optional[TextIO] = None, ablation: bool = False) -> int:
    """
    Evaluate the stemmer on a gold file and print the confusion matrix

    Args:
        gold_path: Gold TSV (WORD<TAB>strip|keep[<TAB>STEM])
        config: CLI settings
        out: Output stream (stdout by default)
        ablation: Also evaluate with empty lexicons and list changed words

    Returns:
        Exit status (0 whenever the evaluation ran, whatever the scores)
    """
    out = out or sys.stdout
    try:
        gold = load_gold_file(gold_path)
    except (OSError, UnicodeDecodeError, StemmerError) as e:
        logger.error(f"Could not parse gold file: {e}")
        return EXIT_LOAD_ERROR
    if not gold:
        logger.error(f"Gold file {gold_path} has no entries")
        return EXIT_LOAD_ERROR

    lexicons = _load_lexicons(config)
    if lexicons is None:
        return EXIT_LOAD_ERROR

    stem_config = config.stem_config()
    report = evaluate(gold, lexicons, config=stem_config)

    if config.output_format == "jsonl":
        c = report.counts
        summary = {
            "tp": c.tp,
            "tn": c.tn,
            "fp": c.fp,
            "fn": c.fn,
            "sensitivity": report.sensitivity,
            "specificity": report.specificity,
            "accuracy": report.accuracy,
        }
        verdicts = [
            {"word": v.word, "stem": v.stem, "method": v.tag, "class": v.classification.value}
            for v in report.verdicts
        ]
        _emit([summary] + verdicts, [], "jsonl", out)
    else:
        out.write(render_summary(report))
        write_verdicts(report, out)

    if ablation:
        bare = evaluate(gold, LexiconPair.empty(), config=stem_config)
        _write_ablation(report, bare, config.output_format, out)
    return EXIT_OK


def _write_ablation(report: EvalReport, bare: EvalReport, output_format: str, out: TextIO):
    moves = ablation_transitions(report, bare)
    ordered = sorted(moves.items(), key=lambda kv: (kv[0][0].value, kv[0][1].value))
    for (before, after), words in ordered:
        if not is_allowed_transition(before, after):
            logger.warning(f"unexpected transition {before.value}->{after.value}: {', '.join(words)}")

    if output_format == "jsonl":
        records = [{"ablation": "accuracy", "with_lexicons": report.accuracy, "without_lexicons": bare.accuracy}]
        records += [
            {"ablation": f"{before.value}->{after.value}", "words": words}
            for (before, after), words in ordered
        ]
        _emit(records, [], "jsonl", out)
        return
    out.write(f"#ablation\taccuracy\t{report.accuracy:.4f}\t{bare.accuracy:.4f}\n")
    for (before, after), words in ordered:
        out.write(f"#ablation\t{before.value}->{after.value}\t{' '.join(words)}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mokassar", type=Path, default=MOKASSAR_PATH, metavar="PATH",
                        help="Mokassar TSV (PLURAL<TAB>SINGULAR). Default: bundled seed.")
    common.add_argument("--intervening", type=Path, default=INTERVENING_PATH, metavar="PATH",
                        help="Intervening word list. Default: bundled seed.")
    common.add_argument("--min-stem-len", type=_positive_int, default=MIN_STEM_LEN, metavar="N",
                        help=f"Shortest stem stripping may leave (default {MIN_STEM_LEN}).")
    common.add_argument("--iterate", action="store_true", default=ITERATE,
                        help="Keep stripping until no suffix matches.")
    common.add_argument("--max-iterations", type=_positive_int, default=MAX_ITERATIONS, metavar="N",
                        help=f"Stripping passes with --iterate (default {MAX_ITERATIONS}).")
    common.add_argument("--format", choices=("tsv", "jsonl"), default=OUTPUT_FORMAT,
                        help=f"Output format (default {OUTPUT_FORMAT}).")
    common.add_argument("--trace", action="store_true",
                        help="Add matched plural ending and suffix to stem records.")
    common.add_argument("--log-level", default=LOG_LEVEL, metavar="LEVEL",
                        help=f"Diagnostics level (default {LOG_LEVEL}).")

    parser = argparse.ArgumentParser(description="Hybrid (lexicon + suffix stripping) Persian stemmer.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_stem = sub.add_parser("stem", parents=[common], help="Stem words (arguments or stdin, one per line).")
    p_stem.add_argument("words", nargs="*", help="Words to stem; read stdin when omitted.")

    p_freq = sub.add_parser("freq", parents=[common], help="Word frequencies of a corpus.")
    p_freq.add_argument("corpus", type=Path, help="UTF-8 corpus file.")
    p_freq.add_argument("--query", nargs="+", metavar="WORD",
                        help="Report counts, their sum and corpus share for these words only.")
    p_freq.add_argument("--output", type=Path, metavar="PATH", help="Write the result here instead of stdout.")

    p_eval = sub.add_parser("eval", parents=[common], help="Confusion matrix against a gold file.")
    p_eval.add_argument("gold", type=Path, help="Gold TSV: WORD<TAB>strip|keep[<TAB>STEM].")
    p_eval.add_argument("--ablation", action="store_true",
                        help="Also evaluate with empty lexicons and list changed classifications.")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    _use_utf8_stdio()
    args = build_parser().parse_args(argv)
    _configure_logging(args.log_level)
    config = CliConfig.from_args(args)

    if args.command == "stem":
        return cmd_stem(args.words, config)
    if args.command == "freq":
        return cmd_freq(args.corpus, args.query, config, output_path=args.output)
    return cmd_eval(args.gold, config, ablation=args.ablation)


if __name__ == "__main__":
    raise SystemExit(main())
