"""
Exceptions raised by the stemmer, the lexicon loaders and the evaluation harness
"""
from typing import Optional


class StemmerError(Exception):
    """Root of every error the library raises on purpose"""


class EmptyToken(StemmerError, ValueError):
    """Token is empty, whitespace-only, or normalizes to nothing"""


class InvalidToken(StemmerError, ValueError):
    """Single token contains internal whitespace"""


class LexiconError(StemmerError):
    """
    Load error in a lexicon or gold file

    Args:
        reason: What is wrong with the line
        source: File name (or "<stream>") the line came from
        line_no: 1-based line number, None when not tied to a line
    """

    def __init__(self, reason: str, source: str = "<stream>", line_no: Optional[int] = None):
        self.reason = reason
        self.source = source
        self.line_no = line_no
        if line_no is None:
            super().__init__(f"{source}: {reason}")
        else:
            super().__init__(f"{source}:{line_no}: {reason}")


class MalformedLine(LexiconError):
    pass


class DuplicateKey(LexiconError):
    pass


class EmptyField(LexiconError):
    pass


class WordMismatch(StemmerError, ValueError):
    """Stem result does not belong to the gold entry it is classified against"""
