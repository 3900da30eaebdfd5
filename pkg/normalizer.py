"""
Persian orthography normalizer
Maps Arabic-block letter variants onto their Persian forms, strips tatweel and
diacritics, so lexicon lookup and suffix matching compare one spelling only
"""
import unicodedata
from typing import NewType

from errors import EmptyToken, InvalidToken

NormalizedWord = NewType("NormalizedWord", str)

ZWNJ = "\u200c"
FATHATAN = "\u064b"
TATWEEL = "\u0640"

# Arabic yeh / alef maksura -> Persian yeh, Arabic kaf -> keheh
_CHAR_MAP = {
    0x064A: "\u06cc",
    0x0649: "\u06cc",
    0x0643: "\u06a9",
    ord(TATWEEL): None,
}
# Dammatan .. sukun are deleted everywhere; fathatan is handled separately
_CHAR_MAP.update({cp: None for cp in range(0x064C, 0x0653)})


def _is_word_char(ch: str) -> bool:
    """Letters, combining marks and ZWNJ continue a word"""
    if ch == ZWNJ:
        return True
    return unicodedata.category(ch)[0] in ("L", "M")


def _drop_inner_fathatan(text: str) -> str:
    if FATHATAN not in text:
        return text
    out = []
    last = len(text) - 1
    for i, ch in enumerate(text):
        if ch == FATHATAN and i < last and _is_word_char(text[i + 1]):
            continue
        out.append(ch)
    return "".join(out)


def normalize_text(raw: str) -> str:
    """
    Apply the character map to arbitrary text, keeping whitespace as is

    Args:
        raw: Any text, possibly multi-line

    Returns:
        NFC-composed text with canonical Persian letters, no tatweel and no
        diacritics except a word-final fathatan
    """
    if not raw:
        return ""
    text = unicodedata.normalize("NFC", raw).translate(_CHAR_MAP)
    # a deleted tatweel can leave a letter and its madda newly adjacent
    text = unicodedata.normalize("NFC", text)
    return _drop_inner_fathatan(text)


def normalize_word(raw: str) -> NormalizedWord:
    """
    Canonicalize a single token

    Args:
        raw: Token without internal whitespace (surrounding whitespace is ignored)

    Returns:
        Normalized word

    Raises:
        EmptyToken: token is empty, whitespace-only, or made of removable marks only
        InvalidToken: token contains internal whitespace
    """
    token = (raw or "").strip()
    if not token:
        raise EmptyToken("empty token")
    if any(ch.isspace() for ch in token):
        raise InvalidToken(f"token contains whitespace: {token!r}")
    word = normalize_text(token)
    if not word:
        raise EmptyToken(f"token {raw!r} normalizes to an empty word")
    return NormalizedWord(word)


def is_normalized(text: str) -> bool:
    """True when normalize_text leaves text unchanged"""
    return normalize_text(text) == text
