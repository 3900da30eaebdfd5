"""
Randomized invariant checks over seeded inputs
"""
import random

import pytest

from corpus import count_frequencies, tokenize
from errors import EmptyToken, InvalidToken
from lexicon import InterveningLexicon, LexiconPair, LookupKind, MokassarLexicon, lookup
from normalizer import FATHATAN, TATWEEL, ZWNJ, is_normalized, normalize_text, normalize_word
from stemmer import StemConfig, StemMethod, Stemmer, plural_ending, stem, strip_suffix

CASES = 1000

# Letters that make up most of the suffix inventory, plus a few others
LETTERS = list("اتنهیمشرونزلبدکگسآ")
VARIANTS = ["\u064a", "\u0649", "\u0643", TATWEEL]
MARKS = [chr(cp) for cp in range(0x064B, 0x0653)] + ["\u0653"]
SEPARATORS = [" ", "  ", "\t", "\n", "\r\n", "، ", ".", "؟ ", "«", "»", "!", "\x1c", "\x1d", "\x1e", "\x1f"]
DIGITS = list("0123456789۰۱۲۳۴۵۶۷۸۹")


def random_word(rng: random.Random) -> str:
    chars = []
    for _ in range(rng.randint(1, 9)):
        roll = rng.random()
        if roll < 0.75:
            chars.append(rng.choice(LETTERS))
        elif roll < 0.85:
            chars.append(rng.choice(VARIANTS))
        elif roll < 0.95:
            chars.append(rng.choice(MARKS))
        else:
            chars.append(ZWNJ)
    return "".join(chars)


def random_text(rng: random.Random) -> str:
    parts = []
    for _ in range(rng.randint(0, 12)):
        parts.append(random_word(rng) if rng.random() < 0.85 else "".join(rng.choices(DIGITS, k=3)))
        parts.append(rng.choice(SEPARATORS))
    return "".join(parts)


def normalized_words(seed: int, n: int = CASES):
    rng = random.Random(seed)
    words = []
    while len(words) < n:
        try:
            words.append(normalize_word(random_word(rng)))
        except (EmptyToken, InvalidToken):
            continue
    return words


def test_normalize_text_is_idempotent():
    rng = random.Random(11)
    for _ in range(CASES):
        once = normalize_text(random_text(rng))
        assert normalize_text(once) == once
        assert is_normalized(once)


def test_normalize_word_is_idempotent():
    for word in normalized_words(12):
        assert normalize_word(word) == word
        for ch in word:
            assert ch not in VARIANTS
            assert ch == FATHATAN or ch not in MARKS[:-1]


def test_fathatan_only_word_final():
    for word in normalized_words(13):
        assert FATHATAN not in word[:-1]


@pytest.mark.parametrize("min_stem_len", [1, 2, 3])
def test_stem_length_floor(min_stem_len):
    config = StemConfig(min_stem_len=min_stem_len)
    for word in normalized_words(20 + min_stem_len):
        result = strip_suffix(word, config=config)
        if result.method is StemMethod.AFFIX_STRIPPED:
            assert len(result.stem) >= min_stem_len
            assert len(result.stem) < len(word)
        else:
            assert result.stem == word


def test_stripped_word_reconstructs():
    for config in (StemConfig(), StemConfig(iterate=True)):
        for word in normalized_words(30):
            result = strip_suffix(word, config=config)
            if result.method is not StemMethod.AFFIX_STRIPPED:
                continue
            assert word in (result.stem + result.suffix, result.stem + ZWNJ + result.suffix)
            assert not result.suffix.startswith(ZWNJ)
            assert "".join(reversed(result.removed)) == result.suffix.replace(ZWNJ, "")


def test_iterate_reaches_fixpoint():
    for word in normalized_words(40):
        config = StemConfig(iterate=True, max_iterations=len(word) + 1)
        result = strip_suffix(word, config=config)
        assert strip_suffix(result.stem, config=StemConfig()).method is StemMethod.UNCHANGED


def test_plural_ending_gate_is_a_real_ending():
    for word in normalized_words(50):
        ending = plural_ending(word)
        if ending is not None:
            assert word.endswith(ending.value)
            assert word[: -len(ending.value)] not in ("", ZWNJ)


def test_stem_is_deterministic(seed_lexicons):
    stemmer = Stemmer(seed_lexicons)
    words = normalized_words(60)
    assert stemmer.stem_many(words) == stemmer.stem_many(words)
    assert [r.stem for r in stemmer.stem_many(words)] == [
        stem(w, seed_lexicons).stem for w in words
    ]


def test_lexicon_hits_are_never_stripped():
    words = normalized_words(70, 300)
    rng = random.Random(71)
    mokassar_words = set(rng.sample(words, 100))
    intervening_words = set(rng.sample(words, 100))
    pair = LexiconPair(
        MokassarLexicon({w: w + "ا" for w in mokassar_words}),
        InterveningLexicon(intervening_words),
    )
    for word in words:
        result = stem(word, pair)
        if word in intervening_words:
            assert lookup(pair, word).kind is LookupKind.INTERVENING
            assert result.method is StemMethod.LOOKUP_INTERVENING
            assert result.stem == word
        elif word in mokassar_words:
            assert result.method is StemMethod.LOOKUP_MOKASSAR
            assert result.stem == word + "ا"
        else:
            assert result.method in (StemMethod.AFFIX_STRIPPED, StemMethod.UNCHANGED)


def test_tokenization_conserves_counts():
    rng = random.Random(80)
    for _ in range(CASES):
        tokens = tokenize(random_text(rng))
        table = count_frequencies(tokens)
        assert table.total_tokens == len(tokens)
        assert sum(count for _, count in table.sorted_items()) == len(tokens)
        for token in tokens:
            assert token.text
            assert not any(ch.isspace() for ch in token.text)
            assert not token.text.startswith(ZWNJ) and not token.text.endswith(ZWNJ)
            assert is_normalized(token.text)


def test_frequency_merge_matches_concatenation():
    rng = random.Random(90)
    for _ in range(CASES // 4):
        left, right = random_text(rng), random_text(rng)
        merged = count_frequencies(tokenize(left)).merge(count_frequencies(tokenize(right)))
        assert merged == count_frequencies(tokenize(left + "\n" + right))
