"""
Tests for lexicon loading, lookup and serialization
"""
import io

import pytest

from errors import DuplicateKey, EmptyField, LexiconError, MalformedLine
from lexicon import (
    InterveningLexicon,
    LexiconPair,
    LookupKind,
    MokassarLexicon,
    dump_intervening,
    dump_mokassar,
    load_intervening,
    load_lexicons,
    load_mokassar,
    lookup,
)

TABLE_II = {
    "آثار": "آثر",
    "اسامی": "اسم",
    "جزایر": "جزیره",
    "حوادث": "حادثه",
    "قوانین": "قانون",
}

TABLE_IV = {
    "ستون", "هدفون", "تلویزیون",
    "عین", "دین", "پایین",
    "اثبات", "ادات",
    "آبادان", "آبان", "خان",
}


def test_seed_mokassar_matches_broken_plural_table(seed_lexicons):
    assert dict(seed_lexicons.mokassar.entries) == TABLE_II


def test_seed_intervening_matches_exemption_table(seed_lexicons):
    assert set(seed_lexicons.intervening.entries) == TABLE_IV


def test_seed_tables_do_not_conflict(seed_lexicons):
    assert seed_lexicons.conflicts() == []


@pytest.mark.parametrize("line,plural,singular", [
    ("قوانین\tقانون\n", "قوانین", "قانون"),
    ("آثار\tآثر\n", "آثار", "آثر"),
])
def test_load_mokassar_line(line, plural, singular):
    lexicon = load_mokassar(io.StringIO(line))
    assert dict(lexicon.entries) == {plural: singular}


def test_load_mokassar_empty_stream():
    assert len(load_mokassar(io.StringIO(""))) == 0


def test_load_mokassar_normalizes_columns():
    lexicon = load_mokassar(io.StringIO("قوان\u064aن\tقانون\n"))
    assert lexicon.get("قوانین") == "قانون"


def test_load_mokassar_skips_comments_and_crlf():
    lexicon = load_mokassar(io.StringIO("# header\r\n\r\nحوادث\tحادثه\r\n"))
    assert dict(lexicon.entries) == {"حوادث": "حادثه"}


def test_load_mokassar_identical_duplicate_collapses():
    lexicon = load_mokassar(io.StringIO("حوادث\tحادثه\nحوادث\tحادثه\n"))
    assert len(lexicon) == 1


def test_load_mokassar_conflicting_duplicate():
    with pytest.raises(DuplicateKey) as exc:
        load_mokassar(io.StringIO("حوادث\tحادثه\nحوادث\tحدث\n"), name="m.tsv")
    assert exc.value.line_no == 2
    assert str(exc.value).startswith("m.tsv:2:")


@pytest.mark.parametrize("text", [
    "قوانین\n",
    "قوانین\tقانون\tاضافه\n",
    "قوانین\tقوانین\n",
    "قوانین ها\tقانون\n",
])
def test_load_mokassar_malformed(text):
    with pytest.raises(MalformedLine):
        load_mokassar(io.StringIO(text))


@pytest.mark.parametrize("text", ["قوانین\t\n", "\tقانون\n", "قوانین\t\u0640\n"])
def test_load_mokassar_empty_field(text):
    with pytest.raises(EmptyField):
        load_mokassar(io.StringIO(text))


def test_lexicon_errors_share_base():
    with pytest.raises(LexiconError):
        load_mokassar(io.StringIO("a\tb\tc\n"))


@pytest.mark.parametrize("text,expected", [
    ("ستون\nتلویزیون\n", {"ستون", "تلویزیون"}),
    ("خان\nآبان\n", {"خان", "آبان"}),
    ("# only comments\n\n   \n# more\n", set()),
    ("دین\nدین\n  دین  \n", {"دین"}),
])
def test_load_intervening(text, expected):
    assert set(load_intervening(io.StringIO(text)).entries) == expected


def test_load_intervening_rejects_two_words_per_line():
    with pytest.raises(MalformedLine) as exc:
        load_intervening(io.StringIO("ستون\nعین دین\n"))
    assert exc.value.line_no == 2


@pytest.mark.parametrize("word,kind,stem", [
    ("حوادث", LookupKind.MOKASSAR, "حادثه"),
    ("دین", LookupKind.INTERVENING, "دین"),
    ("کتاب", LookupKind.NOT_FOUND, None),
])
def test_lookup(seed_lexicons, word, kind, stem):
    result = lookup(seed_lexicons, word)
    assert result.kind is kind
    assert result.stem == stem
    assert result.found == (kind is not LookupKind.NOT_FOUND)


def test_lookup_is_exact_match(seed_lexicons):
    assert lookup(seed_lexicons, "حوادثی").kind is LookupKind.NOT_FOUND
    assert lookup(seed_lexicons, "وادث").kind is LookupKind.NOT_FOUND


def test_intervening_wins_over_mokassar():
    pair = LexiconPair(MokassarLexicon({"ستون": "ست"}), InterveningLexicon({"ستون"}))
    assert lookup(pair, "ستون").kind is LookupKind.INTERVENING
    assert pair.conflicts() == ["ستون"]


def test_round_trip(seed_lexicons):
    out = io.StringIO()
    dump_mokassar(seed_lexicons.mokassar, out)
    assert load_mokassar(io.StringIO(out.getvalue())) == seed_lexicons.mokassar

    out = io.StringIO()
    dump_intervening(seed_lexicons.intervening, out)
    assert load_intervening(io.StringIO(out.getvalue())) == seed_lexicons.intervening


def test_load_lexicons_from_files(tmp_path):
    mokassar = tmp_path / "m.tsv"
    mokassar.write_text("جزایر\tجزیره\n", encoding="utf-8")
    intervening = tmp_path / "i.txt"
    intervening.write_text("هدفون\n", encoding="utf-8")
    pair = load_lexicons(mokassar, intervening)
    assert dict(pair.mokassar.entries) == {"جزایر": "جزیره"}
    assert set(pair.intervening.entries) == {"هدفون"}


def test_load_lexicons_ignores_byte_order_mark(tmp_path):
    mokassar = tmp_path / "m.tsv"
    mokassar.write_text("\ufeffقوانین\tقانون\n", encoding="utf-8")
    intervening = tmp_path / "i.txt"
    intervening.write_text("\ufeffستون\n", encoding="utf-8")
    pair = load_lexicons(mokassar, intervening)
    assert pair.mokassar.get("قوانین") == "قانون"
    assert lookup(pair, "ستون").kind is LookupKind.INTERVENING


def test_lexicons_are_read_only(seed_lexicons):
    with pytest.raises(TypeError):
        seed_lexicons.mokassar.entries["x"] = "y"
