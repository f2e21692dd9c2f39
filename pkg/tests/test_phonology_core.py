"""Letter mapping, harmony, allophones, epenthesis and normalization."""
import pytest

from errors import EmptyToken, InvalidSampaToken, MissingHarmonyContext, UnknownGrapheme
from phonology_core import (ALPHABET, INVENTORY, MetaGrapheme, Pron, apply_allophones, base_map,
                            base_phones, epenthesize, normalize, parse_tokens, phoneme,
                            resolve_meta, turkish_lower)

# -------------------------------------------------------------------------
# Letter -> default SAMPA symbol
# -------------------------------------------------------------------------
BASE_GOLD = {
    "a": "a", "b": "b", "c": "dZ", "ç": "tS", "d": "d", "e": "e", "f": "f",
    "g": "g", "ğ": "G", "h": "h", "ı": "1", "i": "i", "j": "Z", "k": "k",
    "l": "l", "m": "m", "n": "n", "o": "o", "ö": "2", "p": "p", "r": "r",
    "s": "s", "ş": "S", "t": "t", "u": "u", "ü": "y", "v": "v", "y": "j", "z": "z",
}


@pytest.mark.parametrize(("letter", "symbol"), BASE_GOLD.items())
def test_base_map(letter: str, symbol: str) -> None:
    assert base_map(letter).symbol == symbol


def test_base_map_covers_alphabet() -> None:
    assert set(BASE_GOLD) == set(ALPHABET)


@pytest.mark.parametrize("letter", ["q", "w", "x", "3", "A", "ä"])
def test_base_map_rejects_foreign_letters(letter: str) -> None:
    with pytest.raises(UnknownGrapheme) as exc:
        base_map(letter)
    assert letter in str(exc.value)


def test_inventory_has_no_w_or_N_from_letters() -> None:
    symbols = {base_map(ch).symbol for ch in ALPHABET}
    assert "w" in INVENTORY and "N" in INVENTORY
    assert "w" not in symbols and "N" not in symbols


def test_invalid_sampa_token() -> None:
    with pytest.raises(InvalidSampaToken):
        parse_tokens("a x@ b")


def test_pron_validation() -> None:
    with pytest.raises(ValueError):
        Pron(())
    with pytest.raises(ValueError):
        Pron.from_tokens("e v", stress_index=1)
    assert str(Pron.from_tokens("o k u m a", 1)) == "o k u m a"


def test_long_vowels() -> None:
    assert phoneme("a").lengthened().symbol == "a:"
    assert phoneme("i:").shortened().symbol == "i"
    assert phoneme("k").lengthened().symbol == "k"


# -------------------------------------------------------------------------
# Allophones
# -------------------------------------------------------------------------
ALLOPHONE_GOLD = [
    ("k 1 r a l", "k 1 r a 5"),
    ("m i n s k e", "m i n s c e"),
    ("g o l", "g o 5"),
    ("g e l", "gj e l"),
    ("k i t a p", "c i t a p"),
    ("m a s a", "m a s a"),
]


@pytest.mark.parametrize(("phones", "expected"), ALLOPHONE_GOLD)
def test_apply_allophones(phones: str, expected: str) -> None:
    pron = Pron.from_tokens(phones)
    result = apply_allophones(pron)
    assert str(result) == expected
    assert len(result.phones) == len(pron.phones)


# -------------------------------------------------------------------------
# Metaphonemes
# -------------------------------------------------------------------------
META_GOLD = [
    ("H", "zaman", "ı"),
    ("D", "kısa", "d"),
    ("H", "koyun", "u"),
    ("H", "göz", "ü"),
    ("H", "ev", "i"),
    ("A", "ev", "e"),
    ("A", "kol", "a"),
    ("D", "kitap", "t"),
    ("D", "ağaç", "t"),
    ("D", "dağ", "d"),
]


@pytest.mark.parametrize(("meta", "context", "letter"), META_GOLD)
def test_resolve_meta(meta: str, context: str, letter: str) -> None:
    assert resolve_meta(meta, base_phones(context)) == letter


def test_resolve_meta_accepts_enum() -> None:
    assert resolve_meta(MetaGrapheme.A, base_phones("kapı")) == "a"
    assert MetaGrapheme.H.expansions == frozenset("ıiuü")


@pytest.mark.parametrize(("meta", "context"), [("A", ""), ("H", "tr"), ("D", "")])
def test_resolve_meta_without_context(meta: str, context: str) -> None:
    with pytest.raises(MissingHarmonyContext):
        resolve_meta(meta, base_phones(context))


def test_vowel_harmony_table_is_total() -> None:
    expected_h = {"a": "ı", "ı": "ı", "o": "u", "u": "u", "e": "i", "i": "i", "ö": "ü", "ü": "ü"}
    expected_a = {"a": "a", "ı": "a", "o": "a", "u": "a", "e": "e", "i": "e", "ö": "e", "ü": "e"}
    for vowel in expected_h:
        assert resolve_meta("H", base_phones("k" + vowel + "t")) == expected_h[vowel]
        assert resolve_meta("A", base_phones("k" + vowel + "t")) == expected_a[vowel]


# -------------------------------------------------------------------------
# Epenthesis and normalization
# -------------------------------------------------------------------------
@pytest.mark.parametrize(("root", "expected"), [
    ("kral", "kıral"),
    ("grup", "gurup"),
    ("prens", "pirens"),
    ("masa", "masa"),
    ("ev", "ev"),
])
def test_epenthesize(root: str, expected: str) -> None:
    assert epenthesize(root) == expected


def test_turkish_case_folding() -> None:
    assert turkish_lower("ISPARTA") == "ısparta"
    assert turkish_lower("İZMİR") == "izmir"
    assert turkish_lower("ÇĞÖŞÜ") == "çğöşü"


def test_normalize_uppercase_hint() -> None:
    token = normalize("Istanbul")
    assert token.text == "ıstanbul"
    assert token.uppercase_hint
    assert not token.has_apostrophe


def test_normalize_apostrophe() -> None:
    token = normalize("Zonguldak'a")
    assert token.text == "zonguldak'a"
    assert token.has_apostrophe
    assert normalize("Ankara’da").text == "ankara'da"


@pytest.mark.parametrize(("raw", "text"), [("ev", "ev"), ("«ev»,", "ev"), ("Kâğıt", "kağıt"), (" ev. ", "ev")])
def test_normalize_strips(raw: str, text: str) -> None:
    assert normalize(raw).text == text


@pytest.mark.parametrize("raw", ["", "   ", "!!!", "..."])
def test_normalize_empty(raw: str) -> None:
    with pytest.raises(EmptyToken):
        normalize(raw)
