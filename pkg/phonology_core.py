"""Phoneme inventory, default letter mapping and the context rules every
other module builds on: vowel harmony, D-assimilation, k/l/g allophones,
cluster epenthesis and Turkish case folding.
"""
import os
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

import pandas as pd

from errors import EmptyToken, InvalidSampaToken, MissingHarmonyContext, UnknownGrapheme

# -----------------------
# CONFIG
# -----------------------
DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")
FEATURES_PATH = os.path.join(DATA_DIR, "phoneme_features.tsv")

VOWEL_LETTERS = "aeıioöuü"
ALPHABET = "abcçdefgğhıijklmnoöprsştuüvyz"

# letters outside the Turkish alphabet that foreign words and
# abbreviations bring in
FOREIGN_LETTERS = {"q": "k", "w": "v", "x": "ks"}

BASE_MAP = {
    "ç": "tS",
    "c": "dZ",
    "ş": "S",
    "j": "Z",
    "ı": "1",
    "ö": "2",
    "ü": "y",
    "ğ": "G",
    "y": "j",
}

# syllable onsets that keep three consonants together (ktr, str, ...)
ONSET_CLUSTERS = {("s", "t", "r"), ("k", "t", "r"), ("c", "t", "r"), ("n", "t", "r")}

_FLAG_COLUMNS = ["front", "rounded", "high", "long", "voiced", "palatal"]


@dataclass(frozen=True)
class Phoneme:
    symbol: str
    category: str
    front: bool = False
    rounded: bool = False
    high: bool = False
    long: bool = False
    voiced: bool = False
    palatal: bool = False

    @property
    def is_vowel(self) -> bool:
        return self.category == "vowel"

    def lengthened(self) -> "Phoneme":
        if not self.is_vowel or self.long:
            return self
        return phoneme(self.symbol + ":")

    def shortened(self) -> "Phoneme":
        if not self.long:
            return self
        return phoneme(self.symbol.rstrip(":"))

    def __str__(self):
        return self.symbol


def _load_inventory(path: str = FEATURES_PATH) -> dict:
    df = pd.read_csv(path, sep="\t", comment="#", header=None, dtype=str,
                     names=["symbol", "category"] + _FLAG_COLUMNS)
    inventory = {}
    for row in df.itertuples(index=False):
        flags = {col: getattr(row, col) == "1" for col in _FLAG_COLUMNS}
        inventory[row.symbol] = Phoneme(symbol=row.symbol, category=row.category, **flags)
    return inventory


INVENTORY = _load_inventory()


def phoneme(symbol: str) -> Phoneme:
    """Canonical Phoneme for a SAMPA symbol."""
    try:
        return INVENTORY[symbol]
    except KeyError:
        raise InvalidSampaToken(symbol) from None


def parse_tokens(text: Union[str, Iterable[str]]) -> tuple:
    tokens = text.split() if isinstance(text, str) else list(text)
    return tuple(phoneme(tok) for tok in tokens)


@dataclass(frozen=True)
class Pron:
    """A phoneme sequence with an optional stressed-vowel ordinal."""
    phones: tuple
    stress_index: Optional[int] = None

    def __post_init__(self):
        if not self.phones:
            raise ValueError("empty pron")
        if self.stress_index is not None and not 0 <= self.stress_index < self.vowel_count:
            raise ValueError(f"stress index {self.stress_index} out of range for /{self}/")

    @classmethod
    def from_tokens(cls, text, stress_index: Optional[int] = None) -> "Pron":
        return cls(parse_tokens(text), stress_index)

    @property
    def tokens(self) -> tuple:
        return tuple(p.symbol for p in self.phones)

    @property
    def vowel_count(self) -> int:
        return sum(1 for p in self.phones if p.is_vowel)

    def with_stress(self, stress_index: Optional[int]) -> "Pron":
        return Pron(self.phones, stress_index)

    def __str__(self):
        return " ".join(self.tokens)


class MetaGrapheme(Enum):
    A = frozenset("ae")
    H = frozenset("ıiuü")
    D = frozenset("dt")

    @property
    def expansions(self) -> frozenset:
        return self.value


@dataclass(frozen=True)
class NormalizedToken:
    text: str
    uppercase_hint: bool
    has_apostrophe: bool


# -----------------------
# Letter mapping
# -----------------------
def base_map(grapheme: str) -> Phoneme:
    """Context-free default phoneme of a lowercase Turkish letter."""
    if len(grapheme) != 1 or grapheme not in ALPHABET:
        raise UnknownGrapheme(grapheme)
    return phoneme(BASE_MAP.get(grapheme, grapheme))


def turkishize(graphemes: str) -> str:
    return "".join(FOREIGN_LETTERS.get(ch, ch) for ch in graphemes)


def base_phones(graphemes: str) -> tuple:
    return tuple(base_map(ch) for ch in graphemes)


def is_vowel_letter(ch: str) -> bool:
    return ch in VOWEL_LETTERS


# -----------------------
# Syllable spans (shared by allophones, soft g and prosody)
# -----------------------
def syllable_spans(phones: Sequence[Phoneme]) -> list:
    """(start, end) spans of syllables; every span holds one vowel except
    when the input has none, in which case one span covers everything."""
    n = len(phones)
    spans = []
    start = 0
    while start < n:
        vowels = [i for i in range(start, n) if phones[i].is_vowel]
        if len(vowels) <= 1:
            spans.append((start, n))
            break
        pos = vowels[0]
        if phones[pos + 1].is_vowel:
            end = pos + 1
        elif phones[pos + 2].is_vowel:
            end = pos + 1
        elif phones[pos + 3].is_vowel:
            end = pos + 2
        elif tuple(p.symbol for p in phones[pos + 1:pos + 4]) in ONSET_CLUSTERS:
            end = pos + 2
        else:
            end = pos + 3
        spans.append((start, end))
        start = end
    return spans


# -----------------------
# Allophones
# -----------------------
_FRONT_ALLOPHONE = {"k": "c", "c": "c", "l": "l", "5": "l", "g": "gj", "gj": "gj"}
_BACK_ALLOPHONE = {"k": "k", "c": "k", "l": "5", "5": "5", "g": "g", "gj": "g"}


def allophone_phones(phones: Sequence[Phoneme], spans=None, start: int = 0) -> tuple:
    """Pick k/l/g allophones per syllable, leaving phones before ``start``
    untouched."""
    phones = tuple(phones)
    if spans is None:
        spans = syllable_spans(phones)
    out = list(phones)
    for lo, hi in spans:
        vowels = [p for p in phones[lo:hi] if p.is_vowel]
        if not vowels:
            continue
        table = _FRONT_ALLOPHONE if any(v.front for v in vowels) else _BACK_ALLOPHONE
        for i in range(max(lo, start), hi):
            sym = out[i].symbol
            if sym in table:
                out[i] = phoneme(table[sym])
    return tuple(out)


def apply_allophones(pron: Pron, boundaries=None) -> Pron:
    """Resolve k/l/g to their palatal or velar allophone by syllable."""
    return Pron(allophone_phones(pron.phones, boundaries), pron.stress_index)


# -----------------------
# Metaphonemes
# -----------------------
def last_vowel(context: Sequence[Phoneme]) -> Optional[Phoneme]:
    for p in reversed(context):
        if p.is_vowel:
            return p
    return None


def harmonic_high(vowel: Phoneme) -> str:
    if vowel.front:
        return "ü" if vowel.rounded else "i"
    return "u" if vowel.rounded else "ı"


def resolve_meta(meta: Union[MetaGrapheme, str], context: Sequence[Phoneme]) -> str:
    """Surface letter for A/H/D after the given left context."""
    meta = MetaGrapheme[meta] if isinstance(meta, str) else meta
    if meta is MetaGrapheme.D:
        if not context:
            raise MissingHarmonyContext(meta.name)
        return "d" if context[-1].voiced else "t"
    vowel = last_vowel(context)
    if vowel is None:
        raise MissingHarmonyContext(meta.name)
    if meta is MetaGrapheme.A:
        return "e" if vowel.front else "a"
    return harmonic_high(vowel)


# -----------------------
# Epenthesis
# -----------------------
def epenthesize(graphemes: str) -> str:
    """kral -> kıral: split a word-initial consonant cluster with a high
    vowel harmonizing with the first vowel of the root."""
    if len(graphemes) < 2 or is_vowel_letter(graphemes[0]) or is_vowel_letter(graphemes[1]):
        return graphemes
    first = next((ch for ch in graphemes if is_vowel_letter(ch)), None)
    if first is None:
        return graphemes
    return graphemes[0] + harmonic_high(base_map(first)) + graphemes[1:]


# -----------------------
# Normalization
# -----------------------
_EDGE_PUNCT = re.compile(r"^[\W_]+|[\W_]+$")
_CIRCUMFLEX = str.maketrans({"â": "a", "î": "i", "û": "u", "’": "'", "`": "'"})


def turkish_lower(text: str) -> str:
    return text.replace("I", "ı").replace("İ", "i").lower()


def normalize(surface: str) -> NormalizedToken:
    """Case-fold the Turkish way and strip edge punctuation."""
    stripped = _EDGE_PUNCT.sub("", surface.strip().translate(_CIRCUMFLEX))
    if not stripped:
        raise EmptyToken(surface)
    text = turkish_lower(stripped).translate(_CIRCUMFLEX)
    return NormalizedToken(text=text, uppercase_hint=stripped[0].isupper(),
                           has_apostrophe="'" in text)
