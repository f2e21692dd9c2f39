"""Readings of foreign words and abbreviations.

Foreign words get a Turkish-letter reading plus English-ish readings
driven by the ordered rewrite table; abbreviations are read as words,
spelled out letter by letter, or both, depending on their
consonant/vowel shape.
"""
import logging
import re

from errors import UnknownGrapheme
from heuristic_stemmer import ngram_scores, prefers_turkish_reading
from lexicon import LetterNameTable, Lexicon, table_entry
from phonology_core import (Pron, allophone_phones, base_phones, is_vowel_letter,
                            phoneme, turkishize)

logger = logging.getLogger(__name__)

# -----------------------
# CONFIG
# -----------------------
WORD_PATTERNS = {"CVC", "VCV", "CVV", "CVVC"}
WORD_AND_SPELL_PATTERNS = {"VCC", "VVC"}
SPELL_PATTERNS = {"CCV"}

_DOUBLE_VOWEL = re.compile(r"([aeıioöuü])\1+")
_J = phoneme("j")


def _dedupe(prons: list) -> list:
    out = []
    for pron in prons:
        if pron is not None and pron not in out:
            out.append(pron)
    return out


# -----------------------
# Foreign words
# -----------------------
def collapse_vowels(word: str) -> str:
    """google -> gogle"""
    return _DOUBLE_VOWEL.sub(r"\1", word)


def turkish_reading(word: str) -> Pron:
    return Pron(allophone_phones(base_phones(turkishize(collapse_vowels(word)))))


def rule_reading(lexicon: Lexicon, word: str, register: str = "english"):
    """Left-to-right rewrite: the first rule of ``register`` matching at the
    current position wins, other letters take their Turkish value."""
    rules = [r for r in lexicon.rewrites if register in r.registers]
    phones = []
    pos = 0
    while pos < len(word):
        for rule in rules:
            m = rule.regex.match(word, pos)
            if m and m.end() > pos:
                phones.extend(rule.replacement)
                pos = m.end()
                break
        else:
            phones.extend(base_phones(turkishize(word[pos])))
            pos += 1
    if not phones:
        return None
    return Pron(allophone_phones(phones))


def phoneticize_foreign(lexicon: Lexicon, root: str) -> list:
    """Listed prons of a foreign-table word, otherwise the Turkish,
    English and mixed readings in that order."""
    entry = table_entry(lexicon, root, "foreign")
    if entry is not None and entry.prons:
        return list(entry.prons)
    turkish = turkish_reading(root)
    if prefers_turkish_reading(ngram_scores(lexicon, root)):
        return [turkish]
    english = rule_reading(lexicon, root, "english")
    mixed = rule_reading(lexicon, collapse_vowels(root), "mixed")
    return _dedupe([turkish, english, mixed])


# -----------------------
# Abbreviations
# -----------------------
def cv_pattern(root: str) -> str:
    return "".join("V" if is_vowel_letter(ch) else "C" for ch in root)


def spell_out(root: str, table: LetterNameTable) -> Pron:
    """Concatenated letter names: thy -> t e: h e: j e:"""
    phones = []
    for letter in root:
        name = table.name(letter)
        if name is None:
            raise UnknownGrapheme(letter)
        phones.extend(name.phones)
    return Pron(tuple(phones))


def word_reading(root: str) -> Pron:
    """Reads the letters as a word; adjacent vowels of the same height and
    backness merge into a long first vowel, others get a j glide."""
    phones = list(base_phones(turkishize(root)))
    out = []
    for i, p in enumerate(phones):
        nxt = phones[i + 1] if i + 1 < len(phones) else None
        if p.is_vowel and nxt is not None and nxt.is_vowel:
            if p.high == nxt.high and p.front == nxt.front:
                out.append(p.lengthened())
            else:
                out.extend((p, _J))
        else:
            out.append(p)
    return Pron(allophone_phones(out))


def phoneticize_abbrev(lexicon: Lexicon, root: str, foreign_hint: bool = False) -> list:
    """At least one reading of an abbreviation; ambiguous shapes give both
    the word reading and the spelled-out one."""
    entry = table_entry(lexicon, root, "abbreviation")
    if entry is not None and entry.prons:
        return list(entry.prons)
    if foreign_hint:
        return [spell_out(root, lexicon.letter_names["english"])]

    spelled = spell_out(root, lexicon.letter_names["turkish"])
    pattern = cv_pattern(root)
    if "V" not in pattern or len(root) <= 2 or pattern in SPELL_PATTERNS:
        return [spelled]
    if pattern in WORD_PATTERNS:
        return [word_reading(root)]
    if pattern in WORD_AND_SPELL_PATTERNS or pattern.startswith("CC") or "CCC" in pattern:
        return _dedupe([word_reading(root), spelled])
    return [word_reading(root)]
