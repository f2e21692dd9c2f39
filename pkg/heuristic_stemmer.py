"""Root guessing for words the native analyzer rejects.

Candidate roots come from stripping characteristic Turkish suffixes; each
candidate is then classed as an abbreviation, a foreign word or mistyped
Turkish from table hits, its length and character n-gram evidence.
"""
import logging
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np
from sklearn.feature_extraction.text import CountVectorizer

from lexicon import Lexicon, table_entry
from morphology import suffix_chains
from phonology_core import base_map, is_vowel_letter, turkishize

logger = logging.getLogger(__name__)

# -----------------------
# CONFIG
# -----------------------
TRIGRAM_WEIGHT = 1.0
TETRAGRAM_WEIGHT = 2.0
HARMONY_BONUS = 1.0
ABBREVIATION_MAX_LEN = 3
# short roots matching no known n-gram follow neither grapheme statistics
UNSEEN_ABBREVIATION_MAX_LEN = 5
CLASSES = ("abbreviation", "foreign", "mistyped")

HEURISTIC_DEVOICING = {"b": "p", "c": "ç", "d": "t", "g": "k", "ğ": "k"}

_grams = CountVectorizer(analyzer="char", ngram_range=(3, 4), lowercase=False).build_analyzer()


@dataclass(frozen=True)
class CandidateSplit:
    root: str
    suffix_surface: str
    root_surface: str
    boundary_voicing_applied: bool = False
    classification: str = "mistyped"
    class_scores: Mapping = field(default_factory=dict, compare=False)


# -----------------------
# Classification
# -----------------------
def violates_harmony(root: str) -> bool:
    """True when the root mixes front and back vowels."""
    fronts = {base_map(ch).front for ch in turkishize(root) if is_vowel_letter(ch)}
    return len(fronts) > 1


def ngram_scores(lexicon: Lexicon, root: str) -> dict:
    """Weighted share of the root's tri- and tetragrams found in each table."""
    grams = _grams(root)
    if not grams:
        return {cls: 0.0 for cls in lexicon.ngrams}
    weights = np.array([TRIGRAM_WEIGHT if len(g) == 3 else TETRAGRAM_WEIGHT for g in grams])
    scores = {}
    for cls, table in lexicon.ngrams.items():
        hits = np.array([g in table.grams for g in grams])
        scores[cls] = float(weights[hits].sum() / len(grams))
    return scores


def classify_root(lexicon: Lexicon, root: str) -> tuple:
    """(classification, scores) for a candidate root."""
    if table_entry(lexicon, root, "abbreviation") is not None:
        return "abbreviation", {}
    if table_entry(lexicon, root, "foreign") is not None:
        return "foreign", {}
    if len(root) <= ABBREVIATION_MAX_LEN:
        return "abbreviation", {}

    scores = ngram_scores(lexicon, root)
    bonus = HARMONY_BONUS if violates_harmony(root) else 0.0
    scores["harmony"] = bonus
    if len(root) <= UNSEEN_ABBREVIATION_MAX_LEN and not any(scores.values()):
        return "abbreviation", scores
    foreign = scores.get("english", 0.0) + scores.get("turkishizedEnglish", 0.0) + bonus
    classification = "foreign" if foreign > scores.get("turkish", 0.0) else "mistyped"
    logger.debug(f"{root}: {classification} {scores}")
    return classification, scores


def prefers_turkish_reading(scores: Mapping) -> bool:
    """Already Turkishized spellings (feysbuk) only get the Turkish reading."""
    return scores.get("turkishizedEnglish", 0.0) > scores.get("english", 0.0)


# -----------------------
# Stemming
# -----------------------
def _devoiced(root: str):
    if len(root) < 2 or root[-1] not in HEURISTIC_DEVOICING or not is_vowel_letter(root[-2]):
        return None
    return root[:-1] + HEURISTIC_DEVOICING[root[-1]]


def stem_unknown(lexicon: Lexicon, surface: str) -> list:
    """Candidate (root, suffix) splits of an unknown word, best first."""
    splits = []
    for i in range(1, len(surface) + 1):
        written, rest = surface[:i], surface[i:]
        if rest and not suffix_chains(lexicon, rest, written, "N", characteristic_only=True):
            continue
        roots = [(written, False)]
        devoiced = _devoiced(written) if rest and is_vowel_letter(rest[0]) else None
        if devoiced:
            roots.append((devoiced, True))
        for root, voiced in roots:
            classification, scores = classify_root(lexicon, root)
            splits.append(CandidateSplit(root, rest, written, voiced, classification, scores))

    def rank(split: CandidateSplit):
        hit = any(table_entry(lexicon, split.root, g) is not None for g in ("abbreviation", "foreign"))
        return (not hit, -len(split.suffix_surface), not split.boundary_voicing_applied)

    splits.sort(key=rank)
    logger.debug(f"{surface}: {[(s.root, s.suffix_surface) for s in splits]}")
    return splits
