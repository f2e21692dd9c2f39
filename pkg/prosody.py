"""Syllabification, primary stress and output rendering."""
import logging
from dataclasses import dataclass
from typing import Optional

from errors import NoVowel
from morphology import MorphAnalysis
from phonology_core import Pron, is_vowel_letter, syllable_spans

logger = logging.getLogger(__name__)

# -----------------------
# CONFIG
# -----------------------
MODES = ("asr", "tts")
STRESS_MARK = "+"
SYLLABLE_SEPARATOR = " - "


@dataclass(frozen=True)
class SyllabifiedPron:
    pron: Pron
    spans: tuple

    @property
    def syllables(self) -> list:
        return [self.pron.phones[lo:hi] for lo, hi in self.spans]

    def __str__(self):
        return " / ".join(" ".join(p.symbol for p in syl) for syl in self.syllables)


def syllabify(pron: Pron) -> SyllabifiedPron:
    """Split ``pron`` into syllables holding exactly one vowel each."""
    if pron.vowel_count == 0:
        raise NoVowel(str(pron))
    return SyllabifiedPron(pron, tuple(syllable_spans(pron.phones)))


# -----------------------
# Stress
# -----------------------
def geographical_stress(root_pron: Pron) -> int:
    """Two syllables: the first. Longer names: the penult when it is closed,
    otherwise the antepenult."""
    spans = syllabify(root_pron).spans
    if len(spans) <= 2:
        return 0
    lo, hi = spans[-2]
    if not root_pron.phones[hi - 1].is_vowel:
        return len(spans) - 2
    return len(spans) - 3


def _vowels(graphemes: str) -> int:
    return sum(1 for ch in graphemes if is_vowel_letter(ch))


def vowels_after_shift(analysis: MorphAnalysis) -> Optional[int]:
    """Vowels from the leftmost stress-shifting morph to the word end, or
    None when no such morph occurs. A leading buffer belongs to the left."""
    parts = analysis.suffix_parts
    context = analysis.root_surface
    for i, template in enumerate(analysis.suffix_templates):
        part = parts[i]
        if template.stress_shifting:
            anchored = part
            if template.lead_buffer and part:
                lead = template.segments[0]
                after_vowel = bool(context) and is_vowel_letter(context[-1])
                surfaced = after_vowel if lead.kind == "buffer" else not after_vowel
                if surfaced:
                    anchored = part[1:]
            # a morph that lost its vowel (gel-m-iyor) hands stress on
            if _vowels(anchored):
                return _vowels(anchored) + sum(_vowels(p) for p in parts[i + 1:])
        context += part
    return None


def stress_index(pron: Pron, analysis: Optional[MorphAnalysis] = None,
                 root_pron: Optional[Pron] = None) -> int:
    """Stressed vowel ordinal of ``pron`` under ``analysis``."""
    count = pron.vowel_count
    if count == 0:
        raise NoVowel(str(pron))
    index = None
    entry = analysis.entry if analysis is not None else None
    if entry is not None:
        if analysis.genre == "geographical" and root_pron is not None:
            index = geographical_stress(root_pron)
        elif entry.compound_stress_syllable is not None:
            index = entry.compound_stress_syllable
        elif entry.fixed_stress_syllable is not None:
            index = entry.fixed_stress_syllable
    if index is None and analysis is not None:
        after = vowels_after_shift(analysis)
        if after is not None:
            index = count - after - 1
    if index is None:
        index = count - 1
    return min(max(index, 0), count - 1)


def assign_stress(prons, analysis: Optional[MorphAnalysis] = None,
                  root_pron: Optional[Pron] = None) -> list:
    """Stressed copies of ``prons``, duplicates dropped."""
    out = []
    for pron in prons:
        stressed = pron.with_stress(stress_index(pron, analysis, root_pron))
        if stressed not in out:
            out.append(stressed)
    return out


# -----------------------
# Rendering
# -----------------------
def render(pron: Pron, mode: str = "asr") -> str:
    """ASR: space-separated phones. TTS: syllables joined by `` - `` with
    ``+`` before the stressed vowel."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "asr":
        return " ".join(pron.tokens)

    syllables = []
    vowel_no = 0
    for syl in syllabify(pron).syllables:
        tokens = []
        for p in syl:
            if p.is_vowel:
                mark = STRESS_MARK if vowel_no == pron.stress_index else ""
                tokens.append(mark + p.symbol)
                vowel_no += 1
            else:
                tokens.append(p.symbol)
        syllables.append(" ".join(tokens))
    return SYLLABLE_SEPARATOR.join(syllables)
