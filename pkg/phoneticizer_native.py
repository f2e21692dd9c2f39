"""Native pronunciation assembly: root pron (listed or by rule), suffix pron
in the root's context, and the boundary effects between them.
"""
import logging
from typing import Sequence, Union

from lexicon import Lexicon, RootEntry
from morphology import MorphAnalysis
from phonology_core import (Pron, allophone_phones, base_phones, epenthesize,
                            phoneme, turkishize)

logger = logging.getLogger(__name__)

# -----------------------
# CONFIG
# -----------------------
# voiceless root-final consonant -> voiced one before a vowel-initial suffix
BOUNDARY_VOICING = {"p": "b", "t": "d", "tS": "dZ", "k": "G", "c": "G"}
# after n the velar stays a stop: renk -> rengi
NASAL_VOICING = {"k": "g", "c": "gj"}
# only proper nouns voice across an apostrophe: Ahmet'e, but Facebook'a
APOSTROPHE_VOICING_GENRES = frozenset({"proper", "geographical"})


def phoneticize_root(lexicon: Lexicon, root: Union[RootEntry, str]) -> list:
    """Listed prons of a root entry, otherwise the rule reading: cluster
    epenthesis, default letter mapping and allophones."""
    if isinstance(root, RootEntry):
        if root.prons:
            return list(root.prons)
        root = root.surface
    graphemes = epenthesize(turkishize(root))
    return [Pron(allophone_phones(base_phones(graphemes)))]


def phoneticize_suffixes(suffix_surface: str, root_context: Pron) -> tuple:
    """Phones of a surfaced suffix chain; allophones are picked over the
    whole word so a suffix syllable sees its own vowel."""
    if not suffix_surface:
        return ()
    root = root_context.phones
    word = allophone_phones(root + base_phones(suffix_surface), start=len(root))
    return word[len(root):]


def _voice_final(phones: tuple) -> tuple:
    last = phones[-1].symbol
    if last not in BOUNDARY_VOICING:
        return phones
    if last in NASAL_VOICING and len(phones) > 1 and phones[-2].symbol == "n":
        return phones[:-1] + (phoneme(NASAL_VOICING[last]),)
    return phones[:-1] + (phoneme(BOUNDARY_VOICING[last]),)


def _lengthen_last_vowel(phones: tuple) -> tuple:
    for i in range(len(phones) - 1, -1, -1):
        if phones[i].is_vowel:
            return phones[:i] + (phones[i].lengthened(),) + phones[i + 1:]
    return phones


def combine(root_prons: Sequence[Pron], suffix_phones: tuple, entry: RootEntry = None,
            analysis: MorphAnalysis = None) -> list:
    """One pron per root pron with boundary lengthening and voicing applied."""
    vowel_initial = bool(suffix_phones) and suffix_phones[0].is_vowel
    voicing = False
    if vowel_initial and analysis is not None:
        if analysis.boundary_voicing:
            voicing = True
        elif (analysis.apostrophe and analysis.genre in APOSTROPHE_VOICING_GENRES
              and not (entry is not None and entry.no_final_voicing)):
            voicing = True

    combined = []
    for pron in root_prons:
        phones = pron.phones
        if vowel_initial and entry is not None and entry.lengthens_final_vowel:
            phones = _lengthen_last_vowel(phones)
        if voicing:
            phones = _voice_final(phones)
        combined.append(Pron(phones + tuple(suffix_phones)))
    return combined


def phoneticize_analysis(lexicon: Lexicon, analysis: MorphAnalysis) -> list:
    """Prons of one morphological analysis before postphonology."""
    root_prons = phoneticize_root(lexicon, analysis.entry or analysis.root)
    if analysis.final_vowel_dropped:
        root_prons = [Pron(p.phones[:-1]) for p in root_prons if p.phones[-1].is_vowel] or root_prons
    suffix_phones = phoneticize_suffixes(analysis.suffix_surface, root_prons[0])
    prons = combine(root_prons, suffix_phones, analysis.entry, analysis)
    logger.debug(f"{analysis.root}+{analysis.suffix_surface} -> {[str(p) for p in prons]}")
    return prons
