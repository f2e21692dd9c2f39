"""Suffix-chain morphological analysis over the bundled root lexicon.

Every split of the surface into a known root plus a chain of harmonized
suffix templates is returned; nothing is disambiguated.
"""
import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from errors import G2PError
from lexicon import Lexicon, RootEntry, SuffixTemplate, lookup_root
from phonology_core import base_map, is_vowel_letter, resolve_meta, turkishize

logger = logging.getLogger(__name__)

# -----------------------
# CONFIG
# -----------------------
MAX_CHAIN_DEPTH = 6

VOICING = {"p": "b", "ç": "c", "t": "d", "k": "ğ"}
DEVOICING = {"b": "p", "c": "ç", "d": "t", "ğ": "k", "g": "k"}
# -(H)yor drops a preceding a/e and surfaces its own H: başla+yor -> başlıyor
VOWEL_DROPPING_FORMS = frozenset({"(H)yor"})
DROPPABLE_VOWELS = "ae"


@dataclass(frozen=True)
class MorphAnalysis:
    root: str
    suffix_surface: str
    tags: tuple
    genre: str
    suffix_templates: tuple = ()
    suffix_parts: tuple = ()
    boundary_voicing: bool = False
    apostrophe: bool = False
    final_vowel_dropped: bool = False
    entry: Optional[RootEntry] = field(default=None, compare=False)

    @property
    def root_surface(self) -> str:
        """The root as spelled inside the word."""
        surface = voice_final(self.root) if self.boundary_voicing else self.root
        return surface[:-1] if self.final_vowel_dropped else surface


# -----------------------
# Consonant voicing at morph boundaries
# -----------------------
def ends_voiceless_stop(graphemes: str) -> bool:
    return bool(graphemes) and graphemes[-1] in VOICING


def voice_final(graphemes: str) -> str:
    """kitap -> kitab, ayak -> ayağ, renk -> reng."""
    last = graphemes[-1]
    if last not in VOICING:
        return graphemes
    if last == "k" and graphemes[-2:-1] == "n":
        return graphemes[:-1] + "g"
    return graphemes[:-1] + VOICING[last]


def devoice_final(graphemes: str) -> Optional[str]:
    """Inverse of voice_final, None when the last letter cannot be the
    voiced form of a stop."""
    if len(graphemes) < 2:
        return None
    last = graphemes[-1]
    if last not in DEVOICING:
        return None
    if last == "g" and graphemes[-2] != "n":
        return None
    if last == "ğ" and not is_vowel_letter(graphemes[-2]):
        return None
    return graphemes[:-1] + DEVOICING[last]


# -----------------------
# Template realization
# -----------------------
def context_phones(graphemes: str, lexicon: Optional[Lexicon] = None) -> list:
    """Phones used as harmony context; a vowel-less root (an abbreviation)
    harmonizes with the spelled name of its last letter."""
    phones = [base_map(ch) for ch in turkishize(graphemes)]
    if lexicon is not None and graphemes and not any(p.is_vowel for p in phones):
        name = lexicon.letter_names["turkish"].name(graphemes[-1])
        if name is not None:
            phones.extend(name.phones)
    return phones


def _realize(template: SuffixTemplate, left: list, dropped=None) -> str:
    out = ""
    left = list(left)
    for seg in template.segments:
        ends_in_vowel = bool(left) and left[-1].is_vowel
        # ye -> yiyor: with no vowel left, the dropped one sets harmony
        if dropped is not None and not any(p.is_vowel for p in left):
            harmony = left + [dropped]
        else:
            harmony = left
        if seg.kind == "lit":
            letter = seg.value
        elif seg.kind == "meta":
            letter = resolve_meta(seg.value, harmony)
        elif seg.kind == "buffer":
            letter = seg.value if ends_in_vowel else ""
        else:
            letter = "" if ends_in_vowel else resolve_meta(seg.value, harmony)
        if letter:
            out += letter
            left.append(base_map(letter))
    return out


def realize_template(template: SuffixTemplate, context: str, lexicon: Optional[Lexicon] = None) -> str:
    return _realize(template, context_phones(context, lexicon))


def realize_after_drop(template: SuffixTemplate, context: str, dropped: str) -> str:
    """Surface of a vowel-dropping template once ``context`` lost its final
    ``dropped`` vowel."""
    return _realize(template, [base_map(ch) for ch in turkishize(context)], base_map(dropped))


def drops_vowel(template: SuffixTemplate) -> bool:
    return template.form in VOWEL_DROPPING_FORMS


def realize_parts(templates: Sequence[SuffixTemplate], root_context: str,
                  lexicon: Optional[Lexicon] = None) -> tuple:
    """Surface of each template after harmony, buffers, suffix-final
    voicing before a vowel-initial suffix and the a/e drop before -(H)yor.
    A dropped root vowel is left to the caller; parts never include it."""
    parts = []
    left = context_phones(root_context, lexicon)
    for template in templates:
        if drops_vowel(template) and left and left[-1].symbol in DROPPABLE_VOWELS:
            if parts:
                parts[-1] = parts[-1][:-1]
            dropped = left.pop()
            part = _realize(template, left, dropped)
        else:
            part = _realize(template, left)
        if parts and part and is_vowel_letter(part[0]) and ends_voiceless_stop(parts[-1]):
            parts[-1] = voice_final(parts[-1])
        parts.append(part)
        left.extend(base_map(ch) for ch in part)
    return tuple(parts)


def realize_suffix_chain(templates: Sequence[SuffixTemplate], root_context: str,
                         lexicon: Optional[Lexicon] = None) -> str:
    """Concatenated surface of a template chain after ``root_context``."""
    return "".join(realize_parts(templates, root_context, lexicon))


# -----------------------
# Chain search
# -----------------------
def suffix_chains(lexicon: Lexicon, rest: str, context: str, category: str = "N",
                  characteristic_only: bool = False, last_slot: int = 0, depth: int = 0,
                  dropped: Optional[str] = None) -> list:
    """Every template chain whose surface is exactly ``rest``; each chain is
    a tuple of (template, surfaced part) pairs. ``dropped`` is the a/e the
    context lost, so only a vowel-dropping template may follow."""
    if not rest:
        return [] if dropped else [()]
    if depth >= MAX_CHAIN_DEPTH or category == "X":
        return []
    ends_droppable = bool(context) and context[-1] in DROPPABLE_VOWELS
    chains = []
    for template in lexicon.suffixes:
        if template.attaches != category or template.slot <= last_slot:
            continue
        if characteristic_only and not template.characteristic:
            continue
        if drops_vowel(template) and ends_droppable and not dropped:
            continue
        if dropped and not drops_vowel(template):
            continue
        try:
            if dropped:
                part = realize_after_drop(template, context, dropped)
            else:
                part = realize_template(template, context, lexicon)
        except G2PError as exc:
            logger.debug(f"Skipping {template.form} after {context!r}: {exc}")
            continue
        if not part:
            continue
        if template.yields == template.attaches:
            next_category, next_slot = category, template.slot
        else:
            next_category, next_slot = template.yields, 0

        surfaces = [(part, None)]
        if ends_voiceless_stop(part):
            surfaces.append((voice_final(part), None))
        if len(part) > 1 and part[-1] in DROPPABLE_VOWELS:
            surfaces.append((part[:-1], part[-1]))
        for surface, lost in surfaces:
            if not rest.startswith(surface):
                continue
            after = rest[len(surface):]
            vowel_next = bool(after) and is_vowel_letter(after[0])
            voiced = surface != part and not lost
            if ends_voiceless_stop(part) and vowel_next != voiced:
                continue
            for tail in suffix_chains(lexicon, after, context + surface, next_category,
                                      characteristic_only, next_slot, depth + 1, lost):
                chains.append(((template, surface),) + tail)
    return chains


def _root_tag(entry: RootEntry, category: str) -> str:
    if category == "V":
        return "<V>"
    nominal = [p for p in entry.pos if p != "V"]
    return f"<{nominal[0] if nominal else 'N'}>"


def build_analysis(entry: RootEntry, genre: str, category: str, chain: tuple,
                   boundary_voicing: bool = False, apostrophe: bool = False,
                   final_vowel_dropped: bool = False) -> MorphAnalysis:
    templates = tuple(t for t, _ in chain)
    parts = tuple(p for _, p in chain)
    tags = (_root_tag(entry, category),) + tuple(tag for t in templates for tag in t.tags)
    return MorphAnalysis(root=entry.surface, suffix_surface="".join(parts), tags=tags,
                         genre=genre, suffix_templates=templates, suffix_parts=parts,
                         boundary_voicing=boundary_voicing, apostrophe=apostrophe,
                         final_vowel_dropped=final_vowel_dropped, entry=entry)


def analyze(lexicon: Lexicon, surface: str) -> list:
    """All (root, suffixes, tags) analyses of a normalized, apostrophe-free
    word; an empty list means the word is unknown."""
    analyses = []
    for i in range(1, len(surface) + 1):
        prefix, rest = surface[:i], surface[i:]
        vowel_next = bool(rest) and is_vowel_letter(rest[0])
        candidates = [(prefix, False, None)]
        devoiced = devoice_final(prefix) if vowel_next else None
        if devoiced:
            candidates.append((devoiced, True, None))
        if vowel_next:
            candidates += [(prefix + v, False, v) for v in DROPPABLE_VOWELS]

        for root, voiced, dropped in candidates:
            for entry in lookup_root(lexicon, root):
                if not entry.is_native:
                    continue
                if voiced and entry.no_final_voicing:
                    continue
                if (not voiced and vowel_next and ends_voiceless_stop(root)
                        and not entry.no_final_voicing):
                    continue
                for category in sorted(entry.categories):
                    for chain in suffix_chains(lexicon, rest, prefix, category, dropped=dropped):
                        for genre in entry.genres:
                            if genre in ("abbreviation", "foreign"):
                                continue
                            analyses.append(build_analysis(entry, genre, category, chain, voiced,
                                                           final_vowel_dropped=dropped is not None))
    return analyses


def analyze_apostrophe(lexicon: Lexicon, root: str, suffix: str) -> list:
    """Analyses of a proper-noun style word split at its apostrophe; the
    root keeps its written form whatever the pronunciation does."""
    analyses = []
    for entry in lookup_root(lexicon, root):
        for category in sorted(entry.categories):
            for chain in suffix_chains(lexicon, suffix, root, category):
                for genre in entry.genres:
                    analyses.append(build_analysis(entry, genre, category, chain, apostrophe=True))
    return analyses
