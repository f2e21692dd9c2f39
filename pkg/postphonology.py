"""Soft-g resolution and fast-speech variants applied to assembled prons."""
import logging
from typing import Optional

from errors import UnresolvedSoftG
from lexicon import Lexicon
from phonology_core import Pron, phoneme

logger = logging.getLogger(__name__)

# -----------------------
# CONFIG
# -----------------------
PROGRESSIVE_TAG = "<prog>"
FUTURE_TAG = "<fut>"
ANY_GATE = "-"

_J = phoneme("j")
_N = phoneme("n")


# -----------------------
# Soft g
# -----------------------
def _soft_g_outcomes(phones: tuple, idx: int) -> list:
    """Replacements for phones[idx] == G, first matching rule wins."""
    prev = phones[idx - 1] if idx > 0 else None
    if prev is None or not prev.is_vowel:
        raise UnresolvedSoftG(" ".join(p.symbol for p in phones))
    nxt = phones[idx + 1] if idx + 1 < len(phones) else None
    head, tail = phones[:idx - 1], phones[idx + 1:]

    if nxt is None or not nxt.is_vowel:
        # syllable-final: dağ -> d a:, eğlence -> e j l e n dZ e
        if not prev.front:
            return [head + (prev.lengthened(),) + tail]
        return [head + (prev, _J) + tail]

    after = tail[1:]
    v, w = prev.shortened().symbol, nxt.shortened().symbol
    if v == w and not prev.front:
        return [head + (prev.lengthened(),) + after]
    if v == w:
        return [head + (prev.lengthened(),) + after, head + (prev, _J, nxt) + after]
    if (v, w) == ("e", "i"):
        return [head + (prev, _J, nxt) + after, head + (nxt.lengthened(),) + after]
    if (v, w) == ("i", "e"):
        return [head + (prev, _J, nxt) + after]
    if prev.rounded:
        return [head + (prev, nxt) + after]
    if (v, w) == ("a", "1"):
        return [head + (prev, nxt) + after, head + (prev.lengthened(),) + after]
    if (v, w) == ("1", "a"):
        return [head + (prev, nxt) + after]
    if prev.front or nxt.front:
        return [head + (prev, _J, nxt) + after]
    return [head + (prev, nxt) + after]


def _resolve_phones(phones: tuple, stress: Optional[int]) -> list:
    """(phones, stress) pairs; a merge of the two vowels around G moves
    every later vowel ordinal one to the left."""
    idx = next((i for i, p in enumerate(phones) if p.symbol == "G"), None)
    if idx is None:
        return [(phones, stress)]
    before = sum(1 for p in phones[:idx] if p.is_vowel)
    vowels = before + sum(1 for p in phones[idx:] if p.is_vowel)
    resolved, seen = [], set()
    for outcome in _soft_g_outcomes(phones, idx):
        shifted = stress
        merged = sum(1 for p in outcome if p.is_vowel) < vowels
        if merged and stress is not None and stress >= before:
            shifted = stress - 1
        for candidate, candidate_stress in _resolve_phones(outcome, shifted):
            if candidate not in seen:
                seen.add(candidate)
                resolved.append((candidate, candidate_stress))
    return resolved


def resolve_soft_g(pron: Pron) -> list:
    """Every pronunciation of ``pron`` with each G resolved; never contains G.
    A stress mark stays on the same vowel."""
    return [Pron(phones, stress) for phones, stress in _resolve_phones(pron.phones, pron.stress_index)]


# -----------------------
# Fast-speech variants
# -----------------------
def _n_l_variants(phones: tuple) -> list:
    out = []
    for i in range(len(phones) - 1):
        if phones[i].symbol == "n" and phones[i + 1].symbol in ("l", "5"):
            out.append(phones[:i + 1] + (_N,) + phones[i + 2:])
    return out


def _yor_variants(phones: tuple) -> list:
    symbols = [p.symbol for p in phones]
    hits = [i for i in range(len(symbols) - 2) if symbols[i:i + 3] == ["j", "o", "r"]]
    if not hits:
        return []
    i = hits[-1]
    if i + 3 < len(phones) and phones[i + 3].is_vowel:
        return []
    return [phones[:i + 2] + phones[i + 3:]]


def _iy_variants(phones: tuple) -> list:
    out = []
    for i in range(len(phones) - 2):
        if phones[i].symbol == "i" and phones[i + 1].symbol == "j" and phones[i + 2].is_vowel:
            out.append(phones[:i] + (phones[i].lengthened(),) + phones[i + 2:])
    return out


def _table_variants(lexicon: Optional[Lexicon], surface: str, tags: tuple) -> list:
    if lexicon is None:
        return []
    out = []
    for entry in lexicon.variants.get(surface, ()):
        if entry.gate == ANY_GATE or entry.gate in tags:
            out.append(entry.pron.phones)
    return out


def generate_variants(pron: Pron, analysis=None, options=None, lexicon: Optional[Lexicon] = None) -> list:
    """``pron`` first, then its fast-speech variants when ``options.variants``
    is on."""
    if options is None or not getattr(options, "variants", False):
        return [pron]
    phones = pron.phones
    tags = analysis.tags if analysis is not None else ()
    candidates = [phones]
    candidates += _n_l_variants(phones)
    if PROGRESSIVE_TAG in tags:
        candidates += _yor_variants(phones)
    candidates += _iy_variants(phones)
    if analysis is not None:
        surface = analysis.root_surface + analysis.suffix_surface
        candidates += _table_variants(lexicon, surface, tags)

    out = []
    for cand in candidates:
        if cand not in out:
            out.append(cand)
    logger.debug(f"{len(out) - 1} variants for /{pron}/")
    return [pron] + [Pron(c) for c in out[1:]]
