import pytest

from lexicon import load_lexicon
from morphology import DROPPABLE_VOWELS, drops_vowel, realize_suffix_chain, voice_final
from phonology_core import is_vowel_letter


@pytest.fixture(scope="session")
def lexicon():
    """The bundled lexicon, loaded once per test session."""
    return load_lexicon()


@pytest.fixture(scope="session")
def inflect(lexicon):
    """inflect(entry, forms, attaches) -> (template chain, written word)."""
    def _inflect(entry, forms, attaches: str = "N") -> tuple:
        chain = tuple(next(t for t in lexicon.suffixes if t.form == form and t.attaches == attaches)
                      for form in forms)
        suffix = realize_suffix_chain(chain, entry.surface, lexicon)
        root = entry.surface
        if drops_vowel(chain[0]) and root[-1] in DROPPABLE_VOWELS:
            root = root[:-1]
        elif is_vowel_letter(suffix[0]) and not entry.no_final_voicing:
            root = voice_final(root)
        return chain, root + suffix
    return _inflect
