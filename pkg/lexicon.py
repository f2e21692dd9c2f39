"""Loading, validation and lookup of the bundled TSV tables.

All tables live in one directory (``data/`` by default) and are read with
pandas into immutable records. Every SAMPA token is checked against the
phoneme inventory at load time.
"""
import csv
import logging
import os
import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Optional

import pandas as pd

from errors import InvalidSampaToken, MissingFile, ParseError
from phonology_core import ALPHABET, DATA_DIR, Pron, turkish_lower

logger = logging.getLogger(__name__)

# -----------------------
# CONFIG
# -----------------------
DEFAULT_LEXICON_DIR = os.getenv("TR_G2P_LEXICON_DIR") or DATA_DIR

GENRES = ("ordinary", "proper", "geographical", "compound", "abbreviation", "foreign")
NATIVE_GENRES = frozenset({"ordinary", "proper", "geographical", "compound"})
NGRAM_CLASSES = {"english": "ngrams_english.tsv",
                 "turkish": "ngrams_turkish.tsv",
                 "turkishizedEnglish": "ngrams_trenglish.tsv"}
LETTER_REGISTERS = ("turkish", "english")
LATIN_LETTERS = "abcdefghijklmnopqrstuvwxyz"
FLAG_ORDER = ("pos", "lengthens", "novoicing", "stress", "compound")

ROOT_COLUMNS = ["surface", "genres", "pron", "flags"]
SUFFIX_COLUMNS = ["form", "tag", "stress_shifting", "slot", "attaches", "yields", "characteristic"]
VARIANT_COLUMNS = ["surface", "gate", "pron"]
REWRITE_COLUMNS = ["pattern", "replacement", "registers"]
LETTERNAME_COLUMNS = ["letter", "pron"]

_SEGMENT = re.compile(r"\[([syn])\]|\(([AH])\)|([AHD])|([a-zçğıöşü])")
_PANDAS_LINE = re.compile(r"line (\d+)")


# -----------------------
# Records
# -----------------------
@dataclass(frozen=True)
class RootEntry:
    surface: str
    prons: tuple = ()
    genres: tuple = ("ordinary",)
    pos: tuple = ("N",)
    lengthens_final_vowel: bool = False
    no_final_voicing: bool = False
    fixed_stress_syllable: Optional[int] = None
    compound_stress_syllable: Optional[int] = None

    @property
    def genre(self) -> frozenset:
        return frozenset(self.genres)

    @property
    def is_native(self) -> bool:
        return bool(self.genre & NATIVE_GENRES)

    @property
    def categories(self) -> frozenset:
        """Suffixation categories: verbs take verbal suffixes, everything
        else inflects like a noun."""
        return frozenset("V" if p == "V" else "N" for p in self.pos)


@dataclass(frozen=True)
class Segment:
    kind: str  # lit | meta | buffer | optvowel
    value: str


@dataclass(frozen=True)
class SuffixTemplate:
    form: str
    tag: str
    stress_shifting: bool = False
    slot: int = 1
    attaches: str = "N"
    yields: str = "N"
    characteristic: bool = False
    segments: tuple = field(default=(), compare=False)

    @property
    def tags(self) -> tuple:
        return tuple(re.findall(r"<[^>]+>", self.tag))

    @property
    def lead_buffer(self) -> bool:
        return bool(self.segments) and self.segments[0].kind in ("buffer", "optvowel")


@dataclass(frozen=True)
class NGramTable:
    cls: str
    grams: frozenset


@dataclass(frozen=True)
class LetterNameTable:
    register: str
    names: Mapping

    def name(self, letter: str) -> Optional[Pron]:
        return self.names.get(letter)


@dataclass(frozen=True)
class VariantEntry:
    surface: str
    gate: str
    pron: Pron


@dataclass(frozen=True)
class RewriteRule:
    pattern: str
    replacement: tuple
    registers: frozenset
    regex: re.Pattern = field(compare=False, repr=False, default=None)


@dataclass(frozen=True, eq=False)
class Lexicon:
    entries: tuple
    roots: Mapping
    suffixes: tuple
    ngrams: Mapping
    letter_names: Mapping
    variants: Mapping
    rewrites: tuple
    directory: str = ""


# -----------------------
# Parsing helpers
# -----------------------
def parse_template(form: str) -> tuple:
    segments = []
    pos = 0
    while pos < len(form):
        m = _SEGMENT.match(form, pos)
        if not m:
            raise ValueError(f"bad character {form[pos]!r} in suffix form {form!r}")
        buffer, optvowel, meta, lit = m.groups()
        if buffer:
            segments.append(Segment("buffer", buffer))
        elif optvowel:
            segments.append(Segment("optvowel", optvowel))
        elif meta:
            segments.append(Segment("meta", meta))
        else:
            segments.append(Segment("lit", lit))
        pos = m.end()
    if not segments:
        raise ValueError("empty suffix form")
    return tuple(segments)


def _read_rows(path: str, columns: list):
    """Yield (line number, row dict) for every data line of a TSV table."""
    if not os.path.exists(path):
        raise MissingFile(path)
    try:
        df = pd.read_csv(path, sep="\t", header=None, names=columns, dtype=str,
                         keep_default_na=False, skip_blank_lines=False,
                         quoting=csv.QUOTE_NONE, encoding="utf-8")
    except pd.errors.ParserError as exc:
        m = _PANDAS_LINE.search(str(exc))
        raise ParseError(path, int(m.group(1)) if m else 0, str(exc).strip()) from None
    df = df.fillna("")
    for idx, row in enumerate(df.itertuples(index=False), start=1):
        first = row[0].strip()
        if not first or first.startswith("#"):
            continue
        yield idx, dict(zip(columns, (str(v).strip() for v in row)))


def _parse_pron(path: str, line: int, text: str) -> Pron:
    try:
        return Pron.from_tokens(text)
    except InvalidSampaToken as exc:
        raise InvalidSampaToken(exc.token, f"{path}:{line}") from None
    except ValueError as exc:
        raise ParseError(path, line, str(exc)) from None


def _parse_flags(path: str, line: int, text: str) -> dict:
    flags = {}
    if text in ("", "-"):
        return flags
    for item in text.split():
        key, sep, value = item.partition("=")
        if not sep or key not in FLAG_ORDER:
            raise ParseError(path, line, f"bad flag {item!r}")
        flags[key] = value
    return flags


def _vowel_count(entry_surface: str, prons: tuple) -> list:
    if prons:
        return [p.vowel_count for p in prons]
    return [sum(1 for ch in entry_surface if ch in "aeıioöuü")]


def _root_entry(path: str, line: int, row: dict) -> RootEntry:
    surface = row["surface"]
    if not surface or turkish_lower(surface) != surface:
        raise ParseError(path, line, f"surface {surface!r} is not normalized")
    genres = tuple(g.strip() for g in row["genres"].split(",") if g.strip())
    if not genres or any(g not in GENRES for g in genres):
        raise ParseError(path, line, f"bad genres {row['genres']!r}")
    prons = ()
    if row["pron"] not in ("", "-"):
        prons = tuple(_parse_pron(path, line, alt) for alt in row["pron"].split("|"))
    flags = _parse_flags(path, line, row["flags"])
    try:
        entry = RootEntry(
            surface=surface,
            prons=prons,
            genres=genres,
            pos=tuple(flags.get("pos", "N").split(",")),
            lengthens_final_vowel=flags.get("lengthens") == "1",
            no_final_voicing=flags.get("novoicing") == "1",
            fixed_stress_syllable=int(flags["stress"]) if "stress" in flags else None,
            compound_stress_syllable=int(flags["compound"]) if "compound" in flags else None,
        )
    except ValueError as exc:
        raise ParseError(path, line, str(exc)) from None

    counts = _vowel_count(surface, prons)
    for ordinal in (entry.fixed_stress_syllable, entry.compound_stress_syllable):
        if ordinal is not None and any(ordinal >= c for c in counts):
            raise ParseError(path, line, f"stress syllable {ordinal} out of range")
    if entry.lengthens_final_vowel:
        for pron in prons:
            vowels = [p for p in pron.phones if p.is_vowel]
            if not vowels or vowels[-1].long:
                raise ParseError(path, line, "lengthening root must end in a short vowel")
    return entry


# -----------------------
# Loading
# -----------------------
def load_roots(path: str) -> tuple:
    entries = []
    seen = set()
    for line, row in _read_rows(path, ROOT_COLUMNS):
        entry = _root_entry(path, line, row)
        for genre in entry.genres:
            if (entry.surface, genre) in seen:
                raise ParseError(path, line, f"duplicate root ({entry.surface}, {genre})")
            seen.add((entry.surface, genre))
        entries.append(entry)
    return tuple(entries)


def load_suffixes(path: str) -> tuple:
    templates = []
    seen = set()
    for line, row in _read_rows(path, SUFFIX_COLUMNS):
        try:
            template = SuffixTemplate(
                form=row["form"],
                tag=row["tag"],
                stress_shifting=row["stress_shifting"] == "1",
                slot=int(row["slot"]),
                attaches=row["attaches"],
                yields=row["yields"],
                characteristic=row["characteristic"] == "1",
                segments=parse_template(row["form"]),
            )
        except ValueError as exc:
            raise ParseError(path, line, str(exc)) from None
        if template.attaches not in ("N", "V") or template.yields not in ("N", "V", "X"):
            raise ParseError(path, line, "attaches must be N|V and yields N|V|X")
        if not template.tags:
            raise ParseError(path, line, f"bad tag {template.tag!r}")
        key = (template.form, template.tag, template.attaches)
        if key in seen:
            raise ParseError(path, line, f"duplicate suffix {template.form} {template.tag} on {template.attaches}")
        seen.add(key)
        templates.append(template)
    return tuple(templates)


def load_ngrams(path: str, cls: str) -> NGramTable:
    grams = set()
    for line, row in _read_rows(path, ["gram"]):
        gram = row["gram"]
        if len(gram) not in (3, 4) or gram != gram.lower():
            raise ParseError(path, line, f"gram {gram!r} must be 3 or 4 lowercase letters")
        grams.add(gram)
    return NGramTable(cls=cls, grams=frozenset(grams))


def load_letter_names(path: str, register: str) -> LetterNameTable:
    names = {}
    for line, row in _read_rows(path, LETTERNAME_COLUMNS):
        names[row["letter"]] = _parse_pron(path, line, row["pron"])
    required = set(LATIN_LETTERS) | (set(ALPHABET) if register == "turkish" else set())
    missing = sorted(required - set(names))
    if missing:
        raise ParseError(path, 0, f"letter names missing for {''.join(missing)}")
    return LetterNameTable(register=register, names=MappingProxyType(names))


def load_variants(path: str) -> Mapping:
    variants = {}
    for line, row in _read_rows(path, VARIANT_COLUMNS):
        entry = VariantEntry(row["surface"], row["gate"], _parse_pron(path, line, row["pron"]))
        variants.setdefault(entry.surface, []).append(entry)
    return MappingProxyType({k: tuple(v) for k, v in variants.items()})


def load_rewrites(path: str) -> tuple:
    rules = []
    for line, row in _read_rows(path, REWRITE_COLUMNS):
        try:
            regex = re.compile(row["pattern"])
        except re.error as exc:
            raise ParseError(path, line, f"bad pattern: {exc}") from None
        replacement = ()
        if row["replacement"] != "-":
            replacement = _parse_pron(path, line, row["replacement"]).phones
        registers = frozenset(r for r in row["registers"].split(",") if r)
        rules.append(RewriteRule(row["pattern"], replacement, registers, regex))
    return tuple(rules)


def load_lexicon(directory: str = DEFAULT_LEXICON_DIR) -> Lexicon:
    """Read and validate every table under ``directory``."""
    def path(name):
        return os.path.join(directory, name)

    entries = load_roots(path("roots.tsv"))
    roots = {}
    for entry in entries:
        roots.setdefault(entry.surface, []).append(entry)
    suffixes = load_suffixes(path("suffixes.tsv"))
    ngrams = {cls: load_ngrams(path(name), cls) for cls, name in NGRAM_CLASSES.items()}
    letter_names = {reg: load_letter_names(path(f"letternames_{reg}.tsv"), reg)
                    for reg in LETTER_REGISTERS}
    variants = load_variants(path("variants.tsv"))
    rewrites = load_rewrites(path("english_rewrites.tsv"))

    logger.info(f"Loaded {len(entries)} roots, {len(suffixes)} suffixes, "
                f"{sum(len(t.grams) for t in ngrams.values())} n-grams, "
                f"{sum(len(v) for v in variants.values())} variants, "
                f"{len(rewrites)} rewrite rules from {directory}")

    return Lexicon(
        entries=entries,
        roots=MappingProxyType({k: tuple(v) for k, v in roots.items()}),
        suffixes=suffixes,
        ngrams=MappingProxyType(ngrams),
        letter_names=MappingProxyType(letter_names),
        variants=variants,
        rewrites=rewrites,
        directory=directory,
    )


# -----------------------
# Lookup
# -----------------------
def lookup_root(lexicon: Lexicon, surface: str, genre: Optional[str] = None) -> tuple:
    """All root entries spelled ``surface``, optionally of one genre."""
    entries = lexicon.roots.get(surface, ())
    if genre is None:
        return entries
    return tuple(e for e in entries if genre in e.genre)


def table_entry(lexicon: Lexicon, surface: str, genre: str) -> Optional[RootEntry]:
    found = lookup_root(lexicon, surface, genre)
    return found[0] if found else None


# -----------------------
# Dumping (canonical form)
# -----------------------
def _flags_text(entry: RootEntry) -> str:
    items = []
    if entry.pos != ("N",):
        items.append("pos=" + ",".join(entry.pos))
    if entry.lengthens_final_vowel:
        items.append("lengthens=1")
    if entry.no_final_voicing:
        items.append("novoicing=1")
    if entry.fixed_stress_syllable is not None:
        items.append(f"stress={entry.fixed_stress_syllable}")
    if entry.compound_stress_syllable is not None:
        items.append(f"compound={entry.compound_stress_syllable}")
    return " ".join(items) or "-"


def _write(path: str, rows: list, columns: list):
    df = pd.DataFrame(rows, columns=columns)
    df.to_csv(path, sep="\t", header=False, index=False,
              quoting=csv.QUOTE_NONE, lineterminator="\n", encoding="utf-8")


def dump_lexicon(lexicon: Lexicon, directory: str):
    """Write every table of ``lexicon`` in canonical form."""
    os.makedirs(directory, exist_ok=True)

    def path(name):
        return os.path.join(directory, name)

    _write(path("roots.tsv"), [
        (e.surface, ",".join(e.genres),
         " | ".join(str(p) for p in e.prons) if e.prons else "-",
         _flags_text(e))
        for e in lexicon.entries], ROOT_COLUMNS)
    _write(path("suffixes.tsv"), [
        (t.form, t.tag, int(t.stress_shifting), t.slot, t.attaches, t.yields, int(t.characteristic))
        for t in lexicon.suffixes], SUFFIX_COLUMNS)
    for cls, name in NGRAM_CLASSES.items():
        _write(path(name), [(g,) for g in sorted(lexicon.ngrams[cls].grams)], ["gram"])
    for reg, table in lexicon.letter_names.items():
        _write(path(f"letternames_{reg}.tsv"),
               [(letter, str(pron)) for letter, pron in table.names.items()], LETTERNAME_COLUMNS)
    _write(path("variants.tsv"), [
        (v.surface, v.gate, str(v.pron)) for group in lexicon.variants.values() for v in group
    ], VARIANT_COLUMNS)
    _write(path("english_rewrites.tsv"), [
        (r.pattern, " ".join(p.symbol for p in r.replacement) or "-", ",".join(sorted(r.registers)))
        for r in lexicon.rewrites], REWRITE_COLUMNS)
