"""End-to-end g2p: normalize, analyze (or guess), phoneticize, postphonology,
stress and render. Run as a script for the batch command line.

    python pipeline_cli.py --mode tts < words.txt > prons.tsv
"""
import json
import logging
import sys
import time
from dataclasses import dataclass
from datetime import datetime
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional

import click

from errors import G2PError
from heuristic_stemmer import CandidateSplit, classify_root, stem_unknown
from lexicon import DEFAULT_LEXICON_DIR, NATIVE_GENRES, Lexicon, load_lexicon, table_entry
from morphology import MorphAnalysis, analyze, analyze_apostrophe
from phoneticizer_foreign_abbrev import phoneticize_abbrev, phoneticize_foreign
from phoneticizer_native import combine, phoneticize_analysis, phoneticize_root, phoneticize_suffixes
from phonology_core import Pron, normalize
from postphonology import generate_variants, resolve_soft_g
from prosody import assign_stress, render, syllabify

logger = logging.getLogger(__name__)

# -----------------------
# CONFIG
# -----------------------
MAX_HEURISTIC_CANDIDATES = 3
BATCH_CHUNK_SIZE = 256
FORMATS = ("tsv", "json")

EXIT_OK = 0
EXIT_IO = 1
EXIT_WORD_ERRORS = 2


@dataclass(frozen=True)
class G2POptions:
    mode: str = "asr"
    variants: bool = False
    fmt: str = "tsv"


@dataclass(frozen=True)
class Reading:
    pron: Pron
    source: str
    tags: tuple = ()

    def rendered(self, mode: str) -> str:
        return render(self.pron, mode)


# -----------------------
# Routing
# -----------------------
def _attach_suffix(root_prons: list, suffix: str, analysis: MorphAnalysis) -> list:
    """Root readings from a non-native phoneticizer plus the native suffix."""
    if not suffix:
        return list(root_prons)
    prons = []
    for pron in root_prons:
        suffix_phones = phoneticize_suffixes(suffix, pron)
        prons.extend(combine([pron], suffix_phones, analysis.entry, analysis))
    return prons


def _analysis_prons(lexicon: Lexicon, analysis: MorphAnalysis) -> tuple:
    """(source, prons before postphonology, root pron) of one analysis."""
    if analysis.genre in NATIVE_GENRES:
        prons = phoneticize_analysis(lexicon, analysis)
        return "native", prons, phoneticize_root(lexicon, analysis.entry or analysis.root)[0]
    if analysis.genre == "abbreviation":
        foreign_hint = analysis.entry is not None and "foreign" in analysis.entry.genre
        roots = phoneticize_abbrev(lexicon, analysis.root, foreign_hint)
        return "abbrev", _attach_suffix(roots, analysis.suffix_surface, analysis), roots[0]
    roots = phoneticize_foreign(lexicon, analysis.root)
    return "foreign", _attach_suffix(roots, analysis.suffix_surface, analysis), roots[0]


def _candidate_analysis(candidate: CandidateSplit, apostrophe: bool = False) -> MorphAnalysis:
    return MorphAnalysis(root=candidate.root, suffix_surface=candidate.suffix_surface, tags=(),
                         genre=candidate.classification,
                         boundary_voicing=candidate.boundary_voicing_applied,
                         apostrophe=apostrophe)


def _candidate_prons(lexicon: Lexicon, candidate: CandidateSplit, analysis: MorphAnalysis) -> list:
    if candidate.classification == "abbreviation":
        entry = table_entry(lexicon, candidate.root, "abbreviation")
        foreign_hint = entry is not None and "foreign" in entry.genre
        roots = phoneticize_abbrev(lexicon, candidate.root, foreign_hint)
    elif candidate.classification == "foreign":
        roots = phoneticize_foreign(lexicon, candidate.root)
    else:
        roots = phoneticize_root(lexicon, candidate.root)
    return _attach_suffix(roots, candidate.suffix_surface, analysis)


def _stressed(variant: Pron, resolved: Pron, analysis: Optional[MorphAnalysis],
              stress_root: Optional[Pron]) -> Pron:
    if stress_root is not None:
        return assign_stress([variant], analysis, stress_root)[0]
    if resolved.stress_index is not None and variant.vowel_count == resolved.vowel_count:
        return variant.with_stress(resolved.stress_index)
    return assign_stress([variant], analysis)[0]


def _finish(lexicon: Lexicon, prons: list, analysis: Optional[MorphAnalysis], root_pron: Optional[Pron],
            source: str, options: G2POptions) -> list:
    """Soft g, variants and stress for the prons of one route. Stress is
    placed before soft g so a vowel merge cannot move it."""
    readings = []
    stress_root = None
    if root_pron is not None and analysis is not None and analysis.genre == "geographical":
        stress_root = resolve_soft_g(root_pron)[0]
    tts = options.mode == "tts"
    for pron in prons:
        if tts and stress_root is None:
            pron = assign_stress([pron], analysis)[0]
        for resolved in resolve_soft_g(pron):
            for variant in generate_variants(resolved, analysis, options, lexicon):
                if tts:
                    variant = _stressed(variant, resolved, analysis, stress_root)
                readings.append(Reading(variant, source, analysis.tags if analysis else ()))
    return readings


def g2p_readings(lexicon: Lexicon, surface: str, options: G2POptions = G2POptions()) -> list:
    """Every reading of ``surface``, native analyses first, then heuristic
    candidates by rank; duplicates dropped."""
    token = normalize(surface)
    text = token.text
    readings = []

    if token.has_apostrophe:
        root, _, suffix = text.partition("'")
        suffix = suffix.replace("'", "")
        analyses = analyze_apostrophe(lexicon, root, suffix)
        candidates = []
        if not analyses:
            classification, scores = classify_root(lexicon, root)
            candidates = [CandidateSplit(root, suffix, root, False, classification, scores)]
    else:
        analyses = analyze(lexicon, text)
        candidates = [] if analyses else stem_unknown(lexicon, text)[:MAX_HEURISTIC_CANDIDATES]

    for analysis in analyses:
        source, prons, root_pron = _analysis_prons(lexicon, analysis)
        readings += _finish(lexicon, prons, analysis, root_pron, source, options)
    for candidate in candidates:
        analysis = _candidate_analysis(candidate, token.has_apostrophe)
        prons = _candidate_prons(lexicon, candidate, analysis)
        readings += _finish(lexicon, prons, analysis, None, "heuristic", options)

    out, seen = [], set()
    for reading in readings:
        key = reading.rendered(options.mode)
        if key not in seen:
            seen.add(key)
            out.append(reading)
    logger.debug(f"{surface}: {len(analyses)} analyses, {len(candidates)} candidates, {len(out)} readings")
    return out


def g2p_word(lexicon: Lexicon, surface: str, options: G2POptions = G2POptions()) -> list:
    """Rendered pronunciations of one token, in output order."""
    return [r.rendered(options.mode) for r in g2p_readings(lexicon, surface, options)]


# -----------------------
# Batch
# -----------------------
def format_line(lexicon: Lexicon, line: str, options: G2POptions) -> tuple:
    """(output line, ok) for one input token; word failures become
    ERROR:<code> records."""
    token = line.rstrip("\r\n")
    try:
        readings = g2p_readings(lexicon, token, options)
    except G2PError as e:
        logger.warning(f"{token!r}: {e.code}: {e}")
        if options.fmt == "json":
            return json.dumps({"surface": token, "error": e.code}, ensure_ascii=False), False
        return f"{token}\tERROR:{e.code}", False

    if options.fmt == "json":
        prons = [{
            "pron": r.rendered(options.mode),
            "stress_syllable": r.pron.stress_index,
            "syllables": [" ".join(p.symbol for p in syl) for syl in syllabify(r.pron).syllables]
            if r.pron.vowel_count else [],
            "source": r.source,
            "analysis_tags": list(r.tags),
        } for r in readings]
        return json.dumps({"surface": token, "prons": prons}, ensure_ascii=False), True
    return f"{token}\t{';'.join(r.rendered(options.mode) for r in readings)}", True


_worker_lexicon: Optional[Lexicon] = None
_worker_options: Optional[G2POptions] = None


def _init_worker(lexicon_dir: str, options: G2POptions):
    global _worker_lexicon, _worker_options
    _worker_lexicon = load_lexicon(lexicon_dir)
    _worker_options = options


def _worker_line(line: str) -> tuple:
    return format_line(_worker_lexicon, line, _worker_options)


def run_batch(lines: Iterable[str], options: G2POptions = G2POptions(), lexicon: Optional[Lexicon] = None,
              lexicon_dir: str = DEFAULT_LEXICON_DIR, jobs: int = 1) -> Iterator[tuple]:
    """(output line, ok) per input line, in input order whatever ``jobs`` is."""
    if jobs <= 1:
        lexicon = lexicon or load_lexicon(lexicon_dir)
        for line in lines:
            yield format_line(lexicon, line, options)
        return
    with Pool(jobs, initializer=_init_worker, initargs=(lexicon_dir, options)) as pool:
        yield from pool.imap(_worker_line, lines, chunksize=BATCH_CHUNK_SIZE)


# -----------------------
# Command line
# -----------------------
@click.command()
@click.option("--mode", type=click.Choice(["asr", "tts"]), default="asr", show_default=True,
              help="tts adds syllable marks and primary stress")
@click.option("--variants/--no-variants", default=False, help="add fast-speech variants")
@click.option("--lexicon-dir", type=click.Path(file_okay=False), envvar="TR_G2P_LEXICON_DIR",
              default=DEFAULT_LEXICON_DIR, show_default=True)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="tsv", show_default=True)
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--verbose", is_flag=True, help="debug logging on stderr")
def main(mode, variants, lexicon_dir, fmt, jobs, verbose):
    """Read one token per line on stdin, write pronunciations to stdout."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.INFO, stream=sys.stderr,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    options = G2POptions(mode=mode, variants=variants, fmt=fmt)

    logger.info("============================================")
    logger.info("  Starting g2p batch")
    start_time = time.time()
    logger.info(f"  Start time: {datetime.now()}  lexicon: {lexicon_dir}  jobs: {jobs}")
    logger.info("============================================")

    try:
        lexicon = load_lexicon(lexicon_dir)
        total = errors = 0
        for out_line, ok in run_batch(sys.stdin, options, lexicon, lexicon_dir, jobs):
            click.echo(out_line)
            total += 1
            errors += not ok
    except (G2PError, OSError) as e:
        logger.error(f"Batch aborted: {e}")
        sys.exit(EXIT_IO)

    duration = round(time.time() - start_time, 2)
    logger.info("============================================")
    logger.info(f"Batch complete! Lines: {total}  Errors: {errors}")
    logger.info(f"End time: {datetime.now()}")
    logger.info(f"Total duration: {duration} seconds")
    logger.info("============================================")
    sys.exit(EXIT_WORD_ERRORS if errors else EXIT_OK)


if __name__ == "__main__":
    main()
