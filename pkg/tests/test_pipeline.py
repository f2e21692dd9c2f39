"""End-to-end readings, batch processing and the command line."""
import json
import os

import numpy as np
import pandas as pd
import pytest
from click.testing import CliRunner

from lexicon import DEFAULT_LEXICON_DIR
from pipeline_cli import G2POptions, format_line, g2p_readings, g2p_word, main, run_batch

GOLDEN_PATH = os.path.join(os.path.dirname(__file__), "data", "golden.tsv")
ASR = G2POptions()
TTS = G2POptions(mode="tts")
FAST = G2POptions(variants=True)


def _key(pron: str) -> str:
    return pron.replace(" ", "").replace("-", "")


def _golden_rows() -> list:
    df = pd.read_csv(GOLDEN_PATH, sep="\t", comment="#", header=None, dtype=str,
                     names=["surface", "mode", "variants", "expected", "alternative"],
                     keep_default_na=False)
    return list(df.itertuples(index=False))


# -------------------------------------------------------------------------
# Readings
# -------------------------------------------------------------------------
@pytest.mark.parametrize("row", _golden_rows(), ids=lambda r: f"{r.surface}-{r.mode}")
def test_golden(lexicon, row) -> None:
    options = G2POptions(mode=row.mode, variants=row.variants == "1")
    produced = {_key(p) for p in g2p_word(lexicon, row.surface, options)}

    def contained(prons: str) -> bool:
        return all(_key(p) in produced for p in prons.split(";"))

    assert contained(row.expected) or (row.alternative != "-" and contained(row.alternative)), produced


def test_koyun_readings(lexicon) -> None:
    assert g2p_word(lexicon, "koyun") == ["k o j u n"]
    assert g2p_word(lexicon, "koyun", TTS) == ["k o - j +u n", "k +o - j u n"]


def test_soft_g_merge_keeps_stress(lexicon) -> None:
    prons = g2p_word(lexicon, "okumayacağım", TTS)
    assert "o - k +u - m a - j a - dZ a - 1 m" in prons
    assert "o - k +u - m a - j a - dZ a: m" in prons


@pytest.mark.parametrize(("word", "expected"), [
    ("Facebook'a", ["f e j s b u k a"]),
    ("tüik'i", ["t y: i c i"]),
])
def test_no_voicing_after_foreign_apostrophe(lexicon, word: str, expected: list) -> None:
    assert g2p_word(lexicon, word) == expected


@pytest.mark.parametrize(("word", "pron"), [
    ("gelmiyor", "gj e l - m +i - j o r"),
    ("başlıyor", "b a S - 5 +1 - j o r"),
    ("kazmıyorken", "k a z - m +1 - j o r - c e n"),
])
def test_progressive_readings(lexicon, word: str, pron: str) -> None:
    assert pron in g2p_word(lexicon, word, TTS)


def test_sources(lexicon) -> None:
    assert {r.source for r in g2p_readings(lexicon, "kitaba")} == {"native"}
    assert {r.source for r in g2p_readings(lexicon, "tüik")} == {"heuristic"}
    (google,) = {r.source for r in g2p_readings(lexicon, "google")}
    assert google == "heuristic"


def test_native_tags_are_kept(lexicon) -> None:
    (reading,) = g2p_readings(lexicon, "kitaba")
    assert reading.tags == ("<N>", "<dat>")


def test_variants_follow_input(lexicon) -> None:
    plain = g2p_word(lexicon, "kadınlar")
    fast = g2p_word(lexicon, "kadınlar", FAST)
    assert fast[:len(plain)] == plain
    assert "k a d 1 n n a r" in fast


def test_no_soft_g_in_output(lexicon) -> None:
    for word in ["dağ", "ağaç", "değil", "bildiğim", "facebuğumdan", "Zonguldak'a"]:
        for pron in g2p_word(lexicon, word):
            assert "G" not in pron.split(), word


def test_heuristic_candidates_are_capped(lexicon) -> None:
    readings = g2p_readings(lexicon, "feysbuklardan")
    assert readings
    assert readings[0].rendered("asr") == "f e j s b u k 5 a r d a n"


def test_output_is_deterministic(lexicon) -> None:
    words = ["koyun", "okuma", "google", "thyde", "aydın"]
    first = [g2p_word(lexicon, w, TTS) for w in words]
    assert first == [g2p_word(lexicon, w, TTS) for w in words]


# -------------------------------------------------------------------------
# Batch
# -------------------------------------------------------------------------
def test_format_line(lexicon) -> None:
    assert format_line(lexicon, "kitaba\n", ASR) == ("kitaba\tc i t a b a", True)
    assert format_line(lexicon, "!!!", ASR) == ("!!!\tERROR:EmptyToken", False)


def test_format_line_json(lexicon) -> None:
    line, ok = format_line(lexicon, "okuma", G2POptions(mode="tts", fmt="json"))
    record = json.loads(line)
    assert ok and record["surface"] == "okuma"
    stressed = {p["pron"]: p for p in record["prons"]}
    neg = stressed["o - k +u - m a"]
    assert neg["stress_syllable"] == 1
    assert neg["syllables"] == ["o", "k u", "m a"]
    assert neg["source"] == "native"
    assert "<neg>" in neg["analysis_tags"]

    line, ok = format_line(lexicon, "...", G2POptions(fmt="json"))
    assert not ok and json.loads(line) == {"surface": "...", "error": "EmptyToken"}


def test_run_batch_keeps_order(lexicon) -> None:
    lines = ["ev", "!!!", "kitaba", "tr"]
    out = list(run_batch(lines, ASR, lexicon))
    assert [line.split("\t")[0] for line, _ in out] == lines
    assert [ok for _, ok in out] == [True, False, True, True]
    assert out[1][0] == "!!!\tERROR:EmptyToken"


def test_run_batch_parallel_matches_serial(lexicon) -> None:
    lines = ["koyun", "zamanında", "gidiyorken", "Ankara'da", "thyde", "google", "tüik", "!!!"] * 5
    serial = list(run_batch(lines, TTS, lexicon))
    parallel = list(run_batch(lines, TTS, lexicon_dir=DEFAULT_LEXICON_DIR, jobs=2))
    assert parallel == serial


def _batch_words(lexicon, size: int, seed: int) -> list:
    pool = sorted({e.surface for e in lexicon.entries} | {r.surface for r in _golden_rows()})
    pool += ["gelmiyor", "kazmıyorken", "okumayacağım", "Facebook'a", "feysbuklardan", "!!!"]
    rng = np.random.default_rng(seed)
    return [str(w) for w in rng.choice(pool, size=size)]


def test_large_batch_parallel_matches_serial(lexicon) -> None:
    lines = _batch_words(lexicon, 2000, 11)
    serial = list(run_batch(lines, TTS, lexicon))
    parallel = list(run_batch(lines, TTS, lexicon_dir=DEFAULT_LEXICON_DIR, jobs=8))
    assert parallel == serial


@pytest.mark.slow
def test_cli_jobs_do_not_change_output(lexicon) -> None:
    stdin = "\n".join(_batch_words(lexicon, 100_000, 5)) + "\n"
    outputs = []
    for jobs in ("1", "8"):
        result = CliRunner().invoke(main, ["--mode", "tts", "--jobs", jobs], input=stdin)
        assert result.exit_code == 2
        outputs.append([line for line in result.stdout.splitlines() if "\t" in line])
    assert len(outputs[0]) == 100_000
    assert outputs[0] == outputs[1]


# -------------------------------------------------------------------------
# Command line
# -------------------------------------------------------------------------
def test_cli_ok() -> None:
    result = CliRunner().invoke(main, ["--mode", "tts"], input="okuma\nkısadır\n")
    assert result.exit_code == 0
    lines = [line for line in result.stdout.splitlines() if "\t" in line]
    assert lines[0].startswith("okuma\t")
    assert lines[1] == "kısadır\tk 1 - s a - d +1 r"


def test_cli_word_errors_exit_2() -> None:
    result = CliRunner().invoke(main, [], input="ev\n!!!\n")
    assert result.exit_code == 2
    assert "!!!\tERROR:EmptyToken" in result.stdout.splitlines()


def test_cli_json() -> None:
    result = CliRunner().invoke(main, ["--format", "json", "--variants"], input="kadınlar\n")
    assert result.exit_code == 0
    record = json.loads(next(line for line in result.stdout.splitlines() if line.startswith("{")))
    assert "k a d 1 n n a r" in [p["pron"] for p in record["prons"]]


def test_cli_missing_lexicon(tmp_path) -> None:
    result = CliRunner().invoke(main, ["--lexicon-dir", str(tmp_path / "nowhere")], input="ev\n")
    assert result.exit_code == 1
