# G2P-Scout.py
# G2P Scout - interactive explorer for the Turkish g2p lexicon and pipeline
import streamlit as st
import pandas as pd

from errors import G2PError
from lexicon import DEFAULT_LEXICON_DIR, GENRES, load_lexicon
from morphology import analyze, analyze_apostrophe
from pipeline_cli import G2POptions, g2p_readings
from phonology_core import normalize
from prosody import syllabify


# --- page config ---
st.set_page_config(
    page_title="G2P Scout",
    layout="wide"
)


# ==========================
# CONSTANTS
# ==========================
LEXICON_DIR = DEFAULT_LEXICON_DIR
EXAMPLES = ["koyun", "zamanında", "gidiyorken", "Zonguldak'a", "facebuğumdan", "thyde", "tüik"]


@st.cache_resource(show_spinner=False)
def get_lexicon(directory: str):
    return load_lexicon(directory)


try:
    lexicon = get_lexicon(LEXICON_DIR)
except G2PError as e:
    st.error(f"❌ Cannot load lexicon: {e}")
    st.stop()


# ---------------------------
# Sidebar: lexicon summary
# ---------------------------
with st.sidebar:
    st.markdown("### 📚 Lexicon")
    st.caption(LEXICON_DIR)
    counts = pd.Series([g for e in lexicon.entries for g in e.genres]).value_counts()
    st.dataframe(
        pd.DataFrame({"genre": list(GENRES), "roots": [int(counts.get(g, 0)) for g in GENRES]}),
        hide_index=True,
        use_container_width=True,
    )
    st.markdown("---")
    st.write(f"Suffix templates: {len(lexicon.suffixes)}")
    st.write(f"Variant rows: {sum(len(v) for v in lexicon.variants.values())}")
    st.write(f"Rewrite rules: {len(lexicon.rewrites)}")


# ---------------------------
# App header
# ---------------------------
st.markdown("<h1 style='margin-top: 10px;'>G2P Scout</h1>", unsafe_allow_html=True)
st.write("Type a Turkish word to see every parallel pronunciation, where it came from and how it is stressed.")

word = st.text_input("Word", placeholder="e.g. " + ", ".join(EXAMPLES[:3]))
col1, col2 = st.columns(2, gap="small")
with col1:
    mode = st.radio("Mode", ["asr", "tts"], horizontal=True, format_func=str.upper)
with col2:
    variants = st.toggle("Fast-speech variants", value=False)

if word:
    options = G2POptions(mode=mode, variants=variants)
    try:
        readings = g2p_readings(lexicon, word, options)
    except G2PError as e:
        st.error(f"❌ {e.code}: {e}")
        st.stop()

    rows = []
    for r in readings:
        rows.append({
            "pron": r.rendered(mode),
            "source": r.source,
            "tags": " ".join(r.tags),
            "syllables": " / ".join(" ".join(p.symbol for p in syl) for syl in syllabify(r.pron).syllables)
            if r.pron.vowel_count else "",
        })
    st.subheader(f"{len(rows)} pronunciation(s)")
    st.dataframe(pd.DataFrame(rows), hide_index=True, use_container_width=True)

    with st.expander("Morphological analyses"):
        try:
            token = normalize(word)
            if token.has_apostrophe:
                root, _, suffix = token.text.partition("'")
                analyses = analyze_apostrophe(lexicon, root, suffix.replace("'", ""))
            else:
                analyses = analyze(lexicon, token.text)
        except G2PError:
            analyses = []
        if analyses:
            st.dataframe(pd.DataFrame([{
                "root": a.root,
                "suffixes": "+".join(a.suffix_parts),
                "templates": " ".join(t.form for t in a.suffix_templates),
                "tags": " ".join(a.tags),
                "genre": a.genre,
            } for a in analyses]), hide_index=True, use_container_width=True)
        else:
            st.info("No native analysis; the heuristic stemmer handled this word.")
else:
    st.caption("Try: " + ", ".join(EXAMPLES))
