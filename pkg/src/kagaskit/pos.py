"""Morpheme segmentation and POS tagging behind a pluggable interface.

The bundled tagger is a deterministic lexicon lookup: full-word analyses
first, then a greedy longest-suffix split (known particle/ending suffix +
known stem).  Words it cannot segment become a single UNKNOWN morpheme so
downstream classification degrades instead of aborting.  An external
tagger can be plugged in as a child process speaking a line protocol:
one word in, one line of tab-separated surface/lemma/tag triples out
(triples separated by single spaces, empty line = failure).

Tags follow the Kkma-style tagset; the granularity table folds them into
the eight coarse groups used for error typing.
"""

from __future__ import annotations

import os
import shlex
import subprocess
import unicodedata
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .orthography import merge_morphemes

UNKNOWN_TAG = "UNKNOWN"


class PosGroup(Enum):
    NOUN = "NOUN"
    VERB = "VERB"
    ADJ = "ADJ"
    PART = "PART"
    END = "END"
    MOD = "MOD"
    PUNCT = "PUNCT"
    OTHER = "OTHER"


@dataclass(frozen=True)
class TaggedMorpheme:
    surface: str
    lemma: str
    tag: str

    def __post_init__(self):
        if not self.surface:
            raise ValueError("TaggedMorpheme surface must be non-empty")


# Kkma-style tagset folded into coarse groups.  Interjections (IC) group
# with punctuation; the copulas VCP/VCN group with verbs.
GRANULARITY = {
    "NNG": PosGroup.NOUN, "NNP": PosGroup.NOUN, "NNB": PosGroup.NOUN,
    "NNM": PosGroup.NOUN, "NR": PosGroup.NOUN, "NP": PosGroup.NOUN,
    "VV": PosGroup.VERB, "VXV": PosGroup.VERB,
    "VCP": PosGroup.VERB, "VCN": PosGroup.VERB,
    "VA": PosGroup.ADJ, "VXA": PosGroup.ADJ,
    "MDT": PosGroup.MOD, "MDN": PosGroup.MOD,
    "MAG": PosGroup.MOD, "MAC": PosGroup.MOD,
    "IC": PosGroup.PUNCT,
    "JKS": PosGroup.PART, "JKC": PosGroup.PART, "JKG": PosGroup.PART,
    "JKO": PosGroup.PART, "JKM": PosGroup.PART, "JKI": PosGroup.PART,
    "JKQ": PosGroup.PART, "JX": PosGroup.PART, "JC": PosGroup.PART,
    "EPH": PosGroup.END, "EPT": PosGroup.END, "EPP": PosGroup.END,
    "EFN": PosGroup.END, "EFQ": PosGroup.END, "EFO": PosGroup.END,
    "EFA": PosGroup.END, "EFI": PosGroup.END, "EFR": PosGroup.END,
    "ECE": PosGroup.END, "ECD": PosGroup.END, "ECS": PosGroup.END,
    "ETN": PosGroup.END, "ETD": PosGroup.END,
    "XPN": PosGroup.OTHER, "XPV": PosGroup.OTHER, "XSN": PosGroup.OTHER,
    "XSV": PosGroup.OTHER, "XSA": PosGroup.OTHER, "XR": PosGroup.OTHER,
    "SF": PosGroup.PUNCT, "SP": PosGroup.PUNCT, "SS": PosGroup.PUNCT,
    "SE": PosGroup.PUNCT, "SO": PosGroup.PUNCT, "SW": PosGroup.PUNCT,
    "OL": PosGroup.OTHER, "OH": PosGroup.OTHER, "ON": PosGroup.OTHER,
    "UN": PosGroup.OTHER, UNKNOWN_TAG: PosGroup.OTHER,
}

CONTENT_TAGS = frozenset({
    "NNG", "NNP", "NNB", "NNM", "NR", "NP",
    "VV", "VA", "VXV", "VXA", "VCP", "VCN",
    "MDT", "MDN", "MAG", "MAC",
})

# Tags whose entries attach to a preceding stem rather than standing alone.
_SUFFIX_TAG_PREFIXES = ("J", "E", "X")
_SUFFIX_TAGS = frozenset({"VCP", "VCN"})


def pos_group_of(tag: str) -> PosGroup:
    return GRANULARITY.get(tag, PosGroup.OTHER)


def is_content_tag(tag: str) -> bool:
    return tag in CONTENT_TAGS


def _is_symbol_char(ch: str) -> bool:
    return unicodedata.category(ch)[0] in ("P", "S")


def _symbol_tag(token: str) -> str:
    head = token[0]
    if head in ".!?":
        return "SF"
    if head in ",;:·/":
        return "SP"
    if head in "'\"`()[]{}<>«»“”‘’":
        return "SS"
    if head in "…":
        return "SE"
    if head in "-~_":
        return "SO"
    return "SW"


def data_dir() -> Path:
    """Bundled lexicon directory, overridable via KAGASKIT_DATA_DIR."""
    override = os.environ.get("KAGASKIT_DATA_DIR")
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def _parse_morph_parts(surface: str, lemma: str, tag: str) -> tuple[TaggedMorpheme, ...]:
    lemmas = lemma.split("+")
    tags = tag.split("+")
    if len(lemmas) != len(tags):
        raise ValueError(f"lexicon row has {len(lemmas)} lemmas but {len(tags)} tags: {surface!r}")
    if len(lemmas) == 1:
        return (TaggedMorpheme(surface, lemmas[0], tags[0]),)
    # Multi-morpheme analyses carry canonical per-morpheme forms; the raw
    # word surface is not splittable once contractions applied.
    return tuple(TaggedMorpheme(lm, lm, tg) for lm, tg in zip(lemmas, tags))


class LexiconTagger:
    """Greedy longest-suffix tagger over a shipped TSV lexicon.

    Immutable after load; safe for concurrent reads.
    """

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path else data_dir() / "morph_lexicon.tsv"
        self.words: dict[str, tuple[TaggedMorpheme, ...]] = {}
        self.stems: dict[str, TaggedMorpheme] = {}
        self.suffixes: dict[str, tuple[TaggedMorpheme, ...]] = {}
        self._load()

    def _load(self):
        with open(self.path, encoding="utf-8") as fh:
            for raw in fh:
                line = raw.rstrip("\n")
                if not line or line.lstrip().startswith("#"):
                    continue
                cols = line.split("\t")
                if len(cols) != 3:
                    raise ValueError(f"lexicon row needs 3 tab-separated columns: {line!r}")
                surface, lemma, tag = cols
                morphs = _parse_morph_parts(surface, lemma, tag)
                first_tag = morphs[0].tag
                is_suffix = first_tag.startswith(_SUFFIX_TAG_PREFIXES) or first_tag in _SUFFIX_TAGS
                if is_suffix:
                    self.suffixes.setdefault(surface, morphs)
                elif len(morphs) == 1:
                    self.stems.setdefault(surface, morphs[0])
                # Every row also resolves the bare surface as a word.
                self.words.setdefault(surface, morphs)

    def tag(self, word: str) -> list[TaggedMorpheme]:
        if not word:
            raise ValueError("cannot tag an empty word")
        if all(_is_symbol_char(ch) for ch in word):
            return [TaggedMorpheme(word, word, _symbol_tag(word))]
        hit = self.words.get(word)
        if hit is not None:
            return list(hit)
        # Longest suffix whose remainder is a known stem.
        for stem_len in range(1, len(word)):
            stem = word[:stem_len]
            suffix = word[stem_len:]
            morphs = self.suffixes.get(suffix)
            if morphs is not None and stem in self.stems:
                return [self.stems[stem], *morphs]
        return [TaggedMorpheme(word, word, UNKNOWN_TAG)]


class ExternalTagger:
    """Child-process tagger speaking the one-word-per-line wire format.

    Each instance owns exactly one process; do not share across workers.
    """

    def __init__(self, command: str):
        self.command = command
        self._proc = subprocess.Popen(
            shlex.split(command),
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
            text=True,
            bufsize=1,
        )

    def tag(self, word: str) -> list[TaggedMorpheme]:
        if not word:
            raise ValueError("cannot tag an empty word")
        fallback = [TaggedMorpheme(word, word, UNKNOWN_TAG)]
        if all(_is_symbol_char(ch) for ch in word):
            return [TaggedMorpheme(word, word, _symbol_tag(word))]
        try:
            self._proc.stdin.write(word + "\n")
            self._proc.stdin.flush()
            line = self._proc.stdout.readline().strip("\n")
        except (BrokenPipeError, OSError):
            return fallback
        if not line.strip():
            return fallback
        morphs = []
        for chunk in line.split(" "):
            fields = chunk.split("\t")
            if len(fields) != 3 or not fields[0]:
                return fallback
            morphs.append(TaggedMorpheme(*fields))
        if not _reconstructs(word, morphs):
            return fallback
        return morphs

    def close(self):
        if self._proc.poll() is None:
            self._proc.terminate()
            self._proc.wait(timeout=5)

    def __del__(self):
        try:
            self.close()
        except Exception:
            pass


def _reconstructs(word: str, morphs: list[TaggedMorpheme]) -> bool:
    """Surface check: joined morpheme surfaces must contract back to the word."""
    joined = "".join(m.surface for m in morphs)
    if joined == word:
        return True
    try:
        return merge_morphemes([joined]) == merge_morphemes([word])
    except (ValueError, RuntimeError):
        return False


_default_tagger: LexiconTagger | None = None


def default_tagger() -> LexiconTagger:
    global _default_tagger
    if _default_tagger is None:
        _default_tagger = LexiconTagger()
    return _default_tagger


def tag_word(word: str, tagger=None) -> list[TaggedMorpheme]:
    return (tagger or default_tagger()).tag(word)


def pos_groups(word: str, tagger=None) -> set[PosGroup]:
    return {pos_group_of(m.tag) for m in tag_word(word, tagger)}
