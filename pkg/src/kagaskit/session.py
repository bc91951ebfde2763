"""Loaded-resource handle shared by the CLI and in-process callers.

A session resolves lexicon paths once (explicit argument, then the
KAGASKIT_DATA_DIR override, then the bundled files), builds the tagger,
and exposes the pair-level pipeline.  Sessions are read-only after
construction and safe for concurrent reads with the bundled tagger; an
external tagger process must stay within one worker.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Optional

from .alignment import Edit, align_and_extract
from .classify import SpellLexicon, classify
from .m2 import M2Document, annotate_tokens
from .pos import ExternalTagger, LexiconTagger, data_dir
from .preprocess import DEFAULT_NOISE_WORDS, normalize_punct_spacing


def _resolve(explicit: Optional[str], bundled_name: str) -> Path:
    if explicit:
        return Path(explicit)
    override = os.environ.get("KAGASKIT_DATA_DIR")
    if override:
        candidate = Path(override) / bundled_name
        if candidate.exists():
            return candidate
    return data_dir() / bundled_name


def load_word_list(path: Path) -> list[str]:
    words = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if line and not line.startswith("#"):
                words.append(line)
    return words


class Session:
    def __init__(
        self,
        morph_lexicon: Optional[str] = None,
        spell_lexicon: Optional[str] = None,
        noise_words: Optional[str] = None,
        gazetteer: Optional[str] = None,
        tagger_cmd: Optional[str] = None,
    ):
        morph_path = _resolve(morph_lexicon, "morph_lexicon.tsv")
        spell_path = _resolve(spell_lexicon, "spell_lexicon.txt")
        for path in (morph_path, spell_path):
            if not path.exists():
                raise FileNotFoundError(f"lexicon not found: {path}")
        if tagger_cmd:
            self.tagger = ExternalTagger(tagger_cmd)
        else:
            self.tagger = LexiconTagger(morph_path)
        self.spell = SpellLexicon.load(spell_path)
        if noise_words:
            self.noise_words = tuple(load_word_list(Path(noise_words)))
        else:
            bundled = data_dir() / "noise_words.txt"
            self.noise_words = (
                tuple(load_word_list(bundled)) if bundled.exists() else DEFAULT_NOISE_WORDS
            )
        self.gazetteer = set(load_word_list(Path(gazetteer))) if gazetteer else None

    def normalize(self, text: str) -> str:
        return normalize_punct_spacing(text)

    def annotate_pair(self, original: str, corrected: str) -> list[Edit]:
        """Normalized, aligned, classified edits for one sentence pair."""
        orig_toks = self.normalize(original).split()
        corr_toks = self.normalize(corrected).split()
        edits = align_and_extract(orig_toks, corr_toks, self.tagger)
        for e in edits:
            e.error_type = classify(e, self.tagger, self.spell).value
        return edits

    def annotate_document(self, original: str, corrected: str) -> M2Document:
        return annotate_tokens(
            self.normalize(original).split(),
            self.normalize(corrected).split(),
            self.tagger,
            self.spell,
        )

    def close(self):
        closer = getattr(self.tagger, "close", None)
        if closer:
            closer()
