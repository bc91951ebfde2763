"""Learner-corpus XML parsing and sentence-pair reconstruction.

The annotation files carry one source sentence per ``<s>`` element and
morpheme-level correction records grouped per word::

    <word>
      <w>들었어요.</w>
      <morph subsequence="1" wordStart="Start">
        <Proofread pos="VV">들어오</Proofread>
      </morph>
      ...
    </word>

A corrected word is rebuilt by joining proofread/preserved morpheme texts
in subsequence order and contracting them with the orthography rules.
Only the elements shown above are interpreted; anything unknown is
ignored because the corpus markup is not consistent across annotators.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from typing import Optional

from .orthography import merge_morphemes

CONTROL_MARKERS = {"DELETE"}


class LearnerXmlError(ValueError):
    pass


@dataclass
class MorphAnnotation:
    kind: str  # "proofread" | "preserved"
    text: str
    pos: Optional[str] = None
    error_area: Optional[str] = None
    error_pattern: Optional[str] = None
    word_start: bool = False
    subsequence: int = 1


@dataclass
class WordAnnotation:
    original: str
    morphs: list[MorphAnnotation] = field(default_factory=list)


@dataclass
class LearnerSentence:
    source: str
    words: list[WordAnnotation] = field(default_factory=list)
    spoken: bool = False


@dataclass
class Reconstruction:
    pair: Optional[tuple[str, str]]
    reason: Optional[str]

    @property
    def kept(self) -> bool:
        return self.pair is not None


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1].lower()


def _parse_morph(el) -> Optional[MorphAnnotation]:
    kind = None
    text = ""
    pos = None
    area = None
    pattern = None
    for child in el:
        name = _local(child.tag)
        if name == "proofread":
            kind = "proofread"
            text = (child.text or "").strip()
            pos = child.get("pos")
        elif name == "preserved":
            kind = "preserved"
            text = (child.text or "").strip()
        elif name == "errorarea":
            area = child.get("type")
        elif name == "errorpattern":
            pattern = child.get("type")
    if kind is None:
        return None
    try:
        subsequence = int(el.get("subsequence", "1"))
    except ValueError:
        subsequence = 1
    word_start = (el.get("wordStart", "") or "").strip().lower() == "start"
    return MorphAnnotation(kind, text, pos, area, pattern, word_start, subsequence)


def _has_spoken_marker(root) -> bool:
    for el in root.iter():
        if "spoken" in _local(el.tag):
            return True
        if any("spoken" == (v or "").strip().lower() for v in el.attrib.values()):
            return True
        if (el.text or "").strip().lower() == "spoken":
            return True
    return False


def parse_learner_xml(text: str) -> list[LearnerSentence]:
    """Extract source sentences with their word annotations, document order."""
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise LearnerXmlError(f"malformed XML: {exc}") from None
    spoken = _has_spoken_marker(root)

    sentences: list[LearnerSentence] = []
    current: Optional[LearnerSentence] = None
    for el in root.iter():
        name = _local(el.tag)
        if name == "s":
            current = LearnerSentence((el.text or "").strip(), spoken=spoken)
            sentences.append(current)
        elif name == "word":
            w_el = next((c for c in el if _local(c.tag) == "w"), None)
            original = (w_el.text or "").strip() if w_el is not None else ""
            morphs = [m for m in (_parse_morph(c) for c in el if _local(c.tag) == "morph") if m]
            morphs.sort(key=lambda m: m.subsequence)
            if current is not None:
                current.words.append(WordAnnotation(original, morphs))
    return sentences


def _corrected_word(word: WordAnnotation) -> tuple[Optional[str], Optional[str]]:
    """Merged corrected word, or (None, discard reason)."""
    if not word.morphs:
        return None, "empty-edit"
    groups: list[list[str]] = []
    for m in word.morphs:
        if m.text in CONTROL_MARKERS:
            return None, "control-marker"
        if not m.text:
            return None, "empty-edit"
        if m.word_start or not groups:
            groups.append([])
        groups[-1].append(m.text)
    return " ".join(merge_morphemes(g) for g in groups), None


def reconstruct_pair(sentence: LearnerSentence) -> Reconstruction:
    """Rebuild (original, corrected) for one sentence, or a discard reason."""
    if sentence.spoken:
        return Reconstruction(None, "spoken-language")
    if not sentence.source:
        return Reconstruction(None, "empty-edit")
    tokens = sentence.source.split()
    corrected = list(tokens)
    used: set[int] = set()
    for word in sentence.words:
        fixed, reason = _corrected_word(word)
        if reason:
            return Reconstruction(None, reason)
        try:
            idx = next(i for i, t in enumerate(tokens) if t == word.original and i not in used)
        except StopIteration:
            return Reconstruction(None, "word-not-in-source")
        used.add(idx)
        corrected[idx] = fixed
    return Reconstruction((sentence.source, " ".join(corrected)), None)
