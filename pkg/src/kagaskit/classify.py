"""Error-type classification for aligned edits.

Each edit receives exactly one of 14 types (or UNK) via a fixed cascade:

1. INS / DEL for one-sided edits
2. WS, then WO, for the merge candidates from edit extraction
3. SPELL when the original word is outside the spell lexicon and the
   corrected word is inside
4. SHORT when both words analyze to identical (lemma, tag) sequences
5. PUNCT when the morpheme-level difference is punctuation only
6. a single differing POS group names its type (NOUN/VERB/ADJ/PART/END/MOD)
7. the {VERB,END} / {ADJ,END} combinations name CONJ
8. everything else is UNK

The morpheme-level difference trusts the corrected side: when a morpheme
substitution pair aligns, the corrected morpheme's group stands for the
pair, because the corrected sentence is assumed grammatical while tags on
erroneous source words are unreliable.
"""

from __future__ import annotations

import unicodedata
from enum import Enum
from pathlib import Path

from .alignment import Edit
from .hangul import jamo_distance
from .pos import PosGroup, TaggedMorpheme, data_dir, pos_group_of, tag_word


class ErrorType(Enum):
    INS = "INS"
    DEL = "DEL"
    WS = "WS"
    WO = "WO"
    SPELL = "SPELL"
    PUNCT = "PUNCT"
    SHORT = "SHORT"
    VERB = "VERB"
    ADJ = "ADJ"
    NOUN = "NOUN"
    PART = "PART"
    END = "END"
    MOD = "MOD"
    CONJ = "CONJ"
    UNK = "UNK"


ERROR_TYPE_ORDER = [t.value for t in ErrorType]

_GROUP_TYPES = {
    PosGroup.NOUN: ErrorType.NOUN,
    PosGroup.VERB: ErrorType.VERB,
    PosGroup.ADJ: ErrorType.ADJ,
    PosGroup.PART: ErrorType.PART,
    PosGroup.END: ErrorType.END,
    PosGroup.MOD: ErrorType.MOD,
}


class SpellLexicon:
    """Set of well-formed word surfaces, one per line, '#' comments."""

    def __init__(self, words=()):
        self.words = frozenset(words)

    @classmethod
    def load(cls, path: str | Path | None = None) -> "SpellLexicon":
        path = Path(path) if path else data_dir() / "spell_lexicon.txt"
        words = []
        with open(path, encoding="utf-8") as fh:
            for raw in fh:
                line = raw.strip()
                if line and not line.startswith("#"):
                    words.append(line)
        return cls(words)

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)


_default_spell: SpellLexicon | None = None


def default_spell_lexicon() -> SpellLexicon:
    global _default_spell
    if _default_spell is None:
        _default_spell = SpellLexicon.load()
    return _default_spell


def _morph_sub_cost(a: TaggedMorpheme, b: TaggedMorpheme) -> float:
    dist = float(jamo_distance(a.lemma, b.lemma))
    return min(1.0, dist / max(len(a.lemma), len(b.lemma)))


def _morpheme_ops(o_morphs, c_morphs):
    """Levenshtein over morphemes; (lemma, tag) equality is a free match."""
    n, m = len(o_morphs), len(c_morphs)
    cost = [[0.0] * (m + 1) for _ in range(n + 1)]
    op = [[""] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        cost[i][0], op[i][0] = float(i), "D"
    for j in range(1, m + 1):
        cost[0][j], op[0][j] = float(j), "I"
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            a, b = o_morphs[i - 1], c_morphs[j - 1]
            if (a.lemma, a.tag) == (b.lemma, b.tag):
                match = (cost[i - 1][j - 1], 0, "M")
            else:
                match = (cost[i - 1][j - 1] + _morph_sub_cost(a, b), 1, "S")
            cand = [
                match,
                (cost[i - 1][j] + 1.0, 2, "D"),
                (cost[i][j - 1] + 1.0, 3, "I"),
            ]
            c, _, o = min(cand, key=lambda t: (t[0], t[1]))
            cost[i][j], op[i][j] = c, o

    ops = []
    i, j = n, m
    while i > 0 or j > 0:
        code = op[i][j]
        if code in ("M", "S"):
            ops.append((code, o_morphs[i - 1], c_morphs[j - 1]))
            i, j = i - 1, j - 1
        elif code == "D":
            ops.append(("D", o_morphs[i - 1], None))
            i -= 1
        else:
            ops.append(("I", None, c_morphs[j - 1]))
            j -= 1
    ops.reverse()
    return ops


def morpheme_diff(o_word: str, c_word: str, tagger=None):
    """Morphemes present on only one side after jamo-weighted alignment."""
    ops = _morpheme_ops(tag_word(o_word, tagger), tag_word(c_word, tagger))
    deleted = [o for kind, o, _ in ops if kind in ("S", "D")]
    inserted = [c for kind, _, c in ops if kind in ("S", "I")]
    return deleted, inserted


def _effective_diff(o_word: str, c_word: str, tagger=None) -> list[TaggedMorpheme]:
    """Changed morphemes, represented by the corrected side for substitutions."""
    ops = _morpheme_ops(tag_word(o_word, tagger), tag_word(c_word, tagger))
    diff = []
    for kind, o, c in ops:
        if kind in ("S", "I"):
            diff.append(c)
        elif kind == "D":
            diff.append(o)
    return diff


def _is_punct_morph(m: TaggedMorpheme) -> bool:
    if pos_group_of(m.tag) is PosGroup.PUNCT:
        return True
    return all(unicodedata.category(ch)[0] in ("P", "S") for ch in m.surface)


def classify(edit: Edit, tagger=None, spell: SpellLexicon | None = None) -> ErrorType:
    """Assign the single representative error type for one edit."""
    if spell is None:
        spell = default_spell_lexicon()

    if not edit.o_toks:
        return ErrorType.INS
    if not edit.c_toks:
        return ErrorType.DEL
    if edit.error_type == "WS":
        return ErrorType.WS
    if edit.error_type == "WO":
        return ErrorType.WO

    # Past the merge candidates, all-split edits pair one token with one token.
    if len(edit.o_toks) != 1 or len(edit.c_toks) != 1:
        return ErrorType.UNK
    o_word, c_word = edit.o_toks[0], edit.c_toks[0]

    if o_word not in spell and c_word in spell:
        return ErrorType.SPELL

    o_morphs = tag_word(o_word, tagger)
    c_morphs = tag_word(c_word, tagger)
    if [(m.lemma, m.tag) for m in o_morphs] == [(m.lemma, m.tag) for m in c_morphs]:
        return ErrorType.SHORT

    diff = _effective_diff(o_word, c_word, tagger)
    if diff and all(_is_punct_morph(m) for m in diff):
        return ErrorType.PUNCT

    groups = {pos_group_of(m.tag) for m in diff}
    if len(groups) == 1:
        mapped = _GROUP_TYPES.get(next(iter(groups)))
        if mapped is not None:
            return mapped
    if groups in ({PosGroup.VERB, PosGroup.END}, {PosGroup.ADJ, PosGroup.END}):
        return ErrorType.CONJ
    return ErrorType.UNK


def coverage(types) -> float:
    """Fraction of classified edits that are not UNK."""
    types = list(types)
    if not types:
        return 0.0
    known = sum(1 for t in types if t != ErrorType.UNK and t != ErrorType.UNK.value)
    return known / len(types)
