"""Hangul syllable arithmetic, jamo sequences, and jamo-level edit distance.

A precomposed syllable U+AC00..U+D7A3 decomposes into three jamo slots:
choseong (initial consonant, 19 values), jungseong (vowel, 21 values), and
jongseong (final consonant, 28 values where index 0 means absent).  The
jamo-level distance treats a substitution between two syllables as the
number of differing slots divided by three, so a single-letter typo costs
1/3 instead of a full character edit.

Compatibility jamo (U+3130 block) do not decompose; they travel through
jamo sequences as plain non-Hangul atoms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

SYLLABLE_BASE = 0xAC00
SYLLABLE_LAST = 0xD7A3

CHOSEONG = [
    'ㄱ', 'ㄲ', 'ㄴ', 'ㄷ', 'ㄸ', 'ㄹ', 'ㅁ', 'ㅂ', 'ㅃ',
    'ㅅ', 'ㅆ', 'ㅇ', 'ㅈ', 'ㅉ', 'ㅊ', 'ㅋ', 'ㅌ', 'ㅍ', 'ㅎ',
]

JUNGSEONG = [
    'ㅏ', 'ㅐ', 'ㅑ', 'ㅒ', 'ㅓ', 'ㅔ',
    'ㅕ', 'ㅖ', 'ㅗ', 'ㅘ', 'ㅙ', 'ㅚ',
    'ㅛ', 'ㅜ', 'ㅝ', 'ㅞ', 'ㅟ', 'ㅠ',
    'ㅡ', 'ㅢ', 'ㅣ',
]

# Index 0 is the empty (absent) jongseong.
JONGSEONG = [
    '', 'ㄱ', 'ㄲ', 'ㄳ', 'ㄴ', 'ㄵ', 'ㄶ', 'ㄷ',
    'ㄹ', 'ㄺ', 'ㄻ', 'ㄼ', 'ㄽ', 'ㄾ', 'ㄿ', 'ㅀ',
    'ㅁ', 'ㅂ', 'ㅄ', 'ㅅ', 'ㅆ', 'ㅇ', 'ㅈ', 'ㅊ',
    'ㅋ', 'ㅌ', 'ㅍ', 'ㅎ',
]

_CHO_INDEX = {c: i for i, c in enumerate(CHOSEONG)}
_JUNG_INDEX = {c: i for i, c in enumerate(JUNGSEONG)}
_JONG_INDEX = {c: i for i, c in enumerate(JONGSEONG)}


@dataclass(frozen=True)
class Syllable:
    """One precomposed Hangul syllable as three jamo slot indices."""

    cho: int
    jung: int
    jong: int  # 0 = no final consonant

    @property
    def cho_jamo(self) -> str:
        return CHOSEONG[self.cho]

    @property
    def jung_jamo(self) -> str:
        return JUNGSEONG[self.jung]

    @property
    def jong_jamo(self) -> str:
        return JONGSEONG[self.jong]

    def char(self) -> str:
        return compose_syllable(self)


# A jamo sequence cell: a decomposed syllable or a non-Hangul character.
JamoUnit = Union[Syllable, str]
JamoSequence = list


def decompose_syllable(ch: str):
    """Return the Syllable for a precomposed Hangul character, else None."""
    code = ord(ch)
    if code < SYLLABLE_BASE or code > SYLLABLE_LAST:
        return None
    code -= SYLLABLE_BASE
    cho = code // (21 * 28)
    jung = (code % (21 * 28)) // 28
    jong = code % 28
    return Syllable(cho, jung, jong)


def compose_syllable(s: Syllable) -> str:
    """Inverse of decompose_syllable; raises ValueError on bad indices."""
    if not (0 <= s.cho <= 18 and 0 <= s.jung <= 20 and 0 <= s.jong <= 27):
        raise ValueError(f"invalid jamo indices: {s!r}")
    return chr(SYLLABLE_BASE + (s.cho * 21 + s.jung) * 28 + s.jong)


def syllable_from_jamo(cho: str, jung: str, jong: str = '') -> Syllable:
    """Build a Syllable from compatibility-jamo letters ('' = no jongseong)."""
    try:
        return Syllable(_CHO_INDEX[cho], _JUNG_INDEX[jung], _JONG_INDEX[jong])
    except KeyError as exc:
        raise ValueError(f"invalid jamo letter: {exc.args[0]!r}") from None


def to_jamo_seq(text: str) -> JamoSequence:
    """Decompose text into a jamo sequence; non-Hangul chars stay as atoms."""
    seq: JamoSequence = []
    for ch in text:
        syl = decompose_syllable(ch)
        seq.append(syl if syl is not None else ch)
    return seq


def from_jamo_seq(seq: JamoSequence) -> str:
    """Recompose a jamo sequence back into text (exact round trip)."""
    return ''.join(u.char() if isinstance(u, Syllable) else u for u in seq)


def is_hangul_syllable(ch: str) -> bool:
    return SYLLABLE_BASE <= ord(ch) <= SYLLABLE_LAST


def _slot_diff(a: Syllable, b: Syllable) -> int:
    return (a.cho != b.cho) + (a.jung != b.jung) + (a.jong != b.jong)


def jamo_distance_thirds(a: str, b: str) -> int:
    """jamo_distance scaled by 3, computed exactly in integers.

    Insertion/deletion of any character costs 3; substituting one Hangul
    syllable for another costs the number of differing jamo slots (0..3);
    any substitution involving a non-Hangul character costs 3 unless the
    characters are equal.
    """
    if a == b:
        return 0
    da = [decompose_syllable(c) for c in a]
    db = [decompose_syllable(c) for c in b]
    n, m = len(a), len(b)
    prev = [j * 3 for j in range(m + 1)]
    for i in range(1, n + 1):
        cur = [i * 3] + [0] * m
        for j in range(1, m + 1):
            if a[i - 1] == b[j - 1]:
                sub = 0
            elif da[i - 1] is not None and db[j - 1] is not None:
                sub = _slot_diff(da[i - 1], db[j - 1])
            else:
                sub = 3
            cur[j] = min(prev[j - 1] + sub, prev[j] + 3, cur[j - 1] + 3)
        prev = cur
    return prev[m]


def jamo_distance(a: str, b: str) -> Fraction:
    """Jamo-weighted Levenshtein distance between two strings.

    Returned as an exact rational so slot-level costs like 1/3 compare
    without floating-point noise.
    """
    return Fraction(jamo_distance_thirds(a, b), 3)
