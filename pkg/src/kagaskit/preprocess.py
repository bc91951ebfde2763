"""Corpus normalization and the pair-filtering pipelines.

Text cleanups (punctuation spacing, repeat squashing, bracket stripping)
are idempotent pure functions.  The Lang-8 filter applies its rules in a
fixed order and reports the first one that fires, so a decision log is
reproducible line for line; the native-transcription filter drops pairs
whose differences carry no grammatical signal (punctuation, numbers,
named entities) or that are truncated transcriptions.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from difflib import SequenceMatcher
from fractions import Fraction
from typing import Optional

from .hangul import jamo_distance

# Characters whose runs collapse to a single occurrence.
SQUASH_CHARS = [' ', '!', ';', '?', '~', '>', '^', '+', 'ㅠ', 'ㅜ', 'ㅋ']
_SQUASH_RE = re.compile("|".join(f"(?:{re.escape(c)}){{2,}}" for c in SQUASH_CHARS))

_BRACKET_RES = [
    re.compile(r"\([^()]*\)"),
    re.compile(r"\{[^{}]*\}"),
    re.compile(r"<[^<>]*>"),
    re.compile(r"\[[^\[\]]*\]"),
]

# Sub-word token budget approximated as twice the whitespace token count.
MAX_SUBWORD_TOKENS = 200
MAX_TOKEN_CHARS = 20
MIN_SENTENCE_CHARS = 2
TOKEN_RATIO_RANGE = (0.25, 4.0)
LENGTH_RATIO_RANGE = (0.5, 1.25)
MIN_TOKENS = 5
MIN_LCS_CHARS = 10
MAX_JAMO_DIST = 10

DEFAULT_NOISE_WORDS = ("good", "or", "/")

_KOREAN_NUMERAL_CHARS = set(
    "영공일이삼사오육칠팔구십백천만억조"
    "한두세네댓닷엿"
    "다섯여섯일곱여덟아홉열스물서른마흔쉰예순일흔여든아흔"
)


def is_punct_char(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def normalize_punct_spacing(text: str) -> str:
    """Give every punctuation character its own whitespace-separated slot."""
    out: list[str] = []
    for ch in text:
        if is_punct_char(ch):
            out.append(f" {ch} ")
        else:
            out.append(ch)
    return " ".join("".join(out).split())


def squash_repeats(text: str) -> str:
    return _SQUASH_RE.sub(lambda m: m.group(0)[0], text)


def strip_brackets(text: str) -> str:
    """Drop bracketed spans with their brackets; unbalanced ones stay."""
    while True:
        new = text
        for pattern in _BRACKET_RES:
            new = pattern.sub("", new)
        if new == text:
            return text
        text = new


def clean_lang8_text(text: str) -> str:
    return squash_repeats(strip_brackets(text))


@dataclass
class PairStats:
    n_t_pre: int
    n_t_post: int
    r_t: float
    r_l: float
    lcs_chars: int
    jamo_dist: Fraction


@dataclass(frozen=True)
class FilterDecision:
    keep: bool
    rule: str

    def __post_init__(self):
        if self.keep != (self.rule == "pass"):
            raise ValueError("keep must mirror rule == 'pass'")


def lcs_chars(a: str, b: str) -> int:
    """Longest common subsequence length in characters."""
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for i in range(1, len(a) + 1):
        cur = [0] * (len(b) + 1)
        ai = a[i - 1]
        for j in range(1, len(b) + 1):
            if ai == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = max(prev[j], cur[j - 1])
        prev = cur
    return prev[-1]


def pair_stats(original: str, corrected: str) -> PairStats:
    n_pre = len(original.split())
    n_post = len(corrected.split())
    return PairStats(
        n_t_pre=n_pre,
        n_t_post=n_post,
        r_t=n_post / n_pre if n_pre else 0.0,
        r_l=len(corrected) / len(original) if original else 0.0,
        lcs_chars=lcs_chars(original, corrected),
        jamo_dist=jamo_distance(original, corrected),
    )


def _allowed_script(ch: str) -> bool:
    if ch.isspace() or ch.isascii():
        return True
    code = ord(ch)
    if 0xAC00 <= code <= 0xD7A3:  # precomposed syllables
        return True
    if 0x1100 <= code <= 0x11FF or 0x3130 <= code <= 0x318F:  # jamo
        return True
    return unicodedata.category(ch)[0] in ("P", "S")


def lang8_filter(original: str, corrected: str,
                 noise_words=None) -> tuple[FilterDecision, PairStats]:
    """Keep/discard verdict for one cleaned pair, first failing rule wins."""
    noise = {w.lower() for w in (noise_words or DEFAULT_NOISE_WORDS)}
    stats = pair_stats(original, corrected)
    tokens_pre = original.split()
    tokens_post = corrected.split()

    def decide(rule: str) -> tuple[FilterDecision, PairStats]:
        return FilterDecision(rule == "pass", rule), stats

    if 2 * stats.n_t_pre > MAX_SUBWORD_TOKENS or 2 * stats.n_t_post > MAX_SUBWORD_TOKENS:
        return decide("too-long")
    if any(not _allowed_script(ch) for ch in original + corrected):
        return decide("foreign-script")
    if any(len(t) > MAX_TOKEN_CHARS for t in tokens_pre + tokens_post):
        return decide("long-token")
    if any(t.lower() in noise for t in tokens_pre + tokens_post):
        return decide("noise-word")
    if not original.strip() or not corrected.strip():
        return decide("not-a-pair")
    if len(original) < MIN_SENTENCE_CHARS or len(corrected) < MIN_SENTENCE_CHARS:
        return decide("short-sentence")
    if not (TOKEN_RATIO_RANGE[0] < stats.r_t < TOKEN_RATIO_RANGE[1]):
        return decide("token-ratio")
    if not (LENGTH_RATIO_RANGE[0] < stats.r_l < LENGTH_RATIO_RANGE[1]):
        return decide("length-ratio")
    if min(stats.n_t_pre, stats.n_t_post) <= MIN_TOKENS:
        return decide("min-tokens")
    if stats.lcs_chars <= MIN_LCS_CHARS:
        return decide("lcs")
    if stats.jamo_dist >= MAX_JAMO_DIST:
        return decide("jamo-distance")
    if original == corrected:
        return decide("no-edit")
    return decide("pass")


LANG8_RULES = [
    "too-long", "foreign-script", "long-token", "noise-word", "not-a-pair",
    "short-sentence", "token-ratio", "length-ratio", "min-tokens", "lcs",
    "jamo-distance", "no-edit",
]


def _changed_tokens(a_tokens: list[str], b_tokens: list[str]) -> tuple[list[str], list[str]]:
    sm = SequenceMatcher(a=a_tokens, b=b_tokens, autojunk=False)
    changed_a: list[str] = []
    changed_b: list[str] = []
    for op, i1, i2, j1, j2 in sm.get_opcodes():
        if op != "equal":
            changed_a.extend(a_tokens[i1:i2])
            changed_b.extend(b_tokens[j1:j2])
    return changed_a, changed_b


def _is_punct_token(token: str) -> bool:
    return all(unicodedata.category(ch)[0] in ("P", "S") for ch in token)


def _is_numeric_token(token: str) -> bool:
    stripped = token.strip("".join(ch for ch in token if is_punct_char(ch)))
    stripped = stripped or token
    return all(ch.isdigit() or ch in _KOREAN_NUMERAL_CHARS for ch in stripped)


def kor_native_filter(correct: str, transcribed: str,
                      gazetteer: Optional[set] = None) -> FilterDecision:
    """Drop transcription pairs whose differences are not grammatical."""
    if correct == transcribed:
        return FilterDecision(False, "identical")
    changed_a, changed_b = _changed_tokens(correct.split(), transcribed.split())
    changed = changed_a + changed_b
    if changed and all(_is_punct_token(t) for t in changed):
        return FilterDecision(False, "punct-only")
    if changed and all(_is_numeric_token(t) for t in changed):
        return FilterDecision(False, "number-only")
    if gazetteer is not None and changed and all(t in gazetteer for t in changed):
        return FilterDecision(False, "named-entity")
    if len(transcribed) < 0.5 * len(correct):
        return FilterDecision(False, "too-short")
    return FilterDecision(True, "pass")


NATIVE_RULES = ["identical", "punct-only", "number-only", "named-entity", "too-short"]


def dedup_pairs(pairs):
    """Yield pairs with later duplicates removed, first occurrence kept."""
    seen = set()
    for pair in pairs:
        key = (pair[0], pair[1])
        if key not in seen:
            seen.add(key)
            yield pair
