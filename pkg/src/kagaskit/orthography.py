"""Korean orthography contraction rules for joining morpheme surfaces.

Covers the four guideline sections needed to rebuild surface words from
morpheme-level annotations:

* R18-6  stem-final jongseong ㅂ weakens to a vowel before -아/-어
         (덥+어 -> 더워, 돕+아 -> 도와)
* R34    open stem in ㅏ/ㅓ absorbs a harmonizing -아/-어 (가+았 -> 갔)
* R35    open stem in ㅗ/ㅜ contracts with -아/-어 to ㅘ/ㅝ (오+았 -> 왔)
* R36    open stem in ㅣ plus -어 contracts to ㅕ (이+었 -> 였)

Anything outside these patterns is left as plain concatenation; the other
guideline sections are deliberately not modeled.
"""

from __future__ import annotations

from .hangul import (
    JamoSequence,
    Syllable,
    _CHO_INDEX,
    _JONG_INDEX,
    _JUNG_INDEX,
    from_jamo_seq,
    to_jamo_seq,
)

_IEUNG = _CHO_INDEX['ㅇ']
_A = _JUNG_INDEX['ㅏ']
_EO = _JUNG_INDEX['ㅓ']
_O = _JUNG_INDEX['ㅗ']
_U = _JUNG_INDEX['ㅜ']
_I = _JUNG_INDEX['ㅣ']
_WA = _JUNG_INDEX['ㅘ']
_WEO = _JUNG_INDEX['ㅝ']
_YEO = _JUNG_INDEX['ㅕ']
_JONG_B = _JONG_INDEX['ㅂ']

# Rule ids in intra-pass precedence order: the irregular-stem transform has
# to run before plain vowel harmony or R34/R35 would consume its input.
RULE_ORDER = ("R18-6", "R36", "R35", "R34")

RULE_DESCRIPTIONS = {
    "R18-6": "stem-final ㅂ before -아/-어 weakens and contracts to ㅘ/ㅝ",
    "R34": "open ㅏ/ㅓ stem absorbs a harmonizing -아/-어 syllable",
    "R35": "open ㅗ/ㅜ stem contracts with -아/-어 to ㅘ/ㅝ",
    "R36": "open ㅣ stem contracts with -어 to ㅕ",
}


def _pair(left, right, rule: str):
    """Apply one rule to two adjacent syllables; None when not applicable."""
    if not isinstance(left, Syllable) or not isinstance(right, Syllable):
        return None
    if right.cho != _IEUNG:
        return None

    if rule == "R18-6":
        if left.jong == _JONG_B and right.jung in (_A, _EO):
            glide = _WA if right.jung == _A else _WEO
            return [
                Syllable(left.cho, left.jung, 0),
                Syllable(_IEUNG, glide, right.jong),
            ]
        return None

    # The remaining rules require an open (no jongseong) left syllable.
    if left.jong != 0:
        return None

    if rule == "R36" and left.jung == _I and right.jung == _EO:
        return [Syllable(left.cho, _YEO, right.jong)]
    if rule == "R35":
        if left.jung == _O and right.jung == _A:
            return [Syllable(left.cho, _WA, right.jong)]
        if left.jung == _U and right.jung == _EO:
            return [Syllable(left.cho, _WEO, right.jong)]
        return None
    if rule == "R34" and left.jung == right.jung and left.jung in (_A, _EO):
        return [Syllable(left.cho, left.jung, right.jong)]
    return None


def apply_rules_once(seq: JamoSequence) -> tuple[JamoSequence, list[str]]:
    """One left-to-right pass; at each position the first applicable rule fires."""
    out: JamoSequence = []
    fired: list[str] = []
    i = 0
    while i < len(seq):
        if i + 1 < len(seq):
            for rule in RULE_ORDER:
                replaced = _pair(seq[i], seq[i + 1], rule)
                if replaced is not None:
                    out.extend(replaced)
                    fired.append(rule)
                    i += 2
                    break
            else:
                out.append(seq[i])
                i += 1
        else:
            out.append(seq[i])
            i += 1
    return out, fired


def merge_morphemes(morphs: list[str]) -> str:
    """Concatenate morpheme surfaces and contract to the written word form.

    Rules are re-applied until a fixpoint; the pass count is bounded by the
    syllable count, so exceeding it means the rule set broke monotonicity.
    """
    if not morphs:
        raise ValueError("merge_morphemes: empty morpheme list")
    seq = to_jamo_seq(''.join(morphs))
    max_passes = len(seq) + 1
    for _ in range(max_passes):
        seq, fired = apply_rules_once(seq)
        if not fired:
            return from_jamo_seq(seq)
    raise RuntimeError("merge_morphemes: contraction did not reach a fixpoint")
