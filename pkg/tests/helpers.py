"""Shared fixtures-in-code for the test suite: golden rows, oracles, corpora."""

import random
from collections import Counter

# The fourteen reference classifications: (original, corrected, expected type).
GOLDEN_ROWS = [
    ("고등학교 때 어긴 경험", "고등학교 때 규칙을 어긴 경험", "INS"),
    ("전쟁 끝 직후 장군들은 사형을 선고 받았다.", "전쟁 직후 장군들은 사형을 선고 받았다.", "DEL"),
    ("이옷은 더러워요.", "이 옷은 더러워요.", "WS"),
    ("저는 더 한국어를 배우고 싶어요.", "저는 한국어를 더 배우고 싶어요.", "WO"),
    ("파티에서 우리는 춤을 쳐요.", "파티에서 우리는 춤을 춰요.", "SPELL"),
    ("1993년 의 겨울의 일이였다.", "1993년 , 겨울의 일이였다.", "PUNCT"),
    ("한국어는 저한테 너무 어려운 언어이었어요.", "한국어는 저한테 너무 어려운 언어였어요.", "SHORT"),
    ("어제 친구에게 편지를 쌌어요.", "어제 친구에게 편지를 썼어요.", "VERB"),
    ("진한 친구", "친한 친구", "ADJ"),
    ("나중에 기회가 있을 때 한국에 유학러 가고 싶습니다.", "나중에 기회가 있을 때 한국에 유학 가고 싶습니다.", "NOUN"),
    ("하와이에서 사는 우리 사촌", "하와이에 사는 우리 사촌", "PART"),
    ("오래 기다려요.", "오래 기다렸어요.", "END"),
    ("점심이 나무 작은 나머지 배고팠어요.", "점심이 너무 작은 나머지 배고팠어요.", "MOD"),
    ("오늘은 머리를 잘라에 갔다.", "오늘은 머리를 자르러 갔다.", "CONJ"),
]

_SYLLABLES = [
    "가", "나", "다", "라", "마", "바", "사", "자", "하",
    "학", "교", "집", "물", "밥", "들", "운", "동", "책",
]


def random_hangul_word(rng: random.Random, max_len: int = 3) -> str:
    return "".join(rng.choice(_SYLLABLES) for _ in range(rng.randint(1, max_len)))


def random_sentence_pair(rng: random.Random, max_tokens: int = 6):
    """A random token pair where the corrected side perturbs the original."""
    orig = [random_hangul_word(rng) for _ in range(rng.randint(0, max_tokens))]
    corr = list(orig)
    for _ in range(rng.randint(0, 3)):
        op = rng.choice(["ins", "del", "sub", "swap", "noop"])
        if op == "ins":
            corr.insert(rng.randint(0, len(corr)), random_hangul_word(rng))
        elif op == "del" and corr:
            corr.pop(rng.randrange(len(corr)))
        elif op == "sub" and corr:
            corr[rng.randrange(len(corr))] = random_hangul_word(rng)
        elif op == "swap" and len(corr) > 1:
            i = rng.randrange(len(corr) - 1)
            corr[i], corr[i + 1] = corr[i + 1], corr[i]
    return orig, corr[:max_tokens]


def synthetic_corpus(n_pairs: int, seed: int = 20240) -> list[tuple[str, str]]:
    """Deterministic pair corpus for CLI and determinism tests."""
    rng = random.Random(seed)
    pairs = []
    for _ in range(n_pairs):
        orig, corr = random_sentence_pair(rng, max_tokens=8)
        if not orig:
            orig = [random_hangul_word(rng)]
        if not corr:
            corr = list(orig)
        pairs.append((" ".join(orig), " ".join(corr)))
    return pairs


def brute_force_alignment_cost(orig, corr, sub_cost) -> float:
    """Exhaustive recursive search over the alignment op space.

    Independent of the DP: match when equal, substitute at sub_cost(a, b),
    insert/delete at 1, adjacent equal-multiset block transpose of size
    2..3 at size-1.
    """

    def rec(i: int, j: int) -> float:
        if i == 0 and j == 0:
            return 0.0
        best = float("inf")
        if i > 0 and j > 0:
            if orig[i - 1] == corr[j - 1]:
                best = min(best, rec(i - 1, j - 1))
            else:
                best = min(best, rec(i - 1, j - 1) + sub_cost(orig[i - 1], corr[j - 1]))
        if i > 0:
            best = min(best, rec(i - 1, j) + 1.0)
        if j > 0:
            best = min(best, rec(i, j - 1) + 1.0)
        for k in (2, 3):
            if i >= k and j >= k:
                blk_o, blk_c = list(orig[i - k:i]), list(corr[j - k:j])
                if blk_o != blk_c and Counter(blk_o) == Counter(blk_c):
                    best = min(best, rec(i - k, j - k) + k - 1)
        return best

    return rec(len(orig), len(corr))


def char_levenshtein(a: str, b: str) -> int:
    prev = list(range(len(b) + 1))
    for i in range(1, len(a) + 1):
        cur = [i] + [0] * len(b)
        for j in range(1, len(b) + 1):
            cur[j] = min(
                prev[j - 1] + (a[i - 1] != b[j - 1]),
                prev[j] + 1,
                cur[j - 1] + 1,
            )
        prev = cur
    return prev[-1]


# A clean base pair that satisfies every Lang-8 rule.
LANG8_CLEAN = (
    "저는 오늘 학교에 가서 친구를 만나고 공부를 했어요",
    "저는 오늘 학교에 가서 친구를 만나고 공부를 했습니다",
)


def lang8_fixture_pairs() -> list[tuple[str, str, str]]:
    """(original, corrected, expected rule) — one violation per rule, one keep.

    Each violating pair passes every rule before its target, so the
    first-failing-rule order is pinned by construction.
    """
    base_o, base_c = LANG8_CLEAN
    jamo_ten_o = "가람 나무 다리 마음 바다 사랑 하늘 노래"
    jamo_ten_c = "xx xx xx xx xx 사랑 하늘 노래"
    return [
        (" ".join(["가"] * 101), " ".join(["가"] * 100 + ["나"]), "too-long"),
        (base_o + " こんにちは", base_c, "foreign-script"),
        (base_o + " " + "가" * 21, base_c, "long-token"),
        (base_o + " good", base_c, "noise-word"),
        (base_o, "", "not-a-pair"),
        (base_o, "가", "short-sentence"),
        (base_o, "저는 오늘", "token-ratio"),  # r_t = 2/8 = 0.25, boundary discard
        (base_o, "저는요 오늘날 학교에서 가서요 친구들을 만나고요 공부들을 했었어요", "length-ratio"),
        ("저는 오늘 학교에 친구를 만났어요", "저는 오늘 학교에 친구를 만났습니다", "min-tokens"),
        ("가나 다라 마바 사자 하카 타파", "거너 더러 머버 서저 허커 터퍼", "lcs"),
        (jamo_ten_o, jamo_ten_c, "jamo-distance"),  # distance exactly 10
        (base_o, base_o, "no-edit"),
        (base_o, base_c, "pass"),
    ]


NIKL_SAMPLE_XML = """<corpus>
  <text>
    <s>오후 5시 반에 집에 들었어요.</s>
    <LearnerErrorAnnotations>
      <word>
        <w>들었어요.</w>
        <morph from="157" subsequence="1" to="162" wordStart="Start">
          <Proofread pos="VV">들어오</Proofread>
          <ErrorArea type="CVV" />
          <ErrorPattern type="REP" />
        </morph>
        <morph from="157" subsequence="2" to="162" wordStart="None">
          <Proofread pos="EP">았</Proofread>
        </morph>
        <morph from="157" subsequence="3" to="162" wordStart="None">
          <Preserved>어요</Preserved>
        </morph>
        <morph from="157" subsequence="4" to="162" wordStart="None">
          <Preserved>.</Preserved>
        </morph>
      </word>
    </LearnerErrorAnnotations>
  </text>
</corpus>
"""
