"""
Cleaning noisy parallel corpora
===============================

The Lang-8 style filter applies its rules in a fixed order and names the
first one that fires, so every discard is explainable.  The native
transcription filter drops pairs whose differences carry no grammatical
signal.
"""

from kagaskit import lang8_filter, kor_native_filter, squash_repeats, strip_brackets

# Social-platform text first gets mechanical cleanup.
raw = "안녕 홍대    !!!!!!~~~???? (이거 주석임)"
print(repr(squash_repeats(strip_brackets(raw))))

candidates = [
    ("저는 오늘 학교에 가서 친구를 만나고 공부를 했어요",
     "저는 오늘 학교에 가서 친구를 만나고 공부를 했습니다"),
    ("저는 오늘 학교에 가서 친구를 만나고 공부를 했어요",
     "저는 오늘"),                       # truncated reply, not a correction
    ("좋아요 good 진짜 완전 그래요 맞아요", "좋아요 진짜 완전 그래요 맞아요"),
]
for orig, corr in candidates:
    decision, stats = lang8_filter(orig, corr)
    verdict = "keep" if decision.keep else f"discard[{decision.rule}]"
    print(f"{verdict:24s} r_t={stats.r_t:.2f} jamo={float(stats.jamo_dist):.2f}")

# Dictation pairs: a changed punctuation mark or numeral spelling is not
# a grammar error.
print(kor_native_filter("오늘 날씨 좋다 .", "오늘 날씨 좋다 !"))
print(kor_native_filter("사과 1 개 주세요", "사과 일 개 주세요"))
print(kor_native_filter("이 옷은 더러워요 .", "이옷은 더러워요 ."))
