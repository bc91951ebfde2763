"""
Aligning sentence pairs and typing their edits
==============================================

A Session loads the bundled lexicons once, then annotate_pair runs the
whole pipeline: punctuation normalization, token alignment, WS/WO
merging, and the error-type cascade.
"""

from kagaskit import Session, emit_m2

session = Session()

pairs = [
    ("이옷은 더러워요.", "이 옷은 더러워요."),           # spacing
    ("저는 더 한국어를 배우고 싶어요.", "저는 한국어를 더 배우고 싶어요."),  # order
    ("하와이에서 사는 우리 사촌", "하와이에 사는 우리 사촌"),   # particle
    ("어제 친구에게 편지를 쌌어요.", "어제 친구에게 편지를 썼어요."),  # verb
]

for orig, corr in pairs:
    for edit in session.annotate_pair(orig, corr):
        print(f"{edit.error_type:6s} {edit.o_str!r} -> {edit.c_str!r}")

# The same pipeline serializes to the M2 interchange format.
normalized = [(session.normalize(o), session.normalize(c)) for o, c in pairs]
print()
print(emit_m2(normalized, session.tagger, session.spell))
