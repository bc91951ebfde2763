"""
Hangul syllable arithmetic and jamo-level distance
==================================================

Every precomposed syllable is a packed triple of letter indices; taking
it apart and putting it back together is pure arithmetic.
"""

from kagaskit import compose_syllable, decompose_syllable, jamo_distance

for ch in "가들왔":
    s = decompose_syllable(ch)
    print(f"{ch} -> ({s.cho_jamo}, {s.jung_jamo}, {s.jong_jamo or '-'})")
    assert compose_syllable(s) == ch

# A one-letter typo costs a third of a character, so near-misses stay
# near: 학교 vs 학꾜 differs in a single initial consonant.
print("d(학교, 학꾜) =", jamo_distance("학교", "학꾜"))

# Whole-character insertions still cost a full unit.
print("d(학교, 학교에) =", jamo_distance("학교", "학교에"))

# That contrast is what lets a corpus filter tell a small grammatical fix
# from a full rewrite.
print("d(춤을 쳐요, 춤을 춰요) =", jamo_distance("춤을 쳐요", "춤을 춰요"))
print("d(춤을 쳐요, 완전 다른 문장) =", jamo_distance("춤을 쳐요", "완전 다른 문장"))
