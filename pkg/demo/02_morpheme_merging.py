"""
Rebuilding surface words from morpheme annotations
==================================================

Morpheme-level corrections cannot simply be concatenated: Korean
orthography contracts adjacent vowels.  merge_morphemes applies the four
contraction rules to a fixpoint.
"""

from kagaskit import merge_morphemes

# The classic learner-corpus case: 들어오 + 았 + 어요 must contract,
# because 오 + 았 harmonizes into 왔.
print(merge_morphemes(["들어오", "았", "어요", "."]))

# Same-vowel absorption, copula contraction, and the ㅂ-irregular stems:
print(merge_morphemes(["가", "았"]))        # 갔
print(merge_morphemes(["언어이", "었", "어요"]))  # 언어였어요
print(merge_morphemes(["더럽", "어요"]))      # 더러워요
print(merge_morphemes(["돕", "아"]))        # 도와

# When no rule pattern occurs the result is plain concatenation.
print(merge_morphemes(["학교", "에"]))       # 학교에
