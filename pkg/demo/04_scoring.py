"""
Scoring correction systems: edit-based P/R/F0.5 and GLEU
========================================================

Gold annotations come from annotating (source, reference) pairs; a
system output is then matched edit by edit.  Evaluating the unchanged
source as if it were system output ("self-score") characterizes corpus
edit density: precision is vacuously 1, recall 0.
"""

from kagaskit import Session, emit_m2, gleu, parse_m2, score

session = Session()

sources = [
    "어제 학교에 사람 많이 갔다 그래서 놀랐다",
    "이옷은 너무 더러워요 빨리 빨아야 해요 .",
]
references = [
    "어제 집에 사람 많이 갔다 그래서 놀랐다",
    "이 옷은 너무 더러워요 빨리 빨아야 해요 .",
]
gold = parse_m2(emit_m2(list(zip(sources, references)), session.tagger, session.spell))

# A system that fixes one sentence and invents an extra change.
hypotheses = [
    "어제 집에 사촌 많이 갔다 그래서 놀랐다",
    "이옷은 너무 더러워요 빨리 빨아야 해요 .",
]

report = score(hypotheses, gold, session.tagger, session.spell)
print(f"P={report.precision:.2f} R={report.recall:.2f} F0.5={report.f_half:.2f}")
for name, counts in report.per_type.items():
    if counts.tp or counts.fp or counts.fn:
        print(f"  {name}: tp={counts.tp} fp={counts.fp} fn={counts.fn}")

self_report = score(sources, gold, session.tagger, session.spell)
print(f"self-score: P={self_report.precision:.0f} R={self_report.recall:.0f}")

# GLEU rewards reference n-grams and punishes n-grams kept from the
# source that the reference removed.
print("GLEU(hyp) =", round(100 * gleu(sources, references, hypotheses), 2))
print("GLEU(ref) =", round(100 * gleu(sources, references, references), 2))
print("GLEU(src) =", round(100 * gleu(sources, references, sources), 2))
