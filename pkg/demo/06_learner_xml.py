"""
From morpheme-level XML annotations to sentence pairs
=====================================================

Learner-corpus files annotate corrections per morpheme.  Parsing plus
orthographic merging turns them into word-level parallel sentences.
"""

from kagaskit import parse_learner_xml, reconstruct_pair

XML = """<corpus>
  <text>
    <s>오후 5시 반에 집에 들었어요.</s>
    <LearnerErrorAnnotations>
      <word>
        <w>들었어요.</w>
        <morph subsequence="1" wordStart="Start">
          <Proofread pos="VV">들어오</Proofread>
          <ErrorPattern type="REP" />
        </morph>
        <morph subsequence="2"><Proofread pos="EP">았</Proofread></morph>
        <morph subsequence="3"><Preserved>어요</Preserved></morph>
        <morph subsequence="4"><Preserved>.</Preserved></morph>
      </word>
    </LearnerErrorAnnotations>
  </text>
</corpus>
"""

for sentence in parse_learner_xml(XML):
    result = reconstruct_pair(sentence)
    if result.kept:
        orig, corr = result.pair
        print("original :", orig)
        print("corrected:", corr)
    else:
        print("discarded:", result.reason)
