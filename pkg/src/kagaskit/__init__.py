"""Toolkit for aligning, typing, and scoring Korean grammatical corrections."""

from .alignment import (
    Edit,
    Token,
    align,
    align_and_extract,
    apply_edits,
    extract_edits,
    substitution_cost,
    tokenize,
)
from .classify import ErrorType, SpellLexicon, classify, coverage, morpheme_diff
from .hangul import (
    Syllable,
    compose_syllable,
    decompose_syllable,
    from_jamo_seq,
    jamo_distance,
    to_jamo_seq,
)
from .ingest import parse_learner_xml, reconstruct_pair
from .m2 import (
    M2Annotation,
    M2Document,
    ScoreReport,
    annotate_tokens,
    emit_m2,
    gleu,
    parse_m2,
    score,
)
from .orthography import apply_rules_once, merge_morphemes
from .pos import (
    ExternalTagger,
    LexiconTagger,
    PosGroup,
    TaggedMorpheme,
    is_content_tag,
    pos_groups,
    tag_word,
)
from .preprocess import (
    FilterDecision,
    PairStats,
    kor_native_filter,
    lang8_filter,
    normalize_punct_spacing,
    squash_repeats,
    strip_brackets,
)
from .session import Session

__version__ = "0.1.0"
