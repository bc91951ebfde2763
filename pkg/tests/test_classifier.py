import pytest

from kagaskit.alignment import Edit
from kagaskit.classify import (
    ERROR_TYPE_ORDER,
    ErrorType,
    SpellLexicon,
    classify,
    coverage,
    morpheme_diff,
)
from kagaskit.pos import PosGroup, pos_group_of
from helpers import GOLDEN_ROWS


class TestGoldenTable:
    @pytest.mark.parametrize("orig,corr,expected", GOLDEN_ROWS, ids=[r[2] for r in GOLDEN_ROWS])
    def test_row_classifies_to_labeled_type(self, session, orig, corr, expected):
        edits = session.annotate_pair(orig, corr)
        assert [e.error_type for e in edits] == [expected]


class TestCascadeSteps:
    def test_insertion(self, tagger, spell):
        e = Edit(2, 2, 2, 3, [], ["규칙을"])
        assert classify(e, tagger, spell) is ErrorType.INS

    def test_deletion(self, tagger, spell):
        e = Edit(1, 2, 1, 1, ["끝"], [])
        assert classify(e, tagger, spell) is ErrorType.DEL

    def test_provisional_ws_wins(self, tagger, spell):
        e = Edit(0, 1, 0, 2, ["이옷은"], ["이", "옷은"], "WS")
        assert classify(e, tagger, spell) is ErrorType.WS

    def test_provisional_wo_wins(self, tagger, spell):
        e = Edit(1, 3, 1, 3, ["더", "한국어를"], ["한국어를", "더"], "WO")
        assert classify(e, tagger, spell) is ErrorType.WO

    def test_spell_requires_out_then_in_lexicon(self, tagger):
        spell = SpellLexicon(["춰요"])
        e = Edit(3, 4, 3, 4, ["쳐요"], ["춰요"])
        assert classify(e, tagger, spell) is ErrorType.SPELL
        # Original in-lexicon blocks the spell step.
        spell_both = SpellLexicon(["쳐요", "춰요"])
        assert classify(e, tagger, spell_both) is not ErrorType.SPELL

    def test_short_identical_analyses(self, tagger, spell):
        e = Edit(5, 6, 5, 6, ["언어이었어요"], ["언어였어요"])
        assert classify(e, tagger, spell) is ErrorType.SHORT

    def test_punct_only_difference(self, tagger, spell):
        e = Edit(1, 2, 1, 2, ["의"], [","])
        assert classify(e, tagger, spell) is ErrorType.PUNCT
        e2 = Edit(0, 1, 0, 1, ["."], ["!"])
        assert classify(e2, tagger, spell) is ErrorType.PUNCT

    def test_single_group_types(self, tagger, spell):
        cases = [
            (["유학러"], ["유학"], ErrorType.NOUN),
            (["하와이에서"], ["하와이에"], ErrorType.PART),
            (["기다려요"], ["기다렸어요"], ErrorType.END),
            (["나무"], ["너무"], ErrorType.MOD),
            (["쌌어요"], ["썼어요"], ErrorType.VERB),
            (["진한"], ["친한"], ErrorType.ADJ),
        ]
        for o, c, expected in cases:
            e = Edit(0, 1, 0, 1, o, c)
            assert classify(e, tagger, spell) is expected, (o, c)

    def test_conj_verb_plus_ending(self, tagger, spell):
        e = Edit(3, 4, 3, 4, ["잘라에"], ["자르러"])
        assert classify(e, tagger, spell) is ErrorType.CONJ
        e2 = Edit(0, 1, 0, 1, ["싶습니다"], ["싶어합니다"])
        assert classify(e2, tagger, spell) is ErrorType.CONJ

    def test_unknown_words_fall_through_to_unk(self, tagger, spell):
        e = Edit(0, 1, 0, 1, ["쀍쀓"], ["쁿쀌"])
        assert classify(e, tagger, spell) is ErrorType.UNK

    def test_numeral_substitution_is_unk(self, tagger, spell):
        e = Edit(0, 1, 0, 1, ["1993"], ["1994"])
        assert classify(e, tagger, spell) is ErrorType.UNK

    def test_totality_and_determinism(self, session):
        for orig, corr, _ in GOLDEN_ROWS:
            first = [e.error_type for e in session.annotate_pair(orig, corr)]
            second = [e.error_type for e in session.annotate_pair(orig, corr)]
            assert first == second
            assert all(t in ERROR_TYPE_ORDER for t in first)


class TestMorphemeDiff:
    def test_noun_substitution(self, tagger):
        deleted, inserted = morpheme_diff("학교에", "집에", tagger)
        assert [(m.lemma, m.tag) for m in deleted] == [("학교", "NNG")]
        assert [(m.lemma, m.tag) for m in inserted] == [("집", "NNG")]

    def test_particle_addition(self, tagger):
        deleted, inserted = morpheme_diff("학교에", "학교에서", tagger)
        assert all(pos_group_of(m.tag) is PosGroup.PART for m in inserted)
        assert all(pos_group_of(m.tag) is PosGroup.PART for m in deleted)
        assert inserted

    def test_aux_verb_construction_diff_groups(self, tagger):
        deleted, inserted = morpheme_diff("싶습니다", "싶어합니다", tagger)
        groups = {pos_group_of(m.tag) for m in deleted + inserted}
        assert groups == {PosGroup.END, PosGroup.VERB}

    def test_shared_morphemes_excluded(self, tagger):
        deleted, inserted = morpheme_diff("소풍을", "소풍을", tagger)
        assert deleted == [] and inserted == []


class TestCoverage:
    def test_fraction_not_unk(self):
        types = [ErrorType.WS, ErrorType.UNK, ErrorType.NOUN, ErrorType.UNK]
        assert coverage(types) == 0.5
        assert coverage(["WS", "UNK"]) == 0.5
        assert coverage([]) == 0.0
