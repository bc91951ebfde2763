from fractions import Fraction

import pytest

from kagaskit.hangul import jamo_distance
from kagaskit.preprocess import (
    LANG8_RULES,
    FilterDecision,
    dedup_pairs,
    kor_native_filter,
    lang8_filter,
    lcs_chars,
    normalize_punct_spacing,
    pair_stats,
    squash_repeats,
    strip_brackets,
)
from helpers import LANG8_CLEAN, lang8_fixture_pairs


class TestNormalizePunctSpacing:
    def test_period_and_bang(self):
        assert normalize_punct_spacing("갔어.") == "갔어 ."
        assert normalize_punct_spacing("갔어!") == "갔어 !"

    def test_idempotent(self):
        for text in ["갔어 .", "갔어.", "1993년, 겨울", "이게 뭔가요 왜 안돼요 ? ."]:
            once = normalize_punct_spacing(text)
            assert normalize_punct_spacing(once) == once

    def test_each_punct_gets_own_token(self):
        assert normalize_punct_spacing("왜요?!") == "왜요 ? !"
        assert normalize_punct_spacing("(좋아)") == "( 좋아 )"

    def test_interior_position(self):
        assert normalize_punct_spacing("1993년,겨울") == "1993년 , 겨울"


class TestSquashRepeats:
    def test_lang8_worked_example(self):
        assert squash_repeats("안녕 홍대    !!!!!!~~~????") == "안녕 홍대 !~?"

    def test_no_listed_char_repeated(self):
        assert squash_repeats("abc") == "abc"

    def test_hangul_filler_letters(self):
        assert squash_repeats("ㅋㅋㅋ좋아ㅠㅠ") == "ㅋ좋아ㅠ"

    def test_idempotent(self):
        for text in ["안녕 홍대    !!!!!!~~~????", "ㅋㅋㅋ좋아ㅠㅠ", "abc"]:
            once = squash_repeats(text)
            assert squash_repeats(once) == once


class TestStripBrackets:
    def test_parenthesized_aside(self):
        assert strip_brackets("좋아요 (주석) 진짜") == "좋아요  진짜"

    def test_no_brackets(self):
        assert strip_brackets("좋아요") == "좋아요"

    def test_multiple_bracket_kinds(self):
        assert strip_brackets("a [b] c <d>") == "a  c "

    def test_nested(self):
        assert strip_brackets("a (b (c) d) e") == "a  e"

    def test_unbalanced_untouched(self):
        assert strip_brackets("a (b c") == "a (b c"
        assert strip_brackets("a ] b") == "a ] b"

    def test_idempotent(self):
        for text in ["좋아요 (주석) 진짜", "a [b] c <d>", "a (b c"]:
            once = strip_brackets(text)
            assert strip_brackets(once) == once


class TestPairStats:
    def test_token_ratio_invariant(self):
        stats = pair_stats("가 나 다 라", "가 나")
        assert stats.n_t_pre == 4
        assert stats.n_t_post == 2
        assert stats.r_t == pytest.approx(2 / 4)

    def test_lcs_is_subsequence_length(self):
        assert lcs_chars("abcde", "ace") == 3
        assert lcs_chars("가나다", "나다라") == 2
        assert lcs_chars("", "abc") == 0


class TestLang8Filter:
    def test_each_rule_fires_exactly_once(self):
        fired = []
        for orig, corr, expected in lang8_fixture_pairs():
            decision, _ = lang8_filter(orig, corr)
            assert decision.rule == expected, (orig[:30], decision.rule, expected)
            fired.append(decision.rule)
        discards = [r for r in fired if r != "pass"]
        assert sorted(discards) == sorted(LANG8_RULES)
        assert len(discards) == 12
        assert fired.count("pass") == 1

    def test_clean_pair_kept_with_stats(self):
        decision, stats = lang8_filter(*LANG8_CLEAN)
        assert decision == FilterDecision(True, "pass")
        assert stats.n_t_pre == 8 and stats.n_t_post == 8
        assert 0.25 < stats.r_t < 4
        assert 0.5 < stats.r_l < 1.25
        assert stats.lcs_chars > 10
        assert stats.jamo_dist < 10

    def test_token_ratio_boundary_discards_at_quarter(self):
        decision, stats = lang8_filter(LANG8_CLEAN[0], "저는 오늘")
        assert stats.r_t == pytest.approx(0.25)
        assert decision.rule == "token-ratio"

    def test_token_ratio_passes_just_above_quarter(self):
        # r_t = 13/50 = 0.26; the pair later fails on jamo distance, which
        # proves the ratio rule itself let it through.
        orig = " ".join(["가"] * 50)
        corr = " ".join(["가나다라마바사"] * 13)
        decision, stats = lang8_filter(orig, corr)
        assert stats.r_t == pytest.approx(0.26)
        assert decision.rule == "jamo-distance"

    def test_jamo_boundary_ten_discards(self):
        orig = "가람 나무 다리 마음 바다 사랑 하늘 노래"
        corr = "xx xx xx xx xx 사랑 하늘 노래"
        assert jamo_distance(orig, corr) == 10
        decision, stats = lang8_filter(orig, corr)
        assert stats.jamo_dist == 10
        assert decision.rule == "jamo-distance"

    def test_jamo_just_under_ten_keeps(self):
        orig = "가람 나무 다리 마음 바다 사랑 하늘 노래"
        # Nine whole-character changes plus one two-slot syllable change.
        corr = "xx xx xx xx x다 져랑 하늘 노래"
        assert jamo_distance(orig, corr) == Fraction(29, 3)
        decision, stats = lang8_filter(orig, corr)
        assert stats.jamo_dist == Fraction(29, 3)
        assert decision == FilterDecision(True, "pass")

    def test_first_failing_rule_reported(self):
        # Violates both the noise rule and the no-edit rule; noise comes first.
        text = LANG8_CLEAN[0] + " good"
        decision, _ = lang8_filter(text, text)
        assert decision.rule == "noise-word"

    def test_custom_noise_words(self):
        decision, _ = lang8_filter(
            LANG8_CLEAN[0] + " spam", LANG8_CLEAN[1], noise_words=["spam"]
        )
        assert decision.rule == "noise-word"

    def test_decision_invariant(self):
        with pytest.raises(ValueError):
            FilterDecision(True, "no-edit")


class TestKorNativeFilter:
    def test_identical_discarded(self):
        assert kor_native_filter("같은 문장 입니다", "같은 문장 입니다").rule == "identical"

    def test_punct_only_diff_discarded(self):
        d = kor_native_filter("오늘 날씨 좋다 .", "오늘 날씨 좋다 !")
        assert d.rule == "punct-only"

    def test_number_representation_discarded(self):
        d = kor_native_filter("사과 1 개 주세요", "사과 일 개 주세요")
        assert d.rule == "number-only"

    def test_named_entity_with_gazetteer(self):
        d = kor_native_filter("서울 에 갔다", "한양 에 갔다", gazetteer={"서울", "한양"})
        assert d.rule == "named-entity"

    def test_named_entity_skipped_without_gazetteer(self):
        d = kor_native_filter("서울 에 갔다", "한양 에 갔다")
        assert d.keep

    def test_truncated_transcription_discarded(self):
        d = kor_native_filter("아주 길고 정성스러운 올바른 문장 입니다", "아주 짧다")
        assert d.rule == "too-short"

    def test_real_error_kept(self):
        d = kor_native_filter("이 옷은 더러워요 .", "이옷은 더러워요 .")
        assert d == FilterDecision(True, "pass")


class TestDedup:
    def test_first_occurrence_kept(self):
        pairs = [("가", "나"), ("다", "라"), ("가", "나"), ("가", "마")]
        assert list(dedup_pairs(pairs)) == [("가", "나"), ("다", "라"), ("가", "마")]
