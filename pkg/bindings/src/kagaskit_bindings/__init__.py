"""In-process bindings over the kagaskit toolkit.

A Session holds the loaded lexicons exactly as the CLI does; its outputs
serialize byte-identically to the CLI's files, so scripts and batch runs
can be mixed freely.  Errors surface as native exceptions
(:class:`UsageError`) instead of exit codes.

    >>> from kagaskit_bindings import annotate_pair
    >>> annotate_pair("이옷은 더러워요.", "이 옷은 더러워요.")
    [((0, 1), 'WS', '이 옷은')]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import kagaskit
import kagaskit.m2 as _m2
from kagaskit.classify import ERROR_TYPE_ORDER

__all__ = [
    "Session",
    "ScoreRecord",
    "UsageError",
    "annotate_pair",
    "score_corpus",
    "merge_morphemes",
]


class UsageError(RuntimeError):
    """Raised when a session is used before init or after close."""


def _pct(x: float) -> str:
    return f"{100.0 * x:.2f}"


@dataclass
class ScoreRecord:
    """The CLI report's fields as a record; to_tsv() is the CLI's bytes."""

    tp: int
    fp: int
    fn: int
    precision: float
    recall: float
    f_half: float
    per_type: dict

    def to_tsv(self) -> str:
        lines = ["type\ttp\tfp\tfn\tP\tR\tF0.5"]
        known = [t for t in ERROR_TYPE_ORDER if t in self.per_type]
        extra = sorted(t for t in self.per_type if t not in ERROR_TYPE_ORDER)
        for t in known + extra:
            c = self.per_type[t]
            if c.tp == 0 and c.fp == 0 and c.fn == 0:
                continue
            lines.append(
                f"{t}\t{c.tp}\t{c.fp}\t{c.fn}"
                f"\t{_pct(c.precision)}\t{_pct(c.recall)}\t{_pct(c.f_half)}"
            )
        lines.append(
            f"OVERALL\t{self.tp}\t{self.fp}\t{self.fn}"
            f"\t{_pct(self.precision)}\t{_pct(self.recall)}\t{_pct(self.f_half)}"
        )
        return "\n".join(lines) + "\n"


class Session:
    """Loaded lexicons and taggers mirroring the CLI run configuration."""

    def __init__(
        self,
        morph_lexicon: Optional[str] = None,
        spell_lexicon: Optional[str] = None,
        noise_words: Optional[str] = None,
        gazetteer: Optional[str] = None,
        tagger_cmd: Optional[str] = None,
    ):
        self._inner = kagaskit.Session(
            morph_lexicon=morph_lexicon,
            spell_lexicon=spell_lexicon,
            noise_words=noise_words,
            gazetteer=gazetteer,
            tagger_cmd=tagger_cmd,
        )

    def _session(self) -> "kagaskit.Session":
        if self._inner is None:
            raise UsageError("session is closed")
        return self._inner

    def close(self):
        if self._inner is not None:
            self._inner.close()
            self._inner = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def annotate_pair(self, original: str, corrected: str):
        """Typed edits for one pair: ((start, end), type label, correction)."""
        session = self._session()
        return [
            ((e.o_start, e.o_end), e.error_type, e.c_str)
            for e in session.annotate_pair(original, corrected)
        ]

    def annotate_to_m2(self, pairs: Sequence[tuple[str, str]]) -> str:
        """Canonical M² text for a pair stream; byte-equal to the CLI file."""
        session = self._session()
        blocks = [
            session.annotate_document(orig, corr).to_block() for orig, corr in pairs
        ]
        return "\n\n".join(blocks) + "\n" if blocks else ""

    def score_corpus(self, sources, references_or_gold, hypotheses=None) -> ScoreRecord:
        """Edit-based scores; gold may be reference sentences or M² text/docs.

        With hypotheses omitted, the sources are scored as system output
        (the self-score convention).
        """
        session = self._session()
        sources = list(sources)
        if isinstance(references_or_gold, str):
            gold = _m2.parse_m2(references_or_gold)
        elif references_or_gold and isinstance(references_or_gold[0], _m2.M2Document):
            gold = list(references_or_gold)
        else:
            refs = list(references_or_gold)
            if len(refs) != len(sources):
                raise UsageError(
                    f"reference count {len(refs)} != source count {len(sources)}"
                )
            pairs = [
                (session.normalize(s), session.normalize(r))
                for s, r in zip(sources, refs)
            ]
            gold = _m2.parse_m2(
                _m2.emit_m2(pairs, session.tagger, session.spell)
            )
        if hypotheses is None:
            hyps = [" ".join(doc.source) for doc in gold]
        else:
            hyps = [session.normalize(h) for h in hypotheses]
        if len(hyps) != len(gold):
            raise UsageError(
                f"hypothesis count {len(hyps)} != gold sentence count {len(gold)}"
            )
        report = _m2.score(hyps, gold, session.tagger, session.spell)
        return ScoreRecord(
            report.tp, report.fp, report.fn,
            report.precision, report.recall, report.f_half,
            report.per_type,
        )

    def merge_morphemes(self, morphs: Sequence[str]) -> str:
        self._session()
        return kagaskit.merge_morphemes(list(morphs))


_default_session: Session | None = None


def _default() -> Session:
    global _default_session
    if _default_session is None:
        _default_session = Session()
    return _default_session


def annotate_pair(original: str, corrected: str):
    return _default().annotate_pair(original, corrected)


def score_corpus(sources, references_or_gold, hypotheses=None) -> ScoreRecord:
    return _default().score_corpus(sources, references_or_gold, hypotheses)


def merge_morphemes(morphs: Sequence[str]) -> str:
    return _default().merge_morphemes(morphs)
