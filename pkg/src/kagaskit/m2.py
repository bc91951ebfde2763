"""M² annotation files and edit-based scoring.

File format, bit-exact::

    S <tok>( <tok>)*
    A <start> <end>|||<TYPE>|||<correction>|||REQUIRED|||-NONE-|||<annotator>

Sentence blocks are separated by one blank line; sentences without edits
carry the noop sentinel ``A -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||0``.

Scoring counts a system edit as a true positive when the best gold
annotator for the sentence has an annotation with the identical span and
correction string; types never affect matching, only the per-type
breakdown.  Zero proposed edits leave precision vacuously at 1, which is
what makes a source-as-hypothesis run score P=1 / R=0 / F0.5=0.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .alignment import align_and_extract
from .classify import ERROR_TYPE_ORDER, classify

NOOP_TYPE = "noop"
GLEU_EPS = 1e-12


class M2ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class M2Annotation:
    start: int
    end: int
    type: str
    correction: str
    annotator: int = 0

    @property
    def is_noop(self) -> bool:
        return self.type == NOOP_TYPE

    def to_line(self) -> str:
        return (
            f"A {self.start} {self.end}|||{self.type}|||{self.correction}"
            f"|||REQUIRED|||-NONE-|||{self.annotator}"
        )


NOOP = M2Annotation(-1, -1, NOOP_TYPE, "-NONE-", 0)


@dataclass
class M2Document:
    source: list[str]
    annotations: list[M2Annotation] = field(default_factory=list)

    def by_annotator(self) -> dict[int, list[M2Annotation]]:
        grouped: dict[int, list[M2Annotation]] = {}
        for ann in self.annotations:
            grouped.setdefault(ann.annotator, []).append(ann)
        for anns in grouped.values():
            anns[:] = [a for a in anns if not a.is_noop]
        return grouped

    def to_block(self) -> str:
        lines = ["S " + " ".join(self.source)]
        lines.extend(a.to_line() for a in self.annotations)
        return "\n".join(lines)


def annotate_tokens(orig_toks: Sequence[str], corr_toks: Sequence[str],
                    tagger=None, spell=None) -> M2Document:
    """Align one tokenized pair and classify its edits into an M² document."""
    edits = align_and_extract(orig_toks, corr_toks, tagger)
    anns = [
        M2Annotation(e.o_start, e.o_end, classify(e, tagger, spell).value, e.c_str)
        for e in edits
    ]
    if not anns:
        anns = [NOOP]
    return M2Document(list(orig_toks), anns)


def emit_m2(pairs: Iterable[tuple[str, str]], tagger=None, spell=None) -> str:
    """Render pre-normalized sentence pairs as M² text."""
    blocks = [
        annotate_tokens(orig.split(), corr.split(), tagger, spell).to_block()
        for orig, corr in pairs
    ]
    if not blocks:
        return ""
    return "\n\n".join(blocks) + "\n"


def parse_m2(text: str) -> list[M2Document]:
    docs: list[M2Document] = []
    current: Optional[M2Document] = None
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip()
        if not line:
            current = None
            continue
        if line.startswith("S ") or line == "S":
            current = M2Document(line[2:].split())
            docs.append(current)
        elif line.startswith("A "):
            if current is None:
                raise M2ParseError("annotation before any source line", lineno)
            fields = line[2:].split("|||")
            if len(fields) != 6:
                raise M2ParseError(f"expected 6 fields, got {len(fields)}", lineno)
            span = fields[0].split()
            if len(span) != 2:
                raise M2ParseError("span must be two indices", lineno)
            try:
                start, end = int(span[0]), int(span[1])
                annotator = int(fields[5])
            except ValueError:
                raise M2ParseError("non-integer span or annotator id", lineno) from None
            current.annotations.append(
                M2Annotation(start, end, fields[1], fields[2], annotator)
            )
        else:
            raise M2ParseError(f"unrecognized line {line!r}", lineno)
    return docs


def f_score(p: float, r: float, beta: float = 0.5) -> float:
    if p + r == 0:
        return 0.0
    b2 = beta * beta
    return (1 + b2) * p * r / (b2 * p + r)


@dataclass
class TypeCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0

    @property
    def precision(self) -> float:
        return self.tp / (self.tp + self.fp) if self.tp + self.fp else 1.0

    @property
    def recall(self) -> float:
        return self.tp / (self.tp + self.fn) if self.tp + self.fn else 0.0

    @property
    def f_half(self) -> float:
        return f_score(self.precision, self.recall)


@dataclass
class ScoreReport:
    tp: int
    fp: int
    fn: int
    precision: float
    recall: float
    f_half: float
    per_type: dict[str, TypeCounts]


def _sentence_counts(sys_edits, gold_edits) -> tuple[int, int, int]:
    gold_keys = Counter((a.start, a.end, a.correction) for a in gold_edits)
    tp = 0
    for e in sys_edits:
        key = (e[0], e[1], e[2])
        if gold_keys[key] > 0:
            gold_keys[key] -= 1
            tp += 1
    return tp, len(sys_edits) - tp, len(gold_edits) - tp


def score(hypotheses: Sequence[str], gold: Sequence[M2Document],
          tagger=None, spell=None) -> ScoreReport:
    """Score hypothesis sentences against gold M² documents."""
    if len(hypotheses) != len(gold):
        raise ValueError(
            f"hypothesis count {len(hypotheses)} != gold document count {len(gold)}"
        )
    total = TypeCounts()
    per_type: dict[str, TypeCounts] = {t: TypeCounts() for t in ERROR_TYPE_ORDER}

    for hyp, doc in zip(hypotheses, gold):
        hyp_toks = hyp.split() if isinstance(hyp, str) else list(hyp)
        edits = align_and_extract(doc.source, hyp_toks, tagger)
        sys_edits = [
            (e.o_start, e.o_end, e.c_str, classify(e, tagger, spell).value)
            for e in edits
        ]
        grouped = doc.by_annotator() or {0: []}
        best = None
        for annot_id in sorted(grouped):
            tp, fp, fn = _sentence_counts(sys_edits, grouped[annot_id])
            p = tp / (tp + fp) if tp + fp else 1.0
            r = tp / (tp + fn) if tp + fn else 0.0
            f = f_score(p, r)
            if best is None or f > best[0]:
                best = (f, annot_id, tp, fp, fn)
        _, annot_id, tp, fp, fn = best
        total.tp += tp
        total.fp += fp
        total.fn += fn

        gold_edits = grouped[annot_id]
        gold_keys = Counter((a.start, a.end, a.correction) for a in gold_edits)
        matched = Counter()
        for e in sys_edits:
            key = (e[0], e[1], e[2])
            if matched[key] < gold_keys[key]:
                matched[key] += 1
            else:
                per_type.setdefault(e[3], TypeCounts()).fp += 1
        claimed = Counter()
        for a in gold_edits:
            key = (a.start, a.end, a.correction)
            bucket = per_type.setdefault(a.type, TypeCounts())
            if claimed[key] < matched[key]:
                claimed[key] += 1
                bucket.tp += 1
            else:
                bucket.fn += 1

    return ScoreReport(
        total.tp, total.fp, total.fn,
        total.precision, total.recall, total.f_half,
        per_type,
    )


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def _as_tokens(sentence) -> list[str]:
    return sentence.split() if isinstance(sentence, str) else list(sentence)


def gleu(sources: Sequence, references: Sequence, hypotheses: Sequence,
         max_n: int = 4) -> float:
    """GLEU for correction quality: n-gram precision that additionally
    penalizes n-grams kept from the source but absent from the reference.

    Deterministic single-pass formulation; returns a score in [0, 1].
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if not (len(sources) == len(references) == len(hypotheses)):
        raise ValueError("sources, references, hypotheses must align")
    if len(sources) == 0:
        raise ValueError("empty corpus")

    numer = [0] * max_n
    denom = [0] * max_n
    hyp_len = 0
    ref_len = 0
    for src, ref, hyp in zip(sources, references, hypotheses):
        s, r, h = _as_tokens(src), _as_tokens(ref), _as_tokens(hyp)
        hyp_len += len(h)
        ref_len += len(r)
        for n in range(1, max_n + 1):
            hc, rc, sc = _ngrams(h, n), _ngrams(r, n), _ngrams(s, n)
            matched = sum(min(c, rc[g]) for g, c in hc.items())
            penalty = sum(min(c, sc[g]) for g, c in hc.items() if rc[g] == 0)
            numer[n - 1] += max(0, matched - penalty)
            denom[n - 1] += sum(hc.values())

    # Orders with no hypothesis n-grams at all (corpus shorter than n)
    # drop out of the geometric mean instead of zeroing it.
    log_sum = 0.0
    orders = 0
    for n in range(max_n):
        if denom[n] == 0:
            continue
        log_sum += math.log(max(numer[n] / denom[n], GLEU_EPS))
        orders += 1
    if hyp_len == 0 or orders == 0:
        return 0.0
    bp = 1.0 if hyp_len >= ref_len else math.exp(1.0 - ref_len / hyp_len)
    return bp * math.exp(log_sum / orders)
