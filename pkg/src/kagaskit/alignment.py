"""Token-level sentence alignment and edit extraction.

A Damerau-Levenshtein dynamic program aligns the original and corrected
token sequences.  Substitutions are priced with linguistic affinity (POS
group overlap, shared lemma, jamo distance) so related word forms attract
each other; adjacent blocks of up to three tokens with equal multisets may
swap as a single transposition.  Non-match operations become one edit each
(all-split), then merging passes fold adjacent edits into word-spacing
(WS) and word-order (WO) candidates.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from .hangul import jamo_distance
from .pos import pos_group_of, tag_word

MAX_TRANSPOSE = 3
INDEL_COST = 1.0

# Tie-break preference for equal-cost paths (lower wins).
_OP_RANK = {"M": 0, "S": 1, "D": 2, "I": 3}


class Token(NamedTuple):
    surface: str
    index: int


def tokenize(sentence: str) -> list[Token]:
    return [Token(s, i) for i, s in enumerate(sentence.split())]


@dataclass(frozen=True)
class AlignOp:
    """One alignment step over half-open token ranges of both sides."""

    kind: str  # "M" match, "S" substitute, "D" delete, "I" insert, "T" transpose
    o_start: int
    o_end: int
    c_start: int
    c_end: int


@dataclass
class Edit:
    o_start: int
    o_end: int
    c_start: int
    c_end: int
    o_toks: list[str] = field(default_factory=list)
    c_toks: list[str] = field(default_factory=list)
    error_type: Optional[str] = None

    def __post_init__(self):
        if self.o_start == self.o_end and self.c_start == self.c_end:
            raise ValueError("an edit must change at least one side")

    @property
    def o_str(self) -> str:
        return " ".join(self.o_toks)

    @property
    def c_str(self) -> str:
        return " ".join(self.c_toks)


class _TokenInfo(NamedTuple):
    groups: frozenset
    lemmas: frozenset


def _token_info(surface: str, tagger) -> _TokenInfo:
    morphs = tag_word(surface, tagger)
    return _TokenInfo(
        frozenset(pos_group_of(m.tag) for m in morphs),
        frozenset(m.lemma for m in morphs),
    )


def _sub_cost(a: str, b: str, ia: _TokenInfo, ib: _TokenInfo) -> float:
    if a == b:
        return 0.0
    if ia.groups == ib.groups:
        pos_cost = 0.0
    elif ia.groups & ib.groups:
        pos_cost = 0.25
    else:
        pos_cost = 0.5
    lemma_cost = 0.0 if ia.lemmas & ib.lemmas else 0.5
    jamo_cost = min(1.0, float(jamo_distance(a, b)) / max(len(a), len(b)))
    return pos_cost + lemma_cost + jamo_cost


def substitution_cost(a: str, b: str, tagger=None) -> float:
    """Linguistic substitution cost between two token surfaces."""
    return _sub_cost(a, b, _token_info(a, tagger), _token_info(b, tagger))


def align(orig: Sequence[str], corr: Sequence[str], tagger=None) -> list[AlignOp]:
    """Minimal-cost alignment; deterministic tie-breaking, leftmost paths."""
    n, m = len(orig), len(corr)
    infos_o = [_token_info(t, tagger) for t in orig]
    infos_c = [_token_info(t, tagger) for t in corr]

    # cell: (cost, op_code) where op_code is "M"/"S"/"D"/"I" or "T<k>"
    cost = [[0.0] * (m + 1) for _ in range(n + 1)]
    op = [[""] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        cost[i][0] = i * INDEL_COST
        op[i][0] = "D"
    for j in range(1, m + 1):
        cost[0][j] = j * INDEL_COST
        op[0][j] = "I"

    for i in range(1, n + 1):
        for j in range(1, m + 1):
            candidates = []
            if orig[i - 1] == corr[j - 1]:
                candidates.append((cost[i - 1][j - 1], 0, "M"))
            else:
                sub = _sub_cost(orig[i - 1], corr[j - 1], infos_o[i - 1], infos_c[j - 1])
                candidates.append((cost[i - 1][j - 1] + sub, 1, "S"))
            candidates.append((cost[i - 1][j] + INDEL_COST, 2, "D"))
            candidates.append((cost[i][j - 1] + INDEL_COST, 3, "I"))
            for k in range(2, MAX_TRANSPOSE + 1):
                if i >= k and j >= k:
                    blk_o = list(orig[i - k:i])
                    blk_c = list(corr[j - k:j])
                    if blk_o != blk_c and Counter(blk_o) == Counter(blk_c):
                        candidates.append((cost[i - k][j - k] + (k - 1), 3 + k, f"T{k}"))
            best_cost, _, best_op = min(candidates, key=lambda c: (c[0], c[1]))
            cost[i][j] = best_cost
            op[i][j] = best_op

    ops: list[AlignOp] = []
    i, j = n, m
    while i > 0 or j > 0:
        code = op[i][j]
        if code == "M" or code == "S":
            ops.append(AlignOp(code, i - 1, i, j - 1, j))
            i, j = i - 1, j - 1
        elif code == "D":
            ops.append(AlignOp("D", i - 1, i, j, j))
            i -= 1
        elif code == "I":
            ops.append(AlignOp("I", i, i, j - 1, j))
            j -= 1
        else:
            k = int(code[1:])
            ops.append(AlignOp("T", i - k, i, j - k, j))
            i, j = i - k, j - k
    ops.reverse()
    return ops


def alignment_cost(orig: Sequence[str], corr: Sequence[str], tagger=None) -> float:
    """Total cost of the minimal alignment (exposed for oracle checks)."""
    n, m = len(orig), len(corr)
    if n == 0:
        return m * INDEL_COST
    ops = align(orig, corr, tagger)
    total = 0.0
    for step in ops:
        if step.kind == "S":
            total += substitution_cost(orig[step.o_start], corr[step.c_start], tagger)
        elif step.kind in ("D", "I"):
            total += INDEL_COST
        elif step.kind == "T":
            total += (step.o_end - step.o_start) - 1
    return total


def _merge_run(run: list[Edit]) -> list[Edit]:
    """Fold a maximal run of adjacent edits into WS/WO candidates."""
    out: list[Edit] = []
    i = 0
    while i < len(run):
        merged = None
        for j in range(len(run), i + 1, -1):
            chunk = run[i:j]
            if any(e.error_type for e in chunk):
                continue
            o_toks = [t for e in chunk for t in e.o_toks]
            c_toks = [t for e in chunk for t in e.c_toks]
            if not o_toks or not c_toks:
                continue
            label = None
            if "".join(o_toks) == "".join(c_toks) and o_toks != c_toks:
                label = "WS"
            elif Counter(o_toks) == Counter(c_toks) and o_toks != c_toks:
                label = "WO"
            if label:
                merged = Edit(
                    chunk[0].o_start, chunk[-1].o_end,
                    chunk[0].c_start, chunk[-1].c_end,
                    o_toks, c_toks, label,
                )
                out.append(merged)
                i = j
                break
        if merged is None:
            out.append(run[i])
            i += 1
    return out


def extract_edits(orig: Sequence[str], corr: Sequence[str], ops: list[AlignOp]) -> list[Edit]:
    """All-split edits from alignment ops, with WS/WO merging applied."""
    edits: list[Edit] = []
    run: list[Edit] = []

    def flush():
        nonlocal run
        if run:
            edits.extend(_merge_run(run))
            run = []

    for step in ops:
        if step.kind == "M":
            flush()
            continue
        e = Edit(
            step.o_start, step.o_end, step.c_start, step.c_end,
            list(orig[step.o_start:step.o_end]),
            list(corr[step.c_start:step.c_end]),
            "WO" if step.kind == "T" else None,
        )
        run.append(e)
    flush()
    return edits


def align_and_extract(orig: Sequence[str], corr: Sequence[str], tagger=None) -> list[Edit]:
    return extract_edits(orig, corr, align(orig, corr, tagger))


def apply_edits(orig: Sequence[str], edits: list[Edit]) -> list[str]:
    """Replay edits over the original tokens; reconstructs the corrected side."""
    out: list[str] = []
    pos = 0
    for e in sorted(edits, key=lambda e: (e.o_start, e.o_end)):
        out.extend(orig[pos:e.o_start])
        out.extend(e.c_toks)
        pos = e.o_end
    out.extend(orig[pos:])
    return out
