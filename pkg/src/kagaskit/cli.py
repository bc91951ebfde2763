"""Batch command-line frontend.

Subcommands: annotate, m2score, gleu, filter lang8, filter native,
ingest nikl, merge-morphemes, stats.  Exit codes: 0 success, 1 completed
with warnings, 2 input or configuration error.  Outputs are ordered by
input line number, so the worker count changes wall-clock only.
"""

from __future__ import annotations

import argparse
import multiprocessing
import sys
from collections import Counter
from pathlib import Path

from .classify import ERROR_TYPE_ORDER
from .ingest import LearnerXmlError, parse_learner_xml, reconstruct_pair
from .m2 import M2ParseError, gleu, parse_m2, score
from .preprocess import (
    FilterDecision,
    clean_lang8_text,
    kor_native_filter,
    lang8_filter,
    normalize_punct_spacing,
)
from .session import Session


class InputError(Exception):
    pass


def _pct(x: float) -> str:
    return f"{100.0 * x:.2f}"


def _read_lines(path: str) -> list[str]:
    try:
        return Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _read_pairs(path: str) -> tuple[list[tuple[int, str, str]], int]:
    """TSV pairs with line numbers; malformed lines counted, not fatal."""
    pairs = []
    skipped = 0
    for lineno, line in enumerate(_read_lines(path), start=1):
        if not line.strip():
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            print(f"warning: line {lineno}: expected 2 tab-separated columns", file=sys.stderr)
            skipped += 1
            continue
        pairs.append((lineno, cols[0], cols[1]))
    return pairs, skipped


def _write_out(path, text: str):
    if path and path != "-":
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _session_from_args(args) -> Session:
    return Session(
        morph_lexicon=args.morph_lexicon,
        spell_lexicon=args.spell_lexicon,
        noise_words=args.noise_words,
        gazetteer=args.gazetteer,
        tagger_cmd=args.tagger_cmd,
    )


# Worker-side state for annotate; one session (and tagger process) per worker.
_WORKER_SESSION: Session | None = None
_WORKER_CONFIG: dict | None = None


def _init_worker(config: dict):
    global _WORKER_SESSION, _WORKER_CONFIG
    _WORKER_CONFIG = config
    _WORKER_SESSION = Session(**config)


def _annotate_one(item: tuple[int, str, str]) -> tuple[str, list[str], int, int]:
    _, original, corrected = item
    doc = _WORKER_SESSION.annotate_document(original, corrected)
    types = [a.type for a in doc.annotations if not a.is_noop]
    o_token_total = sum(a.end - a.start for a in doc.annotations if not a.is_noop)
    return doc.to_block(), types, o_token_total, len(doc.source)


def _stats_report(type_counts: Counter, n_sentences: int, n_edits: int,
                  o_tokens_in_edits: int, warnings: int) -> str:
    lines = ["type\tcount\tpercent"]
    for t in ERROR_TYPE_ORDER:
        if t == "UNK" or type_counts.get(t):
            count = type_counts.get(t, 0)
            pct = 100.0 * count / n_edits if n_edits else 0.0
            lines.append(f"{t}\t{count}\t{pct:.2f}")
    lines.append(f"sentences\t{n_sentences}")
    lines.append(f"edits\t{n_edits}")
    eps = n_edits / n_sentences if n_sentences else 0.0
    tpe = o_tokens_in_edits / n_edits if n_edits else 0.0
    lines.append(f"edits_per_sentence\t{eps:.2f}")
    lines.append(f"tokens_per_edit\t{tpe:.2f}")
    lines.append(f"warnings\t{warnings}")
    return "\n".join(lines) + "\n"


def cmd_annotate(args) -> int:
    pairs, skipped = _read_pairs(args.input)
    config = dict(
        morph_lexicon=args.morph_lexicon,
        spell_lexicon=args.spell_lexicon,
        noise_words=args.noise_words,
        gazetteer=args.gazetteer,
        tagger_cmd=args.tagger_cmd,
    )
    workers = max(1, args.workers)
    if workers == 1 or len(pairs) < 2 * workers:
        _init_worker(config)
        results = [_annotate_one(p) for p in pairs]
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(workers, initializer=_init_worker, initargs=(config,)) as pool:
            results = list(pool.imap(_annotate_one, pairs, chunksize=32))

    blocks = [r[0] for r in results]
    type_counts: Counter = Counter()
    o_tokens = 0
    for _, types, o_tok, _ in results:
        type_counts.update(types)
        o_tokens += o_tok
    n_edits = sum(type_counts.values())

    m2_text = "\n\n".join(blocks) + "\n" if blocks else ""
    _write_out(args.output, m2_text)
    report = _stats_report(type_counts, len(results), n_edits, o_tokens, skipped)
    if args.report:
        Path(args.report).write_text(report, encoding="utf-8")
    else:
        sys.stderr.write(report)
    return 1 if skipped else 0


def _score_report(report) -> str:
    lines = ["type\ttp\tfp\tfn\tP\tR\tF0.5"]
    known = [t for t in ERROR_TYPE_ORDER if t in report.per_type]
    extra = sorted(t for t in report.per_type if t not in ERROR_TYPE_ORDER)
    for t in known + extra:
        c = report.per_type[t]
        if c.tp == 0 and c.fp == 0 and c.fn == 0:
            continue
        lines.append(
            f"{t}\t{c.tp}\t{c.fp}\t{c.fn}\t{_pct(c.precision)}\t{_pct(c.recall)}\t{_pct(c.f_half)}"
        )
    lines.append(
        f"OVERALL\t{report.tp}\t{report.fp}\t{report.fn}"
        f"\t{_pct(report.precision)}\t{_pct(report.recall)}\t{_pct(report.f_half)}"
    )
    return "\n".join(lines) + "\n"


def cmd_m2score(args) -> int:
    gold_text = Path(args.gold).read_text(encoding="utf-8")
    try:
        gold = parse_m2(gold_text)
    except M2ParseError as exc:
        raise InputError(f"bad gold file: {exc}") from None
    if args.self_score:
        hyps = [" ".join(doc.source) for doc in gold]
    else:
        if not args.hypothesis:
            raise InputError("m2score needs a hypothesis file unless --self is given")
        hyps = [normalize_punct_spacing(h) for h in _read_lines(args.hypothesis)]
        if len(hyps) != len(gold):
            raise InputError(
                f"hypothesis line count {len(hyps)} != gold sentence count {len(gold)}"
            )
    session = _session_from_args(args)
    report = score(hyps, gold, session.tagger, session.spell)
    _write_out(args.output, _score_report(report))
    return 0


def cmd_gleu(args) -> int:
    if args.hypotheses is None and not args.self_score:
        raise InputError("gleu needs a hypothesis file unless --self is given")
    sources = _read_lines(args.sources)
    refs = _read_lines(args.references)
    hyps = sources if args.self_score else _read_lines(args.hypotheses)
    if not (len(sources) == len(refs) == len(hyps)):
        raise InputError("gleu inputs must have matching line counts")
    norm = normalize_punct_spacing
    value = gleu(
        [norm(s) for s in sources],
        [norm(r) for r in refs],
        [norm(h) for h in hyps],
    )
    _write_out(args.output, f"GLEU\t{100.0 * value:.2f}\n")
    return 0


def cmd_filter(args) -> int:
    pairs, skipped = _read_pairs(args.input)
    session = _session_from_args(args)
    kept_lines = []
    log_lines = ["line\tdecision\trule\tr_t\tr_l\tlcs\tjamo_dist"]
    rule_counts: Counter = Counter()
    seen: set = set()

    for lineno, orig, corr in pairs:
        if args.kind == "lang8":
            orig_c = clean_lang8_text(orig)
            corr_c = clean_lang8_text(corr)
            decision, stats = lang8_filter(orig_c, corr_c, session.noise_words)
            # Only the first occurrence of a unique pair survives.
            if decision.keep and (orig_c, corr_c) in seen:
                decision = FilterDecision(False, "duplicate")
            log_lines.append(
                f"{lineno}\t{'keep' if decision.keep else 'discard'}\t{decision.rule}"
                f"\t{stats.r_t:.4f}\t{stats.r_l:.4f}\t{stats.lcs_chars}"
                f"\t{float(stats.jamo_dist):.4f}"
            )
            if decision.keep:
                seen.add((orig_c, corr_c))
                kept_lines.append(f"{orig_c}\t{corr_c}")
        else:
            decision = kor_native_filter(orig, corr, session.gazetteer)
            log_lines.append(
                f"{lineno}\t{'keep' if decision.keep else 'discard'}\t{decision.rule}"
                "\t-\t-\t-\t-"
            )
            if decision.keep:
                kept_lines.append(f"{orig}\t{corr}")
        rule_counts[decision.rule] += 1

    _write_out(args.output, "\n".join(kept_lines) + ("\n" if kept_lines else ""))
    if args.log:
        Path(args.log).write_text("\n".join(log_lines) + "\n", encoding="utf-8")
    kept = rule_counts.get("pass", 0)
    discarded = sum(rule_counts.values()) - kept
    summary = ", ".join(
        f"{rule}={count}" for rule, count in sorted(rule_counts.items()) if rule != "pass"
    )
    print(f"kept {kept}, discarded {discarded} ({summary})", file=sys.stderr)
    return 1 if skipped else 0


def cmd_ingest(args) -> int:
    path = Path(args.input)
    if path.is_dir():
        files = sorted(path.glob("*.xml"))
    elif path.exists():
        files = [path]
    else:
        raise InputError(f"no such file or directory: {path}")
    out_lines = []
    warnings = 0
    discard_counts: Counter = Counter()
    for file in files:
        try:
            sentences = parse_learner_xml(file.read_text(encoding="utf-8"))
        except LearnerXmlError as exc:
            print(f"warning: {file}: {exc}", file=sys.stderr)
            warnings += 1
            continue
        for sent in sentences:
            if not sent.source:
                print(f"warning: {file}: document without source sentence", file=sys.stderr)
                warnings += 1
                continue
            result = reconstruct_pair(sent)
            if result.kept:
                orig, corr = result.pair
                if orig != corr:
                    out_lines.append(f"{orig}\t{corr}")
                else:
                    discard_counts["no-edit"] += 1
            else:
                discard_counts[result.reason] += 1
    _write_out(args.output, "\n".join(out_lines) + ("\n" if out_lines else ""))
    summary = ", ".join(f"{k}={v}" for k, v in sorted(discard_counts.items()))
    print(f"emitted {len(out_lines)} pairs, discarded ({summary})", file=sys.stderr)
    return 1 if warnings else 0


def cmd_merge_morphemes(args) -> int:
    from .orthography import merge_morphemes

    lines = _read_lines(args.input) if args.input else sys.stdin.read().splitlines()
    out = []
    for line in lines:
        morphs = line.split()
        if morphs:
            out.append(merge_morphemes(morphs))
    _write_out(args.output, "\n".join(out) + ("\n" if out else ""))
    return 0


def cmd_stats(args) -> int:
    try:
        docs = parse_m2(Path(args.input).read_text(encoding="utf-8"))
    except M2ParseError as exc:
        raise InputError(f"bad M2 file: {exc}") from None
    type_counts: Counter = Counter()
    o_tokens = 0
    n_edits = 0
    for doc in docs:
        for ann in doc.annotations:
            if ann.is_noop:
                continue
            type_counts[ann.type] += 1
            o_tokens += ann.end - ann.start
            n_edits += 1
    _write_out(args.output, _stats_report(type_counts, len(docs), n_edits, o_tokens, 0))
    return 0


def _add_lexicon_flags(parser):
    parser.add_argument("--spell-lexicon", metavar="PATH")
    parser.add_argument("--morph-lexicon", metavar="PATH")
    parser.add_argument("--tagger-cmd", metavar="CMD")
    parser.add_argument("--gazetteer", metavar="PATH")
    parser.add_argument("--noise-words", metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kagaskit",
        description="Edit alignment, error-type annotation, and scoring for Korean GEC corpora",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("annotate", help="pairs TSV -> M2 file + stats report")
    p.add_argument("input")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--report", metavar="PATH")
    p.add_argument("--workers", type=int, default=1)
    _add_lexicon_flags(p)
    p.set_defaults(func=cmd_annotate)

    p = sub.add_parser("m2score", help="score a hypothesis file against gold M2")
    p.add_argument("gold")
    p.add_argument("hypothesis", nargs="?")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--self", dest="self_score", action="store_true",
                   help="score the sources as if they were system output")
    _add_lexicon_flags(p)
    p.set_defaults(func=cmd_m2score)

    p = sub.add_parser("gleu", help="corpus GLEU over source/reference/hypothesis files")
    p.add_argument("sources")
    p.add_argument("references")
    p.add_argument("hypotheses", nargs="?")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--self", dest="self_score", action="store_true")
    p.set_defaults(func=cmd_gleu)

    p = sub.add_parser("filter", help="corpus filtering pipelines")
    p.add_argument("kind", choices=["lang8", "native"])
    p.add_argument("input")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--log", metavar="PATH", help="write the per-line decision log TSV")
    _add_lexicon_flags(p)
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("ingest", help="learner XML -> pairs TSV")
    p.add_argument("kind", choices=["nikl"])
    p.add_argument("input")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("merge-morphemes", help="merge one morpheme sequence per line")
    p.add_argument("input", nargs="?")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_merge_morphemes)

    p = sub.add_parser("stats", help="error-type distribution of an M2 file")
    p.add_argument("input")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
