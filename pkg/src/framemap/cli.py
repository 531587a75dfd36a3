"""Command-line entry point orchestrating the toolkit over files.

Subcommands
-----------
prepare          FTC1 sentences -> frame-substituted training windows
train            windows -> EMB1 embedding file
eval-frames      EMB1 + FIV1 -> intrinsic metric report (lex/str)
generate         EMB1 + batch requests -> substituted sentences
select-mappings  mapping table + FIV1 -> rare/unseen source per target
eval-metrics     SEB1 triples -> dis/rel/mean/exact-match report
agreement        annotation matrix -> Krippendorff's alpha
emit-records     PFC1 pairs -> control records (+ mapping table)

All randomness flows from ``--seed``; per-module seeds are derived by stable
hashing of (seed, module name), so a whole pipeline is reproducible from the
one flag.  Inputs accept ``-`` for stdin; output goes to stdout unless
``--out`` is given.  Subcommands build their entire output before writing, so
a failing run leaves nothing behind but diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import io
import sys

import numpy as np

from . import corpus, embeddings, evaluation, frame_metrics, inventory, mapper
from .errors import FormatError, FramemapError
from .util import stable_seed


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.readlines()
    with open(path, encoding="utf-8") as f:
        return f.readlines()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def _cmd_prepare(args) -> str:
    sentences = corpus.parse_ftc(_read_lines(args.input))
    sink = io.StringIO()
    for s in sentences:
        window = corpus.extract_window(s, radius=args.radius)
        corpus.save_windows([corpus.substitute_frame_label(window, s.frame_label)], sink)
    return sink.getvalue()


def _cmd_train(args) -> str:
    windows = corpus.load_windows(_read_lines(args.windows))
    config = embeddings.TrainerConfig(
        dim=args.dim,
        negatives=args.negatives,
        epochs=args.epochs,
        learning_rate=args.lr,
        subsample=args.subsample,
        min_count=args.min_count,
        seed=stable_seed(args.seed, "train"),
        threads=args.threads,
    )
    space = embeddings.train(windows, config)
    sink = io.StringIO()
    embeddings.save_embeddings(space, sink)
    return sink.getvalue()


def _cmd_eval_frames(args) -> str:
    space = embeddings.load_embeddings(_read_lines(args.embeddings))
    inv = inventory.load_inventory(_read_lines(args.inventory))
    config = frame_metrics.MetricConfig(
        sample_size=args.k,
        seed=stable_seed(args.seed, "frame_metrics"),
        verbs_only=args.verbs_only,
    )
    report = frame_metrics.evaluate_space(space, inv, config)
    sink = io.StringIO()
    frame_metrics.write_report(report, inv, sink)
    return sink.getvalue()


def _cmd_generate(args) -> str:
    space = embeddings.load_embeddings(_read_lines(args.embeddings))
    out_lines = []
    for lineno, raw in enumerate(_read_lines(args.requests), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 7:
            raise FormatError(
                "expected FTC1 fields plus target_frame<TAB>source_frame", line=lineno
            )
        sentence = corpus._parse_ftc_fields(fields[:5], lineno)
        request = mapper.GenerationRequest(
            sentence=sentence,
            target_frame=fields[5],
            source_frame=fields[6],
            candidates_k=args.k,
            exclude_input=args.exclude_input,
        )
        result = mapper.generate(request, space)
        out_lines.append(
            "\t".join(
                [
                    " ".join(sentence.tokens),
                    " ".join(result.output_tokens),
                    ",".join(lemma for lemma, _ in result.candidates),
                ]
            )
        )
    return "".join(line + "\n" for line in out_lines)


def _cmd_select_mappings(args) -> str:
    table = corpus.load_mapping_table(_read_lines(args.table))
    inv = inventory.load_inventory(_read_lines(args.inventory))
    rng = np.random.default_rng(stable_seed(args.seed, "mapper"))
    lines = []
    for target in table.targets():
        rare = mapper.select_rare_mapping(table, target, rng)
        try:
            unseen = mapper.select_unseen_mapping(table, inv, target, rng)
        except FramemapError:
            unseen = "NA"
        lines.append(f"{target}\t{rare}\t{unseen}")
    return "".join(line + "\n" for line in lines)


def _cmd_eval_metrics(args) -> str:
    entries = evaluation.load_sentence_embeddings(_read_lines(args.triples))
    triples = evaluation.triples_from_entries(entries)
    report = evaluation.aggregate_report(triples, signed_rel=args.signed_rel)
    return (
        f"dis\t{report.mean_dis:.6f}\n"
        f"rel\t{report.mean_rel:.6f}\n"
        f"mean\t{report.combined:.6f}\n"
        f"exact_match\t{report.exact_match:.6f}\n"
        f"n\t{report.n}\n"
    )


def _cmd_agreement(args) -> str:
    matrix = evaluation.load_annotation_matrix(_read_lines(args.matrix))
    alpha = evaluation.krippendorff_alpha(matrix, level=args.level)
    return f"alpha\t{alpha:.6f}\n"


def _cmd_emit_records(args) -> str:
    pairs = corpus.parse_pfc(_read_lines(args.pairs))
    records = "".join(corpus.emit_control_record(p) + "\n" for p in pairs)
    if args.table_out:
        table = corpus.build_mapping_table(pairs)
        sink = io.StringIO()
        corpus.save_mapping_table(table, sink)
        _write(args.table_out, sink.getvalue())
    return records


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framemap",
        description="Metaphoric verb substitution via frame-to-frame mappings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--seed", type=int, default=1, help="master seed (u64)")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("prepare", help="FTC1 -> frame-substituted windows")
    p.add_argument("input", help="FTC1 file or -")
    p.add_argument("--radius", type=int, default=5)
    add_common(p)
    p.set_defaults(func=_cmd_prepare)

    p = sub.add_parser("train", help="windows -> EMB1")
    p.add_argument("windows", help="windows file or -")
    p.add_argument("--dim", type=int, default=50)
    p.add_argument("--epochs", type=int, default=5)
    p.add_argument("--negatives", type=int, default=5)
    p.add_argument("--min-count", type=int, default=1)
    p.add_argument("--lr", type=float, default=0.025)
    p.add_argument("--subsample", type=float, default=0.0)
    p.add_argument("--threads", type=int, default=1)
    add_common(p)
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("eval-frames", help="EMB1 + FIV1 -> lex/str report")
    p.add_argument("embeddings", help="EMB1 file or -")
    p.add_argument("inventory", help="FIV1 file")
    p.add_argument("--k", type=int, default=100, help="distant sample size")
    p.add_argument("--verbs-only", action="store_true")
    add_common(p)
    p.set_defaults(func=_cmd_eval_frames)

    p = sub.add_parser("generate", help="EMB1 + requests -> substituted sentences")
    p.add_argument("embeddings", help="EMB1 file")
    p.add_argument("requests", help="FTC1 + target/source columns, or -")
    p.add_argument("--k", type=int, default=10, help="candidate count")
    p.add_argument("--exclude-input", action="store_true")
    add_common(p)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("select-mappings", help="mapping table + FIV1 -> rare/unseen sources")
    p.add_argument("table", help="mapping table file or -")
    p.add_argument("inventory", help="FIV1 file")
    add_common(p)
    p.set_defaults(func=_cmd_select_mappings)

    p = sub.add_parser("eval-metrics", help="SEB1 triples -> dis/rel report")
    p.add_argument("triples", help="SEB1 file with L,M,G row triples, or -")
    p.add_argument("--signed-rel", action="store_true")
    add_common(p)
    p.set_defaults(func=_cmd_eval_metrics)

    p = sub.add_parser("agreement", help="annotation matrix -> Krippendorff's alpha")
    p.add_argument("matrix", help="ratings file or -")
    p.add_argument("--level", choices=["interval", "ordinal", "nominal"], default="interval")
    add_common(p)
    p.set_defaults(func=_cmd_agreement)

    p = sub.add_parser("emit-records", help="PFC1 -> control records (+ mapping table)")
    p.add_argument("pairs", help="PFC1 file or -")
    p.add_argument("--table-out", default=None, help="also write the mapping table here")
    add_common(p)
    p.set_defaults(func=_cmd_emit_records)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = args.func(args)
    except FramemapError as exc:
        print(f"framemap: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"framemap: {exc}", file=sys.stderr)
        return 1
    _write(args.out, output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
