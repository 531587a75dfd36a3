"""Standalone adapter command: models in, framemap files out.

Modes
-----
embed              lines of ``id<TAB>sentence`` -> SEB1 (unit-normalized)
tag                raw sentences, one per line -> FTC1 (lexicon tagger;
                   requires --inventory FIV1)
convert-inventory  FrameNet-style XML release directory -> FIV1

The default ``--model hash:256`` needs no weights; any other identifier is
handed to sentence-transformers.
"""

from __future__ import annotations

import argparse
import io
import sys

from .encoders import AdapterError, load_encoder
from .inventory_convert import convert_inventory
from .tagger import PARSER_NAME, PARSER_VERSION, LexiconTagger


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


def _embed(args) -> str:
    encoder = load_encoder(args.model)
    ids, texts = [], []
    for lineno, raw in enumerate(_read_lines(args.infile), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t", 1)
        if len(fields) != 2:
            raise AdapterError(f"line {lineno}: expected id<TAB>sentence")
        ids.append(fields[0])
        texts.append(fields[1])
    vectors = encoder.encode(texts) if texts else None
    sink = io.StringIO()
    sink.write(f"{len(ids)} {encoder.dim}\n")
    for row, (sid, text) in enumerate(zip(ids, texts)):
        values = " ".join(f"{x:.6f}" for x in vectors[row])
        sink.write(f"{sid}\t{text}\t{values}\n")
    return sink.getvalue()


def _tag(args) -> str:
    if not args.inventory:
        raise AdapterError("tag mode requires --inventory <FIV1 file>")
    tagger = LexiconTagger(_read_lines(args.inventory))
    sink = io.StringIO()
    sink.write(f"# parser: {PARSER_NAME}/{PARSER_VERSION}\n")
    for raw in _read_lines(args.infile):
        sentence = raw.rstrip("\n")
        if not sentence.strip() or sentence.startswith("#"):
            continue
        for record in tagger.tag(sentence):
            sink.write(record + "\n")
    return sink.getvalue()


def _convert(args) -> str:
    sink = io.StringIO()
    convert_inventory(args.infile, sink)
    return sink.getvalue()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="framemap-adapter",
        description="Export sentence embeddings, frame tags, or inventories for framemap.",
    )
    parser.add_argument("--mode", required=True, choices=["embed", "tag", "convert-inventory"])
    parser.add_argument("--in", dest="infile", required=True,
                        help="input file, '-' for stdin, or release dir for convert-inventory")
    parser.add_argument("--out", default=None, help="output path (default stdout)")
    parser.add_argument("--model", default="hash:256",
                        help="hash:<dim> or a sentence-transformers model id")
    parser.add_argument("--inventory", default=None, help="FIV1 lexicon for tag mode")
    args = parser.parse_args(argv)

    handlers = {"embed": _embed, "tag": _tag, "convert-inventory": _convert}
    try:
        output = handlers[args.mode](args)
    except (AdapterError, OSError, FileNotFoundError) as exc:
        print(f"framemap-adapter: {exc}", file=sys.stderr)
        return 1
    _write(args.out, output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
