"""Frame-tagged corpus ingestion and the paired-data utilities.

Input formats (UTF-8, one record per line, tab-separated, ``#`` comments and
blank lines skipped):

FTC1   tokens (space-joined)<TAB>focus_index<TAB>frame_label<TAB>focus_lemma<TAB>morph_tag
PFC1   two FTC1 records separated by <TAB>|<TAB>, literal side first

Tokenization is whitespace-based on pre-tokenized text; this module never
tokenizes raw prose.  Morph tags name the surface form of the focus verb and
are one of: base, 3rd-person-singular, past, past-participle, gerund.

Frame labels become vocabulary tokens through the reserved ``__frame__:``
prefix, which keeps word tokens and frame tokens disjoint in one joint
embedding vocabulary.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Iterable

from .errors import FormatError, IntegrityError
from .inventory import normalize_frame_name

MORPH_TAGS = frozenset(
    ["base", "3rd-person-singular", "past", "past-participle", "gerund"]
)

FRAME_PREFIX = "__frame__:"

EOT_DELIM = "<EOT>"
V_DELIM = "<V>"


def frame_token(frame: str) -> str:
    """Reserved vocabulary token for a frame label."""
    return FRAME_PREFIX + normalize_frame_name(frame)


def is_frame_token(token: str) -> bool:
    return token.startswith(FRAME_PREFIX)


def frame_name_of_token(token: str) -> str:
    if not is_frame_token(token):
        raise ValueError(f"not a frame token: {token!r}")
    return token[len(FRAME_PREFIX):]


@dataclass
class TaggedSentence:
    """One verb instance: its sentence, position, frame, lemma and morphology."""

    tokens: list[str]
    focus_index: int
    frame_label: str
    focus_lemma: str
    focus_morph: str


@dataclass
class TrainingWindow:
    """A center token and its surrounding context, order preserved."""

    center: str
    context: list[str]


@dataclass
class LiteralMetaphoricPair:
    literal: TaggedSentence
    metaphoric: TaggedSentence


@dataclass
class MappingFrequencyTable:
    """Counts of observed (target frame, source frame) pairs."""

    counts: dict[tuple[str, str], int] = field(default_factory=dict)

    def targets(self) -> list[str]:
        return sorted({t for t, _ in self.counts})

    def sources_for(self, target: str) -> dict[str, int]:
        target = normalize_frame_name(target)
        return {s: c for (t, s), c in self.counts.items() if t == target}

    def total(self) -> int:
        return sum(self.counts.values())


def _parse_ftc_fields(fields: list[str], lineno: int) -> TaggedSentence:
    if len(fields) != 5:
        raise FormatError(f"expected 5 fields, got {len(fields)}", line=lineno)
    tokens = fields[0].split()
    if not tokens:
        raise FormatError("empty token list", line=lineno)
    try:
        focus_index = int(fields[1])
    except ValueError:
        raise FormatError(f"focus index {fields[1]!r} is not an integer", line=lineno)
    if not 0 <= focus_index < len(tokens):
        raise FormatError(
            f"focus index {focus_index} out of range for {len(tokens)} tokens",
            line=lineno,
        )
    frame_label = normalize_frame_name(fields[2])
    if not frame_label:
        raise FormatError("empty frame label", line=lineno)
    focus_lemma = fields[3].strip()
    if not focus_lemma:
        raise FormatError("empty focus lemma", line=lineno)
    morph = fields[4].strip()
    if morph not in MORPH_TAGS:
        raise FormatError(f"unknown morph tag {morph!r}", line=lineno)
    return TaggedSentence(tokens, focus_index, frame_label, focus_lemma, morph)


def parse_ftc(source: IO[str] | Iterable[str]) -> list[TaggedSentence]:
    """Parse FTC1 records; any invalid record raises with its line number."""
    sentences = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        sentences.append(_parse_ftc_fields(line.split("\t"), lineno))
    return sentences


def parse_pfc(source: IO[str] | Iterable[str]) -> list[LiteralMetaphoricPair]:
    """Parse PFC1 paired records, literal side first.

    Enforces the pairing construction: both sides share the focus position and
    all non-focus tokens.
    """
    pairs = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 11 or fields[5] != "|":
            raise FormatError(
                "expected two FTC1 records separated by <TAB>|<TAB>", line=lineno
            )
        literal = _parse_ftc_fields(fields[:5], lineno)
        metaphoric = _parse_ftc_fields(fields[6:], lineno)
        if literal.focus_index != metaphoric.focus_index or len(literal.tokens) != len(
            metaphoric.tokens
        ):
            raise IntegrityError(
                f"line {lineno}: paired sentences must align at the focus position"
            )
        for i, (a, b) in enumerate(zip(literal.tokens, metaphoric.tokens)):
            if i != literal.focus_index and a != b:
                raise IntegrityError(
                    f"line {lineno}: paired sentences differ outside the focus verb"
                )
        pairs.append(LiteralMetaphoricPair(literal, metaphoric))
    return pairs


def extract_window(sentence: TaggedSentence, radius: int = 5) -> TrainingWindow:
    """Context window around the focus verb: up to ``radius`` tokens per side.

    The focus token itself is never part of the context; truncation happens
    silently at sentence boundaries.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    i = sentence.focus_index
    left = sentence.tokens[max(0, i - radius):i]
    right = sentence.tokens[i + 1:i + 1 + radius]
    return TrainingWindow(center=sentence.tokens[i], context=left + right)


def substitute_frame_label(window: TrainingWindow, frame: str) -> TrainingWindow:
    """Replace the window center with the reserved frame token; context untouched."""
    if not frame.strip():
        raise ValueError("empty frame label")
    return TrainingWindow(center=frame_token(frame), context=list(window.context))


def symbol_overlap_filter(a: list[str], b: list[str], threshold: int = 4) -> bool:
    """Whether two 5-symbol lists share at least ``threshold`` symbols.

    Symbols are lowercased and deduplicated before intersection.
    """
    if len(a) != 5 or len(b) != 5:
        raise ValueError("symbol lists must have exactly 5 entries")
    set_a = {s.strip().lower() for s in a}
    set_b = {s.strip().lower() for s in b}
    return len(set_a & set_b) >= threshold


def emit_control_record(pair: LiteralMetaphoricPair) -> str:
    """Serialize a pair into one control-coded line.

    Layout (single-space joins throughout):

        <source> <EOT> <pre-focus literal tokens> <V> <focus token> : <target> <V> <post-focus literal tokens>

    The literal sentence's tokens must not contain the reserved delimiter
    ``<V>`` for the serialization to stay invertible.
    """
    lit = pair.literal
    source = normalize_frame_name(pair.metaphoric.frame_label)
    target = normalize_frame_name(lit.frame_label)
    i = lit.focus_index
    parts = [source, EOT_DELIM, *lit.tokens[:i], V_DELIM, lit.tokens[i],
             ":", target, V_DELIM, *lit.tokens[i + 1:]]
    return " ".join(parts)


def parse_control_record(record: str) -> tuple[str, str, list[str], int]:
    """Invert ``emit_control_record``: (source, target, tokens, focus_index)."""
    parts = record.split(" ")
    if len(parts) < 7 or parts[1] != EOT_DELIM:
        raise FormatError(f"not a control record: {record!r}")
    try:
        v_at = parts.index(V_DELIM)
    except ValueError:
        raise FormatError(f"missing {V_DELIM} delimiter in {record!r}")
    pre = parts[2:v_at]
    if len(parts) < v_at + 5 or parts[v_at + 2] != ":" or parts[v_at + 4] != V_DELIM:
        raise FormatError(f"malformed control record tail in {record!r}")
    focus = parts[v_at + 1]
    target = parts[v_at + 3]
    post = parts[v_at + 5:]
    return parts[0], target, pre + [focus] + post, len(pre)


def save_windows(windows: Iterable[TrainingWindow], sink: IO[str]) -> None:
    """One window per line: ``center<TAB>context tokens space-joined``."""
    for w in windows:
        sink.write(f"{w.center}\t{' '.join(w.context)}\n")


def load_windows(source: IO[str] | Iterable[str]) -> list[TrainingWindow]:
    windows = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2 or not fields[0]:
            raise FormatError("expected center<TAB>context", line=lineno)
        windows.append(TrainingWindow(center=fields[0], context=fields[1].split()))
    return windows


def build_mapping_table(pairs: Iterable[LiteralMetaphoricPair]) -> MappingFrequencyTable:
    """Tally (literal frame, metaphoric frame) pairs into a frequency table."""
    counts = Counter(
        (normalize_frame_name(p.literal.frame_label),
         normalize_frame_name(p.metaphoric.frame_label))
        for p in pairs
    )
    return MappingFrequencyTable(counts=dict(counts))


def save_mapping_table(table: MappingFrequencyTable, sink: IO[str]) -> None:
    """Write ``target<TAB>source<TAB>count`` rows, sorted for stable output."""
    for (target, source), count in sorted(table.counts.items()):
        sink.write(f"{target}\t{source}\t{count}\n")


def load_mapping_table(source: IO[str] | Iterable[str]) -> MappingFrequencyTable:
    counts: dict[tuple[str, str], int] = {}
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise FormatError("expected target<TAB>source<TAB>count", line=lineno)
        try:
            count = int(fields[2])
        except ValueError:
            raise FormatError(f"bad count {fields[2]!r}", line=lineno)
        if count < 1:
            raise FormatError("counts must be >= 1", line=lineno)
        key = (normalize_frame_name(fields[0]), normalize_frame_name(fields[1]))
        if key in counts:
            raise FormatError(f"duplicate mapping {key}", line=lineno)
        counts[key] = count
    return MappingFrequencyTable(counts=counts)
