"""Automatic evaluation of generated metaphors, plus the supporting statistics.

Sentence vectors arrive through the SEB1 file format (an external encoder
produces them; this package never runs one):

    <count> <dim>
    id<TAB>surface<TAB>v1 v2 ... vdim

Triple files list vectors in consecutive (literal, gold, generated) groups.

Metrics over a triple (L, M, G):

* dis: cosine distance between gold and generated, 1 - cos(M, G);
* rel: how well the literal->metaphor relation is preserved,
  |cos(L, M) - cos(L, G)| by default (a signed variant is available);
* exact match: surface equality after lowercasing, whitespace collapsing and
  terminal-punctuation stripping.

Agreement uses Krippendorff's alpha over a raters x items matrix with missing
entries, and significance testing is a two-sided paired t-test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable, Sequence

import numpy as np
from scipy.special import stdtr

from .errors import DegenerateInputError, FormatError, UndefinedSimilarityError

TERMINAL_PUNCT = ".,!?;:"

RATING_VALUES = frozenset([0, 1, 2, 3, 4])


@dataclass
class SentenceEmbedding:
    id: str
    vector: np.ndarray
    surface: str = ""


@dataclass
class EvalTriple:
    literal: SentenceEmbedding
    gold: SentenceEmbedding
    generated: SentenceEmbedding

    @property
    def gold_surface(self) -> str:
        return self.gold.surface

    @property
    def generated_surface(self) -> str:
        return self.generated.surface


@dataclass
class EvalReport:
    mean_dis: float
    mean_rel: float
    exact_match: float
    n: int

    @property
    def combined(self) -> float:
        return (self.mean_dis + self.mean_rel) / 2.0


@dataclass
class AnnotationMatrix:
    """Ratings on the 0-4 scale, one row per rater, None for missing."""

    ratings: list[list[int | None]]


def _cos(a: np.ndarray, b: np.ndarray) -> float:
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        raise UndefinedSimilarityError("zero sentence vector")
    return float(a @ b / (na * nb))


def dis_metric(gold: np.ndarray, generated: np.ndarray) -> float:
    """Cosine distance between the gold metaphor and the generated output."""
    return 1.0 - _cos(np.asarray(gold, float), np.asarray(generated, float))


def rel_metric(
    literal: np.ndarray,
    gold: np.ndarray,
    generated: np.ndarray,
    signed: bool = False,
) -> float:
    """Difference between cos(literal, gold) and cos(literal, generated)."""
    literal = np.asarray(literal, float)
    delta = _cos(literal, np.asarray(gold, float)) - _cos(literal, np.asarray(generated, float))
    return delta if signed else abs(delta)


def normalize_surface(text: str) -> str:
    collapsed = " ".join(text.lower().split())
    return collapsed.rstrip(TERMINAL_PUNCT).strip()


def exact_match(gold: str, generated: str) -> bool:
    return normalize_surface(gold) == normalize_surface(generated)


def exact_match_fraction(pairs: Iterable[tuple[str, str]]) -> float:
    pairs = list(pairs)
    if not pairs:
        raise DegenerateInputError("no surface pairs to compare")
    return sum(exact_match(g, o) for g, o in pairs) / len(pairs)


def aggregate_report(triples: Sequence[EvalTriple], signed_rel: bool = False) -> EvalReport:
    """Arithmetic per-item means of dis and rel, plus the exact-match fraction."""
    if not triples:
        raise DegenerateInputError("no evaluation triples")
    dis_values = [dis_metric(t.gold.vector, t.generated.vector) for t in triples]
    rel_values = [
        rel_metric(t.literal.vector, t.gold.vector, t.generated.vector, signed=signed_rel)
        for t in triples
    ]
    matches = exact_match_fraction(
        [(t.gold_surface, t.generated_surface) for t in triples]
    )
    return EvalReport(
        mean_dis=float(np.mean(dis_values)),
        mean_rel=float(np.mean(rel_values)),
        exact_match=matches,
        n=len(triples),
    )


def _ordinal_deltas(values: np.ndarray, marginals: np.ndarray) -> np.ndarray:
    v = len(values)
    deltas = np.zeros((v, v))
    for c in range(v):
        for k in range(c + 1, v):
            span = marginals[c:k + 1].sum() - (marginals[c] + marginals[k]) / 2.0
            deltas[c, k] = deltas[k, c] = span * span
    return deltas


def krippendorff_alpha(matrix: AnnotationMatrix, level: str = "interval") -> float:
    """Krippendorff's alpha via the coincidence-matrix formulation.

    ``level`` selects the difference function: nominal, ordinal, or interval.
    Items with fewer than two ratings contribute nothing.  When the expected
    disagreement is zero (every rating identical), alpha is defined as 1.
    """
    if level not in ("nominal", "ordinal", "interval"):
        raise ValueError(f"unknown level {level!r}")
    rows = matrix.ratings
    if len(rows) < 2:
        raise DegenerateInputError("need at least 2 raters")
    n_items = len(rows[0])
    if any(len(r) != n_items for r in rows):
        raise DegenerateInputError("raters rated different item counts")
    for row in rows:
        for value in row:
            if value is not None and value not in RATING_VALUES:
                raise DegenerateInputError(f"rating {value!r} outside the 0-4 scale")

    columns = [
        [row[i] for row in rows if row[i] is not None] for i in range(n_items)
    ]
    columns = [c for c in columns if len(c) >= 2]
    if not columns:
        raise DegenerateInputError("no item has two or more ratings")

    values = np.array(sorted({v for col in columns for v in col}), dtype=np.float64)
    index = {v: i for i, v in enumerate(values)}
    v = len(values)

    coincidence = np.zeros((v, v))
    for col in columns:
        m = len(col)
        for i, a in enumerate(col):
            for j, b in enumerate(col):
                if i != j:
                    coincidence[index[a], index[b]] += 1.0 / (m - 1)
    marginals = coincidence.sum(axis=1)
    n = marginals.sum()

    if level == "nominal":
        deltas = 1.0 - np.eye(v)
    elif level == "interval":
        deltas = (values[:, None] - values[None, :]) ** 2
    else:
        deltas = _ordinal_deltas(values, marginals)

    observed = (coincidence * deltas).sum() / n
    expected = (np.outer(marginals, marginals) * deltas).sum() / (n * (n - 1.0))
    if expected == 0.0:
        return 1.0
    return float(1.0 - observed / expected)


def paired_t_test(a: Sequence[float], b: Sequence[float]) -> tuple[float, float]:
    """Two-sided paired t-test; returns (t statistic, p value).

    The p value comes from the t-distribution CDF with n-1 degrees of
    freedom.  Identical samples (zero variance of differences) are
    degenerate, not significant.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1:
        raise DegenerateInputError("paired samples must be 1-d and equal length")
    n = a.shape[0]
    if n < 2:
        raise DegenerateInputError("need at least 2 pairs")
    d = a - b
    sd = float(d.std(ddof=1))
    if sd == 0.0:
        raise DegenerateInputError("all differences identical; t undefined")
    t = float(d.mean() / (sd / np.sqrt(n)))
    p = 2.0 * float(stdtr(n - 1, -abs(t)))
    return t, p


def load_sentence_embeddings(source: IO[str] | Iterable[str]) -> list[SentenceEmbedding]:
    """Parse SEB1 text; every vector must be finite, nonzero, and of header dim."""
    lines = iter(source)
    try:
        header = next(lines)
    except StopIteration:
        raise FormatError("empty SEB1 file", line=1)
    parts = header.split()
    if len(parts) != 2:
        raise FormatError("header must be '<count> <dim>'", line=1)
    try:
        count, dim = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError("header must hold two integers", line=1)
    entries: list[SentenceEmbedding] = []
    for lineno, raw in enumerate(lines, start=2):
        line = raw.rstrip("\n")
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise FormatError("expected id<TAB>surface<TAB>values", line=lineno)
        try:
            vector = np.array([float(x) for x in fields[2].split()], dtype=np.float64)
        except ValueError:
            raise FormatError("non-numeric vector component", line=lineno)
        if vector.shape[0] != dim:
            raise FormatError(f"expected {dim} components, got {vector.shape[0]}", line=lineno)
        if not np.all(np.isfinite(vector)) or not vector.any():
            raise FormatError("sentence vector must be finite and nonzero", line=lineno)
        entries.append(SentenceEmbedding(id=fields[0], vector=vector, surface=fields[1]))
    if len(entries) != count:
        raise FormatError(f"header announced {count} rows, file has {len(entries)}")
    return entries


def save_sentence_embeddings(entries: Sequence[SentenceEmbedding], sink: IO[str]) -> None:
    if entries:
        dim = entries[0].vector.shape[0]
    else:
        dim = 0
    sink.write(f"{len(entries)} {dim}\n")
    for e in entries:
        values = " ".join(f"{x:.6f}" for x in e.vector)
        sink.write(f"{e.id}\t{e.surface}\t{values}\n")


def triples_from_entries(entries: Sequence[SentenceEmbedding]) -> list[EvalTriple]:
    """Group SEB1 rows into (literal, gold, generated) triples, in file order."""
    if len(entries) % 3 != 0:
        raise FormatError(
            f"triple file must hold a multiple of 3 rows, got {len(entries)}"
        )
    return [
        EvalTriple(literal=entries[i], gold=entries[i + 1], generated=entries[i + 2])
        for i in range(0, len(entries), 3)
    ]


def load_annotation_matrix(source: IO[str] | Iterable[str]) -> AnnotationMatrix:
    """Tab-separated ratings, one rater per row, NA for missing."""
    rows: list[list[int | None]] = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        row: list[int | None] = []
        for cell in line.split("\t"):
            cell = cell.strip()
            if cell.upper() == "NA":
                row.append(None)
                continue
            try:
                value = int(cell)
            except ValueError:
                raise FormatError(f"rating {cell!r} is not an integer or NA", line=lineno)
            if value not in RATING_VALUES:
                raise FormatError(f"rating {value} outside the 0-4 scale", line=lineno)
            row.append(value)
        rows.append(row)
    if len(rows) < 2:
        raise FormatError("need at least 2 rater rows")
    if any(len(r) != len(rows[0]) for r in rows):
        raise FormatError("rater rows must have equal length")
    return AnnotationMatrix(ratings=rows)
