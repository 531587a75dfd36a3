"""Intrinsic quality metrics for frame embeddings.

Both metrics contrast a frame's mean cosine to "local" items against its mean
cosine to a random sample of k "distant" items:

* lexical similarity: local items are the frame's lexical units, distant ones
  are sampled from word tokens outside the frame;
* structural similarity: local items are the frame's immediate neighbors in
  the relation graph, distant ones are sampled from frame tokens that are
  neither neighbors nor the frame itself.

A frame with no usable local items (or an empty distant universe, or no
frame token in the vocabulary) is skipped, not scored zero: scoring it zero
would drag aggregate means toward zero for reasons unrelated to embedding
quality.  Skip counts are reported instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO

import numpy as np

from . import inventory as inv_mod
from .corpus import frame_token
from .embeddings import EmbeddingSpace, cosine, frame_token_ids, word_token_ids
from .errors import FramemapError
from .inventory import FrameInventory
from .util import stable_seed


@dataclass
class MetricConfig:
    sample_size: int = 100
    seed: int = 1
    verbs_only: bool = False


@dataclass
class MetricReport:
    lex_values: dict[str, float] = field(default_factory=dict)
    str_values: dict[str, float] = field(default_factory=dict)
    skipped_lex: int = 0
    skipped_str: int = 0

    @property
    def mean_lex(self) -> float | None:
        if not self.lex_values:
            return None
        return float(np.mean(list(self.lex_values.values())))

    @property
    def mean_str(self) -> float | None:
        if not self.str_values:
            return None
        return float(np.mean(list(self.str_values.values())))

    @property
    def combined(self) -> float | None:
        if self.mean_lex is None or self.mean_str is None:
            return None
        return (self.mean_lex + self.mean_str) / 2.0


def _sample(universe: list[str], k: int, rng: np.random.Generator) -> list[str]:
    if len(universe) <= k:
        return universe
    picks = rng.choice(len(universe), size=k, replace=False)
    return [universe[i] for i in picks]


def _contrast(space: EmbeddingSpace, anchor: str, local: list[str], distant: list[str]) -> float:
    local_mean = float(np.mean([cosine(space, w, anchor) for w in local]))
    distant_mean = float(np.mean([cosine(space, w, anchor) for w in distant]))
    return local_mean - distant_mean


def lex_similarity(
    space: EmbeddingSpace,
    inv: FrameInventory,
    frame: str,
    config: MetricConfig,
) -> float | None:
    """Mean cosine of the frame to its own lexical units minus a distant sample.

    Returns None (skip signal) when the frame token or every lexical unit is
    out of vocabulary.  Deterministic given ``config.seed``.
    """
    name = inv_mod.normalize_frame_name(frame)
    anchor = frame_token(name)
    if anchor not in space.vocab:
        return None
    lu_all = inv_mod.lexical_units_of(inv, name)
    lu_local = inv_mod.lexical_units_of(inv, name, pos="v") if config.verbs_only else lu_all
    local = sorted(t for t in lu_local if t in space.vocab)
    if not local:
        return None
    words = [space.vocab.id_to_token[i] for i in word_token_ids(space.vocab)]
    universe = [t for t in words if t not in lu_all]
    if not universe:
        return None
    rng = np.random.default_rng(stable_seed(config.seed, "lex", name))
    distant = _sample(universe, config.sample_size, rng)
    return _contrast(space, anchor, local, distant)


def str_similarity(
    space: EmbeddingSpace,
    inv: FrameInventory,
    frame: str,
    config: MetricConfig,
) -> float | None:
    """Mean cosine of the frame to its neighbor frames minus a distant sample.

    Neighborhood is one hop in the relation graph, direction ignored.
    """
    name = inv_mod.normalize_frame_name(frame)
    anchor = frame_token(name)
    if anchor not in space.vocab:
        return None
    neighbor_names = inv_mod.neighbors(inv, name)
    local = sorted(
        frame_token(n) for n in neighbor_names if frame_token(n) in space.vocab
    )
    if not local:
        return None
    excluded = {frame_token(n) for n in neighbor_names} | {anchor}
    frames = [space.vocab.id_to_token[i] for i in frame_token_ids(space.vocab)]
    universe = [t for t in frames if t not in excluded]
    if not universe:
        return None
    rng = np.random.default_rng(stable_seed(config.seed, "str", name))
    distant = _sample(universe, config.sample_size, rng)
    return _contrast(space, anchor, local, distant)


def evaluate_space(
    space: EmbeddingSpace,
    inv: FrameInventory,
    config: MetricConfig,
) -> MetricReport:
    """Both metrics for every inventory frame, with unweighted corpus means."""
    report = MetricReport()
    for name in inv.frame_names():
        lex = lex_similarity(space, inv, name, config)
        if lex is None:
            report.skipped_lex += 1
        else:
            report.lex_values[name] = lex
        struct = str_similarity(space, inv, name, config)
        if struct is None:
            report.skipped_str += 1
        else:
            report.str_values[name] = struct
    if not report.lex_values and not report.str_values:
        raise FramemapError("every frame was skipped by both metrics")
    return report


def _fmt(value: float | None) -> str:
    return "NA" if value is None else f"{value:.6f}"


def write_report(report: MetricReport, inv: FrameInventory, sink: IO[str]) -> None:
    """Tab-separated per-frame rows plus a trailing aggregate block."""
    sink.write("frame\tlex\tstr\n")
    for name in inv.frame_names():
        lex = report.lex_values.get(name)
        struct = report.str_values.get(name)
        sink.write(f"{name}\t{_fmt(lex)}\t{_fmt(struct)}\n")
    sink.write(f"# evaluated\tlex={len(report.lex_values)}\tstr={len(report.str_values)}\n")
    sink.write(f"# skipped\tlex={report.skipped_lex}\tstr={report.skipped_str}\n")
    sink.write(f"# mean_lex\t{_fmt(report.mean_lex)}\n")
    sink.write(f"# mean_str\t{_fmt(report.mean_str)}\n")
    sink.write(f"# mean_combined\t{_fmt(report.combined)}\n")
