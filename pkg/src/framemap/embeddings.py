"""Joint word/frame embeddings trained with skip-gram and negative sampling.

The training corpus is a stream of context windows whose centers are usually
frame tokens (see ``corpus.substitute_frame_label``).  Each window is treated
as one short text: every ordered pair of distinct in-vocabulary tokens inside
it becomes a (center, context) training example, which is what lets word and
frame input vectors land in a shared similarity space rather than merely
aligning input vectors with output vectors.

Conventions the tests pin down:

* input vectors initialize uniformly in [-0.5/dim, 0.5/dim), output vectors
  at zero;
* negatives are drawn from unigram frequency raised to 0.75 over word tokens
  only, so frame vectors are shaped exclusively by genuine contexts;
* with a fixed seed and one worker the whole procedure is bit-reproducible.

Multi-worker mode shares the parameter matrices without locks (hogwild-style,
accepted nondeterminism) and exists for large corpora only.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence

import numpy as np
from scipy.special import expit

from .corpus import TrainingWindow, is_frame_token
from .errors import (
    ConfigError,
    EmptyVocabularyError,
    FormatError,
    UndefinedSimilarityError,
    UnknownTokenError,
)


@dataclass
class Vocabulary:
    """Bijection between tokens and dense ids, with kept-token frequencies."""

    token_to_id: dict[str, int]
    id_to_token: list[str]
    counts: np.ndarray
    total: int

    def __len__(self) -> int:
        return len(self.id_to_token)

    def __contains__(self, token: str) -> bool:
        return token in self.token_to_id

    def frequency(self, token: str) -> int:
        return int(self.counts[self.token_to_id[token]])


@dataclass
class TrainerConfig:
    dim: int = 50
    negatives: int = 5
    epochs: int = 5
    learning_rate: float = 0.025
    subsample: float = 0.0
    min_count: int = 1
    seed: int = 1
    threads: int = 1


@dataclass
class EmbeddingSpace:
    """Input and output vector matrices over a shared vocabulary.

    Similarity queries use input vectors; output vectors exist for the
    negative-sampling objective and are kept so training can resume.
    """

    dim: int
    input_vectors: np.ndarray
    output_vectors: np.ndarray
    vocab: Vocabulary

    def __contains__(self, token: str) -> bool:
        return token in self.vocab

    def id_of(self, token: str) -> int:
        if token not in self.vocab:
            raise UnknownTokenError(f"token {token!r} not in vocabulary")
        return self.vocab.token_to_id[token]

    def vector(self, token: str) -> np.ndarray:
        return self.input_vectors[self.id_of(token)]


def build_vocab(windows: Iterable[TrainingWindow], min_count: int = 1) -> Vocabulary:
    """Count window tokens and drop the ones rarer than ``min_count``.

    Frame tokens are always kept: they are the supervision signal and may
    legitimately be rare.
    """
    if min_count < 1:
        raise ConfigError("min_count must be >= 1")
    raw = Counter()
    for window in windows:
        raw[window.center] += 1
        raw.update(window.context)
    if not raw:
        raise EmptyVocabularyError("no tokens in window stream")
    kept = {t: c for t, c in raw.items() if c >= min_count or is_frame_token(t)}
    if not kept:
        raise EmptyVocabularyError(f"no tokens survive min_count={min_count}")
    ordered = sorted(kept.items(), key=lambda tc: (-tc[1], tc[0]))
    id_to_token = [t for t, _ in ordered]
    counts = np.array([c for _, c in ordered], dtype=np.int64)
    return Vocabulary(
        token_to_id={t: i for i, t in enumerate(id_to_token)},
        id_to_token=id_to_token,
        counts=counts,
        total=int(counts.sum()),
    )


def word_token_ids(vocab: Vocabulary) -> np.ndarray:
    return np.array(
        [i for i, t in enumerate(vocab.id_to_token) if not is_frame_token(t)],
        dtype=np.int64,
    )


def frame_token_ids(vocab: Vocabulary) -> np.ndarray:
    return np.array(
        [i for i, t in enumerate(vocab.id_to_token) if is_frame_token(t)],
        dtype=np.int64,
    )


def _init_space(vocab: Vocabulary, dim: int, rng: np.random.Generator) -> EmbeddingSpace:
    inputs = (rng.random((len(vocab), dim)) - 0.5) / dim
    outputs = np.zeros((len(vocab), dim))
    return EmbeddingSpace(dim=dim, input_vectors=inputs, output_vectors=outputs, vocab=vocab)


def sgns_gradients(
    space: EmbeddingSpace,
    center_id: int,
    context_id: int,
    negative_ids: Sequence[int],
) -> tuple[float, np.ndarray, np.ndarray, np.ndarray]:
    """Loss and analytic gradients for one positive pair plus its negatives.

    Loss: -log sigmoid(u_ctx . v) - sum_neg log sigmoid(-u_neg . v), all
    gradients evaluated at the current parameters.  Returns
    (loss, grad_center_input, grad_context_output, grad_negative_outputs)
    with the negative gradients aligned row-by-row with ``negative_ids``.
    """
    v = space.input_vectors[center_id]
    u_pos = space.output_vectors[context_id]
    negative_ids = np.asarray(negative_ids, dtype=np.int64)
    u_neg = space.output_vectors[negative_ids]

    pos_score = float(u_pos @ v)
    neg_scores = u_neg @ v
    # -log sigmoid(x) == log(1 + e^-x), computed stably
    loss = float(np.logaddexp(0.0, -pos_score) + np.logaddexp(0.0, neg_scores).sum())

    g_pos = expit(pos_score) - 1.0
    g_neg = expit(neg_scores)
    grad_center = g_pos * u_pos + g_neg @ u_neg
    grad_context = g_pos * v
    grad_negatives = np.outer(g_neg, v)
    return loss, grad_center, grad_context, grad_negatives


def sgns_step(
    space: EmbeddingSpace,
    center_id: int,
    context_id: int,
    negative_ids: Sequence[int],
    lr: float,
) -> float:
    """One in-place SGD step on a positive pair; returns the pre-step loss."""
    loss, grad_center, grad_context, grad_negatives = sgns_gradients(
        space, center_id, context_id, negative_ids
    )
    negative_ids = np.asarray(negative_ids, dtype=np.int64)
    space.input_vectors[center_id] -= lr * grad_center
    space.output_vectors[context_id] -= lr * grad_context
    # np.add.at accumulates correctly when a negative id is drawn twice
    np.add.at(space.output_vectors, negative_ids, -lr * grad_negatives)
    return loss


def _validate(config: TrainerConfig) -> None:
    if config.dim < 1:
        raise ConfigError("dim must be >= 1")
    if config.negatives < 1:
        raise ConfigError("negatives must be >= 1")
    if config.epochs < 0:
        raise ConfigError("epochs must be >= 0")
    if config.learning_rate <= 0:
        raise ConfigError("learning rate must be positive")
    if config.subsample < 0:
        raise ConfigError("subsample threshold must be >= 0")
    if config.min_count < 1:
        raise ConfigError("min_count must be >= 1")
    if config.threads < 1:
        raise ConfigError("threads must be >= 1")


def _noise_cumulative(vocab: Vocabulary) -> np.ndarray:
    """Cumulative negative-sampling distribution: unigram^0.75, words only."""
    probs = vocab.counts.astype(np.float64) ** 0.75
    frame_ids = frame_token_ids(vocab)
    probs[frame_ids] = 0.0
    mass = probs.sum()
    if mass == 0.0:
        raise EmptyVocabularyError("no word tokens available for negative sampling")
    return np.cumsum(probs / mass)


def _keep_probabilities(vocab: Vocabulary, subsample: float) -> np.ndarray | None:
    if subsample <= 0:
        return None
    freqs = vocab.counts / vocab.total
    keep = (np.sqrt(freqs / subsample) + 1.0) * subsample / freqs
    return np.minimum(keep, 1.0)


def _run_worker(
    space: EmbeddingSpace,
    window_ids: list[np.ndarray],
    noise_cum: np.ndarray,
    keep_prob: np.ndarray | None,
    config: TrainerConfig,
    rng: np.random.Generator,
) -> None:
    k = config.negatives
    lr0 = config.learning_rate
    total = max(1, config.epochs * len(window_ids))
    step = 0
    for _ in range(config.epochs):
        for ids in window_ids:
            lr = max(lr0 * (1.0 - step / total), lr0 * 1e-4)
            step += 1
            if keep_prob is not None:
                ids = ids[rng.random(ids.shape[0]) < keep_prob[ids]]
            n = ids.shape[0]
            if n < 2:
                continue
            negatives = np.searchsorted(
                noise_cum, rng.random((n * (n - 1), k)), side="right"
            )
            p = 0
            for i in range(n):
                for j in range(n):
                    if i == j:
                        continue
                    sgns_step(space, ids[i], ids[j], negatives[p], lr)
                    p += 1


def train(windows: Iterable[TrainingWindow], config: TrainerConfig) -> EmbeddingSpace:
    """Train a joint embedding space over the given windows.

    With ``config.threads == 1`` the result is a deterministic function of the
    windows and the seed.
    """
    _validate(config)
    windows = list(windows)
    vocab = build_vocab(windows, config.min_count)
    rng = np.random.default_rng(config.seed)
    space = _init_space(vocab, config.dim, rng)
    if config.epochs == 0:
        return space

    window_ids = []
    for w in windows:
        ids = [vocab.token_to_id[t] for t in (w.center, *w.context) if t in vocab]
        if len(ids) >= 2:
            window_ids.append(np.array(ids, dtype=np.int64))
    if not window_ids:
        return space
    noise_cum = _noise_cumulative(vocab)
    keep_prob = _keep_probabilities(vocab, config.subsample)

    if config.threads == 1:
        _run_worker(space, window_ids, noise_cum, keep_prob, config, rng)
        return space

    chunks = [window_ids[t::config.threads] for t in range(config.threads)]
    workers = [
        threading.Thread(
            target=_run_worker,
            args=(space, chunk, noise_cum, keep_prob, config,
                  np.random.default_rng([config.seed, t + 1])),
        )
        for t, chunk in enumerate(chunks)
        if chunk
    ]
    for worker in workers:
        worker.start()
    for worker in workers:
        worker.join()
    return space


def cosine(space: EmbeddingSpace, a: str, b: str) -> float:
    """Cosine similarity between two tokens' input vectors."""
    va, vb = space.vector(a), space.vector(b)
    na, nb = np.linalg.norm(va), np.linalg.norm(vb)
    if na == 0.0 or nb == 0.0:
        raise UndefinedSimilarityError(f"zero vector for {a!r} or {b!r}")
    return float(va @ vb / (na * nb))


def nearest(
    space: EmbeddingSpace,
    query: np.ndarray,
    k: int,
    exclusions: frozenset[str] | set[str] = frozenset(),
    include_frames: bool = False,
) -> list[tuple[str, float]]:
    """Top-k tokens by cosine to ``query``, exhaustive scan.

    Frame tokens are skipped unless ``include_frames``; zero-norm rows are
    never candidates.  Ties break toward the smaller token id.  Asking for
    more than the candidate pool returns the whole pool.
    """
    if k < 1:
        raise ConfigError("k must be >= 1")
    q = np.asarray(query, dtype=np.float64)
    q_norm = np.linalg.norm(q)
    if q_norm == 0.0:
        raise UndefinedSimilarityError("zero query vector")
    norms = np.linalg.norm(space.input_vectors, axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        sims = space.input_vectors @ q / (norms * q_norm)
    sims = np.where(norms == 0.0, -np.inf, sims)
    for token in exclusions:
        if token in space.vocab:
            sims[space.vocab.token_to_id[token]] = -np.inf
    if not include_frames:
        sims[frame_token_ids(space.vocab)] = -np.inf
    order = np.argsort(-sims, kind="stable")
    out = []
    for idx in order[: k if k < len(order) else len(order)]:
        if sims[idx] == -np.inf:
            break
        out.append((space.vocab.id_to_token[idx], float(sims[idx])))
    return out


def save_embeddings(space: EmbeddingSpace, sink: IO[str]) -> None:
    """Write EMB1 text: header ``<vocab_size> <dim>``, one token row per line."""
    sink.write(f"{len(space.vocab)} {space.dim}\n")
    for idx, token in enumerate(space.vocab.id_to_token):
        if any(ch.isspace() for ch in token):
            raise FormatError(f"token {token!r} contains whitespace")
        values = " ".join(f"{x:.6f}" for x in space.input_vectors[idx])
        sink.write(f"{token} {values}\n")


def load_embeddings(source: IO[str] | Iterable[str]) -> EmbeddingSpace:
    """Read EMB1 text back into a queryable space.

    EMB1 does not carry frequencies or output vectors: the loaded space is for
    similarity queries, not for resuming training.
    """
    lines = iter(source)
    try:
        header = next(lines)
    except StopIteration:
        raise FormatError("empty embedding file", line=1)
    parts = header.split()
    if len(parts) != 2:
        raise FormatError("header must be '<vocab_size> <dim>'", line=1)
    try:
        size, dim = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError("header must hold two integers", line=1)
    if size < 0 or dim < 1:
        raise FormatError("bad header dimensions", line=1)
    tokens: list[str] = []
    token_to_id: dict[str, int] = {}
    rows = np.zeros((size, dim))
    n = 0
    for lineno, raw in enumerate(lines, start=2):
        line = raw.rstrip("\n")
        if not line:
            continue
        fields = line.split(" ")
        if len(fields) != dim + 1:
            raise FormatError(
                f"expected token + {dim} values, got {len(fields) - 1}", line=lineno
            )
        if n >= size:
            raise FormatError("more rows than the header announced", line=lineno)
        token = fields[0]
        if token in token_to_id:
            raise FormatError(f"duplicate token {token!r}", line=lineno)
        try:
            rows[n] = [float(x) for x in fields[1:]]
        except ValueError:
            raise FormatError("non-numeric vector component", line=lineno)
        token_to_id[token] = n
        tokens.append(token)
        n += 1
    if n != size:
        raise FormatError(f"header announced {size} rows, file has {n}")
    vocab = Vocabulary(
        token_to_id=token_to_id,
        id_to_token=tokens,
        counts=np.ones(size, dtype=np.int64),
        total=size,
    )
    return EmbeddingSpace(
        dim=dim, input_vectors=rows, output_vectors=np.zeros((size, dim)), vocab=vocab
    )
