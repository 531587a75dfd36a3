"""Sentence encoders behind a single ``encode(texts) -> matrix`` interface.

Two families of model identifier:

* ``hash:<dim>`` — a deterministic feature-hashing encoder that needs no
  weights or network access.  Character n-grams and word unigrams are hashed
  into ``dim`` signed buckets and L2-normalized.  Not a semantic model, but
  stable, fast, and honest about it; good enough to exercise the SEB1
  pipeline end to end.
* anything else — treated as a sentence-transformers model id and loaded
  lazily; load failures surface as ``AdapterError``.
"""

from __future__ import annotations

import hashlib

import numpy as np


class AdapterError(Exception):
    pass


def _bucket(feature: str, dim: int) -> tuple[int, float]:
    digest = hashlib.blake2b(feature.encode("utf-8"), digest_size=8).digest()
    value = int.from_bytes(digest, "big")
    sign = 1.0 if value & 1 else -1.0
    return (value >> 1) % dim, sign


class HashingEncoder:
    """Deterministic hashing encoder; unit-norm output, advertised dimension."""

    def __init__(self, dim: int = 256):
        if dim < 8:
            raise AdapterError("hashing encoder needs dim >= 8")
        self.dim = dim

    def _features(self, text: str):
        text = " ".join(text.lower().split())
        for word in text.split(" "):
            if word:
                yield "w:" + word
        padded = f" {text} "
        for n in (3, 4, 5):
            for i in range(max(0, len(padded) - n + 1)):
                yield f"c{n}:" + padded[i:i + n]

    def encode(self, texts: list[str]) -> np.ndarray:
        out = np.zeros((len(texts), self.dim))
        for row, text in enumerate(texts):
            seen_any = False
            for feature in self._features(text):
                idx, sign = _bucket(feature, self.dim)
                out[row, idx] += sign
                seen_any = True
            if not seen_any:
                out[row, _bucket("empty-sentence", self.dim)[0]] = 1.0
            norm = np.linalg.norm(out[row])
            if norm == 0.0:
                out[row, 0] = 1.0
                norm = 1.0
            out[row] /= norm
        return out


class TransformerEncoder:
    """Thin wrapper over sentence-transformers; import deferred until use."""

    def __init__(self, model_id: str):
        try:
            from sentence_transformers import SentenceTransformer
        except ImportError as exc:
            raise AdapterError(f"sentence-transformers unavailable: {exc}")
        try:
            self._model = SentenceTransformer(model_id)
        except Exception as exc:
            raise AdapterError(f"cannot load model {model_id!r}: {exc}")
        self.dim = int(self._model.get_sentence_embedding_dimension())

    def encode(self, texts: list[str]) -> np.ndarray:
        vectors = self._model.encode(
            texts, convert_to_numpy=True, normalize_embeddings=True
        )
        return np.asarray(vectors, dtype=np.float64).reshape(len(texts), self.dim)


def load_encoder(model_id: str):
    if model_id.startswith("hash:"):
        try:
            dim = int(model_id.split(":", 1)[1])
        except ValueError:
            raise AdapterError(f"bad hashing spec {model_id!r}, want hash:<dim>")
        return HashingEncoder(dim)
    return TransformerEncoder(model_id)
