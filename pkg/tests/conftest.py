from pathlib import Path

import numpy as np
import pytest

from framemap.embeddings import EmbeddingSpace, Vocabulary

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def make_space(tokens, vectors) -> EmbeddingSpace:
    """Hand-authored embedding space for tests; output vectors zero."""
    arr = np.asarray(vectors, dtype=np.float64)
    assert arr.shape[0] == len(tokens)
    vocab = Vocabulary(
        token_to_id={t: i for i, t in enumerate(tokens)},
        id_to_token=list(tokens),
        counts=np.ones(len(tokens), dtype=np.int64),
        total=len(tokens),
    )
    return EmbeddingSpace(
        dim=arr.shape[1],
        input_vectors=arr,
        output_vectors=np.zeros_like(arr),
        vocab=vocab,
    )


def random_space(tokens, dim, seed) -> EmbeddingSpace:
    rng = np.random.default_rng(seed)
    return make_space(tokens, rng.normal(size=(len(tokens), dim)))
