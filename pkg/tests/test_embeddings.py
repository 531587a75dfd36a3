import io
import math
from collections import Counter

import numpy as np
import pytest

from framemap.corpus import TrainingWindow, extract_window, frame_token, is_frame_token, parse_ftc, substitute_frame_label
from framemap.embeddings import (
    TrainerConfig,
    build_vocab,
    cosine,
    load_embeddings,
    nearest,
    save_embeddings,
    sgns_gradients,
    sgns_step,
    train,
)
from framemap.errors import (
    ConfigError,
    EmptyVocabularyError,
    FormatError,
    UndefinedSimilarityError,
    UnknownTokenError,
)

from conftest import make_space, random_space


def test_vocab_prunes_rare_tokens():
    windows = [TrainingWindow("x", ["y", "y"]) for _ in range(3)]
    vocab = build_vocab(windows, min_count=5)
    assert "x" not in vocab
    assert "y" in vocab  # 6 occurrences
    with pytest.raises(EmptyVocabularyError):
        build_vocab([], min_count=1)
    with pytest.raises(EmptyVocabularyError):
        build_vocab(windows, min_count=100)


def test_vocab_keeps_frame_tokens_regardless_of_frequency():
    windows = [TrainingWindow("__frame__:death", ["a"] * 4) for _ in range(2)]
    vocab = build_vocab(windows, min_count=5)
    assert "__frame__:death" in vocab
    assert "a" in vocab  # 8 occurrences
    assert vocab.frequency("a") == 8


def test_vocab_matches_independent_tally(fixtures_dir):
    with open(fixtures_dir / "mini_corpus.ftc") as f:
        sentences = parse_ftc(f)
    windows = [
        substitute_frame_label(extract_window(s), s.frame_label) for s in sentences
    ]
    vocab = build_vocab(windows, min_count=1)
    tally = Counter()
    for w in windows:
        tally[w.center] += 1
        tally.update(w.context)
    assert len(vocab) == len(tally)
    assert all(vocab.frequency(t) == c for t, c in tally.items())


def test_zero_vectors_loss_is_log2_per_term():
    space = make_space([f"t{i}" for i in range(8)], np.zeros((8, 4)))
    loss = sgns_step(space, 0, 1, [2, 3, 4, 5, 6], lr=0.0)
    assert loss == pytest.approx(6 * math.log(2), rel=1e-12)


def test_gradients_match_finite_differences():
    space = random_space([f"t{i}" for i in range(10)], 10, seed=4)
    space.output_vectors = np.random.default_rng(5).normal(size=(10, 10))
    negs = [3, 4, 5]
    loss, g_center, g_ctx, g_negs = sgns_gradients(space, 0, 1, negs)
    h = 1e-6

    def fd(matrix, row):
        grad = np.zeros(space.dim)
        for d in range(space.dim):
            matrix[row, d] += h
            up = sgns_gradients(space, 0, 1, negs)[0]
            matrix[row, d] -= 2 * h
            down = sgns_gradients(space, 0, 1, negs)[0]
            matrix[row, d] += h
            grad[d] = (up - down) / (2 * h)
        return grad

    assert np.allclose(fd(space.input_vectors, 0), g_center, atol=1e-7)
    assert np.allclose(fd(space.output_vectors, 1), g_ctx, atol=1e-7)
    for r, nid in enumerate(negs):
        assert np.allclose(fd(space.output_vectors, nid), g_negs[r], atol=1e-7)


def test_step_decreases_loss():
    space = random_space([f"t{i}" for i in range(10)], 10, seed=6)
    space.output_vectors = np.random.default_rng(7).normal(size=(10, 10))
    before = sgns_step(space, 0, 1, [2, 3, 4], lr=0.01)
    after = sgns_gradients(space, 0, 1, [2, 3, 4])[0]
    assert after < before


def test_duplicate_negatives_accumulate():
    space = random_space(["a", "b", "c"], 6, seed=8)
    space.output_vectors = np.random.default_rng(9).normal(size=(3, 6))
    twin = make_space(["a", "b", "c"], space.input_vectors.copy())
    twin.output_vectors = space.output_vectors.copy()
    _, _, _, g_negs = sgns_gradients(space, 0, 1, [2, 2])
    sgns_step(space, 0, 1, [2, 2], lr=0.5)
    manual = twin.output_vectors[2] - 0.5 * (g_negs[0] + g_negs[1])
    assert np.allclose(space.output_vectors[2], manual)


def _clique_windows(n_windows, seed):
    rng = np.random.default_rng(seed)
    windows = []
    for _ in range(n_windows):
        clique = ["a", "b", "c"] if rng.random() < 0.5 else ["d", "e", "f"]
        order = [clique[i] for i in rng.permutation(3)]
        windows.append(TrainingWindow(order[0], order[1:]))
    return windows


def test_disjoint_cliques_separate():
    config = TrainerConfig(dim=16, epochs=5, learning_rate=0.05, seed=3)
    space = train(_clique_windows(2000, seed=0), config)
    within = [cosine(space, a, b) for a, b in
              [("a", "b"), ("a", "c"), ("b", "c"), ("d", "e"), ("d", "f"), ("e", "f")]]
    cross = [cosine(space, a, b) for a in "abc" for b in "def"]
    assert min(within) > max(cross)


def test_zero_epochs_returns_initialized_space():
    config = TrainerConfig(dim=8, epochs=0, seed=1)
    space = train(_clique_windows(50, seed=1), config)
    assert not space.output_vectors.any()
    bound = 0.5 / config.dim
    assert np.all(np.abs(space.input_vectors) <= bound)
    assert space.input_vectors.any()


def test_same_seed_single_thread_is_bit_identical():
    windows = _clique_windows(200, seed=2)
    config = TrainerConfig(dim=12, epochs=2, seed=42)
    a = train(windows, config)
    b = train(windows, config)
    assert np.array_equal(a.input_vectors, b.input_vectors)
    assert np.array_equal(a.output_vectors, b.output_vectors)


def test_multithreaded_training_runs():
    # racy mode is allowed to be nondeterministic; it must still produce a
    # usable space over the full vocabulary
    config = TrainerConfig(dim=8, epochs=1, seed=5, threads=3)
    space = train(_clique_windows(300, seed=4), config)
    assert np.all(np.isfinite(space.input_vectors))
    assert space.output_vectors.any()
    assert len(space.vocab) == 6


def test_config_validation():
    with pytest.raises(ConfigError):
        train([TrainingWindow("a", ["b"])], TrainerConfig(dim=0))
    with pytest.raises(ConfigError):
        train([TrainingWindow("a", ["b"])], TrainerConfig(negatives=0))
    with pytest.raises(ConfigError):
        train([TrainingWindow("a", ["b"])], TrainerConfig(learning_rate=0.0))


def test_cosine_hand_values():
    space = make_space(["x", "y", "z", "w"], [[1, 2], [2, 4], [2, -1], [0, 0]])
    assert cosine(space, "x", "x") == pytest.approx(1.0)
    assert cosine(space, "x", "z") == pytest.approx(0.0, abs=1e-12)
    assert cosine(space, "x", "y") == pytest.approx(1.0)
    with pytest.raises(UnknownTokenError):
        cosine(space, "x", "missing")
    with pytest.raises(UndefinedSimilarityError):
        cosine(space, "x", "w")


def test_nearest_self_and_exclusions():
    space = random_space([f"t{i}" for i in range(20)], 8, seed=11)
    query = space.vector("t7")
    assert nearest(space, query, k=1)[0][0] == "t7"
    assert nearest(space, query, k=1, exclusions={"t7"})[0][0] != "t7"


def test_nearest_excludes_frame_tokens_by_default():
    tokens = ["w1", "w2", frame_token("death")]
    space = make_space(tokens, [[1, 0], [0, 1], [1, 0.01]])
    got = [t for t, _ in nearest(space, np.array([1.0, 0.0]), k=3)]
    assert got == ["w1", "w2"]
    with_frames = [t for t, _ in nearest(space, np.array([1.0, 0.0]), k=3, include_frames=True)]
    assert frame_token("death") in with_frames


def test_nearest_k_larger_than_pool_returns_all():
    space = make_space(["a", "b"], [[1, 0], [0, 1]])
    assert len(nearest(space, np.array([1.0, 1.0]), k=10)) == 2


def test_nearest_cosines_non_increasing():
    space = random_space([f"t{i}" for i in range(30)], 6, seed=12)
    results = nearest(space, np.random.default_rng(0).normal(size=6), k=30)
    sims = [s for _, s in results]
    assert all(a >= b for a, b in zip(sims, sims[1:]))


def test_nearest_agrees_with_exhaustive_scan():
    tokens = [f"t{i}" for i in range(50)]
    space = random_space(tokens, 10, seed=13)
    rng = np.random.default_rng(14)
    for _ in range(100):
        query = rng.normal(size=10)
        got = nearest(space, query, k=5)
        # independent scan: plain python cosine, sort by (-cos, id)
        scored = []
        for idx, tok in enumerate(tokens):
            v = space.input_vectors[idx]
            c = float(v @ query) / (math.sqrt(float(v @ v)) * math.sqrt(float(query @ query)))
            scored.append((-c, idx, tok))
        scored.sort()
        want = [(tok, -negc) for negc, _, tok in scored[:5]]
        assert [t for t, _ in got] == [t for t, _ in want]
        assert np.allclose([s for _, s in got], [s for _, s in want])


def test_vocab_partition_word_xor_frame():
    with open("tests/fixtures/mini_corpus.ftc") as f:
        sentences = parse_ftc(f)
    windows = [substitute_frame_label(extract_window(s), s.frame_label) for s in sentences]
    vocab = build_vocab(windows, 1)
    for token in vocab.id_to_token:
        assert is_frame_token(token) == token.startswith("__frame__:")


def test_save_load_roundtrip_within_tolerance():
    space = random_space([f"t{i}" for i in range(20)], 7, seed=15)
    sink = io.StringIO()
    save_embeddings(space, sink)
    again = load_embeddings(io.StringIO(sink.getvalue()))
    assert again.vocab.id_to_token == space.vocab.id_to_token
    assert np.max(np.abs(again.input_vectors - space.input_vectors)) <= 1e-6


def test_load_truncated_file_fails():
    space = random_space(["a", "b", "c"], 4, seed=16)
    sink = io.StringIO()
    save_embeddings(space, sink)
    lines = sink.getvalue().splitlines(keepends=True)
    with pytest.raises(FormatError):
        load_embeddings(io.StringIO("".join(lines[:-1])))


def test_load_fixture_header_100x50(tmp_path):
    space = random_space([f"tok{i}" for i in range(100)], 50, seed=17)
    path = tmp_path / "big.emb"
    with open(path, "w") as f:
        save_embeddings(space, f)
    with open(path) as f:
        assert f.readline() == "100 50\n"
    with open(path) as f:
        loaded = load_embeddings(f)
    assert loaded.input_vectors.shape == (100, 50)
    assert loaded.dim == 50
