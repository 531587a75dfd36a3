#!/usr/bin/env python3
"""Track the intrinsic frame metrics as training data grows.

Builds a synthetic clustered corpus (frames with exclusive vocabularies,
related frames sharing them), trains embedding spaces on increasing window
counts, and prints one lex/str row per corpus size.  The structural signal
needs noticeably more data than the lexical one, which is easy to see here.

Usage: scripts/scaling_curves.py [--dim 25] [--seed 9] [--sizes 500,1000,...]
"""

import argparse

import numpy as np

from framemap.corpus import TrainingWindow, frame_token
from framemap.embeddings import TrainerConfig, train
from framemap.frame_metrics import MetricConfig, evaluate_space
from framemap.inventory import Frame, FrameInventory, FrameRelation


def build_corpus(n_windows, rng):
    groups = [[f"g{g}f{i}" for i in range(3)] for g in range(4)]
    vocab = {g: [f"g{g}w{j}" for j in range(15)] for g in range(4)}
    windows = []
    for _ in range(n_windows):
        g = int(rng.integers(4))
        frame = groups[g][int(rng.integers(3))]
        picks = rng.choice(15, size=5, replace=False)
        windows.append(TrainingWindow(frame_token(frame), [vocab[g][i] for i in picks]))
    frames = {
        f: Frame(f, {(w, "v") for w in vocab[g]})
        for g, group in enumerate(groups)
        for f in group
    }
    relations = []
    for group in groups:
        relations += [
            FrameRelation(group[0], "uses", group[1]),
            FrameRelation(group[1], "uses", group[2]),
            FrameRelation(group[0], "uses", group[2]),
        ]
    return windows, FrameInventory(frames=frames, relations=relations)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dim", type=int, default=25)
    parser.add_argument("--epochs", type=int, default=2)
    parser.add_argument("--seed", type=int, default=9)
    parser.add_argument("--sizes", default="500,1000,2000,4000,8000,16000")
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    print("windows\tmean_lex\tmean_str")
    for size in sizes:
        rng = np.random.default_rng(args.seed)
        windows, inv = build_corpus(size, rng)
        config = TrainerConfig(
            dim=args.dim, epochs=args.epochs, learning_rate=0.05, seed=args.seed
        )
        space = train(windows, config)
        report = evaluate_space(space, inv, MetricConfig(sample_size=100, seed=args.seed))
        print(f"{size}\t{report.mean_lex:.4f}\t{report.mean_str:.4f}")


if __name__ == "__main__":
    main()
