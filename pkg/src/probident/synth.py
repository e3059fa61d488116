"""Deterministic synthetic datasets for exercising the full pipeline.

Three kinds:
  blobs-K    K Gaussian clusters in 4 features, class ids as targets
  linreg     linear targets over 6 standard-normal features plus noise
  digits8x8  procedurally rendered 8x8 digit glyphs (10 classes) with
             pixel noise and one-pixel jitter; load with image shape 8,8,1
"""

from __future__ import annotations

import csv
import re

import numpy as np

BLOB_FEATURES = 4
BLOB_RADIUS = 5.0
LINREG_FEATURES = 6

# 8x8 glyphs with an empty one-pixel border so jitter never clips them.
_GLYPHS = [
    ("........",
     ".######.",
     ".#....#.",
     ".#....#.",
     ".#....#.",
     ".#....#.",
     ".######.",
     "........"),
    ("........",
     "...##...",
     "..###...",
     "...##...",
     "...##...",
     "...##...",
     "..####..",
     "........"),
    ("........",
     ".#####..",
     ".....#..",
     ".....#..",
     ".#####..",
     ".#......",
     ".######.",
     "........"),
    ("........",
     ".#####..",
     ".....#..",
     "..####..",
     ".....#..",
     ".....#..",
     ".#####..",
     "........"),
    ("........",
     ".#..#...",
     ".#..#...",
     ".#..#...",
     ".######.",
     "....#...",
     "....#...",
     "........"),
    ("........",
     ".######.",
     ".#......",
     ".#####..",
     ".....#..",
     ".....#..",
     ".#####..",
     "........"),
    ("........",
     "..####..",
     ".#......",
     ".#####..",
     ".#....#.",
     ".#....#.",
     ".#####..",
     "........"),
    ("........",
     ".######.",
     ".....#..",
     "....#...",
     "...#....",
     "..#.....",
     "..#.....",
     "........"),
    ("........",
     ".#####..",
     ".#...#..",
     ".#####..",
     ".#...#..",
     ".#...#..",
     ".#####..",
     "........"),
    ("........",
     ".#####..",
     ".#...#..",
     ".#####..",
     ".....#..",
     ".....#..",
     ".####...",
     "........"),
]


def generate(kind: str, n: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Return (features, targets) for the named kind."""
    if n < 2:
        raise ValueError("n must be >= 2")
    rng = np.random.default_rng(seed)
    m = re.fullmatch(r"blobs-(\d+)", kind)
    if m:
        k = int(m.group(1))
        if k < 2:
            raise ValueError("blobs need at least 2 classes")
        return _blobs(k, n, rng)
    if kind == "linreg":
        return _linreg(n, rng)
    if kind == "digits8x8":
        return _digits(n, rng)
    raise ValueError(f"unknown synthetic kind {kind!r}")


def write_csv(path: str, features: np.ndarray, targets: np.ndarray) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([f"f{i}" for i in range(features.shape[1])] + ["target"])
        for row, y in zip(features, targets):
            writer.writerow([repr(float(v)) for v in row] + [repr(float(y))])


def gen_synth(kind: str, n: int, seed: int, out_path: str) -> None:
    features, targets = generate(kind, n, seed)
    write_csv(out_path, features, targets)


def _blobs(k: int, n: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    angles = 2.0 * np.pi * np.arange(k) / k
    centers = np.zeros((k, BLOB_FEATURES))
    centers[:, 0] = BLOB_RADIUS * np.cos(angles)
    centers[:, 1] = BLOB_RADIUS * np.sin(angles)
    labels = np.arange(n) % k
    features = centers[labels] + rng.normal(0.0, 1.0, (n, BLOB_FEATURES))
    return features, labels.astype(float)


def _linreg(n: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    coef = rng.normal(0.0, 0.25, LINREG_FEATURES)
    features = rng.normal(0.0, 1.0, (n, LINREG_FEATURES))
    targets = features @ coef + rng.normal(0.0, 0.1, n)
    return features, targets


def _digits(n: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    stamps = np.array([[[1.0 if ch == "#" else 0.0 for ch in row] for row in glyph]
                       for glyph in _GLYPHS])
    labels = np.arange(n) % 10
    features = np.empty((n, 64))
    # one-pixel jitter on a minority of samples keeps classes clearly
    # separable while still varying glyph placement
    shifts = np.array([-1, 0, 1])
    shift_p = np.array([0.15, 0.7, 0.15])
    for i, label in enumerate(labels):
        img = stamps[label]
        dy = rng.choice(shifts, p=shift_p)
        dx = rng.choice(shifts, p=shift_p)
        img = np.roll(img, (dy, dx), axis=(0, 1))
        img = img + rng.normal(0.0, 0.1, (8, 8))
        features[i] = img.reshape(64)
    return features, labels.astype(float)
