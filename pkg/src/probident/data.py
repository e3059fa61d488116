"""Dataset loading and preprocessing.

CSV files must carry a header row and contain only numeric cells; rows
with missing values are rejected (imputation is out of scope). Features
are standardized per column using training-set statistics. Targets are
kept raw and additionally one-hot encoded against the distinct target
values of the full dataset, counted before any splitting or subsampling.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

MAX_SPLIT_SAMPLES = 1000


class DataError(Exception):
    """Unusable input data (missing values, parse failures, bad shapes)."""


@dataclass
class RawTable:
    """Parsed but unprocessed data: features, targets, optional image shape."""

    features: np.ndarray            # (n, f)
    targets: np.ndarray             # (n,)
    image_shape: tuple[int, int, int] | None = None

    def __post_init__(self) -> None:
        if self.features.ndim != 2 or self.targets.ndim != 1:
            raise DataError("features must be 2-d and targets 1-d")
        if self.features.shape[0] != self.targets.shape[0]:
            raise DataError("feature and target row counts differ")
        if self.features.shape[0] < 2:
            raise DataError("need at least 2 samples")
        if self.image_shape is not None:
            h, w, c = self.image_shape
            if h < 1 or w < 1 or c < 1:
                raise DataError(f"bad image shape {self.image_shape}")
            if h * w * c != self.features.shape[1]:
                raise DataError(
                    f"image shape {self.image_shape} needs {h * w * c} features, "
                    f"found {self.features.shape[1]}")


@dataclass
class Dataset:
    """Preprocessed, immutable train/validation data."""

    x_train: np.ndarray
    x_val: np.ndarray
    y_train: np.ndarray             # raw target values
    y_val: np.ndarray
    y_train_onehot: np.ndarray      # (n_train, n_unique)
    y_val_onehot: np.ndarray
    n_unique: int                   # distinct target values over ALL samples
    input_kind: str                 # "flat" | "image"
    n_total: int
    n_features: int

    @property
    def input_shape(self) -> tuple[int, ...]:
        return self.x_train.shape[1:]


def load_csv(path: str, target_column: str, image_shape: tuple[int, int, int] | None = None) -> RawTable:
    """Read a headered numeric CSV, splitting off the named target column.

    `target_column` may also be a column index given as a digit string.
    """
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise DataError(f"cannot open {path}: {exc}") from exc
    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"{path} is empty") from None
        header = [h.strip() for h in header]
        if target_column in header:
            target_idx = header.index(target_column)
        elif target_column.lstrip("-").isdigit() and 0 <= int(target_column) < len(header):
            target_idx = int(target_column)
        else:
            raise DataError(f"target column {target_column!r} not found in {header}")

        features: list[list[float]] = []
        targets: list[float] = []
        for row_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise DataError(f"{path}:{row_no}: expected {len(header)} cells, got {len(row)}")
            values: list[float] = []
            for col, cell in enumerate(row):
                cell = cell.strip()
                if cell == "":
                    raise DataError(
                        f"{path}:{row_no}: missing value in column {header[col]!r} "
                        "(imputation out of scope)")
                try:
                    values.append(float(cell))
                except ValueError:
                    raise DataError(
                        f"{path}:{row_no}: non-numeric cell {cell!r} in column {header[col]!r}"
                    ) from None
            targets.append(values.pop(target_idx))
            features.append(values)

    if not features:
        raise DataError(f"{path} has no data rows")
    return RawTable(np.array(features, dtype=float), np.array(targets, dtype=float), image_shape)


def unique_targets(targets: np.ndarray) -> int:
    """Number of distinct values, by exact equality on the parsed numbers."""
    if targets.size == 0:
        raise ValueError("empty target vector")
    return int(np.unique(targets).size)


def one_hot(targets: np.ndarray, n_unique: int, value_index: dict[float, int]) -> np.ndarray:
    out = np.zeros((targets.shape[0], n_unique))
    for i, value in enumerate(targets):
        try:
            out[i, value_index[float(value)]] = 1.0
        except KeyError:
            raise ValueError(f"target value {value!r} not in the index map") from None
    return out


def standardize(x_train: np.ndarray, x_val: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(x - mean) / std per feature, with statistics from the training set only.

    Constant features map to zero instead of dividing by zero.
    """
    mean = x_train.mean(axis=0)
    std = x_train.std(axis=0)
    scale = np.where(std == 0.0, 1.0, std)
    out_train = (x_train - mean) / scale
    out_val = (x_val - mean) / scale
    zero = std == 0.0
    if zero.any():
        out_train[:, zero] = 0.0
        out_val[:, zero] = 0.0
    return out_train, out_val


def split(raw: RawTable, seed: int) -> Dataset:
    """Shuffle, split 50/50 (capped at 1000/1000), standardize, encode.

    The distinct-value count and one-hot index map are computed over all
    samples before splitting, so both splits share the same encoding even
    when a value is absent from one of them.
    """
    n = raw.features.shape[0]
    values = np.unique(raw.targets)
    n_unique = int(values.size)
    value_index = {float(v): i for i, v in enumerate(values)}

    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    if n >= 2 * MAX_SPLIT_SAMPLES:
        n_train = n_val = MAX_SPLIT_SAMPLES
    else:
        n_train = (n + 1) // 2
        n_val = n - n_train
    train_idx = order[:n_train]
    val_idx = order[n_train:n_train + n_val]

    x_train, x_val = standardize(raw.features[train_idx], raw.features[val_idx])
    y_train = raw.targets[train_idx]
    y_val = raw.targets[val_idx]

    input_kind = "flat"
    if raw.image_shape is not None:
        h, w, c = raw.image_shape
        x_train = x_train.reshape(n_train, h, w, c)
        x_val = x_val.reshape(n_val, h, w, c)
        input_kind = "image"

    return Dataset(
        x_train=x_train,
        x_val=x_val,
        y_train=y_train,
        y_val=y_val,
        y_train_onehot=one_hot(y_train, n_unique, value_index),
        y_val_onehot=one_hot(y_val, n_unique, value_index),
        n_unique=n_unique,
        input_kind=input_kind,
        n_total=n,
        n_features=raw.features.shape[1],
    )
