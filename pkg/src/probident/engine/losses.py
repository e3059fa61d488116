"""Loss functions with gradients.

Mean squared error sums squared differences over output components and
averages over samples (the first axis). Categorical cross entropy sums
over samples; predictions are clipped to [1e-7, 1] before the log so a
confidently wrong network yields a large finite loss instead of inf.
"""

from __future__ import annotations

import numpy as np

CLIP_LO = 1e-7
CLIP_HI = 1.0


def mse_loss(y: np.ndarray, y_pred: np.ndarray) -> float:
    if y.shape != y_pred.shape:
        raise ValueError(f"shape mismatch: {y.shape} vs {y_pred.shape}")
    n = y.shape[0]
    return float(np.sum((y - y_pred) ** 2) / n)


def mse_grad(y: np.ndarray, y_pred: np.ndarray) -> np.ndarray:
    if y.shape != y_pred.shape:
        raise ValueError(f"shape mismatch: {y.shape} vs {y_pred.shape}")
    return 2.0 * (y_pred - y) / y.shape[0]


def cce_loss(y_onehot: np.ndarray, y_pred: np.ndarray) -> float:
    if y_onehot.shape != y_pred.shape:
        raise ValueError(f"shape mismatch: {y_onehot.shape} vs {y_pred.shape}")
    clipped = np.clip(y_pred, CLIP_LO, CLIP_HI)
    return float(-np.sum(y_onehot * np.log(clipped)))


def cce_grad(y_onehot: np.ndarray, y_pred: np.ndarray) -> np.ndarray:
    if y_onehot.shape != y_pred.shape:
        raise ValueError(f"shape mismatch: {y_onehot.shape} vs {y_pred.shape}")
    clipped = np.clip(y_pred, CLIP_LO, CLIP_HI)
    grad = -y_onehot / clipped
    # Predictions in the clipped region are locally constant.
    grad[(y_pred < CLIP_LO) | (y_pred > CLIP_HI)] = 0.0
    return grad


LOSSES = {
    "mse": (mse_loss, mse_grad),
    "cce": (cce_loss, cce_grad),
}
