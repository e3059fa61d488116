"""Activation functions and their backward passes.

Softmax operates over the last axis (one row per sample) and is computed
with max-subtraction so large inputs cannot overflow.
"""

from __future__ import annotations

import numpy as np

KINDS = ("linear", "relu", "sigmoid", "softmax")


def apply(kind: str, x: np.ndarray) -> np.ndarray:
    if kind == "linear":
        return x
    if kind == "relu":
        return np.maximum(x, 0.0)
    if kind == "sigmoid":
        return _sigmoid(x)
    if kind == "softmax":
        z = x - np.max(x, axis=-1, keepdims=True)
        e = np.exp(z)
        return e / np.sum(e, axis=-1, keepdims=True)
    raise ValueError(f"unknown activation: {kind!r}")


def backward(kind: str, pre: np.ndarray, out: np.ndarray, grad: np.ndarray) -> np.ndarray:
    """Gradient of the loss w.r.t. the pre-activation values.

    `pre` is the activation input, `out` its output and `grad` the
    upstream gradient w.r.t. `out`.
    """
    if kind == "linear":
        return grad
    if kind == "relu":
        return grad * (pre > 0)
    if kind == "sigmoid":
        return grad * out * (1.0 - out)
    if kind == "softmax":
        # Jacobian-vector product: s * (g - <g, s>)
        inner = np.sum(grad * out, axis=-1, keepdims=True)
        return out * (grad - inner)
    raise ValueError(f"unknown activation: {kind!r}")


def _sigmoid(x: np.ndarray) -> np.ndarray:
    # Evaluate through exp of a negative number on both branches so neither
    # side can overflow.
    out = np.empty_like(x, dtype=float)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    e = np.exp(x[~pos])
    out[~pos] = e / (1.0 + e)
    return out
