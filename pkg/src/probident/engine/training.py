"""Fixed-epoch training loop that records the validation-loss trace.

The trace starts with the validation loss measured before any update, so
e epochs yield e + 1 entries. If any batch or validation loss turns
non-finite the loop aborts and appends nan, leaving a trace that fails
an all-finite check; callers treat such networks as not having learned.
"""

from __future__ import annotations

import math

import numpy as np

from probident.config import NnParams
from probident.engine.adam import Adam
from probident.engine.network import Network


def train(net: Network, x_train: np.ndarray, y_train: np.ndarray,
          x_val: np.ndarray, y_val: np.ndarray, params: NnParams,
          rng: np.random.Generator) -> tuple[Network, list[float]]:
    n = x_train.shape[0]
    batch = min(params.batch_size, n)
    optimizer = Adam(net.params(), lr=params.learning_rate)

    trace = [net.loss_value(y_val, net.predict(x_val))]
    if not math.isfinite(trace[0]):
        trace.append(math.nan)
        return net, trace

    for _ in range(params.epochs):
        order = rng.permutation(n)
        for start in range(0, n, batch):
            idx = order[start:start + batch]
            pred = net.forward(x_train[idx], training=True, rng=rng)
            loss = net.loss_value(y_train[idx], pred)
            if not math.isfinite(loss):
                trace.append(math.nan)
                return net, trace
            net.backward(net.loss_grad(y_train[idx], pred))
            optimizer.step(net.grads())
        val_loss = net.loss_value(y_val, net.predict(x_val))
        trace.append(val_loss)
        if not math.isfinite(val_loss):
            return net, trace
    return net, trace
