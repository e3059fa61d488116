"""A network is an ordered layer list plus the loss it trains with."""

from __future__ import annotations

import numpy as np

from probident.engine.layers import Layer
from probident.engine.losses import LOSSES


class Network:
    def __init__(self, layers: list[Layer], loss: str, input_shape: tuple[int, ...]) -> None:
        if loss not in LOSSES:
            raise ValueError(f"unknown loss: {loss!r}")
        self.layers = layers
        self.loss = loss
        self.input_shape = input_shape

    def forward(self, x: np.ndarray, training: bool = False,
                rng: np.random.Generator | None = None) -> np.ndarray:
        if x.shape[1:] != self.input_shape:
            raise ValueError(f"input shape {x.shape[1:]} does not match {self.input_shape}")
        out = x
        for layer in self.layers:
            out = layer.forward(out, training=training, rng=rng)
        return out

    def backward(self, grad: np.ndarray) -> np.ndarray:
        for layer in reversed(self.layers):
            grad = layer.backward(grad)
        return grad

    def predict(self, x: np.ndarray) -> np.ndarray:
        return self.forward(x, training=False)

    def loss_value(self, y: np.ndarray, y_pred: np.ndarray) -> float:
        return LOSSES[self.loss][0](y, y_pred)

    def loss_grad(self, y: np.ndarray, y_pred: np.ndarray) -> np.ndarray:
        return LOSSES[self.loss][1](y, y_pred)

    def params(self) -> list[np.ndarray]:
        out: list[np.ndarray] = []
        for layer in self.layers:
            out.extend(layer.params())
        return out

    def grads(self) -> list[np.ndarray]:
        out: list[np.ndarray] = []
        for layer in self.layers:
            out.extend(layer.grads())
        return out
