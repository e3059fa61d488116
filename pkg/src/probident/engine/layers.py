"""Network layers with forward and backward passes.

Convention: spatial tensors are NHWC (batch, height, width, channels),
flat tensors are (batch, features). Convolution and max pooling use 2x2
windows with stride 1 and no padding, so each application shrinks both
spatial dimensions by one. Every layer caches what its backward pass
needs during forward; backward returns the gradient w.r.t. the layer
input and stores parameter gradients on the layer.
"""

from __future__ import annotations

import numpy as np

from probident.engine import activations


def init_weights(shape, rng: np.random.Generator, mean: float = 0.0, std: float = 0.01) -> np.ndarray:
    """Gaussian weight draws; biases are initialized to zero elsewhere."""
    return rng.normal(mean, std, size=shape)


class Layer:
    kind = "layer"

    def forward(self, x: np.ndarray, training: bool = False, rng: np.random.Generator | None = None) -> np.ndarray:
        raise NotImplementedError

    def backward(self, grad: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def params(self) -> list[np.ndarray]:
        return []

    def grads(self) -> list[np.ndarray]:
        return []


class Dense(Layer):
    """Fully connected layer with a built-in activation."""

    kind = "dense"

    def __init__(self, n_in: int, n_out: int, activation: str, rng: np.random.Generator,
                 mean: float = 0.0, std: float = 0.01) -> None:
        if activation not in activations.KINDS:
            raise ValueError(f"unknown activation: {activation!r}")
        self.n_in = n_in
        self.n_out = n_out
        self.activation = activation
        self.w = init_weights((n_in, n_out), rng, mean, std)
        self.b = np.zeros(n_out)
        self.gw = np.zeros_like(self.w)
        self.gb = np.zeros_like(self.b)
        self._x = None
        self._z = None
        self._out = None

    def forward(self, x, training=False, rng=None):
        z = x @ self.w + self.b
        out = activations.apply(self.activation, z)
        self._x, self._z, self._out = x, z, out
        return out

    def backward(self, grad):
        gz = activations.backward(self.activation, self._z, self._out, grad)
        self.gw = self._x.T @ gz
        self.gb = gz.sum(axis=0)
        return gz @ self.w.T

    def params(self):
        return [self.w, self.b]

    def grads(self):
        return [self.gw, self.gb]


class Conv2D(Layer):
    """2D convolution (valid padding, stride 1) followed by relu.

    Weights have shape (k, k, c_in, filters). The forward pass gathers
    all k x k windows into a matrix so the contraction runs as a single
    matmul.
    """

    kind = "conv"

    def __init__(self, c_in: int, filters: int, size: int, rng: np.random.Generator,
                 mean: float = 0.0, std: float = 0.01) -> None:
        self.c_in = c_in
        self.filters = filters
        self.size = size
        self.w = init_weights((size, size, c_in, filters), rng, mean, std)
        self.b = np.zeros(filters)
        self.gw = np.zeros_like(self.w)
        self.gb = np.zeros_like(self.b)
        self._cols = None
        self._z = None
        self._x_shape = None

    def forward(self, x, training=False, rng=None):
        n, h, w, c = x.shape
        k = self.size
        ho, wo = h - k + 1, w - k + 1
        win = np.lib.stride_tricks.sliding_window_view(x, (k, k), axis=(1, 2))
        # (n, ho, wo, c, k, k) -> (n*ho*wo, k*k*c) matching w.reshape(k*k*c, f)
        cols = np.ascontiguousarray(win.transpose(0, 1, 2, 4, 5, 3)).reshape(n * ho * wo, k * k * c)
        z = cols @ self.w.reshape(k * k * c, self.filters) + self.b
        z = z.reshape(n, ho, wo, self.filters)
        self._cols, self._z, self._x_shape = cols, z, x.shape
        return np.maximum(z, 0.0)

    def backward(self, grad):
        n, ho, wo, f = grad.shape
        k, c = self.size, self.c_in
        gz = (grad * (self._z > 0)).reshape(n * ho * wo, f)
        self.gb = gz.sum(axis=0)
        self.gw = (self._cols.T @ gz).reshape(k, k, c, f)
        # Scatter column gradients back onto the (overlapping) input windows.
        gcols = (gz @ self.w.reshape(k * k * c, f).T).reshape(n, ho, wo, k, k, c)
        gx = np.zeros(self._x_shape)
        for u in range(k):
            for v in range(k):
                gx[:, u:u + ho, v:v + wo, :] += gcols[:, :, :, u, v, :]
        return gx

    def params(self):
        return [self.w, self.b]

    def grads(self):
        return [self.gw, self.gb]


class MaxPool2D(Layer):
    """2D max pooling with a 2x2 window and stride 1."""

    kind = "maxpool"

    def __init__(self, size: int = 2) -> None:
        self.size = size
        self._argmax = None
        self._x_shape = None

    def forward(self, x, training=False, rng=None):
        k = self.size
        win = np.lib.stride_tricks.sliding_window_view(x, (k, k), axis=(1, 2))
        n, ho, wo, c = win.shape[:4]
        flat = win.reshape(n, ho, wo, c, k * k)
        self._argmax = flat.argmax(axis=-1)
        self._x_shape = x.shape
        return flat.max(axis=-1)

    def backward(self, grad):
        k = self.size
        n, ho, wo, c = grad.shape
        gx = np.zeros(self._x_shape)
        for p in range(k * k):
            u, v = divmod(p, k)
            gx[:, u:u + ho, v:v + wo, :] += grad * (self._argmax == p)
        return gx


class Dropout(Layer):
    """Inverted dropout: active only while training, exact identity otherwise."""

    kind = "dropout"

    def __init__(self, keep: float = 0.8) -> None:
        self.keep = keep
        self._mask = None

    def forward(self, x, training=False, rng=None):
        if not training:
            self._mask = None
            return x
        if rng is None:
            raise ValueError("dropout needs an rng while training")
        self._mask = (rng.random(x.shape) < self.keep) / self.keep
        return x * self._mask

    def backward(self, grad):
        if self._mask is None:
            return grad
        return grad * self._mask


class Flatten(Layer):
    kind = "flatten"

    def __init__(self) -> None:
        self._x_shape = None

    def forward(self, x, training=False, rng=None):
        self._x_shape = x.shape
        return x.reshape(x.shape[0], -1)

    def backward(self, grad):
        return grad.reshape(self._x_shape)
