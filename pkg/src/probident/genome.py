"""The four-gene chromosome and its compilation into a network.

Genes: training loss ("mse" | "cce"), output-layer unit count (1 or the
dataset's distinct-target count), output-layer activation, and the layer
configuration -- a list of integer codes (0 convolution, 1 fully
connected, 2 dropout, 3 max pooling) read left to right.

Compilation is total: every chromosome yields either a shape-consistent
Network or an InvalidNetwork carrying a machine-readable reason.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np

from probident.config import NnParams
from probident.data import Dataset
from probident.engine.layers import Conv2D, Dense, Dropout, Flatten, MaxPool2D
from probident.engine.network import Network

CODE_CONV = 0
CODE_DENSE = 1
CODE_DROPOUT = 2
CODE_POOL = 3

LOSSES = ("mse", "cce")
ACTIVATIONS = ("linear", "relu", "sigmoid", "softmax")

MIN_CONFIG_LEN = 5
MAX_CONFIG_LEN = 15

# Invalid-network reason codes.
SPATIAL_ON_FLAT = "spatial-on-flat"
SPATIAL_AFTER_FLATTEN = "spatial-after-flatten"
SPATIAL_UNDERFLOW = "spatial-underflow"
CCE_SINGLE_OUTPUT = "cce-single-output"


@dataclass
class Chromosome:
    loss: str
    units: int
    activation: str
    configuration: list[int]
    fitness: float = math.inf

    def __post_init__(self) -> None:
        if self.loss not in LOSSES:
            raise ValueError(f"unknown loss gene: {self.loss!r}")
        if self.activation not in ACTIVATIONS:
            raise ValueError(f"unknown activation gene: {self.activation!r}")
        if self.units < 1:
            raise ValueError("units gene must be >= 1")
        if any(c not in (0, 1, 2, 3) for c in self.configuration):
            raise ValueError(f"bad layer code in {self.configuration}")

    def genes(self) -> list:
        """The four genes in order, with the configuration copied."""
        return [self.loss, self.units, self.activation, list(self.configuration)]

    @classmethod
    def from_genes(cls, genes: list) -> "Chromosome":
        return cls(genes[0], genes[1], genes[2], list(genes[3]))

    def copy(self) -> "Chromosome":
        out = self.from_genes(self.genes())
        out.fitness = self.fitness
        return out


@dataclass
class InvalidNetwork:
    """Marker for chromosomes that cannot be instantiated on the dataset."""

    reason: str


def random_configuration(rng: np.random.Generator) -> list[int]:
    length = int(rng.integers(MIN_CONFIG_LEN, MAX_CONFIG_LEN + 1))
    return [int(c) for c in rng.integers(0, 4, size=length)]


def random_chromosome(n_unique: int, rng: np.random.Generator) -> Chromosome:
    if n_unique < 1:
        raise ValueError("n_unique must be >= 1")
    return Chromosome(
        loss=LOSSES[rng.integers(2)],
        units=(1, n_unique)[rng.integers(2)],
        activation=ACTIVATIONS[rng.integers(4)],
        configuration=random_configuration(rng),
    )


def build_network(chromosome: Chromosome, dataset: Dataset,
                  params: NnParams | None = None,
                  rng: np.random.Generator | None = None) -> Network | InvalidNetwork:
    """Instantiate the chromosome's layers against the dataset's input shape.

    A flatten step is inserted before the first fully connected layer (and
    before the output layer) when spatial data precedes it. Invalid cases:
    cross-entropy with a single output unit, any convolution or pooling
    code on flat input, a convolution or pooling code after flattening,
    and spatial dimensions shrunk below the 2x2 window.
    """
    if params is None:
        params = NnParams()
    if rng is None:
        rng = np.random.default_rng(0)

    if chromosome.loss == "cce" and chromosome.units == 1:
        return InvalidNetwork(CCE_SINGLE_OUTPUT)

    input_shape = dataset.input_shape
    spatial = dataset.input_kind == "image"
    if spatial:
        h, w, c = input_shape
    else:
        width = input_shape[0]

    k = params.conv_size
    layers = []
    flattened = not spatial
    for code in chromosome.configuration:
        if code in (CODE_CONV, CODE_POOL):
            if not spatial:
                return InvalidNetwork(SPATIAL_ON_FLAT)
            if flattened:
                return InvalidNetwork(SPATIAL_AFTER_FLATTEN)
            if h < k or w < k:
                return InvalidNetwork(SPATIAL_UNDERFLOW)
            if code == CODE_CONV:
                layers.append(Conv2D(c, params.conv_filters, k, rng,
                                     params.init_mean, params.init_std))
                c = params.conv_filters
            else:
                layers.append(MaxPool2D(params.pool_size))
            h, w = h - k + 1, w - k + 1
        elif code == CODE_DENSE:
            if not flattened:
                layers.append(Flatten())
                width = h * w * c
                flattened = True
            layers.append(Dense(width, params.hidden_units, "relu", rng,
                                params.init_mean, params.init_std))
            width = params.hidden_units
        elif code == CODE_DROPOUT:
            layers.append(Dropout(params.dropout_keep))
        else:
            raise ValueError(f"bad layer code {code}")

    if not flattened:
        layers.append(Flatten())
        width = h * w * c
    layers.append(Dense(width, chromosome.units, chromosome.activation, rng,
                        params.init_mean, params.init_std))
    return Network(layers, chromosome.loss, input_shape)


def describe(chromosome: Chromosome) -> str:
    """Render a chromosome as a single human-readable line."""
    return (f"Units: {chromosome.units}, Loss: {chromosome.loss.upper()}, "
            f"Activation: {chromosome.activation}, "
            f"Configuration: {chromosome.configuration}")


_DESCRIBE_RE = re.compile(
    r"Units:\s*(\d+),\s*Loss:\s*(MSE|CCE),\s*Activation:\s*(\w+),\s*"
    r"Configuration:\s*\[([0-9,\s]*)\]")


def parse(text: str) -> Chromosome:
    m = _DESCRIBE_RE.search(text)
    if m is None:
        raise ValueError(f"cannot parse chromosome from {text!r}")
    codes = [int(c) for c in m.group(4).split(",")] if m.group(4).strip() else []
    return Chromosome(
        loss=m.group(2).lower(),
        units=int(m.group(1)),
        activation=m.group(3),
        configuration=codes,
    )
