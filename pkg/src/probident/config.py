"""Run configuration: GA parameters and neural-network parameters.

Every value here is a default and can be overridden from the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class GaParams:
    """Genetic-algorithm parameters."""

    population_size: int = 50
    generations: int = 10
    tournament_size: int = 5
    crossover_rate: float = 0.70
    mutation_rate: float = 0.30

    def __post_init__(self) -> None:
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if self.tournament_size < 1:
            raise ValueError("tournament_size must be >= 1")
        if self.generations < 0:
            raise ValueError("generations must be >= 0")
        if not 0.0 <= self.crossover_rate <= 1.0 or not 0.0 <= self.mutation_rate <= 1.0:
            raise ValueError("operator rates must lie in [0, 1]")
        if abs(self.crossover_rate + self.mutation_rate - 1.0) > 1e-9:
            raise ValueError("crossover_rate and mutation_rate must sum to 1")


@dataclass
class NnParams:
    """Neural-network construction and training parameters.

    Hidden layers are fixed: 100-unit relu dense layers, 10 convolution
    filters of size 2x2 with stride 1, 2x2 max pooling with stride 1 and
    dropout keep probability 0.8. Only the output layer is evolved.
    """

    epochs: int = 5
    batch_size: int = 2048
    learning_rate: float = 0.001
    init_mean: float = 0.0
    init_std: float = 0.01
    hidden_units: int = 100
    conv_filters: int = 10
    conv_size: int = 2
    conv_stride: int = 1
    pool_size: int = 2
    pool_stride: int = 1
    dropout_keep: float = 0.8

    def __post_init__(self) -> None:
        if self.epochs < 1:
            raise ValueError("epochs must be >= 1")
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")
        # The engine implements unit strides only; the defaults never change.
        if self.conv_stride != 1 or self.pool_stride != 1:
            raise ValueError("only stride 1 is supported")
        if not 0.0 < self.dropout_keep <= 1.0:
            raise ValueError("dropout_keep must be in (0, 1]")
