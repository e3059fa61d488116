"""Chromosome evaluation and the final classification/regression call.

A chromosome is trained with its own loss gene (cross entropy against
one-hot targets, mean squared error against raw targets). The validation
trace decides whether the network learned: with v0 the pre-training
validation loss, delta = mean(v1..ve) - v0 and ratio = delta / v0, a
network learned only when ratio < 0. Learned networks get the validation
mean squared error (in the chromosome's own target space) as fitness;
everything else is penalized with infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from probident.config import NnParams
from probident.data import Dataset
from probident.engine.losses import mse_loss
from probident.engine.training import train
from probident.genome import Chromosome, InvalidNetwork, build_network, describe

# Penalty reason codes (build_network contributes its own invalid reasons).
NON_FINITE_TRACE = "non-finite-trace"
ZERO_INITIAL_LOSS = "zero-initial-loss"
NO_VALIDATION_DROP = "no-validation-drop"


@dataclass
class FitnessOutcome:
    fitness: float
    val_trace: list[float] | None = None
    delta: float | None = None
    ratio: float | None = None
    reason: str | None = None


@dataclass
class Verdict:
    label: str                       # "classification" | "regression" | "inconclusive"
    chromosome: Chromosome | None = None
    text: str | None = None
    diagnostic: str | None = None


def loss_drop_ratio(trace: list[float]) -> tuple[float, float | None]:
    """(delta, ratio) for a validation trace [v0, v1, ..., ve].

    delta is mean(v1..ve) - v0 and ratio is delta / v0. The ratio is None
    (undefined) for a non-finite trace or when v0 is zero.
    """
    if len(trace) < 2:
        raise ValueError("trace needs at least two entries")
    if not all(math.isfinite(v) for v in trace):
        return math.nan, None
    v0 = trace[0]
    delta = float(np.mean(trace[1:]) - v0)
    if v0 == 0.0:
        return delta, None
    return delta, delta / v0


def training_targets(chromosome: Chromosome, dataset: Dataset) -> tuple[np.ndarray, np.ndarray]:
    """Train/validation targets in the chromosome's own target space.

    Cross entropy trains against one-hot rows. Mean squared error trains
    against the raw values, replicated across the output width when the
    units gene asks for more than one output.
    """
    if chromosome.loss == "cce":
        return dataset.y_train_onehot, dataset.y_val_onehot
    y_train = np.repeat(dataset.y_train[:, None], chromosome.units, axis=1)
    y_val = np.repeat(dataset.y_val[:, None], chromosome.units, axis=1)
    return y_train, y_val


def evaluate(chromosome: Chromosome, dataset: Dataset, nn_params: NnParams,
             sub_seed) -> FitnessOutcome:
    """Pure fitness evaluation; identical inputs give identical outcomes.

    `sub_seed` feeds numpy's default_rng and may be an int or a sequence
    of ints; it drives weight initialization, batch order and dropout.
    """
    rng = np.random.default_rng(sub_seed)
    built = build_network(chromosome, dataset, nn_params, rng)
    if isinstance(built, InvalidNetwork):
        return FitnessOutcome(math.inf, reason=built.reason)

    y_train, y_val = training_targets(chromosome, dataset)
    net, trace = train(built, dataset.x_train, y_train, dataset.x_val, y_val,
                       nn_params, rng)
    if not all(math.isfinite(v) for v in trace):
        return FitnessOutcome(math.inf, trace, reason=NON_FINITE_TRACE)

    delta, ratio = loss_drop_ratio(trace)
    if ratio is None:
        return FitnessOutcome(math.inf, trace, delta=delta, reason=ZERO_INITIAL_LOSS)
    if ratio >= 0:
        return FitnessOutcome(math.inf, trace, delta, ratio, reason=NO_VALIDATION_DROP)

    fitness = mse_loss(y_val, net.predict(dataset.x_val))
    if not math.isfinite(fitness):
        return FitnessOutcome(math.inf, trace, delta, ratio, reason=NON_FINITE_TRACE)
    return FitnessOutcome(fitness, trace, delta, ratio)


def decide(best: Chromosome | None) -> Verdict:
    """Classification when the winning loss gene is cross entropy, else regression."""
    if best is None or not math.isfinite(best.fitness):
        return Verdict(
            label="inconclusive",
            chromosome=best,
            diagnostic="no chromosome achieved finite fitness; every candidate "
                       "was invalid or failed to reduce its validation loss",
        )
    label = "classification" if best.loss == "cce" else "regression"
    return Verdict(label=label, chromosome=best, text=describe(best))
