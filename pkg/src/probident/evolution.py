"""Generational genetic algorithm over chromosomes.

Each generation builds an offspring pool by repeatedly drawing an
operator -- crossover (two offspring) with probability 0.7, mutation
(one offspring) with probability 0.3 -- with parents picked by
tournament selection, then replaces the population wholesale. The best
chromosome ever evaluated is tracked separately and returned at the end.

Fitness evaluation is pure given a per-chromosome sub-seed derived from
(run seed, generation, index), so serial and parallel runs agree.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

import numpy as np

from probident.config import GaParams, NnParams
from probident.data import Dataset
from probident.fitness import evaluate
from probident.genome import (ACTIVATIONS, LOSSES, Chromosome,
                              random_chromosome, random_configuration)

GENE_COUNT = 4

# An evaluator maps (chromosome, generation, index) to a fitness value.
Evaluator = Callable[[Chromosome, int, int], float]


def tournament_select(population: list[Chromosome], k: int,
                      rng: np.random.Generator) -> Chromosome:
    """Sample k chromosomes with replacement; lowest fitness wins,
    ties broken uniformly at random."""
    idx = rng.integers(0, len(population), size=k)
    best = min(population[i].fitness for i in idx)
    tied = [i for i in idx if population[i].fitness == best]
    return population[int(tied[rng.integers(len(tied))])]


def crossover(p1: Chromosome, p2: Chromosome,
              rng: np.random.Generator) -> tuple[Chromosome, Chromosome]:
    """Swap one uniformly chosen gene between copies of the two parents."""
    pos = int(rng.integers(GENE_COUNT))
    g1, g2 = p1.genes(), p2.genes()
    g1[pos], g2[pos] = g2[pos], g1[pos]
    return Chromosome.from_genes(g1), Chromosome.from_genes(g2)


def mutate(parent: Chromosome, n_unique: int,
           rng: np.random.Generator) -> Chromosome:
    """Redraw one uniformly chosen gene; the new value may equal the old."""
    genes = parent.genes()
    pos = int(rng.integers(GENE_COUNT))
    if pos == 0:
        genes[0] = LOSSES[rng.integers(2)]
    elif pos == 1:
        genes[1] = (1, n_unique)[rng.integers(2)]
    elif pos == 2:
        genes[2] = ACTIVATIONS[rng.integers(4)]
    else:
        genes[3] = random_configuration(rng)
    return Chromosome.from_genes(genes)


def next_generation(population: list[Chromosome], params: GaParams,
                    evaluator: Evaluator, n_unique: int, generation: int,
                    rng: np.random.Generator, jobs: int = 1) -> list[Chromosome]:
    pool: list[Chromosome] = []
    while len(pool) < params.population_size:
        if rng.random() < params.crossover_rate:
            a = tournament_select(population, params.tournament_size, rng)
            b = tournament_select(population, params.tournament_size, rng)
            pool.extend(crossover(a, b, rng))
        else:
            parent = tournament_select(population, params.tournament_size, rng)
            pool.append(mutate(parent, n_unique, rng))
    pool = pool[:params.population_size]
    _evaluate_all(pool, evaluator, generation, jobs)
    return pool


def generation_stats(population: list[Chromosome], generation: int,
                     best: Chromosome) -> dict:
    finite = [c.fitness for c in population if math.isfinite(c.fitness)]
    return {
        "generation": generation,
        "finite_count": len(finite),
        "min_fitness": min(finite) if finite else None,
        "mean_fitness": float(np.mean(finite)) if finite else None,
        "cce_count": sum(1 for c in population if c.loss == "cce"),
        "mse_count": sum(1 for c in population if c.loss == "mse"),
        "best_fitness": best.fitness if math.isfinite(best.fitness) else None,
    }


def run_ga(dataset: Dataset, ga_params: GaParams, nn_params: NnParams,
           seed: int, jobs: int = 1, evaluator: Evaluator | None = None,
           on_generation: Callable[[dict], None] | None = None
           ) -> tuple[Chromosome, list[dict]]:
    """Evolve a population against the dataset; return (best, history).

    The default evaluator trains each chromosome's network; tests may
    inject an analytic stub instead. `jobs` > 1 evaluates a generation's
    chromosomes in parallel worker processes without changing results.
    """
    if evaluator is None:
        evaluator = _make_evaluator(dataset, nn_params, seed)
        use_pool = jobs > 1
    else:
        use_pool = False  # custom evaluators run in-process

    rng = np.random.default_rng([seed, 1])
    executor = None
    if use_pool:
        executor = ProcessPoolExecutor(
            max_workers=jobs, initializer=_init_worker,
            initargs=(dataset, nn_params, seed))
        evaluator = _PoolEvaluator(executor)

    try:
        population = [random_chromosome(dataset.n_unique, rng)
                      for _ in range(ga_params.population_size)]
        _evaluate_all(population, evaluator, 0, jobs)
        best = _best_of(population).copy()
        history = [generation_stats(population, 0, best)]
        if on_generation:
            on_generation(history[-1])

        for gen in range(1, ga_params.generations + 1):
            population = next_generation(population, ga_params, evaluator,
                                         dataset.n_unique, gen, rng, jobs)
            challenger = _best_of(population)
            if challenger.fitness < best.fitness:
                best = challenger.copy()
            history.append(generation_stats(population, gen, best))
            if on_generation:
                on_generation(history[-1])
    finally:
        if executor is not None:
            executor.shutdown()
    return best, history


def _best_of(population: list[Chromosome]) -> Chromosome:
    return min(population, key=lambda c: c.fitness)


def _make_evaluator(dataset: Dataset, nn_params: NnParams, seed: int) -> Evaluator:
    def evaluator(chromosome: Chromosome, generation: int, index: int) -> float:
        return evaluate(chromosome, dataset, nn_params,
                        sub_seed=[seed, 2, generation, index]).fitness
    return evaluator


def _evaluate_all(population: list[Chromosome], evaluator: Evaluator,
                  generation: int, jobs: int) -> None:
    if isinstance(evaluator, _PoolEvaluator):
        for chromosome, fitness in zip(
                population,
                evaluator.evaluate_batch(population, generation)):
            chromosome.fitness = fitness
        return
    for index, chromosome in enumerate(population):
        chromosome.fitness = evaluator(chromosome, generation, index)


# Worker-process plumbing: the dataset is shipped once per worker through
# the pool initializer instead of once per task.
_WORKER_CTX: dict = {}


def _init_worker(dataset: Dataset, nn_params: NnParams, seed: int) -> None:
    _WORKER_CTX["dataset"] = dataset
    _WORKER_CTX["nn_params"] = nn_params
    _WORKER_CTX["seed"] = seed


def _worker_evaluate(task: tuple[Chromosome, int, int]) -> float:
    chromosome, generation, index = task
    return evaluate(chromosome, _WORKER_CTX["dataset"], _WORKER_CTX["nn_params"],
                    sub_seed=[_WORKER_CTX["seed"], 2, generation, index]).fitness


class _PoolEvaluator:
    def __init__(self, executor: ProcessPoolExecutor) -> None:
        self.executor = executor

    def evaluate_batch(self, population: list[Chromosome], generation: int) -> list[float]:
        tasks = [(c, generation, i) for i, c in enumerate(population)]
        return list(self.executor.map(_worker_evaluate, tasks))
