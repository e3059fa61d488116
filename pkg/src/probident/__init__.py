"""probident: classification-or-regression identification for supervised
datasets by evolving small neural-network specifications."""

__version__ = "0.1.0"

from probident.config import GaParams, NnParams
from probident.data import Dataset, RawTable, load_csv, split
from probident.evolution import run_ga
from probident.fitness import FitnessOutcome, Verdict, decide, evaluate
from probident.genome import Chromosome, InvalidNetwork, build_network, describe

__all__ = [
    "GaParams", "NnParams", "Dataset", "RawTable", "load_csv", "split",
    "run_ga", "FitnessOutcome", "Verdict", "decide", "evaluate",
    "Chromosome", "InvalidNetwork", "build_network", "describe",
    "__version__",
]
