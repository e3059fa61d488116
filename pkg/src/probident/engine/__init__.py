from probident.engine import activations
from probident.engine.adam import Adam
from probident.engine.layers import Conv2D, Dense, Dropout, Flatten, Layer, MaxPool2D, init_weights
from probident.engine.losses import cce_grad, cce_loss, mse_grad, mse_loss
from probident.engine.network import Network
from probident.engine.training import train

__all__ = [
    "activations", "Adam", "Conv2D", "Dense", "Dropout", "Flatten", "Layer",
    "MaxPool2D", "init_weights", "cce_grad", "cce_loss", "mse_grad",
    "mse_loss", "Network", "train",
]
