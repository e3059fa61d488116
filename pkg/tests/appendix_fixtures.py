"""Evolved-chromosome fixtures: one winning specification per benchmark
dataset, paired with the input kind it was evolved against.

Each entry: (dataset name, chromosome line, feature count, image shape).
Flat datasets have image_shape None. One line originally carried a
"sotmax" misspelling and is stored corrected.
"""

FIXTURES = [
    ("Aloi",
     "Units: 1000, Loss: CCE, Activation: linear, Configuration: [2, 1, 1, 2, 1]",
     128, None),
    ("Isolet5",
     "Units: 1, Loss: MSE, Activation: softmax, "
     "Configuration: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]",
     617, None),
    ("Letter Recognition",
     "Units: 26, Loss: CCE, Activation: sigmoid, "
     "Configuration: [1, 2, 2, 1, 2, 2, 1, 1, 2, 1, 1]",
     16, None),
    ("Sensorless Drive",
     "Units: 11, Loss: CCE, Activation: relu, "
     "Configuration: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]",
     48, None),
    ("Year Prediction",
     "Units: 64, Loss: CCE, Activation: softmax, "
     "Configuration: [1, 2, 2, 2, 1, 2, 2, 1, 2, 2, 1]",
     90, None),
    ("Boston Housing",
     "Units: 1, Loss: MSE, Activation: softmax, "
     "Configuration: [2, 1, 1, 2, 1, 1, 1, 1, 2, 1]",
     13, None),
    ("CCPP",
     "Units: 1, Loss: MSE, Activation: softmax, "
     "Configuration: [1, 2, 2, 2, 1, 1, 1, 1, 2, 2, 1]",
     4, None),
    ("Concrete Comp",
     "Units: 1, Loss: MSE, Activation: softmax, "
     "Configuration: [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]",
     15, None),
    ("Forest Fires",
     "Units: 1, Loss: MSE, Activation: softmax, "
     "Configuration: [1, 2, 2, 2, 1, 1, 2, 2, 1, 2, 2, 2, 1, 1, 2, 1]",
     29, None),
    ("Physicochemical",
     "Units: 1, Loss: MSE, Activation: softmax, "
     "Configuration: [1, 1, 1, 2, 2, 1, 1, 2, 1, 1, 1, 1, 1, 2, 1]",
     9, None),
    ("Relative CT Slice",
     "Units: 1, Loss: MSE, Activation: softmax, "
     "Configuration: [1, 2, 1, 1, 2, 1, 1]",
     384, None),
    ("CIFAR-10",
     "Units: 10, Loss: CCE, Activation: linear, "
     "Configuration: [3, 3, 0, 0, 2, 3, 3, 0, 0, 0, 1]",
     3072, (32, 32, 3)),
    ("CIFAR-100",
     "Units: 100, Loss: CCE, Activation: sigmoid, "
     "Configuration: [2, 0, 3, 3, 0, 0, 1, 2, 1, 1, 1]",
     3072, (32, 32, 3)),
    ("MNIST",
     "Units: 10, Loss: CCE, Activation: relu, "
     "Configuration: [2, 0, 2, 0, 3, 0, 1]",
     784, (28, 28, 1)),
    ("CrowdFlower",
     "Units: 13, Loss: CCE, Activation: sigmoid, "
     "Configuration: [1, 2, 1, 1, 1, 2, 2, 1, 2, 2, 1, 1, 1, 2, 1]",
     1000, None),
    ("IMDB",
     "Units: 2, Loss: CCE, Activation: softmax, "
     "Configuration: [2, 1, 2, 1, 2, 1]",
     10000, None),
]
