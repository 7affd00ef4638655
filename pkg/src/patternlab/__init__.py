"""GF(2) pattern matrices, surface intersection forms and low-dimensional parity theorems."""

__version__ = "0.1.0"
