"""Exact symbolic pullbacks and blowups of Lie algebroids, singular
foliations, and Dirac structures over polynomial charts."""

__version__ = "0.1.0"

from ._kernel import BACKEND as KERNEL_BACKEND

__all__ = ["KERNEL_BACKEND", "__version__"]
