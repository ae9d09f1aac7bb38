"""Exact verification of a split-octonion construction of SO(7) generators."""

__version__ = "0.1.0"

from .scalars import GR, DualTheta, GaussianRational, LinearForm, THETA  # noqa: E402
from .matrix import ExactMatrix  # noqa: E402
from .split_octonion import SplitBasis, SplitOctonion  # noqa: E402

__all__ = [
    "__version__", "GR", "GaussianRational", "LinearForm", "DualTheta", "THETA",
    "ExactMatrix", "SplitBasis", "SplitOctonion",
]
