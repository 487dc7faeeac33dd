"""Ulam sequences and d-dimensional Ulam sets.

Generators for greedy unique-sum point sets over integer lattices, a fast
one-dimensional sequence engine, exact rational structure analysis
(characteristic lattices, embeddings, axis normalization), column
periodicity detection, closed-form membership oracles, a cosine-sum
frequency scan, and a cyclic-group variant.
"""

__version__ = "0.1.0"

from .core import (
    Bound,
    InitialConfig,
    SizeFunction,
    UlamSet,
    generate,
    generate_reference,
    representation_count,
    validate_config,
)
from .onedim import Sequence1D, consecutive_gaps, fibonacci_bound_check, ulam_sequence

__all__ = [
    "Bound",
    "InitialConfig",
    "SizeFunction",
    "UlamSet",
    "generate",
    "generate_reference",
    "representation_count",
    "validate_config",
    "Sequence1D",
    "ulam_sequence",
    "consecutive_gaps",
    "fibonacci_bound_check",
    "__version__",
]
