"""Encoding, channel simulation, and decoding of binary strings from
erroneous prefix-suffix compositions."""

from .compositions import CompositionMultiset, NormalizedView, distance, normalize
from .channel import ErrorPlan, corrupt, random_plan
from .results import ReconResult, Verdict

__all__ = [
    "CompositionMultiset",
    "NormalizedView",
    "distance",
    "normalize",
    "ErrorPlan",
    "corrupt",
    "random_plan",
    "ReconResult",
    "Verdict",
]

__version__ = "0.1.0"
