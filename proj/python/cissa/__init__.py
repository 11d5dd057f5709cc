"""Circulant singular spectrum analysis.

Decomposes a univariate series exactly into oscillatory components at the
grid frequencies (k-1)/L and regroups them into user-meaningful signals
(trend, cycle, seasonal, de-noised, band-pass).
"""

from ._cissa import (
    Decomposition,
    GroupingResult,
    InputError,
    NumericError,
    ParameterError,
    __version__,
    cissa,
    economic_bands,
    extend,
    group,
    shares,
)

__all__ = [
    "Decomposition",
    "GroupingResult",
    "InputError",
    "NumericError",
    "ParameterError",
    "__version__",
    "cissa",
    "economic_bands",
    "extend",
    "group",
    "shares",
]
