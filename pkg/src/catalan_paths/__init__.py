"""Exact leaf-to-leaf path statistics on ordered Catalan (full binary) trees.

Submodules:

* :mod:`catalan_core` - Catalan numbers and the identities built on them
* :mod:`tree_oracle` - brute-force enumeration and measurement
* :mod:`series_engine` - truncated power series and the generating functions
* :mod:`depth_formulas` - summed leaf depths D_{m,n}
* :mod:`path_lengths` - summed and average leaf-to-leaf lengths
* :mod:`cli` - the ``catalan-paths`` command
"""
from __future__ import annotations

__version__ = "0.1.0"

from .catalan_core import catalan
from .depth_formulas import depth_closed_form, depth_recursive
from .errors import DomainError, FormulaMismatch, ResourceBoundError
from .path_lengths import (
    average_length,
    average_limit,
    path_count,
    summed_length_closed,
    summed_length_recursive,
)

__all__ = [
    "__version__",
    "catalan",
    "depth_closed_form",
    "depth_recursive",
    "average_length",
    "average_limit",
    "path_count",
    "summed_length_closed",
    "summed_length_recursive",
    "DomainError",
    "FormulaMismatch",
    "ResourceBoundError",
]
