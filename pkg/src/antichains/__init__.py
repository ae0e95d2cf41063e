"""Antichains over a finite set, intervals between them, and Dedekind numbers."""
from __future__ import annotations

from .dedekind import dedekind, sequence_table
from .lattice import (
    Antichain,
    InvalidInputError,
    LatticeError,
    PreconditionError,
    UniverseMismatchError,
    UnsupportedSizeError,
    antichain,
    bottom,
    canonicalize,
    dual,
    join,
    leq,
    meet,
    parse,
    top,
)
from .pcoeff import dedekind_pcoeff, pcoeff_bruteforce, pcoeff_k2
from .posets import Interval
from .sequences import SequenceTable
from .sizes import interval_size

__version__ = "0.1.0"
