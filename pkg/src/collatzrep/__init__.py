"""Collatz representations of rationals with odd numerator and denominator.

Exact arithmetic throughout (``fractions.Fraction``); no floating point in
any computed value.
"""

from .approximation import ApproxResult, RoundRecord, approximate, digits_of
from .cycles import LoopReport, LoopSearch, find_absolute_loops
from .figures import emit
from .geometry import FractalGraph, Point, PrefixMap, ResourceError, fractal_graph, periodic_value_via_line, point_of
from .inversion import invert, invert_cycle
from .rational import (
    DomainError,
    collatz_step,
    format_rational,
    inverse_step,
    odd_rational,
    parse_rational,
    two_adic_valuation,
)
from .sequences import (
    EventuallyPeriodicSeq,
    Periodic,
    Truncated,
    canonicalize,
    parse_sequence,
    represent,
    seq_equal,
)

__version__ = "0.1.0"
