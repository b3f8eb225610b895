"""Closed-form inverse of the Collatz representation for eventually periodic sequences."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .rational import DomainError, collatz_step, inverse_step
from .sequences import EventuallyPeriodicSeq, _check_quotients

__all__ = ["invert_cycle", "invert", "CheckFailed"]


class CheckFailed(AssertionError):
    """A forward self-check of an inversion did not reproduce its input."""


def invert_cycle(cycle: Sequence[int], check: bool = False) -> Fraction:
    """The unique odd rational whose representation is ``cycle`` repeated forever.

    For ``cycle = (b1, ..., bn)`` with prefix sums ``s_i = b1 + ... + bi``::

        a = (3**(n-1) + sum_{i=1}^{n-1} 3**(n-1-i) * 2**s_i) / (2**s_n - 3**n)

    The numerator is accumulated by Horner's rule over the prefix sums.  With
    ``check=True`` the result is run forward ``n`` steps and must return to
    itself emitting exactly ``cycle``.
    """
    cycle = _check_quotients(cycle, "cycle")
    if not cycle:
        raise DomainError("cycle must be nonempty")
    num = 1
    s = 0
    for b in cycle[:-1]:
        s += b
        num = 3 * num + (1 << s)
    s += cycle[-1]
    a = Fraction(num, (1 << s) - 3 ** len(cycle))
    if check:
        x = a
        for b in cycle:
            q, x = collatz_step(x)
            if q != b:
                raise CheckFailed(f"cycle {cycle}: forward step emitted {q}, expected {b}")
        if x != a:
            raise CheckFailed(f"cycle {cycle}: orbit of {a} did not close")
    return a


def invert(s: EventuallyPeriodicSeq, check: bool = False) -> Fraction:
    """C^{-1} of an eventually periodic sequence (canonical or not)."""
    a = invert_cycle(s.cycle, check=check)
    for q in reversed(s.preperiod):
        a = inverse_step(a, q)
    if check:
        x = a
        for q in s.preperiod:
            got, x = collatz_step(x)
            if got != q:
                raise CheckFailed(f"{s}: preperiod step emitted {got}, expected {q}")
    return a
