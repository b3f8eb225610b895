"""Scanning integer ranges for absolutely periodic elements (integer loops)."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .rational import DomainError, collatz_step
from .sequences import Periodic, _smallest_period, represent

__all__ = ["LoopReport", "LoopSearch", "find_absolute_loops", "orbit_key", "KNOWN_INTEGER_LOOPS"]

KNOWN_INTEGER_LOOPS = (
    (1,),
    (-1,),
    (-5, -7),
    (-17, -25, -37, -55, -41, -61, -91),
)

CHUNK = 4096


def orbit_key(x: Fraction) -> tuple[Fraction, int]:
    """Sort key picking the loop representative: smallest |x|, positive first."""
    return abs(x), 0 if x > 0 else 1


@dataclass(frozen=True)
class LoopReport:
    """One absolutely periodic orbit.

    ``members`` is the orbit in step order starting from the representative
    chosen by :func:`orbit_key`; ``quotient_cycle`` is emitted going once
    around.  ``canonical`` records that the orbit closed after exactly
    ``len(members)`` steps with a primitive quotient cycle.
    """

    members: tuple[Fraction, ...]
    quotient_cycle: tuple[int, ...]
    canonical: bool

    def verify(self) -> bool:
        """Each member returns to itself after one trip round the cycle."""
        n = len(self.members)
        for i, start in enumerate(self.members):
            x = start
            for k in range(n):
                q, x = collatz_step(x)
                if q != self.quotient_cycle[(i + k) % n]:
                    return False
            if x != start:
                return False
        return True


@dataclass
class LoopSearch:
    lo: int
    hi: int
    max_steps: int
    loops: list[LoopReport] = field(default_factory=list)
    # odd integers whose expansion hit the step budget
    undecided: list[int] = field(default_factory=list)
    scanned: int = 0


def loop_through(x: Fraction, max_steps: int) -> LoopReport:
    """Build the report for the orbit through the absolutely periodic ``x``."""
    orbit = [x]
    quotients = []
    y = x
    for _ in range(max_steps):
        q, y = collatz_step(y)
        quotients.append(q)
        if y == x:
            break
        orbit.append(y)
    else:
        raise DomainError(f"{x} did not return to itself within {max_steps} steps")
    start = min(range(len(orbit)), key=lambda i: orbit_key(orbit[i]))
    members = tuple(orbit[start:] + orbit[:start])
    cycle = tuple(quotients[start:] + quotients[:start])
    return LoopReport(members, cycle, _smallest_period(cycle) == len(cycle))


def _scan(lo: int, hi: int, max_steps: int) -> tuple[list[int], list[int], int]:
    periodic, undecided = [], []
    first = lo if lo % 2 else lo + 1
    for x in range(first, hi + 1, 2):
        r = represent(x, max_steps)
        if not isinstance(r, Periodic):
            undecided.append(x)
        elif r.seq.absolutely_periodic:
            periodic.append(x)
    return periodic, undecided, len(range(first, hi + 1, 2))


def find_absolute_loops(lo: int, hi: int, max_steps: int, workers: int = 1) -> LoopSearch:
    """Find every loop through an odd integer of ``[lo, hi]``.

    The range is split into fixed-size chunks; with ``workers > 1`` they
    are scanned in a process pool.  Loops are listed by their
    representative (see :func:`orbit_key`) regardless of scheduling.
    """
    if lo > hi:
        raise DomainError(f"empty range [{lo}, {hi}]")
    if max_steps < 1:
        raise DomainError(f"max_steps must be >= 1, got {max_steps}")
    chunks = [(a, min(a + CHUNK - 1, hi), max_steps) for a in range(lo, hi + 1, CHUNK)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_scan, *zip(*chunks)))
    else:
        parts = [_scan(*c) for c in chunks]

    result = LoopSearch(lo, hi, max_steps)
    seen: set[Fraction] = set()
    for periodic, undecided, count in parts:
        result.scanned += count
        result.undecided.extend(undecided)
        for x in periodic:
            if x in seen:
                continue
            report = loop_through(Fraction(x), max_steps)
            seen.update(report.members)
            result.loops.append(report)
    result.loops.sort(key=lambda r: orbit_key(r.members[0]))
    return result
