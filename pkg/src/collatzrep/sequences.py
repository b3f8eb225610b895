"""Collatz representations: running the algorithm with cycle detection.

Finite sequences of partial quotients are plain tuples of positive ints.
An eventually periodic sequence ``[a1,...,am,(b1,...,bn)]`` is held by
:class:`EventuallyPeriodicSeq`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Iterable, Iterator, Union

from .rational import DomainError, step_pair, format_rational, odd_rational

__all__ = [
    "FiniteSeq",
    "EventuallyPeriodicSeq",
    "Periodic",
    "Truncated",
    "RepresentationResult",
    "canonicalize",
    "seq_equal",
    "parse_sequence",
    "represent",
]

FiniteSeq = tuple  # tuple[int, ...], every item >= 1


def _check_quotients(items: Iterable[int], what: str) -> tuple[int, ...]:
    out = tuple(items)
    for q in out:
        if isinstance(q, bool) or not isinstance(q, int) or q < 1:
            raise DomainError(f"{what} items must be positive integers, got {q!r}")
    return out


@dataclass(frozen=True)
class EventuallyPeriodicSeq:
    """The infinite sequence ``preperiod`` followed by ``cycle`` repeated forever."""

    preperiod: tuple[int, ...]
    cycle: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", _check_quotients(self.preperiod, "preperiod"))
        object.__setattr__(self, "cycle", _check_quotients(self.cycle, "cycle"))
        if not self.cycle:
            raise DomainError("cycle must be nonempty")

    @property
    def absolutely_periodic(self) -> bool:
        return not self.preperiod

    def expand(self, count: int) -> tuple[int, ...]:
        """First ``count`` terms of the infinite sequence."""
        return tuple(islice(self.terms(), count))

    def terms(self) -> Iterator[int]:
        yield from self.preperiod
        while True:
            yield from self.cycle

    def __str__(self) -> str:
        head = "".join(f"{q}," for q in self.preperiod)
        return f"[{head}({','.join(map(str, self.cycle))})]"


def _smallest_period(word: tuple[int, ...]) -> int:
    # KMP failure function; the word is a power of its prefix of length p
    # exactly when p divides len(word).
    n = len(word)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and word[i] != word[k]:
            k = fail[k - 1]
        if word[i] == word[k]:
            k += 1
        fail[i] = k
    p = n - fail[-1]
    return p if n % p == 0 else n


def canonicalize(s: EventuallyPeriodicSeq) -> EventuallyPeriodicSeq:
    """Primitive cycle and shortest preperiod denoting the same infinite sequence."""
    cycle = list(s.cycle[: _smallest_period(s.cycle)])
    pre = list(s.preperiod)
    while pre and pre[-1] == cycle[-1]:
        pre.pop()
        cycle.insert(0, cycle.pop())
    return EventuallyPeriodicSeq(tuple(pre), tuple(cycle))


def seq_equal(s: EventuallyPeriodicSeq, t: EventuallyPeriodicSeq) -> bool:
    """True iff both presentations expand to the same infinite sequence."""
    return canonicalize(s) == canonicalize(t)


_SEQ_RE = re.compile(r"^\[((?:\d+,)*)\(((?:\d+,)*\d+)\)\]$")


def parse_sequence(text: str) -> EventuallyPeriodicSeq:
    """Parse ``[q1,...,qm,(p1,...,pn)]``; whitespace is ignored.

    The result is returned as written, not canonicalized.
    """
    m = _SEQ_RE.match(re.sub(r"\s+", "", text))
    if m is None:
        raise DomainError(f"malformed sequence: {text!r}")
    pre = tuple(int(t) for t in m.group(1).split(",") if t)
    cyc = tuple(int(t) for t in m.group(2).split(","))
    return EventuallyPeriodicSeq(pre, cyc)


@dataclass(frozen=True)
class Periodic:
    seq: EventuallyPeriodicSeq

    def __str__(self) -> str:
        return str(self.seq)


@dataclass(frozen=True)
class Truncated:
    """Step budget ran out before any iterate recurred.

    ``last_iterate`` is the value after ``steps_used`` steps; running
    :func:`represent` on it continues the expansion.
    """

    prefix: tuple[int, ...]
    last_iterate: Fraction
    steps_used: int

    def __str__(self) -> str:
        body = ",".join(map(str, self.prefix))
        return f"[{body},...] (truncated after {self.steps_used} steps at {format_rational(self.last_iterate)})"


RepresentationResult = Union[Periodic, Truncated]


def represent(a, max_steps: int) -> RepresentationResult:
    """Run the Collatz algorithm on ``a`` for at most ``max_steps`` steps.

    Recurrence is detected on the exact values ``a, B1, B2, ...``.  The first
    repeated value closes the cycle, so the result is already canonical
    (``canonicalize`` is still applied).
    """
    a = odd_rational(a)
    if max_steps < 1:
        raise DomainError(f"max_steps must be >= 1, got {max_steps}")
    x, y = a.numerator, a.denominator
    seen = {(x, y): 0}
    quotients: list[int] = []
    for i in range(1, max_steps + 1):
        q, x, y = step_pair(x, y)
        quotients.append(q)
        j = seen.get((x, y))
        if j is not None:
            seq = EventuallyPeriodicSeq(tuple(quotients[:j]), tuple(quotients[j:]))
            return Periodic(canonicalize(seq))
        seen[(x, y)] = i
    return Truncated(tuple(quotients), Fraction(x, y), max_steps)
