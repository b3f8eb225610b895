"""Points P(A) for {1,2}-sequences, the graphs P_n, and the line construction.

For a finite sequence ``A`` the map ``t -> C^{-1}[A, tail]`` (where ``t`` is
the value of the tail) is affine, since each inverse step is
``b -> (2**q * b - 1) / 3``.  :class:`PrefixMap` carries that map and is
what makes the graph builders and the approximation scans O(1) per step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .inversion import invert
from .rational import DomainError
from .sequences import EventuallyPeriodicSeq

__all__ = [
    "ResourceError",
    "PrefixMap",
    "Point",
    "FractalGraph",
    "point_of",
    "fractal_graph",
    "periodic_value_via_line",
    "MAX_DEPTH",
]

MAX_DEPTH = 20

_ONE = Fraction(1)
_MINUS_ONE = Fraction(-1)


class ResourceError(RuntimeError):
    """Requested object exceeds the configured size limit."""


@dataclass(frozen=True)
class PrefixMap:
    """The affine map ``t -> scale * t + shift`` equal to ``C^{-1}[A, tail]``."""

    scale: Fraction = _ONE
    shift: Fraction = Fraction(0)

    def append(self, q: int) -> "PrefixMap":
        return PrefixMap(self.scale * (1 << q) / 3, self.shift - self.scale / 3)

    def extend(self, items: Sequence[int]) -> "PrefixMap":
        m = self
        for q in items:
            m = m.append(q)
        return m

    def __call__(self, t: Fraction) -> Fraction:
        return self.scale * t + self.shift

    def point(self) -> "Point":
        return Point(self(_ONE), self(_MINUS_ONE))


class Point(NamedTuple):
    x: Fraction  # C^{-1}[A,(2)]
    y: Fraction  # C^{-1}[A,(1)]


def _check_binary(seq: Sequence[int]) -> tuple[int, ...]:
    seq = tuple(seq)
    for q in seq:
        if q not in (1, 2):
            raise DomainError(f"sequence items must be 1 or 2, got {q!r}")
    return seq


def point_of(seq: Sequence[int]) -> Point:
    """``P(A) = (C^{-1}[A,(2)], C^{-1}[A,(1)])``."""
    seq = _check_binary(seq)
    return Point(
        invert(EventuallyPeriodicSeq(seq, (2,))),
        invert(EventuallyPeriodicSeq(seq, (1,))),
    )


@dataclass
class FractalGraph:
    """All ``P(A)`` for ``A`` in ``{1,2}^{<=depth}`` with parent-child edges.

    Nodes are ordered by length, then lexicographically; ``edges`` holds
    ``(parent_index, child_index)`` pairs.
    """

    depth: int
    nodes: list[tuple[tuple[int, ...], Point]]
    edges: list[tuple[int, int]]

    @property
    def points(self) -> list[Point]:
        return [p for _, p in self.nodes]


def fractal_graph(depth: int, max_depth: int = MAX_DEPTH) -> FractalGraph:
    if depth < 0:
        raise DomainError(f"depth must be >= 0, got {depth}")
    if depth > max_depth:
        raise ResourceError(f"depth {depth} exceeds limit {max_depth}")
    nodes = [((), PrefixMap().point())]
    maps = [PrefixMap()]
    edges: list[tuple[int, int]] = []
    level = [0]
    for _ in range(depth):
        nxt = []
        for parent in level:
            seq = nodes[parent][0]
            for q in (1, 2):
                m = maps[parent].append(q)
                maps.append(m)
                nodes.append((seq + (q,), m.point()))
                edges.append((parent, len(nodes) - 1))
                nxt.append(len(nodes) - 1)
        level = nxt
    return FractalGraph(depth, nodes, edges)


def periodic_value_via_line(seq: Sequence[int]) -> Fraction:
    """Where the line through ``(1, -1)`` and ``P(A)`` meets ``y = x``.

    This equals ``C^{-1}[(A)]``, also when that value is positive and the
    points ``P(A), P(AA), ...`` run off to infinity.
    """
    seq = _check_binary(seq)
    if not seq:
        raise DomainError("line is undefined for the empty sequence")
    x, y = point_of(seq)
    if x == 1:
        return _ONE
    slope = (y + 1) / (x - 1)
    if slope == 1:
        raise DomainError(f"line through (1,-1) and P({list(seq)}) is parallel to y = x")
    # y = -1 + slope * (t - 1) and y = t
    return (1 + slope) / (slope - 1)

