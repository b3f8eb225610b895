"""Exact checks of the structural identities over all {1,2}-sequences up to a depth.

Every value here is computed through :func:`~collatzrep.inversion.invert`
from scratch, independently of the incremental maps used by the graph
builder and the approximation scans.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator

from .geometry import point_of, periodic_value_via_line
from .inversion import invert, invert_cycle
from .rational import DomainError
from .sequences import EventuallyPeriodicSeq, Periodic, canonicalize, represent

__all__ = [
    "MAX_VERIFY_DEPTH",
    "SuiteResult",
    "DecayConstant",
    "VerifyReport",
    "binary_sequences",
    "inv",
    "verify",
    "format_report",
]

MAX_VERIFY_DEPTH = 14
DECAY_TERMS = 20


def binary_sequences(depth: int, min_len: int = 0) -> Iterator[tuple[int, ...]]:
    """All sequences over {1,2} of length ``min_len..depth``, by length then lexicographic."""
    for n in range(min_len, depth + 1):
        yield from product((1, 2), repeat=n)


def inv(prefix, cycle) -> Fraction:
    """``C^{-1}[prefix, (cycle)]``."""
    return invert(EventuallyPeriodicSeq(tuple(prefix), tuple(cycle)))


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class DecayConstant:
    seq: tuple[int, ...]
    measured: Fraction  # d_0 = C^{-1}[A,(2)] - C^{-1}[A,(1)]
    stated: Fraction  # 2 / 3**m
    closed_form: Fraction  # 2**(1 + sum A) / 3**m


@dataclass
class VerifyReport:
    depth: int
    sequences: int
    suites: list[SuiteResult]
    decay_constants: list[DecayConstant]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)


def _suite(name: str, seqs, check: Callable[[tuple[int, ...]], str | None]) -> SuiteResult:
    res = SuiteResult(name)
    for a in seqs:
        res.checked += 1
        msg = check(a)
        if msg:
            res.failures.append(f"{list(a)}: {msg}")
    return res


def lemma_item1(a) -> str | None:
    lhs = inv(a, (1,)) - inv(a + (2,), (1,))
    rhs = inv(a, (2,)) - inv(a + (1,), (2,))
    return None if lhs == rhs else f"{lhs} != {rhs}"


def lemma_item2(a) -> str | None:
    lhs = inv(a + (2,), (1,)) - inv(a + (2, 2), (1,))
    rhs = Fraction(4, 3) * (inv(a, (1,)) - inv(a + (2,), (1,)))
    return None if lhs == rhs else f"{lhs} != {rhs}"


def lemma_item3(a) -> str | None:
    lhs = inv(a + (1,), (2,)) - inv(a + (1, 1), (2,))
    rhs = Fraction(2, 3) * (inv(a, (2,)) - inv(a + (1,), (2,)))
    return None if lhs == rhs else f"{lhs} != {rhs}"


def triangles(a) -> str | None:
    # T(A) has vertices P(A), P(A1), P(A2): legs axis-parallel and equal,
    # hypotenuse of slope -1; T(A1) is T(A) scaled by 2/3, T(A2) by 4/3.
    def legs(s):
        p, p1, p2 = point_of(s), point_of(s + (1,)), point_of(s + (2,))
        if p1.y != p.y or p2.x != p.x:
            raise AssertionError("legs not axis-parallel")
        return p.x - p1.x, p.y - p2.y

    try:
        h, v = legs(a)
        h1, _ = legs(a + (1,))
        h2, _ = legs(a + (2,))
    except AssertionError as exc:
        return str(exc)
    if not (h > 0 and h == v):
        return f"legs {h}, {v} not equal and positive"
    if h1 != Fraction(2, 3) * h or h2 != Fraction(4, 3) * h:
        return f"child scale factors {h1 / h}, {h2 / h}"
    return None


def enclosure(a) -> str | None:
    x, y = point_of(a)
    return None if (x <= 1 and y <= -1 and y < x) else f"point ({x}, {y}) outside"


def collinearity(a) -> str | None:
    (x0, y0) = (Fraction(1), Fraction(-1))
    pts = [point_of(a * k) for k in (1, 2, 3)]
    x1, y1 = pts[0]
    for x, y in pts[1:]:
        if (x1 - x0) * (y - y0) - (y1 - y0) * (x - x0) != 0:
            return f"({x}, {y}) off the line"
    via_line = periodic_value_via_line(a)
    direct = invert_cycle(a)
    return None if via_line == direct else f"line gives {via_line}, cycle gives {direct}"


def roundtrip(a) -> str | None:
    for tail in ((1,), (2,)):
        s = canonicalize(EventuallyPeriodicSeq(a, tail))
        r = represent(invert(s), 10_000)
        if r != Periodic(s):
            return f"{s} -> {r}"
    return None


def decay(a) -> str | None:
    base = inv(a, (1,))
    prev = None
    for n in range(DECAY_TERMS + 1):
        d = inv(a + (1,) * n, (2,)) - base
        if d <= 0:
            return f"d_{n} = {d} not positive"
        if prev is not None and d / prev != Fraction(2, 3):
            return f"d_{n}/d_{n - 1} = {d / prev}"
        prev = d
    return None


def decay_constant(a) -> DecayConstant:
    m = len(a)
    return DecayConstant(
        a,
        inv(a, (2,)) - inv(a, (1,)),
        Fraction(2, 3**m),
        Fraction(2 ** (1 + sum(a)), 3**m),
    )


def verify(depth: int, decay_depth: int | None = None) -> VerifyReport:
    """Run every suite over ``{1,2}^{<=depth}``.

    The decay suite is quadratic in the sequence length and is capped at
    ``decay_depth`` (default ``min(depth, 6)``).
    """
    if not 0 <= depth <= MAX_VERIFY_DEPTH:
        raise DomainError(f"depth must be in 0..{MAX_VERIFY_DEPTH}, got {depth}")
    if decay_depth is None:
        decay_depth = min(depth, 6)
    seqs = list(binary_sequences(depth))
    nonempty = seqs[1:]
    suites = [
        _suite("lemma item 1", seqs, lemma_item1),
        _suite("lemma item 2", seqs, lemma_item2),
        _suite("lemma item 3", seqs, lemma_item3),
        _suite("triangles", seqs, triangles),
        _suite("enclosure", seqs, enclosure),
        _suite("collinearity", nonempty, collinearity),
        _suite("roundtrip", seqs, roundtrip),
        _suite("decay ratio", binary_sequences(decay_depth), decay),
    ]
    constants = [decay_constant(a) for a in seqs]
    return VerifyReport(depth, len(seqs), suites, constants)


def format_report(report: VerifyReport, show_constants: int = 8) -> str:
    lines = [f"verify depth {report.depth}: {report.sequences} sequences"]
    for s in report.suites:
        status = "PASS" if s.passed else "FAIL"
        lines.append(f"  {status} {s.name:<14} {s.checked - len(s.failures)}/{s.checked}")
        lines.extend(f"      {f}" for f in s.failures[:5])
    consts = report.decay_constants
    stated_ok = sum(c.measured == c.stated for c in consts)
    closed_ok = sum(c.measured == c.closed_form for c in consts)
    lines.append("  decay constant d_0 = C^-1[A,(2)] - C^-1[A,(1)]:")
    lines.append(f"    equals 2/3^m            for {stated_ok}/{len(consts)} sequences")
    lines.append(f"    equals 2^(1+sum A)/3^m  for {closed_ok}/{len(consts)} sequences")
    for c in consts[:show_constants]:
        lines.append(
            f"    A={list(c.seq)}: measured {c.measured}, 2/3^m = {c.stated}, 2^(1+sum A)/3^m = {c.closed_form}"
        )
    lines.append("result: " + ("all suites pass" if report.passed else "FAILURES"))
    return "\n".join(lines) + "\n"
