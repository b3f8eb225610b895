"""Approximating z <= -1 by values C^{-1}[A,(1)] with A over {1,2}.

Each round does two scans on the current sequence ``B``:

* append 2's while ``C^{-1}[B,2,(1)] >= z`` (these values decrease to -inf),
  leaving ``w = C^{-1}[B,(1)] - z`` with ``0 <= w < C^{-1}[B,(1)] - C^{-1}[B,2,(1)]``;
* with ``x = C^{-1}[B,(2)] - C^{-1}[B,1,(2)]`` take the first ``j`` such that
  ``x * (2/3)**j < w`` and append ``j`` 1's and one 2.

The second scan cuts the error below ``w / 3``.  All values are tracked with
:class:`~collatzrep.geometry.PrefixMap`, so a scan step is a few big-int
operations regardless of the sequence length.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from .geometry import PrefixMap
from .rational import DomainError, RationalLike, parse_rational

__all__ = ["RoundRecord", "ApproxResult", "approximate", "digits_of", "round_bound"]

_ONE = Fraction(1)
_MINUS_ONE = Fraction(-1)
_TWO_THIRDS = Fraction(2, 3)


@dataclass(frozen=True)
class RoundRecord:
    twos_appended: int
    ones_appended: int
    error_before: Fraction  # w, after the 2-scan
    error_after: Fraction  # after appending the 1's and the closing 2


@dataclass
class ApproxResult:
    z: Fraction
    sequence: tuple[int, ...]
    value: Fraction
    error: Fraction
    trace: list[RoundRecord] = field(default_factory=list)
    # 2's appended by the final scan, after the last complete round
    final_twos: int = 0

    @property
    def first_error(self) -> Fraction:
        """Error after the first 2-scan (``w0``)."""
        return self.trace[0].error_before if self.trace else self.error


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError(f"expected an exact rational, got {type(value).__name__}")
    return Fraction(value)


class _State:
    def __init__(self, z: Fraction):
        self.z = z
        self.seq: list[int] = []
        self.map = PrefixMap()
        self.value = _MINUS_ONE

    def push(self, q: int) -> None:
        self.seq.append(q)
        self.map = self.map.append(q)
        self.value = self.map(_MINUS_ONE)

    def scan_twos(self) -> int:
        n = 0
        while True:
            nxt = self.map.append(2)
            v = nxt(_MINUS_ONE)
            if v < self.z:
                return n
            self.seq.append(2)
            self.map, self.value = nxt, v
            n += 1
            if v == self.z:
                return n

    def scan_ones(self, w: Fraction) -> int:
        """Append ``j`` 1's and a 2 for the first ``j`` with ``x (2/3)**j <= w``; return ``j``.

        ``x (2/3)**j`` equals ``value(B) - value(B, 1^j, 2)``, so equality
        with ``w`` is an exact hit and is accepted.
        """
        y = self.map(_ONE) - self.map.append(1)(_ONE)
        j = 0
        while y > w:
            y *= _TWO_THIRDS
            j += 1
        for q in [1] * j + [2]:
            self.push(q)
        return j


def _check_z(z: RationalLike) -> Fraction:
    z = _as_fraction(z)
    if z > -1:
        raise DomainError(f"z must be <= -1, got {z}")
    return z


def approximate(z: RationalLike, eps: RationalLike) -> ApproxResult:
    """Find ``A`` over {1,2} with ``0 <= C^{-1}[A,(1)] - z < eps``.

    ``z`` and ``eps`` must be exact rationals (decimal strings are converted
    exactly).  An exact hit returns with error 0.
    """
    z = _check_z(z)
    eps = _as_fraction(eps)
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps}")
    st = _State(z)
    trace: list[RoundRecord] = []
    while True:
        twos = st.scan_twos()
        w = st.value - z
        if w < eps:
            return ApproxResult(z, tuple(st.seq), st.value, w, trace, twos)
        ones = st.scan_ones(w)
        trace.append(RoundRecord(twos, ones, w, st.value - z))
        if st.value == z:
            return ApproxResult(z, tuple(st.seq), st.value, st.value - z, trace, 0)


def digits_of(z: RationalLike, count: int) -> tuple[int, ...]:
    """First ``count`` digits of the infinite {1,2}-expansion of ``z``.

    This is the sequence built by running the rounds of :func:`approximate`
    forever; after an exact hit the expansion continues with 1's.
    """
    z = _check_z(z)
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    st = _State(z)
    while len(st.seq) < count:
        st.scan_twos()
        w = st.value - z
        if w == 0:
            break
        st.scan_ones(w)
        if st.value == z:
            break
    digits = st.seq[:count]
    return tuple(digits + [1] * (count - len(digits)))


def round_bound(w0: Fraction, eps: Fraction) -> int:
    """``ceil(log3(w0 / eps)) + 1``, computed exactly (0 rounds if w0 < eps)."""
    k = 0
    while eps * 3**k < w0:
        k += 1
    return k + 1
