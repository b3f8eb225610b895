"""Exact arithmetic on the odd rationals.

An odd rational is a :class:`fractions.Fraction` whose reduced numerator and
denominator are both odd.  ``Fraction`` already normalizes sign and reduces
at construction, so it is used directly as the value type; this module only
adds validation, parsing and the Collatz step with its inverse.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

__all__ = [
    "DomainError",
    "OddRational",
    "RationalLike",
    "is_odd_rational",
    "odd_rational",
    "parse_rational",
    "format_rational",
    "two_adic_valuation",
    "collatz_step",
    "inverse_step",
]

OddRational = Fraction
RationalLike = Union[int, Fraction, str]


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


_RATIONAL_RE = re.compile(r"^\s*(-?)(\d+)(?:(/)(\d+)|\.(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``-?d+``, ``-?d+/d+`` or ``-?d+.d+`` into an exact Fraction.

    Decimal literals are converted exactly (``-3.5`` gives ``-7/2``).  No
    oddness check is made here; see :func:`odd_rational`.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise DomainError(f"malformed rational: {text!r}")
    sign, whole, slash, den, frac = m.groups()
    if slash:
        if int(den) == 0:
            raise DomainError(f"zero denominator: {text!r}")
        value = Fraction(int(whole), int(den))
    elif frac is not None:
        value = Fraction(int(whole + frac), 10 ** len(frac))
    else:
        value = Fraction(int(whole))
    return -value if sign else value


def is_odd_rational(value: Fraction) -> bool:
    return value.numerator % 2 == 1 and value.denominator % 2 == 1


def odd_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction and check that it lies in Q^odd."""
    if isinstance(value, str):
        value = parse_rational(value)
    elif isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError(f"expected int, Fraction or str, got {type(value).__name__}")
    value = Fraction(value)
    if not is_odd_rational(value):
        raise DomainError(f"{format_rational(value)} does not have odd numerator and denominator")
    return value


def format_rational(value: Fraction, always_slash: bool = False) -> str:
    """Render ``p/q``; integers print bare unless ``always_slash`` is set."""
    if value.denominator == 1 and not always_slash:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def two_adic_valuation(n: int) -> int:
    """Largest ``v`` with ``2**v`` dividing the nonzero integer ``n``."""
    if n == 0:
        raise DomainError("2-adic valuation of 0 is undefined")
    return (n & -n).bit_length() - 1


def step_pair(x: int, y: int) -> tuple[int, int, int]:
    """Collatz step on a reduced pair ``(x, y)``; returns ``(q, x', y')``."""
    # x/y reduced with y > 0 odd.  gcd(3x + y, y) = gcd(3, y), so the only
    # possible cancellation in 3*x/y + 1 is a single factor of 3.
    num = 3 * x + y
    if y % 3 == 0:
        num //= 3
        y //= 3
    q = (num & -num).bit_length() - 1
    return q, num >> q, y


def collatz_step(a: Fraction) -> tuple[int, Fraction]:
    """One step of the Collatz algorithm on Q^odd.

    Returns ``(q, b)`` where ``q`` is the 2-adic valuation of the numerator of
    ``3a + 1`` and ``b = (3a + 1) / 2**q``.  ``q >= 1`` always.
    """
    if not is_odd_rational(a):
        raise DomainError(f"{format_rational(a)} is not in Q^odd")
    q, num, den = step_pair(a.numerator, a.denominator)
    return q, Fraction(num, den)


def inverse_step(b: Fraction, q: int) -> Fraction:
    """The unique ``a`` with ``collatz_step(a) == (q, b)``, i.e. ``(2**q b - 1)/3``."""
    if q < 1:
        raise DomainError(f"partial quotient must be >= 1, got {q}")
    return (Fraction(b) * (1 << q) - 1) / 3
