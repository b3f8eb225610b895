from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from collatzrep.approximation import approximate, digits_of, round_bound
from collatzrep.inversion import invert
from collatzrep.rational import DomainError
from collatzrep.sequences import EventuallyPeriodicSeq as S

F = Fraction

targets = st.builds(lambda n, d: -1 - F(n, d), st.integers(0, 10**4), st.integers(1, 10**3))
epsilons = st.integers(1, 12).map(lambda k: F(1, 10**k))


def value(seq):
    return invert(S(tuple(seq), (1,)))


def naive_approximate(z, eps):
    """The constructive procedure with every value recomputed by invert from scratch."""
    a = []
    while True:
        while value(a + [2]) >= z:
            a.append(2)
        w = value(a) - z
        if w < eps:
            return a
        j = 0
        while invert(S(tuple(a + [1] * j), (2,))) - invert(S(tuple(a + [1] * (j + 1)), (2,))) > w:
            j += 1
        a += [1] * j + [2]
        if value(a) == z:
            return a


def test_worked_example():
    r = approximate(-2, F(1, 10))
    assert r.sequence == (2, 1, 1, 1, 2)
    assert r.value == F(-469, 243)
    assert r.error == F(17, 243)
    assert value(r.sequence) == r.value
    assert len(r.trace) == 1
    rec = r.trace[0]
    assert (rec.twos_appended, rec.ones_appended) == (1, 3)
    assert rec.error_before == F(1, 3)
    assert rec.error_after < F(1, 9)


@pytest.mark.parametrize(
    "z, seq",
    [(F(-1), ()), (F(-5, 3), (2,)), (F(-23, 9), (2, 2)), (F(-101, 27), (2, 2, 2)), (F(-13, 9), (1, 2))],
)
def test_exact_hits(z, seq):
    r = approximate(z, F(1, 100))
    assert r.sequence == seq
    assert r.value == z and r.error == 0


def test_accepts_text_and_rejects_bad_input():
    assert approximate("-2", "0.1").sequence == (2, 1, 1, 1, 2)
    with pytest.raises(DomainError):
        approximate(F(-1, 2), F(1, 10))
    with pytest.raises(DomainError):
        approximate(-2, 0)
    with pytest.raises(DomainError):
        approximate(-2, -1)
    with pytest.raises(TypeError):
        approximate(-2.0, F(1, 10))


@given(targets, epsilons)
def test_invariants(z, eps):
    r = approximate(z, eps)
    assert set(r.sequence) <= {1, 2}
    assert r.value == value(r.sequence)
    assert 0 <= r.error < eps
    assert r.error == r.value - z
    for rec in r.trace:
        assert rec.error_after < rec.error_before / 3
    for prev, nxt in zip(r.trace, r.trace[1:]):
        assert nxt.error_before < prev.error_before / 3
    if r.trace:
        assert len(r.trace) <= round_bound(r.first_error, eps)


@given(targets, st.integers(1, 6).map(lambda k: F(1, 10**k)))
def test_matches_naive_procedure(z, eps):
    assert list(approximate(z, eps).sequence) == naive_approximate(z, eps)


@given(targets, epsilons)
def test_sandwich_after_two_scan(z, eps):
    r = approximate(z, eps)
    pos = 0
    seq = r.sequence
    for rec in r.trace:
        pos += rec.twos_appended
        b = seq[:pos]
        assert value(b) >= z > value(b + (2,))
        pos += rec.ones_appended + 1


def test_round_bound():
    assert round_bound(F(1, 3), F(1, 10)) == 3  # ceil(log3(10/3)) = 2
    assert round_bound(F(1), F(1)) == 1
    assert round_bound(F(1), F(1, 9)) == 3


@pytest.mark.parametrize(
    "z, count, digits",
    [
        (F(-1), 5, (1, 1, 1, 1, 1)),
        (F(-5, 3), 4, (2, 1, 1, 1)),
        (F(-2), 5, (2, 1, 1, 1, 2)),
    ],
)
def test_digits_examples(z, count, digits):
    assert digits_of(z, count) == digits


@given(targets, st.integers(1, 40))
def test_digits_prefix_monotone(z, k):
    assert digits_of(z, k + 1)[:k] == digits_of(z, k)


@given(targets, epsilons)
def test_approximation_is_prefix_of_digits(z, eps):
    seq = approximate(z, eps).sequence
    if seq:
        assert digits_of(z, len(seq)) == seq


@given(targets)
def test_digit_prefixes_converge(z):
    # appending a 1 keeps C^{-1}[prefix,(1)], appending a 2 lowers it; never below z
    ds = digits_of(z, 300)
    vals = [value(ds[:k]) for k in range(0, 301, 25)]
    assert all(u >= v >= z for u, v in zip(vals, vals[1:]))
    assert vals[-1] - z < F(1, 10**9)


def test_digits_rejects():
    with pytest.raises(DomainError):
        digits_of(-2, 0)
    with pytest.raises(DomainError):
        digits_of(0, 3)
