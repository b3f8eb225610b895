from fractions import Fraction

import pytest

from collatzrep.cycles import KNOWN_INTEGER_LOOPS, find_absolute_loops, loop_through, orbit_key
from collatzrep.inversion import invert_cycle
from collatzrep.rational import DomainError, collatz_step


def members(search):
    return [tuple(int(m) for m in r.members) for r in search.loops]


def test_four_loops_up_to_100():
    s = find_absolute_loops(-100, 100, 1000)
    assert members(s) == [(1,), (-1,), (-5, -7), (-17, -25, -37, -55, -41, -61, -91)]
    assert [r.quotient_cycle for r in s.loops] == [(2,), (1,), (1, 2), (1, 1, 1, 2, 1, 1, 4)]
    assert s.undecided == [] and s.scanned == 100
    for r in s.loops:
        assert r.verify() and r.canonical
        assert invert_cycle(r.quotient_cycle) == r.members[0]
    sets = [set(r.members) for r in s.loops]
    assert all(a.isdisjoint(b) for i, a in enumerate(sets) for b in sets[i + 1 :])


def test_loop4_orbit_order():
    x = Fraction(-17)
    orbit = []
    for _ in range(7):
        _, x = collatz_step(x)
        orbit.append(int(x))
    assert orbit == [-25, -37, -55, -41, -61, -91, -17]


def test_single_element_ranges():
    assert find_absolute_loops(3, 3, 1000).loops == []
    one = find_absolute_loops(1, 1, 10)
    assert members(one) == [(1,)] and one.loops[0].quotient_cycle == (2,)
    assert find_absolute_loops(2, 2, 10).scanned == 0


def test_undecided_reported():
    # detection needs 8, 42 and 6 steps respectively
    s = find_absolute_loops(25, 29, 20)
    assert s.undecided == [27]
    assert s.loops == []


def test_workers_give_same_result():
    a = find_absolute_loops(-3000, 3000, 1000)
    b = find_absolute_loops(-3000, 3000, 1000, workers=2)
    assert a == b
    assert members(a) == [list(l) and tuple(l) for l in KNOWN_INTEGER_LOOPS]


def test_rotation_starts_at_representative():
    r = loop_through(Fraction(-61), 100)
    assert r.members[0] == -17
    r = loop_through(Fraction(-7), 100)
    assert r.members == (-5, -7) and r.quotient_cycle == (1, 2)
    assert sorted([Fraction(3), Fraction(-3), Fraction(1, 3)], key=orbit_key) == [Fraction(1, 3), 3, -3]


def test_rejects_bad_arguments():
    with pytest.raises(DomainError):
        find_absolute_loops(5, 1, 10)
    with pytest.raises(DomainError):
        find_absolute_loops(1, 5, 0)
    with pytest.raises(DomainError):
        loop_through(Fraction(3), 50)
