from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from collatzrep.geometry import (
    Point,
    PrefixMap,
    ResourceError,
    fractal_graph,
    periodic_value_via_line,
    point_of,
)
from collatzrep.inversion import invert, invert_cycle
from collatzrep.rational import DomainError
from collatzrep.sequences import EventuallyPeriodicSeq as S

F = Fraction
binary = st.lists(st.sampled_from((1, 2)), max_size=10).map(tuple)
nonempty_binary = st.lists(st.sampled_from((1, 2)), min_size=1, max_size=6).map(tuple)


def inv(pre, cyc):
    return invert(S(tuple(pre), tuple(cyc)))


@pytest.mark.parametrize(
    "seq, point",
    [
        ((), (F(1), F(-1))),
        ((1,), (F(1, 3), F(-1))),
        ((2,), (F(1), F(-5, 3))),
        ((1, 2), (F(1, 3), F(-13, 9))),
        ((2, 2), (F(1), F(-23, 9))),
        ((2, 1), (F(1, 9), F(-5, 3))),
    ],
)
def test_point_of_examples(seq, point):
    assert point_of(seq) == point


def test_point_of_rejects_other_quotients():
    with pytest.raises(DomainError):
        point_of((1, 3))


@given(binary, st.lists(st.integers(1, 5), min_size=1, max_size=4).map(tuple))
def test_prefix_map_matches_invert(seq, cycle):
    m = PrefixMap().extend(seq)
    assert m(invert_cycle(cycle)) == inv(seq, cycle)


@pytest.mark.parametrize("depth", [0, 1, 2, 3, 5])
def test_fractal_graph_counts_and_order(depth):
    g = fractal_graph(depth)
    assert len(g.nodes) == 2 ** (depth + 1) - 1
    assert len(g.edges) == 2 ** (depth + 1) - 2
    order = [s for s, _ in g.nodes]
    assert order == sorted(order, key=lambda s: (len(s), s))


def test_fractal_graph_depth1():
    g = fractal_graph(1)
    assert g.nodes == [((), (F(1), F(-1))), ((1,), (F(1, 3), F(-1))), ((2,), (F(1), F(-5, 3)))]
    assert g.edges == [(0, 1), (0, 2)]


def test_fractal_graph_depth3_matches_enumeration():
    g = fractal_graph(3)
    expected = {s: Point(inv(s, (2,)), inv(s, (1,))) for n in range(4) for s in product((1, 2), repeat=n)}
    assert dict(g.nodes) == expected
    seqs = [s for s, _ in g.nodes]
    edges = {(seqs[i], seqs[j]) for i, j in g.edges}
    assert edges == {(s[:-1], s) for s in expected if s}


def test_fractal_graph_points_distinct():
    g = fractal_graph(10)
    pts = g.points
    assert len(set(pts)) == len(pts)


def test_fractal_graph_limits():
    with pytest.raises(ResourceError):
        fractal_graph(21)
    with pytest.raises(ResourceError):
        fractal_graph(5, max_depth=4)
    with pytest.raises(DomainError):
        fractal_graph(-1)


@pytest.mark.parametrize(
    "seq, value",
    [((2,), F(1)), ((1,), F(-1)), ((1, 2), F(-5)), ((2, 1), F(-7)), ((1, 2, 2), F(23, 5))],
)
def test_periodic_value_via_line_examples(seq, value):
    assert periodic_value_via_line(seq) == value


def test_periodic_value_via_line_empty():
    with pytest.raises(DomainError):
        periodic_value_via_line(())


@given(nonempty_binary)
def test_line_value_equals_cycle_value(seq):
    assert periodic_value_via_line(seq) == invert_cycle(seq)


@given(nonempty_binary)
def test_collinear_powers(seq):
    x0, y0 = F(1), F(-1)
    x1, y1 = point_of(seq)
    for k in (2, 3, 4):
        x, y = point_of(seq * k)
        assert (x1 - x0) * (y - y0) == (y1 - y0) * (x - x0)


@given(binary)
def test_lemma_items(a):
    item1 = inv(a, (1,)) - inv(a + (2,), (1,))
    assert item1 == inv(a, (2,)) - inv(a + (1,), (2,))
    assert inv(a + (2,), (1,)) - inv(a + (2, 2), (1,)) == F(4, 3) * item1
    assert inv(a + (1,), (2,)) - inv(a + (1, 1), (2,)) == F(2, 3) * item1


@given(st.lists(st.sampled_from((1, 2)), max_size=6).map(tuple))
def test_decay_ratio_and_constant(a):
    base = inv(a, (1,))
    d = [inv(a + (1,) * n, (2,)) - base for n in range(12)]
    assert d[0] == F(2 ** (1 + sum(a)), 3 ** len(a))
    for n in range(11):
        assert d[n] > 0
        assert d[n + 1] / d[n] == F(2, 3)


def test_decay_constant_differs_from_stated_formula_for_2():
    # the stated 2/3**m gives 2/3 here
    assert inv((2,), (2,)) - inv((2,), (1,)) == F(8, 3)


@pytest.mark.parametrize("a", [(), (1,), (2,), (1, 2, 1)])
def test_twos_diverge(a):
    vals = [inv(a + (2,) * n, (1,)) for n in range(61)]
    assert all(u > v for u, v in zip(vals, vals[1:]))
    assert vals[-1] < -10**6


def test_enclosure_depth_8():
    for x, y in fractal_graph(8).points:
        assert x <= 1 and y <= -1 and y < x
