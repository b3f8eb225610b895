"""
The point sets P_n
==================

Each finite sequence A over {1,2} gives the point
P(A) = (C^-1[A,(2)], C^-1[A,(1)]).  Joining every P(A) to P(A,1) and P(A,2)
draws the self-similar figures P_n.  This writes P_3, P_5, P_7 and P_9 as
SVG (and P_3 as CSV) into ./out/.
"""

from pathlib import Path

from collatzrep import emit, fractal_graph, periodic_value_via_line, point_of

out = Path("out")
out.mkdir(exist_ok=True)

for depth in (3, 5, 7, 9):
    g = fractal_graph(depth)
    (out / f"P{depth}.svg").write_bytes(emit(g, "svg"))
    print(f"P_{depth}: {len(g.nodes)} points, {len(g.edges)} segments")
(out / "P3.csv").write_bytes(emit(fractal_graph(3), "csv"))

for a in [(), (1,), (2,), (1, 2)]:
    print(list(a), point_of(a))

# The points (1,-1), P(A), P(AA), ... are collinear, and the line meets
# y = x at C^-1[(A)], even when that value is positive
for a in [(1, 2), (2, 1), (1, 2, 2)]:
    print(list(a), "->", periodic_value_via_line(a))
