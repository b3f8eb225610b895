"""Deterministic CSV, JSON and SVG renderings of a :class:`FractalGraph`."""

from __future__ import annotations

import csv
import io
import json
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Sequence

from .geometry import FractalGraph
from .rational import DomainError

__all__ = ["DEFAULT_VIEWPORT", "emit", "to_decimal", "seq_label"]

DEFAULT_VIEWPORT = (Fraction(-4), Fraction(3), Fraction(-4), Fraction(1))
SVG_WIDTH = 700  # pixels per viewport width; height keeps the aspect ratio

_FORMATS = ("svg", "csv", "json")


def to_decimal(value: Fraction, precision: int) -> str:
    """``value`` rounded half-even to ``precision`` significant digits."""
    if precision < 1:
        raise DomainError(f"precision must be >= 1, got {precision}")
    with localcontext() as ctx:
        ctx.prec = precision
        ctx.rounding = ROUND_HALF_EVEN
        d = Decimal(value.numerator) / Decimal(value.denominator)
    return format(d, "f")


def _exact(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def seq_label(seq: Sequence[int]) -> str:
    return "[" + ",".join(map(str, seq)) + "]"


def _fixed(value: Fraction, places: int = 3) -> str:
    # exact round-half-even of a Fraction to a fixed number of places
    return format(Decimal(round(value * 10**places)).scaleb(-places), "f")


def _csv(graph: FractalGraph, precision: int) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["seq", "x_exact", "y_exact", "x_dec", "y_dec"])
    for seq, (x, y) in graph.nodes:
        w.writerow([seq_label(seq), _exact(x), _exact(y), to_decimal(x, precision), to_decimal(y, precision)])
    buf.write("\n")
    w.writerow(["parent_seq", "child_seq"])
    for i, j in graph.edges:
        w.writerow([seq_label(graph.nodes[i][0]), seq_label(graph.nodes[j][0])])
    return buf.getvalue().encode()


def _json(graph: FractalGraph, precision: int) -> bytes:
    doc = {
        "depth": graph.depth,
        "nodes": [
            {
                "seq": list(seq),
                "x": _exact(x),
                "y": _exact(y),
                "x_dec": to_decimal(x, precision),
                "y_dec": to_decimal(y, precision),
            }
            for seq, (x, y) in graph.nodes
        ],
        "edges": [[i, j] for i, j in graph.edges],
    }
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode()


def _svg(graph: FractalGraph, viewport) -> bytes:
    xmin, xmax, ymin, ymax = viewport
    scale = Fraction(SVG_WIDTH) / (xmax - xmin)
    width = SVG_WIDTH
    height = round((ymax - ymin) * scale)

    def px(x, y):
        # y axis flipped so that larger y renders higher
        return _fixed((x - xmin) * scale), _fixed((ymax - y) * scale)

    coords = [px(x, y) for _, (x, y) in graph.nodes]
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    ax, ay = px(Fraction(0), Fraction(0))
    if xmin <= 0 <= xmax:
        out.append(f'<path class="axis" d="M {ax} 0 V {height}" stroke="#bbb" stroke-width="0.5"/>')
    if ymin <= 0 <= ymax:
        out.append(f'<path class="axis" d="M 0 {ay} H {width}" stroke="#bbb" stroke-width="0.5"/>')
    out.append('<g class="edges" stroke="#1f4e9c" stroke-width="0.6">')
    for i, j in graph.edges:
        (x1, y1), (x2, y2) = coords[i], coords[j]
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    out.append("</g>")
    out.append('<g class="nodes" fill="#c0392b">')
    for (seq, _), (cx, cy) in zip(graph.nodes, coords):
        out.append(f'<circle cx="{cx}" cy="{cy}" r="1.2"><title>{seq_label(seq)}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode()


def emit(graph: FractalGraph, fmt: str, viewport=DEFAULT_VIEWPORT, precision: int = 12) -> bytes:
    """Serialize ``graph`` as ``svg``, ``csv`` or ``json``.

    Exact coordinates are written as ``p/q`` strings; ``*_dec`` columns are
    annotations rounded to ``precision`` significant digits.  Output is a
    pure function of the arguments.
    """
    if fmt not in _FORMATS:
        raise DomainError(f"unknown format {fmt!r}; expected one of {', '.join(_FORMATS)}")
    viewport = tuple(Fraction(v) for v in viewport)
    if len(viewport) != 4:
        raise DomainError("viewport needs four values xmin,xmax,ymin,ymax")
    xmin, xmax, ymin, ymax = viewport
    if not (xmin < xmax and ymin < ymax):
        raise DomainError(f"empty viewport {viewport}")
    if precision < 1:
        raise DomainError(f"precision must be >= 1, got {precision}")
    if fmt == "csv":
        return _csv(graph, precision)
    if fmt == "json":
        return _json(graph, precision)
    return _svg(graph, viewport)
