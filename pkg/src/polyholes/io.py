"""ASCII, SVG and ``polyomino v1`` text formats.

``polyomino v1`` layout::

    polyomino v1 <n>
    <x> <y>          (n lines, sorted by (y, x), normalized to min 0)

LF endings, no trailing blank line.
"""
from __future__ import annotations

import numpy as np

from .errors import InvalidPolyomino, ParseError
from .grid import Polyomino

HEADER = "polyomino v1"
SVG_UNIT = 10


def render_ascii(poly: Polyomino) -> str:
    """'#' for tiles, '.' for empty cells; top row (max y) first."""
    rows = np.where(poly.raster[::-1], "#", ".")
    return "\n".join("".join(r) for r in rows)


def serialize(poly: Polyomino) -> str:
    lines = [f"{HEADER} {poly.n}"]
    lines.extend(f"{x} {y}" for x, y in poly.xy.tolist())
    return "\n".join(lines)


def parse(text: str) -> Polyomino:
    """Inverse of :func:`serialize`.  Strict: any deviation is a ParseError."""
    if "\r" in text:
        raise ParseError("CR line endings are not allowed", line=text[: text.index("\r")].count("\n") + 1)
    lines = text.split("\n")
    if lines and lines[-1] == "" and len(lines) > 1:
        # tolerate a single final newline, as written by most editors
        lines.pop()
    head = lines[0].split(" ")
    if len(head) != 3 or " ".join(head[:2]) != HEADER:
        raise ParseError(f"expected '{HEADER} <n>' header", line=1)
    try:
        n = int(head[2])
    except ValueError:
        raise ParseError(f"bad tile count {head[2]!r}", line=1) from None
    if n < 1:
        raise ParseError("tile count must be positive", line=1)
    if len(lines) - 1 != n:
        bad_line = len(lines) + 1 if len(lines) - 1 < n else n + 2
        raise ParseError(f"header declares {n} cells but {len(lines) - 1} follow", line=bad_line)
    xy = np.empty((n, 2), dtype=np.int64)
    prev = None
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split(" ")
        if len(parts) != 2:
            raise ParseError(f"expected '<x> <y>', got {line!r}", line=i)
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer coordinate in {line!r}", line=i) from None
        if x < 0 or y < 0:
            raise ParseError("coordinates must be normalized to min 0", line=i)
        if prev is not None and (y, x) <= prev:
            raise ParseError("cells must be strictly ascending by (y, x)", line=i)
        prev = (y, x)
        xy[i - 2] = (x, y)
    if xy[:, 0].min() != 0 or xy[:, 1].min() != 0:
        raise ParseError("cells are not normalized to min x = 0 and min y = 0", line=2)
    try:
        return Polyomino.from_xy(xy)
    except InvalidPolyomino as exc:
        raise ParseError(str(exc)) from exc


def render_svg(poly: Polyomino, unit: int = SVG_UNIT) -> str:
    """One filled ``rect`` per tile plus a path stroking the perimeter edges.

    Elements follow canonical cell order so output is byte-stable.  SVG y grows
    downward, so lattice row y is drawn at ``height - 1 - y``.
    """
    w, h = poly.width, poly.height
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w * unit}" height="{h * unit}" '
        f'viewBox="0 0 {w * unit} {h * unit}">',
        '<g fill="#4a6fa5" stroke="none">',
    ]
    for x, y in poly.xy.tolist():
        out.append(f'<rect x="{x * unit}" y="{(h - 1 - y) * unit}" width="{unit}" height="{unit}"/>')
    out.append("</g>")

    tiles = np.pad(poly.raster, 1)
    segs = []
    # vertical edges between columns c-1 and c of the padded raster
    vy, vx = np.nonzero(tiles[:, :-1] ^ tiles[:, 1:])
    for y, x in zip(vy.tolist(), vx.tolist()):
        sx, sy = x * unit, (h - y) * unit
        segs.append(f"M{sx} {sy}v{unit}")
    hy, hx = np.nonzero(tiles[:-1, :] ^ tiles[1:, :])
    for y, x in zip(hy.tolist(), hx.tolist()):
        sx, sy = (x - 1) * unit, (h - y) * unit
        segs.append(f"M{sx} {sy}h{unit}")
    out.append(f'<path d="{"".join(segs)}" fill="none" stroke="#000" stroke-width="1"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
