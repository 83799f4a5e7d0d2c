"""Polyomino value type and the perimeter/hole metrics computed on it.

Cells are ``(x, y)`` lattice squares.  A :class:`Polyomino` is stored
translated so that ``min x == min y == 0`` with cells sorted by ``(y, x)``;
metrics run on the bounding-box raster (``raster[y, x]``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy import ndimage

from .errors import CoordinateOverflow, Disconnected, DuplicateCell, EmptyInput

Cell = tuple[int, int]

INT32_MIN = -(2**31)
INT32_MAX = 2**31 - 1

# 4-connectivity stencil, used for tiles and for empty cells alike.
_CROSS = ndimage.generate_binary_structure(2, 1)

# The 8 symmetries of the square lattice as integer matrices acting on (x, y).
SYMMETRIES: dict[str, tuple[tuple[int, int], tuple[int, int]]] = {
    "id": ((1, 0), (0, 1)),
    "r90": ((0, -1), (1, 0)),
    "r180": ((-1, 0), (0, -1)),
    "r270": ((0, 1), (-1, 0)),
    "fx": ((-1, 0), (0, 1)),  # mirror x -> -x
    "fy": ((1, 0), (0, -1)),  # mirror y -> -y
    "fd": ((0, 1), (1, 0)),  # swap x and y
    "fa": ((0, -1), (-1, 0)),  # anti-diagonal
}


class Polyomino:
    """Immutable, normalized, edge-connected finite set of lattice cells."""

    __slots__ = ("_xy", "_raster", "_hash", "_cells")

    def __init__(self, xy: np.ndarray, raster: np.ndarray):
        # Use from_cells / from_raster; this trusts its inputs.
        self._xy = xy
        self._raster = raster
        self._xy.flags.writeable = False
        self._raster.flags.writeable = False
        self._hash = None
        self._cells = None

    # construction --------------------------------------------------------
    @classmethod
    def from_raster(cls, mask: np.ndarray, *, check: bool = True) -> "Polyomino":
        """Build from a boolean ``mask[y, x]``; empty margins are trimmed."""
        mask = np.asarray(mask, dtype=bool)
        if not mask.any():
            raise EmptyInput("polyomino needs at least one cell")
        rows = np.flatnonzero(mask.any(axis=1))
        cols = np.flatnonzero(mask.any(axis=0))
        mask = np.ascontiguousarray(mask[rows[0] : rows[-1] + 1, cols[0] : cols[-1] + 1])
        if check:
            _, ncomp = ndimage.label(mask, structure=_CROSS)
            if ncomp != 1:
                raise Disconnected(f"cells form {ncomp} edge-connected components")
        yx = np.argwhere(mask)  # row-major, so already sorted by (y, x)
        xy = np.ascontiguousarray(yx[:, ::-1], dtype=np.int64)
        return cls(xy, mask)

    @classmethod
    def from_xy(cls, xy: np.ndarray, *, check: bool = True) -> "Polyomino":
        """Build from an ``(n, 2)`` integer array of ``(x, y)`` rows, any translation."""
        xy = np.asarray(xy, dtype=np.int64).reshape(-1, 2)
        if len(xy) == 0:
            raise EmptyInput("polyomino needs at least one cell")
        if xy.min() < INT32_MIN or xy.max() > INT32_MAX:
            raise CoordinateOverflow("coordinates exceed the signed 32-bit range")
        xy = xy - xy.min(axis=0)
        w, h = int(xy[:, 0].max()) + 1, int(xy[:, 1].max()) + 1
        if w > INT32_MAX or h > INT32_MAX:
            raise CoordinateOverflow("normalized extent exceeds the signed 32-bit range")
        mask = np.zeros((h, w), dtype=bool)
        mask[xy[:, 1], xy[:, 0]] = True
        if int(mask.sum()) != len(xy):
            raise DuplicateCell("input contains duplicate cells")
        return cls.from_raster(mask, check=check)

    # accessors ---------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self._xy)

    @property
    def xy(self) -> np.ndarray:
        """Read-only ``(n, 2)`` array of ``(x, y)`` in canonical order."""
        return self._xy

    @property
    def raster(self) -> np.ndarray:
        """Read-only boolean bounding-box raster indexed ``[y, x]``."""
        return self._raster

    @property
    def cells(self) -> tuple[Cell, ...]:
        if self._cells is None:
            self._cells = tuple((int(x), int(y)) for x, y in self._xy)
        return self._cells

    @property
    def width(self) -> int:
        return self._raster.shape[1]

    @property
    def height(self) -> int:
        return self._raster.shape[0]

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.cells)

    def __contains__(self, cell) -> bool:
        x, y = cell
        return 0 <= y < self.height and 0 <= x < self.width and bool(self._raster[y, x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polyomino):
            return NotImplemented
        return self._raster.shape == other._raster.shape and np.array_equal(self._raster, other._raster)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._raster.shape, np.packbits(self._raster).tobytes()))
        return self._hash

    def __repr__(self) -> str:
        if self.n <= 8:
            return f"Polyomino({list(self.cells)})"
        return f"Polyomino(n={self.n}, bbox={self.width}x{self.height})"


def from_cells(cells: Iterable[Sequence[int]]) -> Polyomino:
    """Validate and normalize a list of ``(x, y)`` cells.

    Raises EmptyInput, DuplicateCell or Disconnected.
    """
    cells = [tuple(c) for c in cells]
    if not cells:
        raise EmptyInput("polyomino needs at least one cell")
    if len(set(cells)) != len(cells):
        raise DuplicateCell("input contains duplicate cells")
    return Polyomino.from_xy(np.array(cells, dtype=np.int64))


# holes -------------------------------------------------------------------


def hole_labels(poly: Polyomino) -> tuple[np.ndarray, int]:
    """Label the padded complement; label of the outer ring is normalized to 0.

    Returns ``(labels, count)`` where ``labels`` covers the raster padded by one
    empty ring, tiles and the unbounded component are 0 and holes are 1..count.
    """
    empty = ~np.pad(poly.raster, 1)
    labels, ncomp = ndimage.label(empty, structure=_CROSS)
    outside = labels[0, 0]
    labels[labels == outside] = 0
    if outside != ncomp:
        # keep hole labels contiguous
        labels[labels == ncomp] = outside
    return labels, ncomp - 1


def count_holes(poly: Polyomino) -> int:
    return hole_labels(poly)[1]


def holes(poly: Polyomino) -> tuple[int, list[frozenset[Cell]]]:
    """Bounded 4-connected components of empty cells.

    Empty cells that touch only at a corner are separate because the tiles are
    closed squares: the two tiles on the other diagonal meet at that corner.
    """
    labels, count = hole_labels(poly)
    return count, _components(labels, count)


def _components(labels: np.ndarray, count: int) -> list[frozenset[Cell]]:
    if count == 0:
        return []
    inner = labels[1:-1, 1:-1]
    ys, xs = np.nonzero(inner)
    lab = inner[ys, xs]
    order = np.argsort(lab, kind="stable")
    lab, xs, ys = lab[order], xs[order], ys[order]
    bounds = np.searchsorted(lab, np.arange(1, count + 2))
    comps = []
    for i in range(count):
        lo, hi = bounds[i], bounds[i + 1]
        comps.append(frozenset(zip(xs[lo:hi].tolist(), ys[lo:hi].tolist())))
    comps.sort(key=lambda c: min((y, x) for x, y in c))
    return comps


# metrics -----------------------------------------------------------------


@dataclass(frozen=True)
class MetricsReport:
    n: int
    holes: int
    hole_components: list[frozenset[Cell]]
    p: int
    b: int
    p_h: int
    p_o: int
    bbox: tuple[int, int]

    def summary(self) -> str:
        return f"n={self.n} holes={self.holes} p={self.p} b={self.b} p_h={self.p_h} p_o={self.p_o}"

    def key(self) -> tuple[int, int, int, int, int, int]:
        """Symmetry-invariant numbers, for comparing two reports."""
        return (self.n, self.holes, self.p, self.b, self.p_h, self.p_o)


def metrics(poly: Polyomino) -> MetricsReport:
    """Perimeter p, shared edges b, hole perimeter p_h and outer perimeter p_o.

    p and b are counted independently from the raster so that ``4n = p + 2b``
    is a real check rather than a definition.
    """
    tiles = np.pad(poly.raster, 1)
    labels, count = hole_labels(poly)
    hole = labels > 0

    # horizontal and vertical unit edges between neighbouring cells
    left, right = tiles[:, :-1], tiles[:, 1:]
    down, up = tiles[:-1, :], tiles[1:, :]
    b = int(np.count_nonzero(left & right) + np.count_nonzero(down & up))
    p = int(np.count_nonzero(left ^ right) + np.count_nonzero(down ^ up))

    hl, hr = hole[:, :-1], hole[:, 1:]
    hd, hu = hole[:-1, :], hole[1:, :]
    p_h = int(
        np.count_nonzero(left & hr)
        + np.count_nonzero(hl & right)
        + np.count_nonzero(down & hu)
        + np.count_nonzero(hd & up)
    )
    return MetricsReport(
        n=poly.n,
        holes=count,
        hole_components=_components(labels, count),
        p=p,
        b=b,
        p_h=p_h,
        p_o=p - p_h,
        bbox=(poly.width, poly.height),
    )


# symmetries ----------------------------------------------------------------


def transform(poly: Polyomino, g: str) -> Polyomino:
    """Image of ``poly`` under lattice symmetry ``g`` (a key of SYMMETRIES)."""
    try:
        (a, b), (c, d) = SYMMETRIES[g]
    except KeyError:
        raise ValueError(f"unknown symmetry {g!r}; expected one of {sorted(SYMMETRIES)}") from None
    x, y = poly.xy[:, 0], poly.xy[:, 1]
    out = np.stack([a * x + b * y, c * x + d * y], axis=1)
    return Polyomino.from_xy(out, check=False)


def rotate_cells(xy: np.ndarray, pivot: Cell, quarter_turns: int) -> np.ndarray:
    """Rotate cells counter-clockwise about the centre of cell ``pivot``.

    Rotating about a tile centre maps lattice cells onto lattice cells and
    leaves ``pivot`` fixed.
    """
    xy = np.asarray(xy, dtype=np.int64).reshape(-1, 2)
    px, py = pivot
    dx, dy = xy[:, 0] - px, xy[:, 1] - py
    for _ in range(quarter_turns % 4):
        dx, dy = -dy, dx
    return np.stack([px + dx, py + dy], axis=1)


def rotate_about_tile_center(poly: Polyomino, pivot: Cell, quarter_turns: int) -> Polyomino:
    if quarter_turns not in (1, 2, 3):
        raise ValueError("quarter_turns must be 1, 2 or 3")
    return Polyomino.from_xy(rotate_cells(poly.xy, pivot, quarter_turns), check=False)


# random shapes -------------------------------------------------------------


def random_polyomino(n: int, seed: int) -> Polyomino:
    """Grow an n-omino by repeatedly adding a uniformly chosen boundary cell."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    cells = {(0, 0)}
    boundary: list[Cell] = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    in_boundary = set(boundary)
    while len(cells) < n:
        i = int(rng.integers(len(boundary)))
        cell = boundary[i]
        boundary[i] = boundary[-1]
        boundary.pop()
        in_boundary.discard(cell)
        cells.add(cell)
        x, y = cell
        for nb in ((x + 1, y), (x, y + 1), (x - 1, y), (x, y - 1)):
            if nb not in cells and nb not in in_boundary:
                boundary.append(nb)
                in_boundary.add(nb)
    return Polyomino.from_xy(np.array(sorted(cells), dtype=np.int64), check=False)
