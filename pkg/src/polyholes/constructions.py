"""Builders for the extremal hole-maximizing families.

* ``S_k``: recursive rotation-union, ``n_k`` tiles and ``h_k`` holes.
* ``A_k``: ``S_k`` minus its top-left tile, ``n_k - 1`` tiles and ``h_k`` holes.
* ``R_k``: rectangular lattice of single-cell holes, ``40k^2 + 20k`` tiles and
  ``20k^2`` holes.
* ``R_{k,l}``: ``R_k`` plus the first ``l`` tiles of a staircase of domino
  columns on its right edge; every second tile closes one more hole.
* ``R'_n``: ``R_{k,l}`` with ``k`` maximal such that ``m_k <= n``.

Every builder measures its output with the flood-fill hole counter and raises
ContractViolation instead of returning a shape that misses its counts.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import BelowDomain, ContractViolation, DomainError, ExtensionCapacityExceeded
from .grid import Polyomino, count_holes, rotate_cells

S_MAX_K = 12
R_MAX_K = 60
R_PRIME_MIN_K = 42


def nk(k: int) -> int:
    """Tile count of S_k: (2^(2k+1) + 3*2^(k+1) + 4) / 3."""
    if k < 1:
        raise DomainError("k must be >= 1")
    num = 2 ** (2 * k + 1) + 3 * 2 ** (k + 1) + 4
    assert num % 3 == 0
    return num // 3


def hk(k: int) -> int:
    """Hole count of S_k: (4^k - 1) / 3."""
    if k < 1:
        raise DomainError("k must be >= 1")
    return (4**k - 1) // 3


def m_k(k: int) -> int:
    return 40 * k * k + 20 * k


def t_k(k: int) -> int:
    return 20 * k * k


def extension_capacity(k: int) -> int:
    """Tiles available to R_{k,l}: sum of 2i for i < 2k, i.e. 2k(2k-1)."""
    return 2 * k * (2 * k - 1)


R_PRIME_MIN_N = m_k(R_PRIME_MIN_K)


@dataclass(frozen=True)
class ConstructionReport:
    family: str
    params: dict
    polyomino: Polyomino
    expected_tiles: int
    expected_holes: int
    measured_holes: int

    @property
    def tiles(self) -> int:
        return self.polyomino.n

    @property
    def passed(self) -> bool:
        return self.tiles == self.expected_tiles and self.measured_holes == self.expected_holes

    def summary(self) -> str:
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        status = "PASS" if self.passed else "FAIL"
        return (
            f"family={self.family} {args} tiles={self.tiles} holes={self.measured_holes} "
            f"expected_tiles={self.expected_tiles} expected_holes={self.expected_holes} {status}"
        )


def _checked(family, params, poly, tiles, nholes) -> ConstructionReport:
    measured = count_holes(poly)
    report = ConstructionReport(family, params, poly, tiles, nholes, measured)
    if not report.passed:
        raise ContractViolation(
            f"{family}{params}: got {poly.n} tiles / {measured} holes, "
            f"expected {tiles} / {nholes}"
        )
    return report


# S_k and A_k ---------------------------------------------------------------


def _top_right(xy: np.ndarray) -> tuple[int, int]:
    top = xy[:, 1].max()
    row = xy[xy[:, 1] == top]
    return int(row[:, 0].max()), int(top)


def _top_left(xy: np.ndarray) -> tuple[int, int]:
    top = xy[:, 1].max()
    row = xy[xy[:, 1] == top]
    return int(row[:, 0].min()), int(top)


@functools.lru_cache(maxsize=None)
def _s_raster(k: int) -> np.ndarray:
    if k == 1:
        mask = np.ones((3, 3), dtype=bool)
        mask[1, 1] = False
        return mask
    prev = _s_raster(k - 1)
    yx = np.argwhere(prev)
    xy = yx[:, ::-1]
    pivot = _top_right(xy)
    copies = [xy] + [rotate_cells(xy, pivot, q) for q in (1, 2, 3)]
    allxy = np.concatenate(copies)
    lo = allxy.min(axis=0)
    allxy = allxy - lo
    side = int(allxy.max()) + 1
    mask = np.zeros((side, side), dtype=bool)
    mask[allxy[:, 1], allxy[:, 0]] = True
    mask[pivot[1] - lo[1], pivot[0] - lo[0]] = False
    mask.flags.writeable = False
    return mask


def build_S(k: int) -> ConstructionReport:
    """S_1 is the 3x3 ring; S_k is four quarter-turn copies of S_{k-1} about
    the centre of its top-right tile, with that tile removed."""
    if not 1 <= k <= S_MAX_K:
        raise DomainError(f"k must be in 1..{S_MAX_K}")
    mask = _s_raster(k)
    side = 2**k + 1
    if mask.shape != (side, side):
        raise ContractViolation(f"S_{k} bounding box {mask.shape} is not {side}x{side}")
    poly = Polyomino.from_raster(mask.copy())
    return _checked("S", {"k": k}, poly, nk(k), hk(k))


def build_A(k: int) -> ConstructionReport:
    if not 1 <= k <= S_MAX_K:
        raise DomainError(f"k must be in 1..{S_MAX_K}")
    mask = _s_raster(k).copy()
    x, y = _top_left(np.argwhere(mask)[:, ::-1])
    mask[y, x] = False
    poly = Polyomino.from_raster(mask)
    return _checked("A", {"k": k}, poly, nk(k) - 1, hk(k))


# R_k and its extensions --------------------------------------------------------
#
# Layout for R_k (x right, y up):
#   x = 1..10k, y = 0..6k-1 : lattice body; row y = 0 mod 3 is solid, row
#       y = 1 mod 3 is empty at even x, row y = 2 mod 3 is empty at odd x.
#       Each 2-wide, 3-high block holds 4 tiles and 2 single-cell holes.
#   x = 0, y = 1..6k-1      : left column tying the solid rows together.
#   y = 6k, x = 0..10k      : top row sealing the row below it.
#   x = 10k+1               : 2k vertical dominoes at rows {3j, 3j+1}; they seal
#       the empties of the body's right column at rows 3j+1.
# The gaps between dominoes (rows 3j+2) stay open to the right.  Each further
# column c+1 puts a domino {a+1, a} against every gap a of column c, which
# seals it, and leaves one gap fewer: 2k-1, 2k-2, ..., 1 dominoes.


def _r_base_xy(k: int) -> np.ndarray:
    W, H = 10 * k, 6 * k
    ys, xs = np.mgrid[0:H, 1 : W + 1]
    r = ys % 3
    body = (r == 0) | ((r == 1) & (xs % 2 == 1)) | ((r == 2) & (xs % 2 == 0))
    parts = [
        np.stack([xs[body], ys[body]], axis=1),
        np.stack([np.zeros(H - 1, dtype=np.int64), np.arange(1, H)], axis=1),
        np.stack([np.arange(W + 1), np.full(W + 1, H)], axis=1),
    ]
    dom = np.array([(W + 1, y) for j in range(2 * k) for y in (3 * j, 3 * j + 1)], dtype=np.int64)
    parts.append(dom)
    return np.concatenate(parts).astype(np.int64)


@functools.lru_cache(maxsize=None)
def extension_sequence(k: int) -> tuple[tuple[int, int], ...]:
    """Ordered tiles added by R_{k,l}, in R_k's coordinates.

    Column by column, bottom to top; within a domino the wall tile comes first
    and the sealing tile second, so tile 2i closes the i-th new hole.
    """
    x = 10 * k + 1
    gaps = [3 * j + 2 for j in range(2 * k - 1)]
    seq = []
    while gaps:
        x += 1
        for a in gaps:
            seq.append((x, a + 1))
            seq.append((x, a))
        gaps = [a + 2 for a in gaps[:-1]]
    assert len(seq) == extension_capacity(k)
    return tuple(seq)


def build_R(k: int) -> ConstructionReport:
    if not 1 <= k <= R_MAX_K:
        raise DomainError(f"k must be in 1..{R_MAX_K}")
    poly = Polyomino.from_xy(_r_base_xy(k))
    return _checked("R", {"k": k}, poly, m_k(k), t_k(k))


def build_R_ext(k: int, l: int) -> ConstructionReport:
    if not 1 <= k <= R_MAX_K:
        raise DomainError(f"k must be in 1..{R_MAX_K}")
    cap = extension_capacity(k)
    if l < 0:
        raise DomainError("l must be >= 0")
    if l > cap:
        raise ExtensionCapacityExceeded(f"l={l} exceeds capacity 2k(2k-1)={cap} for k={k}")
    xy = _r_base_xy(k)
    if l:
        xy = np.concatenate([xy, np.array(extension_sequence(k)[:l], dtype=np.int64)])
    poly = Polyomino.from_xy(xy)
    return _checked("R_ext", {"k": k, "l": l}, poly, m_k(k) + l, t_k(k) + l // 2)


def r_prime_params(n: int) -> tuple[int, int]:
    """(k, l) with k maximal such that m_k <= n and l = n - m_k."""
    if n < R_PRIME_MIN_N:
        raise BelowDomain(f"R'_n is defined for n >= m_{R_PRIME_MIN_K} = {R_PRIME_MIN_N}")
    k = R_PRIME_MIN_K
    while m_k(k + 1) <= n:
        k += 1
    return k, n - m_k(k)


def r_prime_holes(n: int) -> int:
    k, l = r_prime_params(n)
    return t_k(k) + l // 2


def build_R_prime(n: int) -> ConstructionReport:
    k, l = r_prime_params(n)
    if k > R_MAX_K:
        raise DomainError(f"n={n} needs k={k} > {R_MAX_K}")
    rep = build_R_ext(k, l)
    return ConstructionReport(
        "R_prime", {"n": n, "k": k, "l": l}, rep.polyomino, n, rep.expected_holes, rep.measured_holes
    )


FAMILIES = {"s": "S", "a": "A", "r": "R", "rext": "R_ext", "rprime": "R_prime"}


def build(family: str, k: int | None = None, l: int | None = None, n: int | None = None) -> ConstructionReport:
    """Dispatch on a family name as used by the CLI."""
    fam = family.lower().replace("_", "").replace("'", "prime")
    if fam in ("s", "a", "r") and k is None:
        raise DomainError(f"family {family} needs k")
    if fam == "s":
        return build_S(k)
    if fam == "a":
        return build_A(k)
    if fam == "r":
        return build_R(k)
    if fam == "rext":
        if k is None or l is None:
            raise DomainError("family rext needs k and l")
        return build_R_ext(k, l)
    if fam == "rprime":
        if n is None:
            raise DomainError("family rprime needs n")
        return build_R_prime(n)
    raise DomainError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
