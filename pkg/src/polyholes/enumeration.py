"""Exhaustive census of fixed polyominoes by hole count, and g(m) search.

The primary enumerator is Redelmeier's algorithm (see :mod:`._redelmeier`).
:func:`naive_fixed` is an independent grow-and-deduplicate generator kept as
an oracle for small n.
"""
from __future__ import annotations

import csv
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import _redelmeier as rk
from .bounds import p_min, ub_fixed_point
from .errors import CapExceeded, ContractViolation, DomainError, InsufficientCensus, SearchBudgetExceeded
from .grid import Polyomino, count_holes, metrics

log = logging.getLogger(__name__)

HARD_CAP = 18
DEFAULT_CAP = 14
SPLIT_SIZE = 5
DEFAULT_NODE_BUDGET = 10**9
_NO_PERIMETER = np.iinfo(np.int64).max


def _check_cap(n: int, cap: int = HARD_CAP) -> None:
    if n < 1:
        raise DomainError("n must be >= 1")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {cap}")


def _fresh_state(n: int):
    W, _ = rk.layout(n)
    marked, origin = rk.initial_marks(n)
    occ = np.zeros_like(marked)
    untried = np.zeros((n + 1, 4 * n + 4), dtype=np.int64)
    untried[0, 0] = origin
    placed = np.zeros(n, dtype=np.int64)
    return W, marked, occ, untried, placed


def _index_to_xy(idx: np.ndarray, n: int) -> np.ndarray:
    W, _ = rk.layout(n)
    return np.stack([idx % W - n, idx // W - 1], axis=-1)


# census --------------------------------------------------------------------


@dataclass
class _ShardResult:
    hist: np.ndarray
    minp: np.ndarray
    minp_holed: np.ndarray
    trees: np.ndarray


def _run_shard(args) -> _ShardResult:
    n, shard, nshards = args
    W, marked, occ, untried, placed = _fresh_state(n)
    hist = np.zeros((n + 1, n + 1), dtype=np.int64)
    minp = np.full(n + 1, _NO_PERIMETER, dtype=np.int64)
    minp_holed = minp.copy()
    trees = np.zeros(n + 1, dtype=np.int64)
    counter = np.zeros(1, dtype=np.int64)
    side = n + 2
    grid = np.zeros(side * side, dtype=np.int8)
    queue = np.zeros(side * side, dtype=np.int64)
    out = np.zeros((1, 1), dtype=np.int64)
    out_count = np.zeros(1, dtype=np.int64)
    rk.census_kernel(
        0, n, W, untried, 1, marked, occ, placed, 0,
        hist, minp, minp_holed, trees, SPLIT_SIZE, shard, nshards, counter, grid, queue,
        False, out, out_count,
    )
    return _ShardResult(hist, minp, minp_holed, trees)


@dataclass
class CensusRow:
    n: int
    total_fixed_count: int
    counts_by_holes: dict[int, int]
    f_n: int
    min_perimeter: int
    min_perimeter_holed: int | None = None
    tree_count: int = 0


@dataclass
class EnumerationTable:
    max_n: int
    per_n: list[CensusRow] = field(default_factory=list)

    def row(self, n: int) -> CensusRow:
        return self.per_n[n - 1]

    def f(self, n: int) -> int:
        return self.row(n).f_n

    def validate(self) -> None:
        prev = None
        for r in self.per_n:
            if r.total_fixed_count != sum(r.counts_by_holes.values()):
                raise ContractViolation(f"n={r.n}: hole classes do not sum to the total")
            if r.f_n != max(r.counts_by_holes):
                raise ContractViolation(f"n={r.n}: f is not the largest hole class")
            if prev is not None and not prev.f_n <= r.f_n <= prev.f_n + 1:
                raise ContractViolation(f"f steps from {prev.f_n} to {r.f_n} at n={r.n}")
            prev = r

    def to_csv(self) -> str:
        hmax = max(r.f_n for r in self.per_n)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "total"] + [f"holes_{h}" for h in range(hmax + 1)] + ["f", "min_perimeter"])
        for r in self.per_n:
            w.writerow(
                [r.n, r.total_fixed_count]
                + [r.counts_by_holes.get(h, 0) for h in range(hmax + 1)]
                + [r.f_n, r.min_perimeter]
            )
        return buf.getvalue()


def census(max_n: int, workers: int = 1, cap: int = HARD_CAP) -> EnumerationTable:
    """Count fixed n-ominoes by number of holes for every n <= max_n.

    Work is split into ``max(workers, 1) * 8`` shards by the subtree reached
    at size 5; shard totals are summed, so the result does not depend on
    ``workers``.
    """
    _check_cap(max_n, cap)
    nshards = max(workers, 1) * 8
    jobs = [(max_n, s, nshards) for s in range(nshards)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_shard, jobs))
    else:
        parts = [_run_shard(j) for j in jobs]
    hist = sum(p.hist for p in parts)
    minp = np.minimum.reduce([p.minp for p in parts])
    minp_holed = np.minimum.reduce([p.minp_holed for p in parts])
    trees = sum(p.trees for p in parts)

    table = EnumerationTable(max_n=max_n)
    for n in range(1, max_n + 1):
        counts = {h: int(c) for h, c in enumerate(hist[n]) if c}
        mph = int(minp_holed[n])
        table.per_n.append(
            CensusRow(
                n=n,
                total_fixed_count=int(hist[n].sum()),
                counts_by_holes=counts,
                f_n=max(counts),
                min_perimeter=int(minp[n]),
                min_perimeter_holed=None if mph == _NO_PERIMETER else mph,
                tree_count=int(trees[n]),
            )
        )
    table.validate()
    return table


def count_fixed(n: int) -> int:
    return census(n).row(n).total_fixed_count


# visiting ------------------------------------------------------------------


def _shard_leaves(n: int, shard: int, nshards: int) -> np.ndarray:
    cap = 4096
    while True:
        W, marked, occ, untried, placed = _fresh_state(n)
        out = np.zeros((cap, n), dtype=np.int64)
        out_count = np.zeros(1, dtype=np.int64)
        dummy = np.zeros(1, dtype=np.int64)
        rk.census_kernel(
            0, n, W, untried, 1, marked, occ, placed, 0,
            np.zeros((1, 1), np.int64), dummy, dummy.copy(), dummy.copy(),
            SPLIT_SIZE, shard, nshards, np.zeros(1, np.int64),
            np.zeros(1, np.int8), dummy.copy(), True, out, out_count,
        )
        if out_count[0] <= cap:
            return out[: out_count[0]]
        cap = int(out_count[0])


def enumerate_fixed(
    n: int,
    visitor: Callable[[Polyomino], None] | None = None,
    cap: int = HARD_CAP,
    nshards: int = 64,
) -> int:
    """Visit every fixed n-omino exactly once; return how many there are.

    Without a visitor only the count is computed.  With one, polyominoes are
    materialized shard by shard in a fixed order.
    """
    _check_cap(n, cap)
    if visitor is None:
        return count_fixed(n)
    total = 0
    for shard in range(nshards):
        leaves = _shard_leaves(n, shard, nshards)
        for row in leaves:
            visitor(Polyomino.from_xy(_index_to_xy(row, n), check=False))
        total += len(leaves)
    return total


# naive oracle ----------------------------------------------------------------


def naive_fixed(max_n: int) -> list[set[tuple[tuple[int, int], ...]]]:
    """All fixed polyominoes of size 1..max_n by growth plus translation dedup.

    Returns a list whose entry i holds the (i+1)-ominoes as sorted cell tuples.
    """
    level = {((0, 0),)}
    out = [level]
    for _ in range(max_n - 1):
        nxt = set()
        for cells in level:
            occupied = set(cells)
            for x, y in cells:
                for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                    if nb in occupied:
                        continue
                    grown = cells + (nb,)
                    mx = min(c[0] for c in grown)
                    my = min(c[1] for c in grown)
                    nxt.add(tuple(sorted((cx - mx, cy - my) for cx, cy in grown)))
        level = nxt
        out.append(level)
    return out


def naive_census(max_n: int) -> EnumerationTable:
    """Census built from :func:`naive_fixed` and the grid-core metrics."""
    table = EnumerationTable(max_n=max_n)
    for n, polys in enumerate(naive_fixed(max_n), start=1):
        counts: dict[int, int] = {}
        minp = None
        for cells in polys:
            rep = metrics(Polyomino.from_xy(np.array(cells), check=False))
            counts[rep.holes] = counts.get(rep.holes, 0) + 1
            minp = rep.p if minp is None else min(minp, rep.p)
        table.per_n.append(CensusRow(n, len(polys), counts, max(counts), minp))
    return table


# g(m) ----------------------------------------------------------------------


@dataclass(frozen=True)
class GTable:
    per_m: dict[int, int]

    def to_csv(self) -> str:
        lines = ["m,g"] + [f"{m},{g}" for m, g in sorted(self.per_m.items())]
        return "\n".join(lines) + "\n"


def g_table(max_m: int, table: EnumerationTable) -> GTable:
    """g(m) = least n with f(n) >= m, read off the census."""
    out = {}
    for m in range(1, max_m + 1):
        for row in table.per_n:
            if row.f_n >= m:
                out[m] = row.n
                break
        else:
            raise InsufficientCensus(f"f never reaches {m} for n <= {table.max_n}")
    return GTable(out)


@dataclass(frozen=True)
class SearchResult:
    m: int
    g: int
    witness: Polyomino
    nodes: int
    start_n: int
    prune: str


PRUNE_MODES = {"none": 0, "sound": 1, "heuristic": 2}


def shared_edge_ceiling(n: int, m: int) -> int:
    """Most shared edges an n-omino with m holes can have.

    Its m holes need at least 4m boundary edges and its outer boundary at
    least p_min(n + m), so 4n - 2b >= 4m + p_min(n + m).
    """
    return (4 * n - 4 * m - p_min(n + m)) // 2


def search_g(
    m: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
    prune: str = "sound",
    max_n: int = 40,
) -> SearchResult:
    """Least n admitting an n-omino with exactly m holes, with a witness.

    Starts at the least n whose fixed-point upper bound allows m holes (no
    smaller n can work) and runs a depth-first Redelmeier search at each n in
    turn.  Pruning modes:

    ``sound``
        drop partial shapes already too compact to leave room for m holes,
        using :func:`shared_edge_ceiling` and the fact that every further
        tile adds at least one shared edge.
    ``heuristic``
        drop partial shapes with ``holes + remaining//2 + 1 < m``.  Fast but
        not exact: it misses the 19-tile witnesses for m = 5.
    ``none``
        plain exhaustive search.
    """
    if m < 1:
        raise DomainError("m must be >= 1")
    try:
        mode = PRUNE_MODES[prune]
    except KeyError:
        raise DomainError(f"prune must be one of {sorted(PRUNE_MODES)}") from None
    start = 1
    while ub_fixed_point(start) < m:
        start += 1
    nodes_used = 0
    for n in range(start, max_n + 1):
        W, marked, occ, untried, placed = _fresh_state(n)
        _, H = rk.layout(n)
        vcnt = np.zeros(W * H, dtype=np.int64)
        nodes = np.zeros(1, dtype=np.int64)
        found = np.zeros(1, dtype=np.int64)
        status = rk.search_kernel(
            0, n, m, W, untried, 1, marked, occ, vcnt, placed, 0, 0,
            mode, shared_edge_ceiling(n, m), node_budget - nodes_used, nodes, found,
        )
        nodes_used += int(min(nodes[0], node_budget - nodes_used))
        log.info("search_g m=%d n=%d status=%d nodes=%d", m, n, status, nodes[0])
        if status == 2:
            raise SearchBudgetExceeded(f"node budget {node_budget} exhausted at n={n} (m={m})")
        if status == 1:
            witness = Polyomino.from_xy(_index_to_xy(placed[:n], n))
            if count_holes(witness) != m:
                raise ContractViolation(f"witness for m={m} has {count_holes(witness)} holes by flood fill")
            return SearchResult(m, n, witness, nodes_used, start, prune)
    raise SearchBudgetExceeded(f"no witness up to n={max_n}")
