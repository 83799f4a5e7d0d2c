"""Numba kernels for Redelmeier enumeration of fixed polyominoes.

Lattice layout for target size n: cells (x, y) with -(n-1) <= x <= n-1 and
0 <= y <= n-1, padded by one ring, flattened as ``(y + 1) * W + (x + n)`` with
``W = 2n + 1``.  Cells below the origin row, left of the origin on it, and
the padding ring start out marked so they never enter the untried set; this
makes the origin the lowest-then-leftmost cell of every polyomino grown, so
each fixed polyomino is produced exactly once.
"""
import numpy as np
from numba import njit


def layout(n):
    W = 2 * n + 1
    H = n + 2
    return W, H


def initial_marks(n):
    W, H = layout(n)
    marked = np.zeros(W * H, dtype=np.bool_)
    for row in range(H):
        y = row - 1
        for col in range(W):
            x = col - n
            if row == 0 or row == H - 1 or col == 0 or col == W - 1:
                marked[row * W + col] = True
            elif y == 0 and x < 0:
                marked[row * W + col] = True
    origin = 1 * W + n
    marked[origin] = True
    return marked, origin


@njit(cache=True)
def count_holes_local(placed, s, W, grid, queue):
    """Bounded 4-connected empty components of the cells ``placed[:s]``."""
    minr = 1 << 30
    maxr = -1
    minc = 1 << 30
    maxc = -1
    for i in range(s):
        r = placed[i] // W
        c = placed[i] % W
        if r < minr:
            minr = r
        if r > maxr:
            maxr = r
        if c < minc:
            minc = c
        if c > maxc:
            maxc = c
    gw = maxc - minc + 3
    gh = maxr - minr + 3
    size = gw * gh
    # 0 empty, 1 tile, 2 visited empty
    for i in range(size):
        grid[i] = 0
    for i in range(s):
        r = placed[i] // W - minr + 1
        c = placed[i] % W - minc + 1
        grid[r * gw + c] = 1
    nholes = -1  # the first component found, from the corner, is the outside
    for start in range(size):
        if grid[start] != 0:
            continue
        nholes += 1
        head = 0
        tail = 0
        queue[tail] = start
        tail += 1
        grid[start] = 2
        while head < tail:
            v = queue[head]
            head += 1
            r = v // gw
            c = v % gw
            if c > 0 and grid[v - 1] == 0:
                grid[v - 1] = 2
                queue[tail] = v - 1
                tail += 1
            if c < gw - 1 and grid[v + 1] == 0:
                grid[v + 1] = 2
                queue[tail] = v + 1
                tail += 1
            if r > 0 and grid[v - gw] == 0:
                grid[v - gw] = 2
                queue[tail] = v - gw
                tail += 1
            if r < gh - 1 and grid[v + gw] == 0:
                grid[v + gw] = 2
                queue[tail] = v + gw
                tail += 1
    return nholes


@njit(cache=True)
def census_kernel(
    depth, n, W, untried, ulen, marked, occ, placed, b,
    hist, minp, minp_holed, trees, split, shard, nshards, counter, grid, queue,
    collect, out, out_count,
):
    """Depth-first Redelmeier growth from the untried set ``untried[depth, :ulen]``.

    Subtrees rooted at size ``split`` are numbered in visiting order and only
    those congruent to ``shard`` mod ``nshards`` are explored; sizes below
    ``split`` are recorded by shard 0 alone.
    """
    cnt = ulen
    while cnt > 0:
        cnt -= 1
        c = untried[depth, cnt]
        s = depth + 1
        if s == split:
            bid = counter[0]
            counter[0] += 1
            if bid % nshards != shard:
                continue
        occ[c] = True
        placed[depth] = c
        nb = 0
        if occ[c - 1]:
            nb += 1
        if occ[c + 1]:
            nb += 1
        if occ[c - W]:
            nb += 1
        if occ[c + W]:
            nb += 1
        bb = b + nb
        if s >= split or shard == 0:
            if collect:
                if s == n:
                    # past capacity only count, so the caller can resize
                    if out_count[0] < out.shape[0]:
                        for i in range(n):
                            out[out_count[0], i] = placed[i]
                    out_count[0] += 1
            else:
                h = count_holes_local(placed, s, W, grid, queue)
                hist[s, h] += 1
                p = 4 * s - 2 * bb
                if p < minp[s]:
                    minp[s] = p
                if h > 0 and p < minp_holed[s]:
                    minp_holed[s] = p
                if bb == s - 1:
                    trees[s] += 1
        if s < n:
            for i in range(cnt):
                untried[depth + 1, i] = untried[depth, i]
            k = cnt
            for d in range(4):
                if d == 0:
                    v = c + 1
                elif d == 1:
                    v = c + W
                elif d == 2:
                    v = c - 1
                else:
                    v = c - W
                if not marked[v]:
                    marked[v] = True
                    untried[depth + 1, k] = v
                    k += 1
            census_kernel(
                depth + 1, n, W, untried, k, marked, occ, placed, bb,
                hist, minp, minp_holed, trees, split, shard, nshards, counter, grid, queue,
                collect, out, out_count,
            )
            for i in range(cnt, k):
                marked[untried[depth + 1, i]] = False
        occ[c] = False
    return 0


@njit(cache=True)
def search_kernel(
    depth, n, m, W, untried, ulen, marked, occ, vcnt, placed, b, V,
    prune, bmax, budget, nodes, found,
):
    """Depth-first search for an n-omino with exactly m holes.

    Holes of every partial shape are tracked incrementally through the Euler
    characteristic of the closed-square complex: holes = 1 - V + E - F with
    F = s tiles, E = 4s - b edges and V the number of covered lattice points.
    ``prune``: 0 explores everything; 1 abandons a partial shape whose shared
    edges plus one per remaining tile exceed ``bmax``; 2 abandons it when
    ``holes + (n - s)//2 + 1 < m``.
    Returns 1 when found (``placed[:n]`` then holds the witness), 2 when the
    node budget ran out, else 0.
    """
    cnt = ulen
    while cnt > 0:
        cnt -= 1
        c = untried[depth, cnt]
        s = depth + 1
        nodes[0] += 1
        if nodes[0] > budget:
            return 2
        occ[c] = True
        placed[depth] = c
        nb = 0
        if occ[c - 1]:
            nb += 1
        if occ[c + 1]:
            nb += 1
        if occ[c - W]:
            nb += 1
        if occ[c + W]:
            nb += 1
        bb = b + nb
        VV = V
        for corner in (c, c + 1, c + W, c + W + 1):
            if vcnt[corner] == 0:
                VV += 1
            vcnt[corner] += 1
        h = 1 - VV + 3 * s - bb
        status = 0
        if s == n:
            if h == m:
                found[0] = 1
                return 1
        elif (
            prune == 0
            or (prune == 1 and bb + n - s <= bmax)
            or (prune == 2 and h + (n - s) // 2 + 1 >= m)
        ):
            for i in range(cnt):
                untried[depth + 1, i] = untried[depth, i]
            k = cnt
            for d in range(4):
                if d == 0:
                    v = c + 1
                elif d == 1:
                    v = c + W
                elif d == 2:
                    v = c - 1
                else:
                    v = c - W
                if not marked[v]:
                    marked[v] = True
                    untried[depth + 1, k] = v
                    k += 1
            status = search_kernel(
                depth + 1, n, m, W, untried, k, marked, occ, vcnt, placed, bb, VV,
                prune, bmax, budget, nodes, found,
            )
            for i in range(cnt, k):
                marked[untried[depth + 1, i]] = False
        for corner in (c, c + 1, c + W, c + W + 1):
            vcnt[corner] -= 1
        occ[c] = False
        if status != 0:
            return status
    return 0
