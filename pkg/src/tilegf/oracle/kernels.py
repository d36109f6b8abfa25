"""Backtracking kernels.

One iterative depth-first enumerator covers every board in the package: a
box of ``X`` columns (the x axis, length n), ``Y`` rows (y, length m) and
``Z`` layers (z; 1 for planar boards). Cells are visited column-major,
``idx = (x * Y + y) * Z + z``, and the first empty cell is always covered
by a tile anchored at its lowest corner, so each tiling is produced once.

Counts go into ``hist[r, s, b]`` with int64 entries. Every leaf costs at
least one node, so the node cap also bounds each entry well inside int64.
"""

import numpy as np

from .._jit import njit

STAT_NONE = 0
STAT_R = 1
STAT_S = 2


@njit
def _fits(grid, X, Y, Z, x, y, z, dx, dy, dz):
    if x + dx > X or y + dy > Y or z + dz > Z:
        return False
    for i in range(x, x + dx):
        for j in range(y, y + dy):
            base = (i * Y + j) * Z
            for l in range(z, z + dz):
                if grid[base + l] != 0:
                    return False
    return True


@njit
def _paint(grid, Y, Z, x, y, z, dx, dy, dz, val):
    for i in range(x, x + dx):
        for j in range(y, y + dy):
            base = (i * Y + j) * Z
            for l in range(z, z + dz):
                grid[base + l] = val


@njit
def _count_blocks(cell, placed, depth, X, Y, Z, block_shape, k):
    # Maximal runs of same-column horizontal tiles in consecutive rows;
    # each run of length L holds L // k blocks.
    starts = np.zeros((X, Y), dtype=np.uint8)
    for d in range(depth + 1):
        if placed[d] == block_shape:
            c = cell[d]
            starts[c // (Y * Z), (c // Z) % Y] = 1
    blocks = 0
    for x in range(X):
        run = 0
        for y in range(Y):
            if starts[x, y]:
                run += 1
            else:
                blocks += run // k
                run = 0
        blocks += run // k
    return blocks


@njit
def enumerate_box(X, Y, Z, ext, cls, faultfree, block_shape, node_cap, hist):
    """Fill ``hist`` with tiling counts; return nodes visited, or -1 past the cap.

    ``ext[s] = (dx, dy, dz)`` is the extent of shape ``s`` and ``cls[s]``
    says which statistic (none, r or s) it increments. With ``faultfree``
    set, branches that leave a fault line ``x = a`` (0 < a < X) uncrossed
    are cut as soon as that line can no longer be crossed.
    """
    size = X * Y * Z
    nshapes = ext.shape[0]
    grid = np.zeros(size, dtype=np.uint8)
    crossing = np.zeros(X + 1, dtype=np.int64)
    cell = np.zeros(size + 1, dtype=np.int64)
    tryidx = np.zeros(size + 1, dtype=np.int64)
    placed = np.full(size + 1, -1, dtype=np.int64)
    blk_k = ext[block_shape, 0] if block_shape >= 0 else 1
    r = 0
    s = 0
    nodes = 0

    if size == 0:
        hist[0, 0, 0] += 1
        return nodes

    depth = 0
    cell[0] = 0
    while depth >= 0:
        c = cell[depth]
        x = c // (Y * Z)
        y = (c // Z) % Y
        z = c % Z
        p = placed[depth]
        if p >= 0:
            _paint(grid, Y, Z, x, y, z, ext[p, 0], ext[p, 1], ext[p, 2], 0)
            for a in range(x + 1, x + ext[p, 0]):
                crossing[a] -= 1
            if cls[p] == STAT_R:
                r -= 1
            elif cls[p] == STAT_S:
                s -= 1
            placed[depth] = -1
        if tryidx[depth] >= nshapes:
            depth -= 1
            continue
        sh = tryidx[depth]
        tryidx[depth] += 1
        dx = ext[sh, 0]
        dy = ext[sh, 1]
        dz = ext[sh, 2]
        if not _fits(grid, X, Y, Z, x, y, z, dx, dy, dz):
            continue
        _paint(grid, Y, Z, x, y, z, dx, dy, dz, 1)
        for a in range(x + 1, x + dx):
            crossing[a] += 1
        if cls[sh] == STAT_R:
            r += 1
        elif cls[sh] == STAT_S:
            s += 1
        placed[depth] = sh
        nodes += 1
        if nodes > node_cap:
            return -1

        nc = c + 1
        while nc < size and grid[nc] != 0:
            nc += 1
        if faultfree:
            # lines up to the next free column are settled now
            ncol = nc // (Y * Z) if nc < size else X
            last = ncol if ncol < X - 1 else X - 1
            ok = True
            for a in range(x + 1, last + 1):
                if crossing[a] == 0:
                    ok = False
                    break
            if not ok:
                continue
        if nc == size:
            b = 0
            if block_shape >= 0:
                b = _count_blocks(cell, placed, depth, X, Y, Z, block_shape, blk_k)
            hist[r, s, b] += 1
            continue
        depth += 1
        cell[depth] = nc
        tryidx[depth] = 0
        placed[depth] = -1
    return nodes
