"""Shared test helpers: a deliberately naive enumerator.

It shares no code with the package kernels: cells live in Python sets, the
scan is row-major (y first) instead of column-major, and tilings are
materialised as lists of rectangles, so it stays an independent check.
"""

import pytest


def _rects_2d(k, mixed):
    # (height in rows, width in columns, kind)
    shapes = [(1, k, "h"), (k, 1, "v")]
    if mixed:
        shapes.append((k, k, "sq"))
    return shapes


def naive_tilings(m, n, k, mixed=False):
    """Every tiling of the m x n board as a list of (kind, row, col, h, w)."""
    cells = {(r, c) for r in range(m) for c in range(n)}
    shapes = _rects_2d(k, mixed)
    out = []

    def rec(free, acc):
        if not free:
            out.append(list(acc))
            return
        r, c = min(free)  # row-major
        for h, w, kind in shapes:
            block = {(r + i, c + j) for i in range(h) for j in range(w)}
            if block <= free:
                acc.append((kind, r, c, h, w))
                rec(free - block, acc)
                acc.pop()

    rec(frozenset(cells), [])
    return out


def naive_faults(tiling, n):
    crossed = set()
    for _, _, c, _, w in tiling:
        crossed.update(range(c + 1, c + w))
    return [a for a in range(1, n) if a not in crossed]


def naive_stats(tiling):
    r = sum(1 for t in tiling if t[0] == "v")
    s = sum(1 for t in tiling if t[0] == "sq")
    return r, s


def naive_bricks(m, n, k):
    """Brick tilings of the box with x in [0,n), y in [0,m), z in [0,k)."""
    cells = {(x, y, z) for x in range(n) for y in range(m) for z in range(k)}
    shapes = [((k, k, 1), "xy"), ((1, k, k), "yz"), ((k, 1, k), "xz")]
    out = []

    def rec(free, acc):
        if not free:
            out.append(list(acc))
            return
        x, y, z = min(free, key=lambda t: (t[2], t[1], t[0]))  # z-major scan
        for (dx, dy, dz), kind in shapes:
            block = {(x + i, y + j, z + l) for i in range(dx) for j in range(dy) for l in range(dz)}
            if block <= free:
                acc.append(kind)
                rec(free - block, acc)
                acc.pop()

    rec(frozenset(cells), [])
    return out


def compositions(n, parts):
    """All compositions of n with parts drawn from ``parts``."""
    if n == 0:
        return [()]
    out = []
    for p in parts:
        if p <= n:
            out.extend((p,) + rest for rest in compositions(n - p, parts))
    return out


@pytest.fixture
def naive():
    return naive_tilings
