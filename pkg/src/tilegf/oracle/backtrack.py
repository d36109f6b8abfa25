"""Brute-force tiling counters built on :mod:`tilegf.oracle.kernels`."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from ..closedform import MAIN, regime_of
from ..errors import BudgetExceeded, OracleDisagreement, RegimeMismatch
from .kernels import STAT_NONE, STAT_R, STAT_S, enumerate_box

DEFAULT_NODE_CAP = 10**8

HORIZONTAL, VERTICAL, SQUARE = "horizontal", "vertical", "square"
XY, YZ, XZ = "xy", "yz", "xz"


@dataclass(frozen=True)
class TileStats:
    """``r``: vertical k x 1 tiles (2D) or yz-parallel bricks (3D).
    ``s``: k x k squares (2D) or xy-parallel bricks (3D)."""

    r: int = 0
    s: int = 0


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"k={k}: tile length must be >= 2")


def _shape_table(shapes):
    ext = np.array([e for e, _ in shapes], dtype=np.int64).reshape(-1, 3)
    cls = np.array([c for _, c in shapes], dtype=np.int64)
    return ext, cls


@dataclass
class Board2D:
    """An m-row, n-column board; rows run along y, columns along x.

    ``placements`` holds ``(shape, (row, col))`` with the anchor at the
    tile's lowest row and leftmost column.
    """

    m: int
    n: int
    k: int
    occupancy: np.ndarray = field(init=False, repr=False)
    placements: List[Tuple[str, Tuple[int, int]]] = field(default_factory=list)

    def __post_init__(self):
        _check_k(self.k)
        self.occupancy = np.zeros((self.m, self.n), dtype=bool)

    def extent(self, shape: str) -> Tuple[int, int]:
        """(rows, cols) spanned by ``shape``."""
        k = self.k
        return {HORIZONTAL: (1, k), VERTICAL: (k, 1), SQUARE: (k, k)}[shape]

    def fits(self, shape: str, row: int, col: int) -> bool:
        h, w = self.extent(shape)
        if row < 0 or col < 0 or row + h > self.m or col + w > self.n:
            return False
        return not self.occupancy[row:row + h, col:col + w].any()

    def place(self, shape: str, row: int, col: int) -> None:
        if not self.fits(shape, row, col):
            raise ValueError(f"{shape} at ({row}, {col}) overlaps or leaves the board")
        h, w = self.extent(shape)
        self.occupancy[row:row + h, col:col + w] = True
        self.placements.append((shape, (row, col)))

    def remove_last(self) -> None:
        shape, (row, col) = self.placements.pop()
        h, w = self.extent(shape)
        self.occupancy[row:row + h, col:col + w] = False

    def is_complete(self) -> bool:
        return bool(self.occupancy.all())

    def faults(self) -> List[int]:
        """Lines ``x = a`` (0 < a < n) that no tile crosses."""
        crossed = set()
        for shape, (_, col) in self.placements:
            _, w = self.extent(shape)
            crossed.update(range(col + 1, col + w))
        return [a for a in range(1, self.n) if a not in crossed]

    def stats(self) -> TileStats:
        r = sum(1 for sh, _ in self.placements if sh == VERTICAL)
        s = sum(1 for sh, _ in self.placements if sh == SQUARE)
        return TileStats(r, s)

    @staticmethod
    def shapes(k: int, mixed: bool):
        table = [((k, 1, 1), STAT_NONE), ((1, k, 1), STAT_R)]
        if mixed:
            table.append(((k, k, 1), STAT_S))
        return table


@dataclass(frozen=True)
class Board3D:
    """An m x n x k box: n along x, m along y, k along z.

    Bricks are k x k x 1 and named by the coordinate plane they lie parallel to.
    """

    m: int
    n: int
    k: int

    @staticmethod
    def shapes(k: int):
        return [((k, k, 1), STAT_S), ((1, k, k), STAT_R), ((k, 1, k), STAT_NONE)]

    @staticmethod
    def extent(k: int, orientation: str) -> Tuple[int, int, int]:
        """(dx, dy, dz) of a brick with the given orientation."""
        return {XY: (k, k, 1), YZ: (1, k, k), XZ: (k, 1, k)}[orientation]


def _run(X, Y, Z, shapes, *, faultfree=False, block_shape=-1, node_cap=DEFAULT_NODE_CAP):
    ext, cls = _shape_table(shapes)
    vols = [int(np.prod(e)) for e, _ in shapes]
    bound = X * Y * Z // min(vols) + 1
    hist = np.zeros((bound, bound, bound if block_shape >= 0 else 1), dtype=np.int64)
    if (X * Y * Z) % math.gcd(*vols):
        # the volume cannot be a sum of tile volumes
        return hist
    nodes = enumerate_box(X, Y, Z, ext, cls, faultfree, block_shape, node_cap, hist)
    if nodes < 0:
        raise BudgetExceeded(f"{X}x{Y}x{Z} search passed {node_cap} nodes")
    return hist


def _planar_hist(m, n, k, mixed, *, faultfree=False, blocks=False, node_cap=DEFAULT_NODE_CAP):
    _check_k(k)
    if m < 0 or n < 0:
        raise ValueError("board dimensions must be >= 0")
    return _run(n, m, 1, Board2D.shapes(k, mixed), faultfree=faultfree,
                block_shape=0 if blocks else -1, node_cap=node_cap)


def _by_rs(hist) -> Dict[Tuple[int, int], int]:
    flat = hist.sum(axis=2)
    return {(int(r), int(s)): int(flat[r, s]) for r, s in zip(*np.nonzero(flat))}


def count_tilings_bt(m: int, n: int, k: int, *, mixed: bool = False,
                     node_cap: int = DEFAULT_NODE_CAP) -> int:
    """Number of tilings of the m x n board by k x 1 (and, if ``mixed``, k x k) tiles."""
    hist = _planar_hist(m, n, k, mixed, node_cap=node_cap)
    return int(hist.sum())


def count_by_stats(m: int, n: int, k: int, mixed: bool = False, *,
                   node_cap: int = DEFAULT_NODE_CAP) -> Dict[Tuple[int, int], int]:
    return _by_rs(_planar_hist(m, n, k, mixed, node_cap=node_cap))


def _faultfree_by_inversion(m, n, k, mixed, node_cap):
    # a(n) = h(n) - sum_{l<n} a(l) h(n-l)
    h = [count_tilings_bt(m, j, k, mixed=mixed, node_cap=node_cap) for j in range(n + 1)]
    a = [0] * (n + 1)
    for j in range(1, n + 1):
        a[j] = h[j] - sum(a[l] * h[j - l] for l in range(1, j))
    return a[n]


def count_faultfree(m: int, n: int, k: int, mixed: bool = False, *, cross_check: bool = True,
                    node_cap: int = DEFAULT_NODE_CAP) -> int:
    """Fault-free tilings of the m x n board.

    Counted by direct enumeration; with ``cross_check`` the result is also
    recovered from full counts via the first-fault decomposition and the two
    must agree.
    """
    if n == 0 or m == 0:
        # the empty board is not a fault-free piece; a zero-height board
        # has a fault at every interior line
        return 1 if n == 1 else 0
    direct = int(_planar_hist(m, n, k, mixed, faultfree=True, node_cap=node_cap).sum())
    if cross_check:
        inverted = _faultfree_by_inversion(m, n, k, mixed, node_cap)
        if inverted != direct:
            raise OracleDisagreement(
                f"fault-free {m}x{n} k={k}: enumeration {direct} vs inversion {inverted}")
    return direct


def count_faultfree_by_stats(m: int, n: int, k: int, mixed: bool = False, *,
                             node_cap: int = DEFAULT_NODE_CAP) -> Dict[Tuple[int, int], int]:
    if n == 0:
        return {}
    return _by_rs(_planar_hist(m, n, k, mixed, faultfree=True, node_cap=node_cap))


def count_blocks_and_verticals(m: int, n: int, k: int, *,
                               node_cap: int = DEFAULT_NODE_CAP) -> Dict[Tuple[int, int], int]:
    """Fault-free k x 1 tilings keyed by ``(vertical tiles, blocks)``.

    A block is k horizontal tiles starting in the same column on k
    consecutive rows; a stack of L such tiles counts as ``L // k`` blocks.
    """
    if regime_of(m, k) != MAIN:
        raise RegimeMismatch(f"(m={m}, k={k}) is outside k < m < 2k")
    if n % k:
        raise ValueError(f"n={n} is not a multiple of k={k}")
    hist = _planar_hist(m, n, k, False, faultfree=True, blocks=True, node_cap=node_cap)
    flat = hist.sum(axis=1)
    return {(int(r), int(b)): int(flat[r, b]) for r, b in zip(*np.nonzero(flat))}


@dataclass(frozen=True)
class Count3D:
    total: int
    by_stats: Dict[Tuple[int, int], int]
    """``{(yz-parallel, xy-parallel): count}``"""


def count_3d(m: int, n: int, k: int, *, node_cap: int = DEFAULT_NODE_CAP) -> Count3D:
    """Direct count of k x k x 1 brick tilings of the m x n x k box."""
    _check_k(k)
    if m < 0 or n < 0:
        raise ValueError("box dimensions must be >= 0")
    hist = _run(n, m, k, Board3D.shapes(k), node_cap=node_cap)
    return Count3D(int(hist.sum()), _by_rs(hist))
