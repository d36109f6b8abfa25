"""Column-sweep transfer-matrix counter.

The state between columns ``c`` and ``c + 1`` records, for each row, how
many more columns the horizontal tile covering that row still needs
(0 .. k-1). Vertical tiles never cross a column boundary, so they are
placed inside the column fill. A k x k square leaves the same state as k
stacked horizontals and is just another fill option.

An all-zero state at an interior boundary is exactly a fault, which gives
fault-free counting for free. Counts are Python ints.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Dict, Tuple

from ..errors import BudgetExceeded

DEFAULT_MAX_STATES = 1 << 22

ProfileState = Tuple[int, ...]


def encode_state(digits: ProfileState, k: int) -> int:
    """Base-k integer with row 0 as the least significant digit."""
    v = 0
    for d in reversed(digits):
        v = v * k + d
    return v


def decode_state(value: int, m: int, k: int) -> ProfileState:
    out = []
    for _ in range(m):
        value, d = divmod(value, k)
        out.append(d)
    return tuple(out)


@lru_cache(maxsize=None)
def _fills(m: int, k: int, busy: Tuple[bool, ...], mixed: bool):
    """All ways to cover the free rows of one column.

    Returns ``(new_starts, dr, ds)`` triples where ``new_starts`` marks rows
    whose tile begins here and continues into the next column.
    """
    out = []

    def rec(y, starts, dr, ds):
        while y < m and busy[y]:
            y += 1
        if y == m:
            out.append((tuple(starts), dr, ds))
            return
        starts[y] = True
        rec(y + 1, starts, dr, ds)
        starts[y] = False
        if y + k <= m and not any(busy[y:y + k]):
            rec(y + k, starts, dr + 1, ds)
            if mixed:
                for j in range(y, y + k):
                    starts[j] = True
                rec(y + k, starts, dr, ds + 1)
                for j in range(y, y + k):
                    starts[j] = False

    rec(0, [False] * m, 0, 0)
    return tuple(out)


def _advance(state: ProfileState, k: int, mixed: bool):
    m = len(state)
    busy = tuple(d > 0 for d in state)
    carried = [d - 1 if d > 0 else 0 for d in state]
    for starts, dr, ds in _fills(m, k, busy, mixed):
        nxt = tuple(k - 1 if st else c for st, c in zip(starts, carried))
        yield nxt, dr, ds


def _check_budget(m: int, k: int, max_states: int) -> None:
    if k < 2:
        raise ValueError(f"k={k}: tile length must be >= 2")
    if k ** m > max_states:
        raise BudgetExceeded(f"k^m = {k}^{m} profile states exceed the cap of {max_states}")


def transfer_matrix_count(m: int, n: int, k: int, *, mixed: bool = False, faultfree: bool = False,
                          max_states: int = DEFAULT_MAX_STATES) -> int:
    """Exact tiling count of the m x n board; see the module docstring."""
    if m < 0 or n < 0:
        raise ValueError("board dimensions must be >= 0")
    _check_budget(m, k, max_states)
    if faultfree and (m == 0 or n == 0):
        return 1 if n == 1 else 0
    if m == 0 or n == 0:
        return 1
    zero = (0,) * m
    frontier: Dict[ProfileState, int] = {zero: 1}
    for col in range(n):
        nxt: Dict[ProfileState, int] = defaultdict(int)
        for state, cnt in frontier.items():
            for new, _, _ in _advance(state, k, mixed):
                nxt[new] += cnt
        if faultfree and col < n - 1:
            nxt.pop(zero, None)
        frontier = nxt
    return frontier.get(zero, 0)


def transfer_matrix_series(m: int, n_max: int, k: int, *, mixed: bool = False, faultfree: bool = False,
                           max_states: int = DEFAULT_MAX_STATES) -> list:
    """``[count(m, n) for n in 0..n_max]`` from a single sweep."""
    _check_budget(m, k, max_states)
    if faultfree:
        return [transfer_matrix_count(m, n, k, mixed=mixed, faultfree=True, max_states=max_states)
                for n in range(n_max + 1)]
    if m == 0:
        return [1] * (n_max + 1)
    zero = (0,) * m
    frontier: Dict[ProfileState, int] = {zero: 1}
    out = [1]
    for _ in range(n_max):
        nxt: Dict[ProfileState, int] = defaultdict(int)
        for state, cnt in frontier.items():
            for new, _, _ in _advance(state, k, mixed):
                nxt[new] += cnt
        frontier = nxt
        out.append(frontier.get(zero, 0))
    return out


def transfer_matrix_stats(m: int, n: int, k: int, *, mixed: bool = False, faultfree: bool = False,
                          max_states: int = DEFAULT_MAX_STATES) -> Dict[Tuple[int, int], int]:
    """Like :func:`transfer_matrix_count` but split by (verticals, squares)."""
    _check_budget(m, k, max_states)
    if m == 0 or n == 0:
        return {} if (faultfree and n == 0) else {(0, 0): 1}
    zero = (0,) * m
    frontier: Dict[ProfileState, Dict[Tuple[int, int], int]] = {zero: {(0, 0): 1}}
    for col in range(n):
        nxt: Dict[ProfileState, Dict[Tuple[int, int], int]] = defaultdict(lambda: defaultdict(int))
        for state, weights in frontier.items():
            for new, dr, ds in _advance(state, k, mixed):
                bucket = nxt[new]
                for (r, s), cnt in weights.items():
                    bucket[(r + dr, s + ds)] += cnt
        if faultfree and col < n - 1:
            nxt.pop(zero, None)
        frontier = nxt
    return {rs: c for rs, c in frontier.get(zero, {}).items() if c}
