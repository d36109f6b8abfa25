from collections import Counter

import numpy as np
import pytest

from tilegf import closedform as cf
from tilegf.errors import BudgetExceeded, RegimeMismatch
from tilegf.oracle import (
    Board2D,
    count_3d,
    count_blocks_and_verticals,
    count_by_stats,
    count_faultfree,
    count_faultfree_by_stats,
    count_tilings_bt,
    decode_state,
    encode_state,
    transfer_matrix_count,
    transfer_matrix_series,
    transfer_matrix_stats,
)

from conftest import naive_bricks, naive_faults, naive_stats, naive_tilings

SMALL = [(m, n, k) for k in (2, 3) for m in range(0, 6) for n in range(0, 7) if m * n <= 24]


@pytest.mark.parametrize("m, n, k", SMALL)
@pytest.mark.parametrize("mixed", [False, True])
def test_bt_matches_naive(m, n, k, mixed):
    tilings = naive_tilings(m, n, k, mixed)
    assert count_tilings_bt(m, n, k, mixed=mixed) == len(tilings)
    assert count_by_stats(m, n, k, mixed) == dict(Counter(naive_stats(t) for t in tilings))
    ff = [t for t in tilings if not naive_faults(t, n)] if n else []
    if m:
        assert count_faultfree(m, n, k, mixed, cross_check=False) == len(ff)


@pytest.mark.parametrize("m, n, k, expected", [(5, 6, 3, 22), (4, 5, 3, 0), (3, 3, 3, 2)])
def test_bt_examples(m, n, k, expected):
    assert count_tilings_bt(m, n, k) == expected


def test_empty_boards():
    assert count_tilings_bt(3, 0, 2) == 1
    assert count_tilings_bt(0, 4, 3) == 1
    assert transfer_matrix_count(3, 0, 2) == 1
    assert transfer_matrix_count(0, 4, 3) == 1


def test_k1_rejected():
    with pytest.raises(ValueError):
        count_tilings_bt(2, 2, 1)
    with pytest.raises(ValueError):
        transfer_matrix_count(2, 2, 1)


def test_stats_examples():
    assert count_by_stats(5, 3, 3) == {(0, 0): 1, (3, 0): 3}
    assert count_by_stats(3, 2, 2, mixed=True) == {(0, 0): 1, (2, 0): 2, (0, 1): 2}
    assert sum(count_by_stats(3, 4, 2).values()) == 11


@pytest.mark.parametrize("m, n, k, expected", [(5, 3, 3, 4), (5, 6, 3, 6)])
def test_faultfree_examples(m, n, k, expected):
    assert count_faultfree(m, n, k) == expected


def test_faultfree_equal_regime():
    # a(k, 1) = a(k, k) = 1: the two fault-free pieces for m = k = 3
    assert count_faultfree(3, 1, 3) == 1
    assert count_faultfree(3, 3, 3) == 1
    assert count_faultfree(3, 1, 3) + count_faultfree(3, 3, 3) == 2
    assert [count_faultfree(3, n, 3) for n in (2, 4, 5, 6)] == [0, 0, 0, 0]


def test_faultfree_mixed_small():
    assert count_faultfree(3, 4, 2, mixed=True) == 4
    assert count_faultfree(3, 2, 2, mixed=True) == 5


def test_blocks_examples():
    assert count_blocks_and_verticals(5, 6, 3) == {(3, 1): 6}
    assert count_blocks_and_verticals(5, 3, 3) == {(0, 1): 1, (3, 0): 3}
    assert count_blocks_and_verticals(3, 6, 2) == {(2, 2): 2}
    with pytest.raises(RegimeMismatch):
        count_blocks_and_verticals(6, 6, 3)
    with pytest.raises(ValueError):
        count_blocks_and_verticals(5, 4, 3)


def test_3d_examples():
    assert count_3d(3, 2, 2).total == 5
    assert count_3d(2, 2, 2).total == 3 == count_tilings_bt(2, 2, 2, mixed=True)
    assert count_3d(3, 4, 2).total == count_tilings_bt(3, 4, 2, mixed=True) == 29
    assert count_3d(4, 3, 3).total == 5


@pytest.mark.parametrize("m, n, k", [(3, 2, 2), (3, 4, 2), (2, 4, 2), (4, 2, 2), (4, 3, 3)])
def test_3d_matches_naive(m, n, k):
    bricks = naive_bricks(m, n, k)
    got = count_3d(m, n, k)
    assert got.total == len(bricks)
    assert got.by_stats == dict(Counter((b.count("yz"), b.count("xy")) for b in bricks))


def test_3d_stats_frozen():
    # naive enumerator, 3 x 4 x 2 box
    assert count_3d(3, 4, 2).by_stats == {(0, 0): 1, (0, 2): 4, (0, 4): 4, (2, 0): 6, (2, 2): 10, (4, 0): 4}


@pytest.mark.parametrize("m, n, k", [(3, 20, 2), (6, 6, 3), (5, 9, 3)])
def test_transfer_examples(m, n, k):
    got = transfer_matrix_count(m, n, k)
    if (m, n, k) == (3, 20, 2):
        assert got == 413403
    elif (m, n, k) == (6, 6, 3):
        assert got == count_tilings_bt(6, 6, 3)
    else:
        assert got == cf.gf_main(5, 3).series(9)[9] == 121


def test_transfer_413403_from_recurrence():
    # c_j = 4 c_{j-1} - c_{j-2} seeded with oracle values 1, 3
    c = [count_tilings_bt(3, 0, 2), count_tilings_bt(3, 2, 2)]
    while len(c) < 11:
        c.append(4 * c[-1] - c[-2])
    assert c[10] == 413403


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("m", range(1, 7))
def test_oracle_triangle(m, k):
    cap = 3 * 10**7
    tm = transfer_matrix_series(m, 12, k)
    for n in range(13):
        assert tm[n] == transfer_matrix_count(m, n, k)
        try:
            bt = count_tilings_bt(m, n, k, node_cap=cap)
        except BudgetExceeded:
            # only boards with millions of tilings (6 x 11 and 6 x 12 dominoes) get here
            assert tm[n] > cap // 10
            continue
        assert bt == tm[n]


@pytest.mark.parametrize("m, n, k", [(3, 6, 2), (4, 6, 3), (5, 6, 3), (4, 4, 2), (6, 6, 3)])
@pytest.mark.parametrize("mixed", [False, True])
def test_transfer_stats_and_faultfree(m, n, k, mixed):
    assert transfer_matrix_stats(m, n, k, mixed=mixed) == count_by_stats(m, n, k, mixed)
    assert transfer_matrix_count(m, n, k, mixed=mixed, faultfree=True) == \
        count_faultfree(m, n, k, mixed, cross_check=False)
    assert transfer_matrix_stats(m, n, k, mixed=mixed, faultfree=True) == \
        count_faultfree_by_stats(m, n, k, mixed)


@pytest.mark.parametrize("m, n, k", [(3, 8, 2), (5, 9, 3), (4, 9, 3), (6, 6, 3)])
def test_fault_decomposition(m, n, k):
    h = [count_tilings_bt(m, j, k) for j in range(n + 1)]
    a = [0] + [count_faultfree(m, j, k) for j in range(1, n + 1)]
    for j in range(1, n + 1):
        assert h[j] == sum(a[l] * h[j - l] for l in range(1, j + 1))


@pytest.mark.parametrize("m, k", [(3, 2), (4, 3), (5, 3), (5, 4), (6, 4), (7, 4)])
def test_vertical_counts_per_piece(m, k):
    for ell in range(1, 4):
        stats = count_faultfree_by_stats(m, k * ell, k)
        if ell == 1:
            assert stats == {(0, 0): 1, (k, 0): m - k + 1}
        else:
            assert set(stats) == {(k, 0)}
    for n in range(0, 3 * k + 1):
        assert all(r % k == 0 for r, _ in count_by_stats(m, n, k))


def test_mixed_fiber_size():
    for m, k in [(3, 2), (4, 3), (5, 3)]:
        for ell in (2, 3):
            n = k * ell
            single = count_faultfree(m, n, k, cross_check=False)
            mixed = count_faultfree(m, n, k, mixed=True, cross_check=False)
            assert mixed == 2 ** (ell - 1) * single


def test_reflection_symmetry():
    # reflecting the board top-to-bottom permutes tilings; statistics survive
    for m, n, k in [(3, 4, 2), (5, 6, 3), (4, 6, 3)]:
        tilings = naive_tilings(m, n, k)
        reflected = {tuple(sorted((kind, m - r - h, c, h, w) for kind, r, c, h, w in t)) for t in tilings}
        original = {tuple(sorted(t)) for t in tilings}
        assert reflected == original
        assert count_tilings_bt(m, n, k) == len(original)


def test_budget():
    with pytest.raises(BudgetExceeded):
        count_tilings_bt(8, 8, 2, node_cap=1000)
    with pytest.raises(BudgetExceeded):
        transfer_matrix_count(12, 4, 4, max_states=10**6)


def test_profile_state_codec():
    for digits in [(0, 0, 0), (1, 2, 0, 1), (2, 2, 2)]:
        v = encode_state(digits, 3)
        assert v < 3 ** len(digits)
        assert decode_state(v, len(digits), 3) == digits
    assert encode_state((0, 0, 0), 3) == 0


def test_board2d():
    b = Board2D(3, 4, 2)
    b.place("vertical", 0, 0)
    b.place("horizontal", 2, 0)
    with pytest.raises(ValueError):
        b.place("horizontal", 2, 1)
    b.place("vertical", 0, 1)
    b.place("square", 0, 2)
    b.place("horizontal", 2, 2)
    assert b.is_complete()
    assert b.faults() == [2]
    assert b.stats().r == 2 and b.stats().s == 1
    b.remove_last()
    assert not b.is_complete()
    assert np.count_nonzero(~b.occupancy) == 2
