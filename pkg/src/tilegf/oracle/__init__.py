"""Independent ground-truth counters: backtracking and transfer matrix."""

from .backtrack import (
    DEFAULT_NODE_CAP,
    Board2D,
    Board3D,
    Count3D,
    TileStats,
    count_3d,
    count_blocks_and_verticals,
    count_by_stats,
    count_faultfree,
    count_faultfree_by_stats,
    count_tilings_bt,
)
from .transfer import (
    ProfileState,
    decode_state,
    encode_state,
    transfer_matrix_count,
    transfer_matrix_series,
    transfer_matrix_stats,
)

__all__ = [
    "DEFAULT_NODE_CAP",
    "Board2D",
    "Board3D",
    "Count3D",
    "TileStats",
    "ProfileState",
    "count_3d",
    "count_blocks_and_verticals",
    "count_by_stats",
    "count_faultfree",
    "count_faultfree_by_stats",
    "count_tilings_bt",
    "decode_state",
    "encode_state",
    "transfer_matrix_count",
    "transfer_matrix_series",
    "transfer_matrix_stats",
]
