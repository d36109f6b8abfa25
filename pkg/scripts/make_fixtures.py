"""Regenerate the bundled b-file fixtures from the oracles.

Each fixture lists h_k(m, k*i) for i = 0..12. Terms come from the transfer
matrix; the ones reachable by backtracking within a few seconds are
checked against it before anything is written.
"""

import sys

from tilegf.oeis import TABLE1, fixture_path, format_bfile
from tilegf.oracle import count_tilings_bt, transfer_matrix_series

TERMS = 13
BT_CHECK_MAX_N = 12


def main():
    for (k, m), id in sorted(TABLE1.items()):
        series = transfer_matrix_series(m, k * (TERMS - 1), k)
        for n in range(0, min(BT_CHECK_MAX_N, k * (TERMS - 1)) + 1):
            bt = count_tilings_bt(m, n, k)
            if bt != series[n]:
                sys.exit(f"{id}: backtracking {bt} != transfer matrix {series[n]} at n={n}")
        values = series[::k]
        header = [
            f"{id}: tilings of the {m} x (k*i) rectangle by {k} x 1 tiles, k = {k}",
            "generated by tilegf oracles (transfer matrix, spot-checked by backtracking)",
        ]
        path = fixture_path(id)
        path.write_text(format_bfile(id, values, 0, header))
        print(path, values[:6], "...")


if __name__ == "__main__":
    main()
