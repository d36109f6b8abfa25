"""Time the backtracking kernel with and without numba.

Each mode runs in its own interpreter because the switch is read at import
time. The numba timing excludes compilation (one warm-up call first).

    python benchmarks/bench_backtrack.py [--repeat 3] [--json]
"""

import argparse
import json
import os
import subprocess
import sys

BOARDS = [
    # (m, n, k, mixed)
    (6, 6, 2, False),
    (4, 10, 2, False),
    (6, 9, 3, False),
    (4, 8, 2, True),
]

_CHILD = """
import json, sys, time
import tilegf
from tilegf.oracle import count_tilings_bt
boards, repeat = json.loads(sys.argv[1]), int(sys.argv[2])
count_tilings_bt(2, 2, 2)
rows = []
for m, n, k, mixed in boards:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        c = count_tilings_bt(m, n, k, mixed=mixed)
        best = min(best, time.perf_counter() - t)
    rows.append({"board": [m, n, k, mixed], "count": c, "seconds": best})
print(json.dumps({"numba": tilegf.NUMBA_ENABLED, "rows": rows}))
"""


def run_mode(disable: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("TILEGF_DISABLE_NUMBA", None)
    if disable:
        env["TILEGF_DISABLE_NUMBA"] = "1"
    proc = subprocess.run([sys.executable, "-c", _CHILD, json.dumps(BOARDS), str(repeat)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--json", action="store_true")
    args = p.parse_args()
    fast = run_mode(False, args.repeat)
    slow = run_mode(True, args.repeat)
    rows = []
    for a, b in zip(fast["rows"], slow["rows"]):
        if a["count"] != b["count"]:
            raise SystemExit(f"count mismatch on {a['board']}: {a['count']} vs {b['count']}")
        rows.append({"board": a["board"], "count": a["count"], "numba_s": a["seconds"],
                     "python_s": b["seconds"], "speedup": b["seconds"] / max(a["seconds"], 1e-9)})
    if args.json:
        print(json.dumps({"numba_available": fast["numba"], "rows": rows}, indent=2))
        return
    if not fast["numba"]:
        print("numba is not importable; both columns are the Python fallback")
    print(f"{'board':<22}{'count':>10}{'numba s':>12}{'python s':>12}{'speedup':>10}")
    for r in rows:
        m, n, k, mixed = r["board"]
        label = f"{m}x{n} k={k}" + (" mixed" if mixed else "")
        print(f"{label:<22}{r['count']:>10}{r['numba_s']:>12.4f}{r['python_s']:>12.3f}{r['speedup']:>10.0f}")


if __name__ == "__main__":
    main()
