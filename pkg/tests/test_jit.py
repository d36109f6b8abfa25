import json
import os
import subprocess
import sys

import numpy as np
import pytest

from tilegf import NUMBA_ENABLED
from tilegf._jit import py_func
from tilegf.oracle import backtrack, kernels

CASES = [(4, 3, 2, False), (6, 5, 3, False), (4, 4, 2, True), (6, 5, 3, True)]


def _hist(m, n, k, mixed, enumerate_fn, **kw):
    shapes = backtrack.Board2D.shapes(k, mixed)
    ext, cls = backtrack._shape_table(shapes)
    bound = m * n + 1
    hist = np.zeros((bound, bound, 1), dtype=np.int64)
    nodes = enumerate_fn(n, m, 1, ext, cls, kw.get("faultfree", False), -1, 10**7, hist)
    return nodes, hist


@pytest.mark.parametrize("m, n, k, mixed", CASES)
@pytest.mark.parametrize("faultfree", [False, True])
def test_python_kernel_matches_compiled(m, n, k, mixed, faultfree):
    fast = _hist(m, n, k, mixed, kernels.enumerate_box, faultfree=faultfree)
    slow = _hist(m, n, k, mixed, py_func(kernels.enumerate_box), faultfree=faultfree)
    assert fast[0] == slow[0]
    assert np.array_equal(fast[1], slow[1])


def test_node_cap_reports_negative():
    nodes, _ = _hist(6, 6, 2, False, kernels.enumerate_box)
    assert nodes > 100
    shapes = backtrack.Board2D.shapes(2, False)
    ext, cls = backtrack._shape_table(shapes)
    hist = np.zeros((37, 37, 1), dtype=np.int64)
    assert kernels.enumerate_box(6, 6, 1, ext, cls, False, -1, 100, hist) == -1


def test_py_func_passthrough():
    def f():
        return 1
    assert py_func(f) is f


_SCRIPT = """
import json, tilegf
from tilegf.oracle import count_tilings_bt, count_by_stats, count_3d
print(json.dumps({
    "enabled": tilegf.NUMBA_ENABLED,
    "a": count_tilings_bt(5, 6, 3),
    "b": count_tilings_bt(4, 6, 2, mixed=True),
    "c": sorted(map(list, count_by_stats(5, 6, 3).items())),
    "d": count_3d(3, 4, 2).total,
}))
"""


def _run_subprocess(flag):
    env = dict(os.environ)
    env.pop("TILEGF_DISABLE_NUMBA", None)
    if flag:
        env["TILEGF_DISABLE_NUMBA"] = flag
    proc = subprocess.run([sys.executable, "-c", _SCRIPT], env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


@pytest.mark.parametrize("flag", ["1", "true", "ON"])
def test_env_flag_disables_numba(flag):
    data = _run_subprocess(flag)
    assert data.pop("enabled") is False
    ref = _run_subprocess("")
    assert ref.pop("enabled") is NUMBA_ENABLED
    assert data == ref
