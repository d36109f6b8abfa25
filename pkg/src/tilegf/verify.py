"""Cross-checks of the closed forms against the oracles, used by ``tilegf verify``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional

from . import closedform as cf
from .errors import BudgetExceeded, RegimeMismatch
from .gfcore import IntPolynomial, RationalGF
from .oracle import (
    count_3d,
    count_by_stats,
    count_faultfree,
    count_tilings_bt,
    transfer_matrix_count,
)

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class Check:
    name: str
    k: int
    m: int
    status: str
    detail: str = ""

    def as_dict(self) -> dict:
        return {"check": self.name, "k": str(self.k), "m": str(self.m), "status": self.status, "detail": self.detail}


def perturbed(gf: RationalGF, k: int) -> RationalGF:
    """``gf + x^k``; a deliberately wrong series for negative tests."""
    return RationalGF(gf.num + gf.den * IntPolynomial.monomial(k), gf.den)


def _first_diff(a, b) -> Optional[int]:
    for i, (u, v) in enumerate(zip(a, b)):
        if u != v:
            return i
    return None if len(a) == len(b) else min(len(a), len(b))


class Verifier:
    def __init__(self, nmax: int, *, perturb: bool = False, max_3d_n: Optional[int] = None):
        self.nmax = nmax
        self.perturb = perturb
        self.max_3d_n = max_3d_n

    def _main_gf(self, m, k):
        gf = cf.gf_for_regime(m, k)
        return perturbed(gf, k) if self.perturb else gf

    def run(self, pairs: Iterable) -> List[Check]:
        out: List[Check] = []
        for k, m in pairs:
            for name, fn in self.CHECKS:
                try:
                    status, detail = fn(self, m, k)
                except RegimeMismatch as exc:
                    status, detail = SKIP, f"regime: {exc}"
                except BudgetExceeded as exc:
                    status, detail = SKIP, f"budget: {exc}"
                out.append(Check(name, k, m, status, detail))
        return out

    # individual checks return (status, detail)

    def closed_vs_oracles(self, m, k):
        closed = self._main_gf(m, k).series(self.nmax)
        bt = [count_tilings_bt(m, n, k) for n in range(self.nmax + 1)]
        tm = [transfer_matrix_count(m, n, k) for n in range(self.nmax + 1)]
        for label, seq in (("backtracking", bt), ("transfer matrix", tm)):
            i = _first_diff(closed, seq)
            if i is not None:
                return FAIL, f"n={i}: closed form {closed[i]} vs {label} {seq[i]}"
        return PASS, f"n<={self.nmax}"

    def oracles_agree(self, m, k):
        for n in range(self.nmax + 1):
            a, b = count_tilings_bt(m, n, k), transfer_matrix_count(m, n, k)
            if a != b:
                return FAIL, f"n={n}: backtracking {a} vs transfer matrix {b}"
        return PASS, f"n<={self.nmax}"

    def fault_decomposition(self, m, k):
        ff = cf.gf_faultfree(m, k)
        h = [count_tilings_bt(m, n, k) for n in range(self.nmax + 1)]
        a = [0] + [count_faultfree(m, n, k, cross_check=False) for n in range(1, self.nmax + 1)]
        for n in range(1, self.nmax + 1):
            rhs = sum(a[l] * h[n - l] for l in range(1, n + 1))
            if h[n] != rhs:
                return FAIL, f"n={n}: h={h[n]} but sum a(l)h(n-l)={rhs}"
        closed = ff.series(self.nmax)
        i = _first_diff(closed, a)
        if i is not None:
            return FAIL, f"n={i}: fault-free closed form {closed[i]} vs enumeration {a[i]}"
        if not cf.gf_main(m, k).equals(cf.compose_h_from_a(ff)):
            return FAIL, "H != 1/(1-A) as rational functions"
        return PASS, f"n<={self.nmax}"

    def substitution_lattice(self, m, k):
        N = self.nmax
        refined = cf.gf_mixed_refined(m, k)
        vertical = cf.gf_vertical(m, k)
        if refined.substitute(z=0).expand(N).terms != vertical.expand(N).terms:
            return FAIL, "mixed refinement at z=0 differs from vertical refinement"
        if refined.substitute(y=1, z=1).expand(N).univariate() != cf.gf_mixed(m, k).series(N):
            return FAIL, "mixed refinement at y=z=1 differs from mixed series"
        if vertical.substitute(y=1).expand(N).univariate() != self._main_gf(m, k).series(N):
            return FAIL, "vertical refinement at y=1 differs from main series"
        brick = cf.gf_brick3d_refined(m, k)
        if brick.substitute(y=1, z=1).expand(N).univariate() != cf.gf_brick3d(m, k).series(N):
            return FAIL, "brick refinement at y=z=1 differs from brick series"
        if not cf.gf_mixed(m, k).equals(cf.gf_brick3d(m, k)):
            return FAIL, "mixed and brick series differ"
        return PASS, f"order {N}"

    def refined_stats(self, m, k):
        N = self.nmax
        vertical = cf.gf_vertical(m, k).expand(N)
        mixed = cf.gf_mixed_refined(m, k).expand(N)
        for n in range(N + 1):
            got = count_by_stats(m, n, k, mixed=False)
            want = vertical.slice_n(n)
            if got != want:
                return FAIL, f"n={n}: vertical statistics {got} vs closed form {want}"
            got = count_by_stats(m, n, k, mixed=True)
            want = mixed.slice_n(n)
            if got != want:
                return FAIL, f"n={n}: mixed statistics {got} vs closed form {want}"
        return PASS, f"n<={N}"

    def mixed_vs_oracles(self, m, k):
        closed = cf.gf_mixed(m, k).series(self.nmax)
        for n in range(self.nmax + 1):
            bt = count_tilings_bt(m, n, k, mixed=True)
            tm = transfer_matrix_count(m, n, k, mixed=True)
            if not closed[n] == bt == tm:
                return FAIL, f"n={n}: closed {closed[n]}, backtracking {bt}, transfer matrix {tm}"
        return PASS, f"n<={self.nmax}"

    def bijection_3d(self, m, k):
        top = self.nmax if self.max_3d_n is None else min(self.nmax, self.max_3d_n)
        brick = cf.gf_brick3d(m, k).series(top)
        refined = cf.gf_brick3d_refined(m, k).expand(top)
        for n in range(top + 1):
            c3 = count_3d(m, n, k)
            planar = count_tilings_bt(m, n, k, mixed=True)
            if not c3.total == planar == brick[n]:
                return FAIL, f"n={n}: 3D {c3.total}, planar mixed {planar}, closed {brick[n]}"
            if c3.by_stats != refined.slice_n(n):
                return FAIL, f"n={n}: orientation statistics {c3.by_stats} vs {refined.slice_n(n)}"
        return PASS, f"n<={top}"

    CHECKS: List = [
        ("closed_vs_oracles", closed_vs_oracles),
        ("oracles_agree", oracles_agree),
        ("fault_decomposition", fault_decomposition),
        ("substitution_lattice", substitution_lattice),
        ("refined_stats", refined_stats),
        ("mixed_vs_oracles", mixed_vs_oracles),
        ("bijection_3d", bijection_3d),
    ]
