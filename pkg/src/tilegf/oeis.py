"""OEIS b-file ingestion and comparison against computed coefficients.

A b-file is plain text with one ``index value`` pair per line; ``#`` lines
and blank lines are ignored. Network access is optional and goes through
a local cache directory (``$OEIS_CACHE_DIR``).
"""

from __future__ import annotations

import os
import re
import urllib.request
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import AlignmentAmbiguous, ParseError

BFILE_URL = "https://oeis.org/{id}/b{digits}.txt"
DEFAULT_MIN_COMPARED = 10
SHIFT_RANGE = range(-2, 3)
PROBE_TERMS = 3

FIXTURE_DIR = Path(__file__).parent / "fixtures"

# (k, m) -> OEIS identifier for the plain k x 1 count of the m x n strip
TABLE1 = {
    (2, 3): "A001835",
    (3, 4): "A049086",
    (3, 5): "A236576",
    (4, 5): "A236579",
    (4, 6): "A236580",
    (4, 7): "A236581",
}

_ID_RE = re.compile(r"^A(\d{6})$")


@dataclass(frozen=True)
class RefSequence:
    id: str
    entries: Tuple[Tuple[int, int], ...]
    source: str = ""

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)


@dataclass(frozen=True)
class Verdict:
    index: int
    n: int
    status: str  # "match" | "mismatch" | "missing"
    expected: Optional[int] = None
    computed: Optional[int] = None


@dataclass(frozen=True)
class SequenceReport:
    id: str
    aligned_offset: int
    verdicts: Tuple[Verdict, ...]
    min_compared: int = DEFAULT_MIN_COMPARED

    @property
    def compared(self) -> int:
        return sum(1 for v in self.verdicts if v.status != "missing")

    @property
    def passed(self) -> bool:
        if self.compared < self.min_compared:
            return False
        return all(v.status == "match" for v in self.verdicts if v.status != "missing")

    def mismatches(self) -> List[Verdict]:
        return [v for v in self.verdicts if v.status == "mismatch"]

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "aligned_offset": str(self.aligned_offset),
            "compared": str(self.compared),
            "pass": self.passed,
            "verdicts": [
                {
                    "index": str(v.index),
                    "n": str(v.n),
                    "status": v.status,
                    "expected": None if v.expected is None else str(v.expected),
                    "computed": None if v.computed is None else str(v.computed),
                }
                for v in self.verdicts
            ],
        }


def parse_bfile(text: str, id: str = "", source: str = "") -> RefSequence:
    entries: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'index value', got {raw!r}", lineno)
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer field in {raw!r}", lineno) from None
        if entries and idx <= entries[-1][0]:
            raise ParseError(f"index {idx} does not increase", lineno)
        entries.append((idx, val))
    return RefSequence(id, tuple(entries), source)


def read_bfile(path, id: str = "") -> RefSequence:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_bfile(text, id or _id_from_name(path.name), str(path))


def _id_from_name(name: str) -> str:
    m = re.match(r"b(\d{6})\.txt$", name)
    return f"A{m.group(1)}" if m else ""


def fixture_path(id: str) -> Path:
    return FIXTURE_DIR / f"b{_digits(id)}.txt"


def _digits(id: str) -> str:
    m = _ID_RE.match(id)
    if not m:
        raise ValueError(f"malformed OEIS identifier {id!r}")
    return m.group(1)


def cache_dir() -> Path:
    return Path(os.environ.get("OEIS_CACHE_DIR") or Path.home() / ".cache" / "tilegf" / "oeis")


def fetch_bfile(id: str, cache: Optional[Path] = None, timeout: float = 30.0) -> RefSequence:
    """Return the b-file for ``id``, downloading it into the cache on first use."""
    digits = _digits(id)
    cache = Path(cache) if cache is not None else cache_dir()
    path = cache / f"b{digits}.txt"
    if not path.exists():
        url = BFILE_URL.format(id=id, digits=digits)
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            text = resp.read().decode("utf-8")
        cache.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".part")
        tmp.write_text(text)
        tmp.replace(path)
    return read_bfile(path, id)


def detect_shift(ref: RefSequence, computed: Sequence[int], k: int) -> int:
    """Find the unique ``shift`` with ``ref[i] == computed[k * (i + shift)]``.

    Probes the first three nonzero computed terms at multiples of ``k``.
    """
    probe = [n for n in range(0, len(computed), k) if computed[n]][:PROBE_TERMS]
    if len(probe) < PROBE_TERMS:
        raise AlignmentAmbiguous("fewer than three nonzero computed terms to probe")
    table = ref.as_dict()
    hits = []
    for shift in SHIFT_RANGE:
        ok = True
        for n in probe:
            i = n // k - shift
            if table.get(i) != computed[n]:
                ok = False
                break
        if ok:
            hits.append(shift)
    if len(hits) != 1:
        raise AlignmentAmbiguous(f"{ref.id}: shifts matching the probe: {hits or 'none'}")
    return hits[0]


def compare(ref: RefSequence, computed: Sequence[int], k: int, shift: Optional[int] = None,
            min_compared: int = DEFAULT_MIN_COMPARED) -> SequenceReport:
    """Compare ``ref[i]`` with ``computed[k * (i + shift)]`` for every b-file entry.

    ``shift=None`` auto-detects it; entries beyond ``computed`` are missing.
    """
    if shift is None:
        shift = detect_shift(ref, computed, k)
    verdicts = []
    for idx, val in ref.entries:
        n = k * (idx + shift)
        if n < 0 or n >= len(computed):
            verdicts.append(Verdict(idx, n, "missing", expected=val))
        elif computed[n] == val:
            verdicts.append(Verdict(idx, n, "match", val, computed[n]))
        else:
            verdicts.append(Verdict(idx, n, "mismatch", val, computed[n]))
    return SequenceReport(ref.id, shift, tuple(verdicts), min_compared)


def format_bfile(id: str, values: Sequence[int], offset: int = 0, header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines += [f"{offset + i} {v}" for i, v in enumerate(values)]
    return "\n".join(lines) + "\n"
