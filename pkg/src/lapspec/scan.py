"""Stream graph6 records and flag graphs whose Laplacian energy meets the
complete-graph value ``2n - 2``.

Each record gets a numeric verdict first (Jacobi eigenvalues of the
realized Laplacian).  A numeric hit whose spectrum rounds to integers is
then certified exactly against the characteristic polynomial; only an
exact certificate upgrades the verdict, so non-integral near-hits stay
explicitly labeled ``numeric_hit``.
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Callable, Iterable, Iterator, Sequence

from .energy import is_l_borderenergetic
from .realize import (
    Graph6Error,
    certify_integer_spectrum,
    graph6_decode,
    iter_graph6,
    laplacian_matrix,
    symmetric_eigenvalues,
)
from .spectrum import Spectrum

__all__ = [
    "MISS",
    "NUMERIC_HIT",
    "CERTIFIED_HIT",
    "DEFAULT_TOL",
    "ScanRecord",
    "scan_g6",
    "scan_lines",
    "scan_records",
    "scan_file",
    "dedupe_cospectral",
    "write_jsonl",
    "write_csv",
]

MISS = "miss"
NUMERIC_HIT = "numeric_hit"
CERTIFIED_HIT = "certified_hit"

DEFAULT_TOL = 1e-6

# A numeric eigenvalue this close to an integer is proposed for exact
# certification; a wrong proposal is caught there, never accepted.
INTEGER_CANDIDATE_TOL = 1e-6

ErrorHandler = Callable[[int, str], None]


@dataclass(frozen=True)
class ScanRecord:
    """One scanned graph and its verdict."""

    index: int
    g6: str
    n: int
    numeric_spectrum: tuple[float, ...]
    numeric_le: float
    verdict: str
    certificate: tuple[int, ...] | None = None

    def to_json_obj(self) -> dict:
        return {
            "index": self.index,
            "g6": self.g6,
            "n": self.n,
            "numeric_spectrum": list(self.numeric_spectrum),
            "numeric_le": self.numeric_le,
            "verdict": self.verdict,
            "certificate": None if self.certificate is None else list(self.certificate),
        }


def scan_g6(index: int, record: str, tol: float = DEFAULT_TOL) -> ScanRecord:
    """Classify a single graph6 record."""
    g = graph6_decode(record)
    lap = laplacian_matrix(g)
    eigs = symmetric_eigenvalues(lap)
    dbar = 2.0 * g.edge_count() / g.n if g.n else 0.0
    le = float(sum(abs(x - dbar) for x in eigs))
    target = 2 * g.n - 2
    verdict = MISS
    certificate = None
    if abs(le - target) < tol:
        verdict = NUMERIC_HIT
        rounded = [int(round(x)) for x in eigs]
        if (
            g.n > 0
            and max((abs(x - k) for x, k in zip(eigs, rounded)), default=1.0) < INTEGER_CANDIDATE_TOL
            and certify_integer_spectrum(lap, rounded)
        ):
            exact = Spectrum.from_pairs(g.n, [(k, 1) for k in rounded])
            if is_l_borderenergetic(exact):
                verdict = CERTIFIED_HIT
                certificate = tuple(sorted(rounded))
    return ScanRecord(
        index=index,
        g6=record,
        n=g.n,
        numeric_spectrum=tuple(float(x) for x in eigs),
        numeric_le=le,
        verdict=verdict,
        certificate=certificate,
    )


def scan_lines(
    lines: Iterable[str],
    tol: float = DEFAULT_TOL,
    on_error: ErrorHandler | None = None,
) -> Iterator[ScanRecord]:
    """Scan text lines serially; undecodable lines are reported and skipped."""
    for lineno, record in iter_graph6(lines):
        try:
            yield scan_g6(lineno, record, tol)
        except Graph6Error as exc:
            if on_error is not None:
                on_error(lineno, str(exc))


def _scan_task(pair: tuple[int, str], tol: float):
    lineno, record = pair
    try:
        return "ok", scan_g6(lineno, record, tol)
    except Graph6Error as exc:
        return "error", lineno, str(exc)


def scan_records(
    pairs: Iterable[tuple[int, str]],
    tol: float = DEFAULT_TOL,
    jobs: int = 1,
    on_error: ErrorHandler | None = None,
) -> list[ScanRecord]:
    """Scan ``(line_number, record)`` pairs, optionally with worker processes.

    Results come back in input order no matter how many workers run, so the
    output is deterministic for a given input and tolerance.
    """
    pairs = list(pairs)
    out: list[ScanRecord] = []
    if jobs <= 1:
        for lineno, record in pairs:
            try:
                out.append(scan_g6(lineno, record, tol))
            except Graph6Error as exc:
                if on_error is not None:
                    on_error(lineno, str(exc))
        return out
    chunksize = max(1, len(pairs) // (jobs * 8) + 1)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for result in pool.map(partial(_scan_task, tol=tol), pairs, chunksize=chunksize):
            if result[0] == "ok":
                out.append(result[1])
            elif on_error is not None:
                on_error(result[1], result[2])
    return out


def scan_file(
    path: str,
    tol: float = DEFAULT_TOL,
    jobs: int = 1,
    on_error: ErrorHandler | None = None,
) -> list[ScanRecord]:
    """Scan a graph6 file (one record per line, optional header tolerated)."""
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    return scan_records(iter_graph6(lines), tol=tol, jobs=jobs, on_error=on_error)


def dedupe_cospectral(records: Iterable[ScanRecord]) -> list[list[ScanRecord]]:
    """Group hit records into cospectral classes.

    Certified hits are keyed by their exact integer multiset; numeric-only
    hits by the spectrum rounded to 9 decimals.  Classes come back ordered
    by ``(n, first index)``; misses are ignored.
    """
    classes: dict[tuple, list[ScanRecord]] = {}
    for rec in records:
        if rec.verdict == MISS:
            continue
        if rec.verdict == CERTIFIED_HIT:
            key = ("exact", rec.n, rec.certificate)
        else:
            key = ("numeric", rec.n, tuple(round(x, 9) for x in rec.numeric_spectrum))
        classes.setdefault(key, []).append(rec)
    return sorted(classes.values(), key=lambda group: (group[0].n, group[0].index))


def write_jsonl(records: Sequence[ScanRecord], fh) -> None:
    for rec in records:
        fh.write(json.dumps(rec.to_json_obj()) + "\n")


def write_csv(records: Sequence[ScanRecord], fh) -> None:
    writer = csv.writer(fh)
    writer.writerow(["index", "g6", "n", "le", "verdict"])
    for rec in records:
        writer.writerow([rec.index, rec.g6, rec.n, repr(rec.numeric_le), rec.verdict])
