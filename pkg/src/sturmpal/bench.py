"""Wall-clock scaling of locate_occurrences on both kernel backends."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass

from . import _backend
from .engine import locate_occurrences
from .words import DEFAULT_CAP, LeveledWord, as_sequence, expand, fibonacci_prefix, image_length

BENCH_PI = "1,2;2,1;1,2"


@dataclass(frozen=True)
class BenchRow:
    backend: str
    length: int
    seconds: float


def doubling_lengths(start: int = 10**5, stop: int = 10**7) -> list[int]:
    """start, 2*start, 4*start, ... below stop, then stop itself."""
    out = []
    n = start
    while n < stop:
        out.append(n)
        n *= 2
    out.append(stop)
    return out


def workload(target: int, pi=BENCH_PI, cap: int = DEFAULT_CAP) -> LeveledWord:
    """Leveled word over a Fibonacci-prefix seed whose top level has about ``target`` letters."""
    pi = as_sequence(pi)
    probe = 10_000
    ratio = image_length(pi, fibonacci_prefix(probe)) / probe
    return expand(pi, fibonacci_prefix(max(1, round(target / ratio))), cap)


def time_locate(lw: LeveledWord, backend: str, repeat: int = 3) -> float:
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        locate_occurrences(lw, backend)
        best = min(best, time.perf_counter() - t0)
    return best


def run_bench(lengths=None, backends=None, repeat: int = 3, pi=BENCH_PI) -> list[BenchRow]:
    lengths = doubling_lengths() if lengths is None else lengths
    backends = sorted(_backend.BACKENDS) if backends is None else backends
    rows = []
    for n in lengths:
        lw = workload(n, pi)
        for name in backends:
            rows.append(BenchRow(name, len(lw.ultimate), time_locate(lw, name, repeat)))
    return rows


def growth_per_doubling(rows: list[BenchRow], backend: str) -> list[float]:
    """Time ratio between consecutive lengths, relative to linear growth, scaled to one doubling.

    Linear scaling gives 2.0 for every step, including a final step that is
    shorter than a doubling.
    """
    pts = [(r.length, r.seconds) for r in rows if r.backend == backend]
    return [2 * (t2 / t1) / (n2 / n1) for (n1, t1), (n2, t2) in zip(pts, pts[1:])]
