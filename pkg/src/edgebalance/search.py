"""Exhaustive enumeration of edge-friendly labelings.

Only labelings with exactly ``ceil(q/2)`` 1-edges are visited. When q is
odd the remaining edge-friendly labelings are the complements of these and
have the same index, so the index set is unchanged; when q is even these
are all of them. Histogram counts refer to this half-space.

Labelings are visited in colexicographic order of their 1-edge sets, which
is increasing order of the bitmask ``sum(1 << e for 1-edges e)``. A rank in
that order identifies a labeling, so the space splits into contiguous rank
ranges that are scanned independently and merged in range order. The
witness kept for each index is the first one in enumeration order,
whatever the number of workers.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator, Optional

import numba
import numpy as np

from .graph import Graph, is_regular
from .labeling import EdgeLabeling

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 200_000_000
CHUNK = 1 << 22
MAX_EDGES = 64


class BudgetExceeded(RuntimeError):
    """The labeling space is larger than the allowed enumeration budget."""


# ---------------------------------------------------------------------------
# colex ranking of fixed-size subsets encoded as bitmasks
# ---------------------------------------------------------------------------

def colex_rank(mask: int) -> int:
    r, i = 0, 0
    pos = 0
    while mask:
        if mask & 1:
            i += 1
            r += comb(pos, i)
        mask >>= 1
        pos += 1
    return r


def colex_unrank(rank: int, k: int) -> int:
    """Bitmask of the k-subset with the given colex rank."""
    mask = 0
    for i in range(k, 0, -1):
        c = i - 1
        while comb(c + 1, i) <= rank:
            c += 1
        rank -= comb(c, i)
        mask |= 1 << c
    return mask


def next_same_popcount(x: int) -> int:
    c = x & -x
    r = x + c
    return (((r ^ x) >> 2) // c) | r


# ---------------------------------------------------------------------------
# compiled scan
# ---------------------------------------------------------------------------

@numba.njit(cache=True, nogil=True)
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@numba.njit(cache=True, nogil=True)
def _scan(incidence, degree, start_mask, count, target):
    """Scan ``count`` masks from ``start_mask``.

    A vertex is labeled 1 when twice its 1-degree exceeds ``degree[v]`` and
    0 when it falls short. Returns (histogram, first offset per index,
    number scanned); scanning stops right after the first labeling whose
    index equals ``target`` (pass -1 to scan everything).
    """
    p = incidence.shape[0]
    hist = np.zeros(p + 1, dtype=np.int64)
    first = np.full(p + 1, -1, dtype=np.int64)
    x = start_mask
    one = np.uint64(1)
    two = np.uint64(2)
    for t in range(count):
        v0 = 0
        v1 = 0
        for v in range(p):
            c = np.int64(_popcount(x & incidence[v])) * 2
            if c > degree[v]:
                v1 += 1
            elif c < degree[v]:
                v0 += 1
        idx = v1 - v0 if v1 >= v0 else v0 - v1
        if hist[idx] == 0:
            first[idx] = t
        hist[idx] += 1
        if idx == target:
            return hist, first, t + 1
        if t + 1 < count:
            low = x & (~x + one)
            r = x + low
            x = (((r ^ x) >> two) // low) | r
    return hist, first, count


def _incidence(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    inc = np.zeros(g.p, dtype=np.uint64)
    masks = [0] * g.p
    for i, (u, v) in enumerate(g.edges):
        masks[u] |= 1 << i
        masks[v] |= 1 << i
    for v, m in enumerate(masks):
        inc[v] = np.uint64(m)
    return inc, np.asarray(g.degrees, dtype=np.int64)


@dataclass
class RangeResult:
    """Partial scan of ranks ``start .. start + scanned``."""
    start: int
    scanned: int
    histogram: dict[int, int]
    first_rank: dict[int, int]

    @classmethod
    def empty(cls, start: int = 0) -> "RangeResult":
        return cls(start, 0, {}, {})


def scan_range(g: Graph, start: int, stop: int, target: int = -1) -> RangeResult:
    """Scan the half-space ranks ``start <= rank < stop`` in one call."""
    if g.q > MAX_EDGES:
        raise BudgetExceeded(f"{g.q} edges exceed the {MAX_EDGES}-edge enumeration limit")
    k = (g.q + 1) // 2
    if stop <= start:
        return RangeResult.empty(start)
    inc, deg = _incidence(g)
    hist, first, scanned = _scan(inc, deg, np.uint64(colex_unrank(start, k)), stop - start, target)
    nz = np.nonzero(hist)[0]
    return RangeResult(
        start, int(scanned),
        {int(i): int(hist[i]) for i in nz},
        {int(i): start + int(first[i]) for i in nz},
    )


def merge(results: list[RangeResult]) -> RangeResult:
    """Combine range results; witnesses keep the smallest rank."""
    if not results:
        return RangeResult.empty()
    hist: dict[int, int] = {}
    first: dict[int, int] = {}
    for r in results:
        for i, c in r.histogram.items():
            hist[i] = hist.get(i, 0) + c
        for i, rank in r.first_rank.items():
            if i not in first or rank < first[i]:
                first[i] = rank
    return RangeResult(min(r.start for r in results), sum(r.scanned for r in results), hist, first)


def partition(total: int, parts: int, chunk: int = CHUNK) -> list[tuple[int, int]]:
    """Contiguous ``[start, stop)`` ranges covering ``0..total``.

    The space is cut into ``parts`` near-equal ranges, each further cut
    into pieces of at most ``chunk`` ranks.
    """
    parts = max(1, parts)
    bounds = [total * i // parts for i in range(parts + 1)]
    out = []
    for lo, hi in zip(bounds, bounds[1:]):
        for s in range(lo, hi, chunk):
            out.append((s, min(s + chunk, hi)))
    return out


def half_space_size(g: Graph) -> int:
    return comb(g.q, (g.q + 1) // 2)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def enumerate_edge_friendly(g: Graph) -> Iterator[EdgeLabeling]:
    """Yield every labeling with ceil(q/2) 1-edges, in colex order."""
    if g.q == 0:
        log.warning("graph has no edges; nothing to enumerate")
        return
    k = (g.q + 1) // 2
    x = (1 << k) - 1
    for _ in range(comb(g.q, k)):
        yield EdgeLabeling.from_mask(g, x)
        x = next_same_popcount(x)


@dataclass
class EbiReport:
    p: int
    q: int
    regularity: Optional[int]
    index_set: tuple[int, ...]
    witnesses: dict[int, EdgeLabeling]
    histogram: dict[int, int]
    enumerated: int
    total: int
    complete: bool = field(default=True)

    def to_dict(self) -> dict:
        return {
            "graph": {"p": self.p, "q": self.q, "regularity": self.regularity},
            "index_set": list(self.index_set),
            "witnesses": {str(i): self.witnesses[i].bits for i in self.index_set},
            "histogram": {str(i): self.histogram[i] for i in self.index_set},
            "enumerated": self.enumerated,
            "total": self.total,
            "complete": self.complete,
        }


def _run(g: Graph, ranges: list[tuple[int, int]], jobs: int,
         progress: Optional[Callable[[int], None]]) -> list[RangeResult]:
    results = []
    visited = 0

    def note(r: RangeResult):
        nonlocal visited
        visited += r.scanned
        results.append(r)
        log.info("visited %d labelings", visited)
        if progress is not None:
            progress(visited)

    if jobs <= 1:
        for lo, hi in ranges:
            note(scan_range(g, lo, hi))
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for r in pool.map(lambda b: scan_range(g, *b), ranges):
                note(r)
    return results


def compute_ebi(g: Graph, budget: int = DEFAULT_BUDGET, jobs: int = 1,
                progress: Optional[Callable[[int], None]] = None) -> EbiReport:
    """Index set of g with one witness per index.

    If the half-space exceeds ``budget`` only the first ``budget`` labelings
    are scanned and the report is marked incomplete.
    """
    if g.q == 0:
        raise ValueError("compute_ebi needs a graph with at least one edge")
    total = half_space_size(g)
    n_scan = min(total, budget)
    if g.q > MAX_EDGES:
        merged = RangeResult.empty()
    else:
        merged = merge(_run(g, partition(n_scan, jobs), jobs, progress))
    k = (g.q + 1) // 2
    witnesses = {i: EdgeLabeling.from_mask(g, colex_unrank(rank, k))
                 for i, rank in sorted(merged.first_rank.items())}
    return EbiReport(
        p=g.p, q=g.q, regularity=is_regular(g),
        index_set=tuple(sorted(merged.histogram)),
        witnesses=witnesses,
        histogram=dict(sorted(merged.histogram.items())),
        enumerated=merged.scanned,
        total=total,
        complete=merged.scanned == total,
    )


def find_strongly_edge_balanced(g: Graph, budget: int = DEFAULT_BUDGET,
                                jobs: int = 1) -> Optional[EdgeLabeling]:
    """First labeling (in enumeration order) with e0 = e1 and v0 = v1.

    Returns None when no such labeling exists and raises ``BudgetExceeded``
    when the budget runs out before the question is settled.
    """
    if g.q % 2:
        return None
    if g.q == 0:
        return EdgeLabeling(g, ())
    total = half_space_size(g)
    if g.q > MAX_EDGES:
        raise BudgetExceeded(f"{g.q} edges exceed the {MAX_EDGES}-edge enumeration limit")
    ranges = partition(min(total, budget), 1, CHUNK)
    k = g.q // 2
    batch = max(1, jobs)
    with ThreadPoolExecutor(max_workers=batch) as pool:
        for b in range(0, len(ranges), batch):
            group = ranges[b:b + batch]
            for r in pool.map(lambda rng: scan_range(g, rng[0], rng[1], target=0), group):
                if 0 in r.first_rank:
                    return EdgeLabeling.from_mask(g, colex_unrank(r.first_rank[0], k))
    if total > budget:
        raise BudgetExceeded(f"{total} labelings exceed the budget of {budget}")
    return None


def max_index_search(g: Graph, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> tuple[int, EdgeLabeling]:
    report = compute_ebi(g, budget=budget, jobs=jobs)
    if not report.complete:
        raise BudgetExceeded(f"{report.total} labelings exceed the budget of {budget}")
    top = report.index_set[-1]
    return top, report.witnesses[top]
