"""Bounded search over surfaces ``X_d in P(a_0, a_1, a_2, a_3)`` with ``K = O(+-1)``.

Candidates are non-increasing weight tuples with ``a_0 <= max_weight`` and
``d = sum(a) + 1`` (ample canonical class) or ``sum(a) - 1`` (Fano).  Each
goes through the filter chain of :func:`certify_candidate`; the ones that
survive are ranked by ``(volume, weights)``.

With four variables the normality pair condition on the full support says
exactly that ``d`` is a non-negative combination of every pair of weights.
The enumeration applies that condition first, which only changes how
rejections are tallied, never which candidates are certified.  Rejected
tuples are counted per reason so the coverage of the search is auditable.
"""

from __future__ import annotations

import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Callable, Optional

from .exactmath import display, int_to_json, rat_to_json
from .polyhedra import ExponentSet, NormalityNotCertified, normality_pairs_check
from .singular import HypersurfaceNotWellFormed, KltCertificate, klt_certify
from .wps import (
    CapExceeded,
    WeightSystem,
    general_hypersurface,
    hypersurface_well_formed,
    is_well_formed_space,
    volume_of_class,
)

DEFAULT_MAX_WEIGHT = 250
DEFAULT_TOP = 20
CLASSES = {"kample": 1, "fano": -1}


@dataclass(frozen=True, order=True)
class RankedEntry:
    volume: Fraction
    weights: tuple[int, ...]
    degree: int = field(compare=False)
    summary: str = field(compare=False, default="")
    all_quasi_smooth: bool = field(compare=False, default=False)

    def to_json(self) -> dict:
        return {
            "weights": [int_to_json(a) for a in self.weights],
            "degree": int_to_json(self.degree),
            "volume": rat_to_json(self.volume),
            "volume_decimal": display(self.volume),
            "certificate": self.summary,
            "all_quasi_smooth": self.all_quasi_smooth,
        }


@dataclass(frozen=True)
class SearchResult:
    cls: str
    max_weight: int
    quasi_smooth_only: bool
    ranked: tuple[RankedEntry, ...]
    certified_count: int
    tallies: dict
    watched: tuple[RankedEntry, ...] = ()

    @property
    def minimum(self) -> Optional[RankedEntry]:
        return self.ranked[0] if self.ranked else None

    def find(self, weights) -> Optional[RankedEntry]:
        """The certified entry for ``weights`` if it is ranked or was watched."""
        weights = tuple(weights)
        return next((e for e in self.ranked + self.watched if e.weights == weights), None)

    def contains(self, weights) -> bool:
        return self.find(weights) is not None

    def to_json(self) -> dict:
        return {
            "class": self.cls,
            "max_weight": self.max_weight,
            "quasi_smooth_only": self.quasi_smooth_only,
            "certified_count": self.certified_count,
            "minimum": self.minimum.to_json() if self.minimum else None,
            "ranked": [e.to_json() for e in self.ranked],
            "watched": [e.to_json() for e in self.watched],
            "skipped": dict(sorted(self.tallies.items())),
        }


def _representable(d: int, p: int, q: int) -> bool:
    """``d`` in ``pN + qN``."""
    g = gcd(p, q)
    if d % g:
        return False
    p, q, d = p // g, q // g, d // g
    if q == 1:
        return True
    # smallest i >= 0 with i p = d (mod q); representable iff i p <= d
    i = (d * pow(p, -1, q)) % q
    return i * p <= d


def _pairs_ok(w, d) -> bool:
    return all(_representable(d, w[i], w[j]) for i, j in combinations(range(4), 2))


def certify_candidate(ws, d: int, tally: Optional[Counter] = None):
    """``(volume, certificate)`` if the tuple passes the whole filter chain, else ``None``."""
    ws = ws if isinstance(ws, WeightSystem) else WeightSystem(tuple(ws))
    if len(ws) != 4:
        raise ValueError("the surface search uses four weights")
    tally = tally if tally is not None else Counter()
    if not is_well_formed_space(ws):
        tally["ambient not well-formed"] += 1
        return None
    try:
        spec = general_hypersurface(ws, d)
    except CapExceeded:
        tally["support cap exceeded"] += 1
        return None
    if not spec.support:
        tally["empty support"] += 1
        return None
    if not hypersurface_well_formed(spec):
        tally["hypersurface not well-formed"] += 1
        return None
    if not normality_pairs_check(ExponentSet(4, spec.support)):
        tally["normality not certified"] += 1
        return None
    try:
        cert = klt_certify(spec)
    except (NormalityNotCertified, HypersurfaceNotWellFormed):
        tally["klt pipeline refused"] += 1
        return None
    if not cert.overall:
        tally["klt not certified"] += 1
        return None
    return volume_of_class(ws, d, 1), cert


def _scan_top_weight(args):
    """All candidates with a fixed ``a_0``; returns its local top list and tallies."""
    a0, twist, quasi_smooth_only, top, watch = args
    tally: Counter = Counter()
    found: list[RankedEntry] = []
    watched: list[RankedEntry] = []
    certified = 0
    for a1 in range(1, a0 + 1):
        for a2 in range(1, a1 + 1):
            base = a0 + a1 + a2 + twist
            lo, hi = base + 1, base + a2  # d for a3 = 1 .. a2
            tried = 0
            # d must be a0 i + a1 j; collect those in [lo, hi]
            degrees = set()
            for i in range(hi // a0 + 1):
                rest = i * a0
                j_lo = max(0, -(-(lo - rest) // a1))
                degrees.update(range(rest + j_lo * a1, hi + 1, a1))
            for d in sorted(degrees):
                w = (a0, a1, a2, d - base)
                if not _pairs_ok(w, d):
                    continue
                tried += 1
                res = certify_candidate(w, d, tally)
                if res is None:
                    continue
                vol, cert = res
                if quasi_smooth_only and not cert.all_quasi_smooth:
                    tally["not quasi-smooth"] += 1
                    continue
                certified += 1
                entry = RankedEntry(vol, w, d, cert.summary(), cert.all_quasi_smooth)
                found.append(entry)
                if w in watch:
                    watched.append(entry)
            tally["normality pair prefilter"] += a2 - tried
        if len(found) > 4 * top:
            found = sorted(found)[:top]
    return a0, sorted(found)[:top], certified, tally, watched


def search_dim2(cls: str = "kample", max_weight: int = DEFAULT_MAX_WEIGHT, quasi_smooth_only: bool = False,
                workers: int = 1, top: int = DEFAULT_TOP,
                progress: Optional[Callable[[int, int], None]] = None, watch=()) -> SearchResult:
    """Rank certified candidates by volume; identical for every worker count.

    Only the ``top`` smallest volumes are kept.  Tuples listed in ``watch``
    are reported whenever they are certified, ranked or not.
    """
    if cls not in CLASSES:
        raise ValueError(f"class must be one of {sorted(CLASSES)}")
    if max_weight < 4:
        raise ValueError("max_weight must be at least 4")
    if top < 1:
        raise ValueError("top must be positive")
    # a_0 descending, as in the progress report
    watch = frozenset(tuple(w) for w in watch)
    jobs = [(a0, CLASSES[cls], quasi_smooth_only, top, watch) for a0 in range(max_weight, 0, -1)]
    merged: list[RankedEntry] = []
    watched: list[RankedEntry] = []
    tallies: Counter = Counter()
    certified = 0

    def collect(results):
        nonlocal certified, merged
        for done, (a0, found, count, tally, hits) in enumerate(results, 1):
            merged.extend(found)
            watched.extend(hits)
            merged = sorted(merged)[:top]
            certified += count
            tallies.update(tally)
            if progress:
                progress(done, len(jobs))

    if workers <= 1:
        collect(map(_scan_top_weight, jobs))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            collect(pool.map(_scan_top_weight, jobs, chunksize=4))
    return SearchResult(cls, max_weight, quasi_smooth_only, tuple(merged), certified, dict(tallies),
                        tuple(sorted(watched)))


def stderr_progress(done: int, total: int):
    if done == total or done % 25 == 0:
        print(f"search: {done}/{total} top weights scanned", file=sys.stderr)
