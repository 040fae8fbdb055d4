"""Exhaustive subset search over one degree stratum.

Every monomial of the stratum gets a bitmask of its shadow in the next degree.
A depth-first walk over index combinations keeps the OR of the masks chosen so
far on the call stack, so adding one monomial costs one big-int OR and the
shadow size of a subset is a popcount.

The search space is split by the first (lex-largest) member of the subset.
Each part is independent, so parts can run in worker processes; merging them
in part order reproduces the single-process output exactly.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Any

from .errors import BudgetExceeded, UsageError
from .formats import format_set_line
from .growth import ring_growth
from .monomials import MonomialSet, RingSpec, enumerate_degree

DEFAULT_BUDGET = int(os.environ.get("LEXGROWTH_BUDGET", 20_000_000))


@lru_cache(maxsize=256)
def shadow_masks(ring: RingSpec, t: int) -> tuple[int, ...]:
    """Bitmask of ``shadow({m})`` over the degree-``t+1`` stratum, per stratum monomial."""
    upper = {m: i for i, m in enumerate(enumerate_degree(ring, t + 1))}
    caps = ring.caps
    masks = []
    for m in enumerate_degree(ring, t):
        bits = 0
        for v in range(ring.n):
            if m[v] + 1 < caps[v]:
                bits |= 1 << upper[m.times(v)]
        masks.append(bits)
    return tuple(masks)


@dataclass
class _Part:
    count: int = 0
    below: int = 0
    best: int | None = None
    witnesses: list | None = None


def _scan_part(args: tuple) -> _Part:
    masks, d, first, target, prune, store = args
    n_masks = len(masks)
    part = _Part(witnesses=[] if store else None)
    chosen = [first]

    def leaf(acc: int) -> None:
        size = acc.bit_count()
        if part.best is None or size < part.best:
            part.best = size
        if size == target:
            part.count += 1
            if store:
                part.witnesses.append(tuple(chosen))
        elif size < target:
            part.below += 1

    def walk(start: int, depth: int, acc: int) -> None:
        if depth == d:
            leaf(acc)
            return
        last = n_masks - (d - depth)
        for i in range(start, last + 1):
            nxt = acc | masks[i]
            # shadows only grow, so a partial set already above target stays above it
            if prune and nxt.bit_count() > target:
                continue
            chosen.append(i)
            walk(i + 1, depth + 1, nxt)
            chosen.pop()

    acc0 = masks[first]
    if prune and acc0.bit_count() > target:
        return part
    walk(first + 1, 1, acc0)
    return part


@dataclass(frozen=True)
class CensusRecord:
    """Outcome of scanning every ``d``-subset of a degree-``t`` stratum.

    ``count`` subsets reach the lex target (the Gotzmann ones); ``below_target``
    counts subsets whose shadow is smaller than the target and must be 0 in a
    Macaulay-lex ring.  ``min_shadow`` is the smallest shadow size seen.
    """

    ring: RingSpec
    degree: int
    size: int
    target: int
    subsets: int
    count: int
    below_target: int
    min_shadow: int | None
    witnesses: tuple[MonomialSet, ...] | None
    lex_flags: tuple[bool, ...] | None
    budget: int
    elapsed_ms: float = 0.0

    def witness_lines(self) -> list[str]:
        if self.witnesses is None:
            return []
        return [format_set_line(w.members) for w in self.witnesses]

    def summary(self, timing: bool = True) -> dict[str, Any]:
        return {
            "params": {"ring": str(self.ring), "t": self.degree, "d": self.size},
            "count": self.count,
            "target": self.target,
            "subsets": self.subsets,
            "below_target": self.below_target,
            "min_shadow": self.min_shadow,
            "lexsegment_witnesses": None if self.lex_flags is None else sum(self.lex_flags),
            "budget": self.budget,
            "elapsed_ms": round(self.elapsed_ms, 3) if timing else 0,
        }


def enumerate_gotzmann(
    ring: RingSpec,
    t: int,
    d: int,
    store_witnesses: bool = True,
    *,
    budget: int | None = None,
    workers: int = 1,
    prune: bool = False,
) -> CensusRecord:
    """Examine every ``d``-subset of the degree-``t`` stratum of ``ring``.

    ``prune`` skips branches whose partial shadow already exceeds the target.
    Because the lexsegment itself is one of the subsets, ``min_shadow`` never
    exceeds the target and pruning leaves every reported field unchanged.
    """
    budget = DEFAULT_BUDGET if budget is None else budget
    if workers < 1:
        raise UsageError(f"workers must be >= 1, got {workers}")
    stratum = enumerate_degree(ring, t)
    if not (0 <= d <= len(stratum)):
        raise UsageError(f"size {d} outside 0..{len(stratum)} for degree {t} of {ring}")
    subsets = comb(len(stratum), d)
    if subsets > budget:
        raise BudgetExceeded(subsets, budget)
    target = ring_growth(ring, t, d)
    start = time.perf_counter()

    if d == 0:
        parts = [_Part(count=1, best=0, witnesses=[()] if store_witnesses else None)]
    else:
        masks = shadow_masks(ring, t)
        tasks = [(masks, d, first, target, prune, store_witnesses) for first in range(len(stratum) - d + 1)]
        if workers == 1 or len(tasks) == 1:
            parts = [_scan_part(task) for task in tasks]
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_scan_part, tasks))

    count = sum(p.count for p in parts)
    below = sum(p.below for p in parts)
    bests = [p.best for p in parts if p.best is not None]
    witnesses = lex_flags = None
    if store_witnesses:
        idx_sets = [w for p in parts for w in p.witnesses]
        witnesses = tuple(MonomialSet(ring, t, frozenset(stratum[i] for i in w)) for w in idx_sets)
        # a witness is the lexsegment exactly when its indices are 0..d-1
        lex_flags = tuple(w == tuple(range(d)) for w in idx_sets)
    return CensusRecord(
        ring=ring,
        degree=t,
        size=d,
        target=target,
        subsets=subsets,
        count=count,
        below_target=below,
        min_shadow=min(bests) if bests else None,
        witnesses=witnesses,
        lex_flags=lex_flags,
        budget=budget,
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
    )
