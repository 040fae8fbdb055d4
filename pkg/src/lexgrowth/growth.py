"""Lexsegments and minimal growth.

Two growth functions are provided, each with a closed form and a direct
oracle that builds the lexsegment and counts its shadow:

* :func:`growth_S` -- ``|S_1 * L|`` for the size-``d`` lexsegment ``L`` of
  ``S = F[x1..xn]``; independent of the degree ``L`` lives in.
* :func:`growth_R` -- ``|R_1 * L|`` for the size-``d`` lexsegment of
  ``R_t``, ``R = S/(x1^a)``; depends on ``t``.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from math import comb
from typing import Callable

from .errors import DefinednessError, OracleMismatch, UsageError
from .monomials import (
    MonomialSet,
    RingSpec,
    dim_degree,
    enumerate_degree,
    shadow,
)


# ---------------------------------------------------------------------------
# binomial representation


@dataclass(frozen=True)
class BinomialRep:
    """``d = sum C(top_i, bottom_i)`` over ``terms``.

    With ``k_i = top_i - bottom_i`` the terms satisfy ``bottom_i = n - i``
    for ``i = 1..m`` (``m <= n``), ``k_1 >= k_2 >= ... >= k_m = 0``.  Such a
    representation exists and is unique for every ``d >= 1``: reading the
    ``k_i + 1`` as the degrees left after the first ``i`` variables of the last
    monomial of the size-``d`` lexsegment gives a bijection with lexsegments.
    The shadow of that lexsegment has ``sum C(top_i + 1, bottom_i)`` elements.
    """

    d: int
    n: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise UsageError("binomial representations need n >= 1")
        if not self.terms or len(self.terms) > self.n:
            raise UsageError(f"need between 1 and {self.n} terms, got {len(self.terms)}")
        ks = []
        for i, (top, bottom) in enumerate(self.terms, start=1):
            if bottom != self.n - i:
                raise UsageError(f"term {i} has bottom {bottom}, expected {self.n - i}")
            ks.append(top - bottom)
        if any(k < 0 for k in ks) or any(a < b for a, b in zip(ks, ks[1:])) or ks[-1] != 0:
            raise UsageError(f"shifts {ks} must be non-increasing, non-negative and end in 0")
        if self.value != self.d:
            raise UsageError(f"terms sum to {self.value}, not {self.d}")

    @property
    def value(self) -> int:
        return sum(comb(top, bottom) for top, bottom in self.terms)

    def growth(self) -> int:
        return sum(comb(top + 1, bottom) for top, bottom in self.terms)


def macaulay_rep(d: int, n: int) -> BinomialRep:
    """Greedy construction of the representation described in :class:`BinomialRep`."""
    if d < 1:
        raise UsageError(f"binomial representation needs d >= 1, got {d}")
    if n < 1:
        raise UsageError(f"binomial representation needs n >= 1, got {n}")
    rest = d - 1
    terms = []
    for i in range(1, n):
        if rest == 0:
            break
        bottom = n - i
        k = 0
        while comb(k + 1 + bottom, bottom) <= rest:
            k += 1
        terms.append((k + bottom, bottom))
        rest -= comb(k + bottom, bottom)
    if rest:
        raise DefinednessError(f"d={d} does not fit any degree stratum in {n} variable(s)")
    bottom = n - len(terms) - 1
    terms.append((bottom, bottom))
    return BinomialRep(d, n, tuple(terms))


# ---------------------------------------------------------------------------
# memo table


@dataclass(frozen=True)
class GrowthEntry:
    value: int
    formula: str
    oracle_checked: bool


class GrowthTable:
    """Bounded, thread-safe memo for growth values.

    Purely an optimisation: results are identical with ``enabled=False``.
    With ``verify=True`` every value is cross-checked against its direct
    shadow oracle before it is returned; a disagreement raises
    :class:`OracleMismatch`.
    """

    def __init__(self, maxsize: int = 1 << 16, enabled: bool = True, verify: bool = False):
        self.maxsize = maxsize
        self.enabled = enabled
        self.verify = verify
        self._entries: dict[tuple, GrowthEntry] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._entries)

    def entries(self) -> dict[tuple, GrowthEntry]:
        with self._lock:
            return dict(self._entries)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()

    def get_or_compute(
        self,
        key: tuple,
        compute: Callable[[], tuple[int, str]],
        oracle: Callable[[], int],
        verify: bool = False,
    ) -> int:
        verify = verify or self.verify
        if self.enabled:
            with self._lock:
                entry = self._entries.get(key)
            if entry is not None and (entry.oracle_checked or not verify):
                return entry.value
        value, formula = compute()
        if verify:
            expected = oracle()
            if expected != value:
                raise OracleMismatch(f"{key}: {formula} gives {value}, oracle gives {expected}")
        if self.enabled:
            with self._lock:
                if len(self._entries) >= self.maxsize and key not in self._entries:
                    self._entries.pop(next(iter(self._entries)))
                self._entries[key] = GrowthEntry(value, formula, verify)
        return value


DEFAULT_TABLE = GrowthTable(verify=os.environ.get("LEXGROWTH_VERIFY", "") not in ("", "0"))


# ---------------------------------------------------------------------------
# lexsegments


def lex_segment(ring: RingSpec, t: int, d: int) -> MonomialSet:
    """The ``d`` lex-largest monomials of ``ring`` in degree ``t``."""
    stratum = enumerate_degree(ring, t)
    if not (0 <= d <= len(stratum)):
        raise DefinednessError(f"size {d} outside 0..{len(stratum)} for degree {t} of {ring}")
    return MonomialSet._trusted(ring, t, frozenset(stratum[:d]))


def is_lexsegment(M: MonomialSet) -> bool:
    stratum = enumerate_degree(M.ring, M.degree)
    return all(m in M.members for m in stratum[: len(M)])


def b_set(n: int, a: int, t: int) -> MonomialSet:
    """Monomials of ``S_t`` divisible by ``x1^a``."""
    ring = RingSpec(n)
    return MonomialSet._trusted(ring, t, frozenset(m for m in enumerate_degree(ring, t) if m[0] >= a))


def lex_shadow_sizes(ring: RingSpec, t: int) -> list[int]:
    """``[|shadow(lex_segment(ring, t, d))| for d in 0..dim]`` by direct construction.

    The shadow of each prefix is grown one monomial at a time, so this is the
    oracle for a whole stratum in a single pass.
    """
    caps = ring.caps
    seen: set = set()
    sizes = [0]
    for m in enumerate_degree(ring, t):
        for v in range(ring.n):
            if m[v] + 1 < caps[v]:
                seen.add(m.times(v))
        sizes.append(len(seen))
    return sizes


def lex_growth(ring: RingSpec, t: int, d: int) -> int:
    """Shadow size of the size-``d`` lexsegment of ``ring`` in degree ``t``, directly."""
    return len(shadow(lex_segment(ring, t, d)))


def minimal_degree(d: int, n: int) -> int:
    """Smallest ``t`` with ``d <= dim S_t`` in ``n`` variables."""
    if d <= 1:
        return 0
    if n <= 1:
        raise DefinednessError(f"d={d} does not fit any degree stratum in {n} variable(s)")
    t = 0
    while comb(t + n - 1, n - 1) < d:
        t += 1
    return t


# ---------------------------------------------------------------------------
# growth in S


def growth_S(
    d: int,
    n: int,
    t: int | None = None,
    *,
    table: GrowthTable | None = None,
    verify: bool = False,
) -> int:
    """``d^{<n-1>}``: shadow size of the size-``d`` lexsegment in ``n`` variables.

    ``t`` is only a definedness hint: when given, ``d`` must fit in ``S_t``.
    In one variable the value is ``min(d, 1)``; in zero variables it is 0.
    """
    if not isinstance(d, int) or d < 0:
        raise UsageError(f"size must be a non-negative integer, got {d!r}")
    if not isinstance(n, int) or n < 0:
        raise UsageError(f"variable count must be a non-negative integer, got {n!r}")
    if t is not None and d > dim_degree(RingSpec(n), t):
        raise DefinednessError(f"size {d} exceeds dim S_{t} = {dim_degree(RingSpec(n), t)} in {n} variables")
    if d == 0:
        return 0
    if n == 0:
        if d > 1:
            raise DefinednessError(f"size {d} exceeds every stratum of the zero-variable ring")
        return 0
    table = DEFAULT_TABLE if table is None else table
    return table.get_or_compute(
        ("S", d, n),
        lambda: (macaulay_rep(d, n).growth(), "binomial-rep"),
        lambda: growth_S_oracle(d, n),
        verify,
    )


def growth_S_oracle(d: int, n: int, t: int | None = None) -> int:
    """Direct shadow of the size-``d`` lexsegment, by default at the minimal feasible degree."""
    if t is None:
        t = minimal_degree(d, n)
    return lex_growth(RingSpec(n), t, d)


# ---------------------------------------------------------------------------
# growth in R = S/(x1^a)


def _check_quotient_args(d: int, n: int, a: int, t: int) -> None:
    if n < 1:
        raise UsageError(f"variable count must be >= 1, got {n}")
    if a < 1:
        raise UsageError(f"cap must be >= 1, got {a}")
    if t < 0:
        raise UsageError(f"degree must be >= 0, got {t}")
    if d < 0:
        raise UsageError(f"size must be >= 0, got {d}")
    dim = dim_degree(RingSpec.quotient(n, a), t)
    if d > dim:
        raise DefinednessError(f"size {d} exceeds dim R_{t} = {dim} (n={n}, a={a})")


def lex_slice_sizes(d: int, n: int, a: int, t: int) -> dict[int, int]:
    """``{i: |L^i|}`` for the size-``d`` lexsegment ``L`` of ``R_t``, nonzero slices only.

    Slices are filled from the top x1-exponent down, each full slice ``R_t^i``
    having ``dim S'_{t-i}`` members.
    """
    _check_quotient_args(d, n, a, t)
    sizes: dict[int, int] = {}
    left = d
    for i in range(min(a - 1, t), -1, -1):
        if left == 0:
            break
        take = min(left, dim_degree(RingSpec(n - 1), t - i))
        if take:
            sizes[i] = take
            left -= take
    return sizes


def growth_R_slice_sum(d: int, n: int, a: int, t: int) -> int:
    """Sum of ``growth_S(|L^i|, n - 1)`` over the slices of the lexsegment; needs ``t >= a - 1``."""
    if t < a - 1:
        raise DefinednessError(f"slice-sum formula needs t >= a - 1, got t={t}, a={a}")
    return sum(growth_S(size, n - 1) for size in lex_slice_sizes(d, n, a, t).values())


def growth_R_difference(d: int, n: int, a: int, t: int) -> int:
    """``growth_S(d + |B|, n) - growth_S(|B|, n)``; needs ``t >= a``."""
    if t < a:
        raise DefinednessError(f"difference formula needs t >= a, got t={t}, a={a}")
    _check_quotient_args(d, n, a, t)
    b = dim_degree(RingSpec(n), t - a)
    return growth_S(d + b, n) - growth_S(b, n)


def growth_R_oracle(d: int, n: int, a: int, t: int) -> int:
    _check_quotient_args(d, n, a, t)
    return lex_growth(RingSpec.quotient(n, a), t, d)


def _growth_R_regime(d: int, n: int, a: int, t: int) -> tuple[int, str]:
    if t < a - 1:
        return growth_S(d, n), "regime:t<a-1"
    if t == a - 1:
        return growth_S(d, n) - 1, "regime:t=a-1"
    return growth_R_difference(d, n, a, t), "difference"


def growth_R(
    d: int,
    n: int,
    a: int,
    t: int,
    *,
    table: GrowthTable | None = None,
    verify: bool = False,
) -> int:
    """``d_{n,t}``: shadow size in ``R = S/(x1^a)`` of the size-``d`` lexsegment of ``R_t``."""
    _check_quotient_args(d, n, a, t)
    if d == 0:
        return 0
    table = DEFAULT_TABLE if table is None else table
    return table.get_or_compute(
        ("R", d, n, a, t),
        lambda: _growth_R_regime(d, n, a, t),
        lambda: growth_R_oracle(d, n, a, t),
        verify,
    )


def ring_growth(ring: RingSpec, t: int, d: int) -> int:
    """Lex target for any ring: closed forms for S and ``S/(x1^a)``, direct construction otherwise."""
    if ring.is_polynomial:
        return growth_S(d, ring.n, t)
    a = ring.x1_cap
    if a is not None:
        return growth_R(d, ring.n, a, t)
    return lex_growth(ring, t, d)
