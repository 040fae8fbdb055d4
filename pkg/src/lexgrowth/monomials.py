"""Exponent-vector monomials, rings with pure-power caps, and homogeneous sets.

Variables are indexed from 0 in the Python API: axis ``0`` is ``x1``.
Lex order has ``x1 > x2 > ... > xn``; for equal-length exponent tuples this is
exactly Python's tuple ordering, so ``Monomial`` simply subclasses ``tuple``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import DefinednessError, ParseError, UsageError

#: Cap value meaning "no relation on this variable".
INF = math.inf


class Monomial(tuple):
    """A monomial ``x1^e1 ... xn^en`` stored as its exponent tuple."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]) -> "Monomial":
        exps = tuple(exponents)
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise UsageError(f"exponents must be non-negative integers, got {exps!r}")
        return super().__new__(cls, exps)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def times(self, var: int, power: int = 1) -> "Monomial":
        exps = list(self)
        exps[var] += power
        return tuple.__new__(Monomial, exps)

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Monomial({tuple(self)!r})"


def compare_lex(m1: Sequence[int], m2: Sequence[int]) -> int:
    """Return 1, 0 or -1 as ``m1`` is lex-greater, equal or smaller than ``m2``."""
    if len(m1) != len(m2):
        raise UsageError(f"cannot compare monomials in {len(m1)} and {len(m2)} variables")
    for a, b in zip(m1, m2):
        if a != b:
            return 1 if a > b else -1
    return 0


@dataclass(frozen=True)
class RingSpec:
    """``F[x1..xn]`` modulo ``x_i^{caps[i]}`` for every finite cap.

    ``RingSpec(3)`` is the polynomial ring S in three variables;
    ``RingSpec.quotient(3, a)`` is ``S/(x1^a)``.  ``n == 0`` is allowed only as
    the target of :func:`deflate` on a one-variable set.
    """

    n: int
    caps: tuple = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise UsageError(f"variable count must be a non-negative integer, got {self.n!r}")
        caps = (INF,) * self.n if self.caps is None else tuple(self.caps)
        if len(caps) != self.n:
            raise UsageError(f"expected {self.n} caps, got {len(caps)}")
        norm = []
        for c in caps:
            if c == INF:
                norm.append(INF)
            elif isinstance(c, int) and not isinstance(c, bool) and c >= 1:
                norm.append(c)
            else:
                raise UsageError(f"caps must be positive integers or INF, got {c!r}")
        object.__setattr__(self, "caps", tuple(norm))

    @classmethod
    def polynomial(cls, n: int) -> "RingSpec":
        return cls(n)

    @classmethod
    def quotient(cls, n: int, a: int) -> "RingSpec":
        """``S/(x1^a)``."""
        if n < 1:
            raise UsageError("a quotient by x1^a needs at least one variable")
        return cls(n, (a,) + (INF,) * (n - 1))

    @classmethod
    def parse(cls, text: str) -> "RingSpec":
        """Parse ``"n:c1,...,cn"`` (``inf`` for no cap) or a bare ``"n"``."""
        text = text.strip()
        head, sep, tail = text.partition(":")
        try:
            n = int(head)
        except ValueError:
            raise ParseError(f"bad ring description {text!r}") from None
        if not sep:
            return cls(n)
        caps = []
        for tok in tail.split(","):
            tok = tok.strip().lower()
            if tok in ("inf", "∞"):
                caps.append(INF)
                continue
            try:
                caps.append(int(tok))
            except ValueError:
                raise ParseError(f"bad cap {tok!r} in ring {text!r}") from None
        return cls(n, tuple(caps))

    def __str__(self) -> str:
        return f"{self.n}:" + ",".join("inf" if c == INF else str(c) for c in self.caps)

    @property
    def is_polynomial(self) -> bool:
        return all(c == INF for c in self.caps)

    @property
    def x1_cap(self) -> int | None:
        """``a`` when the ring is exactly ``S/(x1^a)``, else None."""
        if self.n >= 1 and self.caps[0] != INF and all(c == INF for c in self.caps[1:]):
            return self.caps[0]
        return None

    @property
    def caps_sorted(self) -> bool:
        return all(a <= b for a, b in zip(self.caps, self.caps[1:]))

    def contains(self, m: Sequence[int]) -> bool:
        """True when ``m`` has the right length and is nonzero in the ring."""
        return len(m) == self.n and all(e < c for e, c in zip(m, self.caps))

    def drop(self, axis: int) -> "RingSpec":
        self._check_axis(axis)
        return RingSpec(self.n - 1, self.caps[:axis] + self.caps[axis + 1:])

    def polynomial_hull(self) -> "RingSpec":
        return RingSpec(self.n)

    def _check_axis(self, axis: int) -> None:
        if not (0 <= axis < self.n):
            raise UsageError(f"axis {axis} out of range for {self.n} variables")


def _descending(caps: tuple, t: int) -> Iterator[tuple]:
    if not caps:
        if t == 0:
            yield ()
        return
    first, rest = caps[0], caps[1:]
    top = t if first == INF else min(t, first - 1)
    for e in range(top, -1, -1):
        for tail in _descending(rest, t - e):
            yield (e,) + tail


@lru_cache(maxsize=512)
def enumerate_degree(ring: RingSpec, t: int) -> tuple[Monomial, ...]:
    """All degree-``t`` monomials nonzero in ``ring``, strictly descending in lex."""
    if t < 0:
        raise UsageError(f"degree must be non-negative, got {t}")
    return tuple(tuple.__new__(Monomial, m) for m in _descending(ring.caps, t))


@lru_cache(maxsize=4096)
def dim_degree(ring: RingSpec, t: int) -> int:
    """Number of degree-``t`` monomials nonzero in ``ring``."""
    if t < 0:
        raise UsageError(f"degree must be non-negative, got {t}")
    if ring.n == 0:
        return 1 if t == 0 else 0
    if ring.is_polynomial:
        return comb(t + ring.n - 1, ring.n - 1)
    counts = [1] + [0] * t
    for cap in ring.caps:
        nxt = [0] * (t + 1)
        top = t if cap == INF else min(t, cap - 1)
        for deg, c in enumerate(counts):
            if c:
                for e in range(min(top, t - deg) + 1):
                    nxt[deg + e] += c
        counts = nxt
    return counts[t]


@dataclass(frozen=True)
class MonomialSet:
    """A homogeneous, duplicate-free set of monomials of one ring stratum."""

    ring: RingSpec
    degree: int
    members: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise UsageError(f"degree must be non-negative, got {self.degree}")
        mons = frozenset(m if isinstance(m, Monomial) else Monomial(m) for m in self.members)
        for m in mons:
            if len(m) != self.ring.n:
                raise UsageError(f"{m} has {len(m)} exponents, ring has {self.ring.n} variables")
            if m.degree != self.degree:
                raise UsageError(f"{m} has degree {m.degree}, set is homogeneous of degree {self.degree}")
            if not self.ring.contains(m):
                raise DefinednessError(f"{m} is zero in the ring {self.ring}")
        object.__setattr__(self, "members", mons)

    @classmethod
    def _trusted(cls, ring: RingSpec, degree: int, members: frozenset) -> "MonomialSet":
        # skips validation; only for members taken from enumerate_degree or derived from them
        obj = object.__new__(cls)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "degree", degree)
        object.__setattr__(obj, "members", members)
        return obj

    @classmethod
    def of(cls, ring: RingSpec, members: Iterable[Sequence[int]], degree: int | None = None) -> "MonomialSet":
        """Build a set, inferring the degree from the members when not given."""
        mons = [Monomial(m) for m in members]
        if degree is None:
            if not mons:
                raise UsageError("cannot infer the degree of an empty set")
            degrees = {m.degree for m in mons}
            if len(degrees) != 1:
                raise UsageError(f"inhomogeneous set: degrees {sorted(degrees)}")
            degree = degrees.pop()
        return cls(ring, degree, frozenset(mons))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.sorted())

    def __contains__(self, m: object) -> bool:
        return m in self.members

    def sorted(self) -> list[Monomial]:
        """Members in descending lex order."""
        return sorted(self.members, reverse=True)

    def with_ring(self, ring: RingSpec) -> "MonomialSet":
        return MonomialSet(ring, self.degree, self.members)

    def union(self, other: Iterable[Sequence[int]]) -> "MonomialSet":
        return MonomialSet(self.ring, self.degree, self.members | {Monomial(m) for m in other})

    def __str__(self) -> str:
        return "{" + ", ".join(str(m) for m in self.sorted()) + "}"


def shadow(M: MonomialSet, variables: Iterable[int] | None = None) -> MonomialSet:
    """``{x_v * m : v in variables, m in M}`` minus the monomials that vanish.

    With ``variables=None`` (all of them) this is ``S_1*M`` in a polynomial
    ring and ``R_1*M`` in a quotient.
    """
    ring = M.ring
    vs = range(ring.n) if variables is None else sorted(set(variables))
    for v in vs:
        ring._check_axis(v)
    caps = ring.caps
    out = set()
    for m in M.members:
        for v in vs:
            if m[v] + 1 < caps[v]:
                out.add(m.times(v))
    return MonomialSet._trusted(ring, M.degree + 1, frozenset(out))


def shadow_size(M: MonomialSet, variables: Iterable[int] | None = None) -> int:
    return len(shadow(M, variables))


def slice_set(M: MonomialSet, axis: int, k: int) -> MonomialSet:
    """Members of ``M`` whose ``axis`` exponent is exactly ``k``."""
    M.ring._check_axis(axis)
    return MonomialSet._trusted(M.ring, M.degree, frozenset(m for m in M.members if m[axis] == k))


def deflate(M: MonomialSet, axis: int, k: int) -> MonomialSet:
    """Strip ``x_axis^k`` from every member; the result lives in ``n - 1`` variables."""
    M.ring._check_axis(axis)
    if not (0 <= k <= M.degree):
        raise UsageError(f"multiplicity {k} outside 0..{M.degree}")
    for m in M.members:
        if m[axis] != k:
            raise UsageError(f"{m} does not have exponent {k} on axis {axis}")
    out = frozenset(tuple.__new__(Monomial, m[:axis] + m[axis + 1:]) for m in M.members)
    return MonomialSet(M.ring.drop(axis), M.degree - k, out)


def inflate(M: MonomialSet, axis: int, k: int, ring: RingSpec) -> MonomialSet:
    """Inverse of :func:`deflate`: reinsert exponent ``k`` at ``axis`` inside ``ring``."""
    if ring.n != M.ring.n + 1:
        raise UsageError("target ring must have exactly one more variable")
    ring._check_axis(axis)
    out = frozenset(tuple.__new__(Monomial, m[:axis] + (k,) + m[axis:]) for m in M.members)
    return MonomialSet(ring, M.degree + k, out)


@dataclass(frozen=True)
class SliceProfile:
    """Slice sizes ``d_i = |M^i|`` along one axis, ``0 <= i <= t``."""

    axis: int
    counts: tuple[int, ...]
    min_index: int | None

    def __getitem__(self, i: int) -> int:
        """``d_i`` with zero outside ``0..t`` (so ``d_{-1} = d_{t+1} = 0``)."""
        return self.counts[i] if 0 <= i < len(self.counts) else 0

    @property
    def total(self) -> int:
        return sum(self.counts)


def slice_profile(M: MonomialSet, axis: int) -> SliceProfile:
    M.ring._check_axis(axis)
    counts = [0] * (M.degree + 1)
    for m in M.members:
        counts[m[axis]] += 1
    nonzero = [i for i, c in enumerate(counts) if c]
    return SliceProfile(axis, tuple(counts), nonzero[0] if nonzero else None)
