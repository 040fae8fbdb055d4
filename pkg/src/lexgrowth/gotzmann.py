"""Gotzmann verdicts and the slice theorems for sets of monomials."""

from __future__ import annotations

from dataclasses import dataclass

from .census import CensusRecord, enumerate_gotzmann
from .errors import DefinednessError, OracleMismatch, UsageError
from .growth import b_set, growth_S, lex_segment, ring_growth
from .monomials import (
    Monomial,
    MonomialSet,
    RingSpec,
    SliceProfile,
    deflate,
    inflate,
    shadow,
    slice_profile,
    slice_set,
)

__all__ = [
    "BranchCheck",
    "CensusRecord",
    "GotzmannReport",
    "SliceCheck",
    "TransferVerdict",
    "component_theorem_check",
    "enumerate_gotzmann",
    "is_gotzmann",
    "slice_growth_check",
    "slice_lex_compress",
    "verify_transfer",
]

GOTZMANN_SLICE = "gotzmann-slice"
SIZE_BOUND = "size-bound"
UNCLAIMED = "unclaimed"


@dataclass(frozen=True)
class GotzmannReport:
    ring: RingSpec
    degree: int
    size: int
    actual: int
    target: int
    profiles: tuple[SliceProfile, ...]
    branches: tuple[tuple[str, ...], ...]

    @property
    def is_gotzmann(self) -> bool:
        return self.actual == self.target

    def __bool__(self) -> bool:
        return self.is_gotzmann

    def as_dict(self) -> dict:
        return {
            "ring": str(self.ring),
            "t": self.degree,
            "d": self.size,
            "actual": self.actual,
            "target": self.target,
            "gotzmann": self.is_gotzmann,
            "profiles": [
                {"axis": p.axis + 1, "counts": list(p.counts), "min_index": p.min_index} for p in self.profiles
            ],
            "branches": [list(b) for b in self.branches],
        }


def _branch_labels(profile: SliceProfile, n: int, t: int) -> tuple[str, ...]:
    labels = []
    for i in range(t + 2):
        if growth_S(profile[i], n - 1) >= profile[i - 1]:
            labels.append(GOTZMANN_SLICE)
        elif 1 <= i <= t:
            labels.append(SIZE_BOUND)
        else:
            labels.append(UNCLAIMED)
    return tuple(labels)


def is_gotzmann(M: MonomialSet) -> GotzmannReport:
    """Compare ``|ring_1 * M|`` with the shadow of the equal-size lexsegment.

    Multi-cap rings must have ascending caps; otherwise the lexsegment is not
    known to be minimal and the call is refused.
    """
    ring = M.ring
    if not (ring.is_polynomial or ring.x1_cap is not None or ring.caps_sorted):
        raise DefinednessError(f"caps of {ring} are not ascending; the lex target is not known to be minimal")
    actual = len(shadow(M))
    target = ring_growth(ring, M.degree, len(M))
    if actual < target:
        raise OracleMismatch(f"{M} grows to {actual}, below the lex target {target}")
    profiles = tuple(slice_profile(M, axis) for axis in range(ring.n))
    branches = tuple(_branch_labels(p, ring.n, M.degree) for p in profiles)
    return GotzmannReport(ring, M.degree, len(M), actual, target, profiles, branches)


# ---------------------------------------------------------------------------
# transfer between R = S/(x1^a) and S


@dataclass(frozen=True)
class TransferVerdict:
    """Both sides of the R <-> S criterion, computed independently.

    ``regime`` is ``"t>=a"`` (compare with ``B + M`` in S), ``"t=a-1"``
    (``M`` Gotzmann in S and ``x1^(a-1)`` in ``M``) or ``"trivial"`` for
    ``t < a - 1`` where both rings give the same shadow.
    """

    regime: str
    r_gotzmann: bool
    s_gotzmann: bool

    @property
    def equivalent(self) -> bool:
        return self.r_gotzmann == self.s_gotzmann


def verify_transfer(M: MonomialSet) -> TransferVerdict:
    ring = M.ring
    a = ring.x1_cap
    if a is None:
        raise UsageError(f"transfer needs a ring S/(x1^a), got {ring}")
    n, t = ring.n, M.degree
    r_side = is_gotzmann(M).is_gotzmann
    S = ring.polynomial_hull()
    if t >= a:
        B = b_set(n, a, t)
        s_side = is_gotzmann(MonomialSet(S, t, B.members | M.members)).is_gotzmann
        regime = "t>=a"
    elif t == a - 1:
        top = Monomial((a - 1,) + (0,) * (n - 1))
        # the top-power condition only speaks about nonempty sets; the empty set is vacuously Gotzmann
        s_side = is_gotzmann(M.with_ring(S)).is_gotzmann and (top in M or not M.members)
        regime = "t=a-1"
    else:
        s_side = is_gotzmann(M.with_ring(S)).is_gotzmann
        regime = "trivial"
    return TransferVerdict(regime, r_side, s_side)


# ---------------------------------------------------------------------------
# slice growth, compression and components


@dataclass(frozen=True)
class SliceCheck:
    index: int
    actual: int
    expected: int

    @property
    def holds(self) -> bool:
        return self.actual == self.expected


def _require_polynomial(M: MonomialSet) -> None:
    if not M.ring.is_polynomial:
        raise UsageError(f"slice checks apply only to the polynomial ring, got {M.ring}")


def _require_gotzmann(M: MonomialSet) -> None:
    _require_polynomial(M)
    if not is_gotzmann(M).is_gotzmann:
        raise UsageError(f"{M} is not Gotzmann; the slice formulas only claim a lower bound")


def _slice_growth_rows(M: MonomialSet, axis: int) -> list[SliceCheck]:
    n, t = M.ring.n, M.degree
    profile = slice_profile(M, axis)
    up = slice_profile(shadow(M), axis)
    return [
        SliceCheck(i, up[i], max(growth_S(profile[i], n - 1), profile[i - 1]))
        for i in range(t + 2)
    ]


def slice_growth_check(M: MonomialSet, axis: int = 0) -> tuple[SliceCheck, ...]:
    """``|shadow(M)^i|`` against ``max(growth_{n-1}(d_i), d_{i-1})`` for ``0 <= i <= t+1``.

    Refuses sets that are not Gotzmann.
    """
    _require_gotzmann(M)
    return tuple(_slice_growth_rows(M, axis))


def slice_lex_compress(M: MonomialSet, axis: int = 0) -> MonomialSet:
    """Replace every slice's deflation by the lexsegment of the same size, then re-inflate."""
    _require_polynomial(M)
    ring, t = M.ring, M.degree
    rest = ring.drop(axis)
    out: set = set()
    for i, d_i in enumerate(slice_profile(M, axis).counts):
        if d_i:
            out |= inflate(lex_segment(rest, t - i, d_i), axis, i, ring).members
    return MonomialSet(ring, t, frozenset(out))


def compressed_slice_growth(M: MonomialSet, axis: int = 0) -> tuple[SliceCheck, ...]:
    """Slice growth rows of the compressed set; the max formula holds there for any ``M``."""
    return tuple(_slice_growth_rows(slice_lex_compress(M, axis), axis))


@dataclass(frozen=True)
class BranchCheck:
    """One index of the component check.

    ``branch`` is ``gotzmann-slice`` (the deflated slice must be Gotzmann),
    ``size-bound`` (the disjunction on neighbouring sizes must hold) or
    ``unclaimed`` (index ``t+1`` with a smaller growth, where nothing is
    asserted).  ``edge`` marks checks that use growth in a single variable.
    """

    index: int
    branch: str
    holds: bool
    edge: bool = False


def component_theorem_check(M: MonomialSet, axis: int = 0) -> tuple[BranchCheck, ...]:
    _require_gotzmann(M)
    n, t = M.ring.n, M.degree
    p = slice_profile(M, axis)
    edge = n - 1 <= 1
    rows = []
    for i, label in enumerate(_branch_labels(p, n, t)):
        if label == GOTZMANN_SLICE:
            if i > t:
                holds = True  # the slice is empty
            else:
                holds = is_gotzmann(deflate(slice_set(M, axis, i), axis, i)).is_gotzmann
        elif label == SIZE_BOUND:
            holds = (growth_S(p[i] + 1, n - 1) > p[i - 1] - 1) or (p[i] + 1 > growth_S(p[i + 1], n - 1))
        else:
            holds = True
        rows.append(BranchCheck(i, label, holds, edge))
    return tuple(rows)
