from __future__ import annotations

import itertools
import math
from contextlib import contextmanager

import pytest

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def brute_stratum(caps, t):
    """Degree-t monomials nonzero under ``caps`` (None = no cap), lex-descending.

    Built from itertools.product and sorted, independently of the package's
    recursive enumerator.
    """
    n = len(caps)
    ranges = [range(min(t, c - 1) + 1) if c is not None else range(t + 1) for c in caps]
    mons = [m for m in itertools.product(*ranges) if sum(m) == t]
    return sorted(mons, reverse=True)


def brute_shadow(mons, caps):
    out = set()
    for m in mons:
        for v in range(len(m)):
            e = list(m)
            e[v] += 1
            if caps[v] is None or e[v] < caps[v]:
                out.add(tuple(e))
    return out


def brute_lex_shadow_sizes(caps, t):
    """Shadow size of every lex prefix of the stratum, recomputed from scratch each time."""
    stratum = brute_stratum(caps, t)
    return [len(brute_shadow(stratum[:d], caps)) for d in range(len(stratum) + 1)]


def brute_min_shadow(caps, t, d):
    stratum = brute_stratum(caps, t)
    return min(len(brute_shadow(c, caps)) for c in itertools.combinations(stratum, d))


def caps_of(ring):
    return [None if c == math.inf else c for c in ring.caps]


@contextmanager
def criterion(label: str):
    """Record one acceptance criterion's pass/fail line for the terminal summary."""
    try:
        yield
    except BaseException as exc:
        _ACCEPTANCE.append((label, False, f"{type(exc).__name__}: {str(exc)[:200]}"))
        raise
    else:
        _ACCEPTANCE.append((label, True, ""))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        if detail:
            line += f"  -- {detail}"
        terminalreporter.write_line(line)


@pytest.fixture
def s3():
    from lexgrowth import RingSpec

    return RingSpec(3)
