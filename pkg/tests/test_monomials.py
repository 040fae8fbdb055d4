import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_stratum
from lexgrowth import (
    INF,
    DefinednessError,
    Monomial,
    MonomialSet,
    RingSpec,
    UsageError,
    compare_lex,
    deflate,
    dim_degree,
    enumerate_degree,
    shadow,
    slice_profile,
    slice_set,
)
from lexgrowth.monomials import inflate

R2 = RingSpec(3, (2, INF, INF))
A = [(3, 1, 0), (3, 0, 1), (1, 3, 0), (0, 3, 1)]


def mset(ring, members, degree=None):
    return MonomialSet.of(ring, members, degree)


@pytest.mark.parametrize(
    "m1, m2, expected",
    [((2, 0, 0), (1, 1, 0), 1), ((1, 1, 0), (1, 0, 1), 1), ((1, 0, 1), (1, 0, 1), 0), ((0, 2, 0), (1, 0, 1), -1)],
)
def test_compare_lex(m1, m2, expected):
    assert compare_lex(m1, m2) == expected
    assert compare_lex(m2, m1) == -expected


def test_compare_lex_length_mismatch():
    with pytest.raises(UsageError):
        compare_lex((1, 0), (1, 0, 0))


def test_monomial_basics():
    m = Monomial((3, 1, 0))
    assert m.degree == 4 and m.n == 3
    assert str(m) == "x1^3*x2"
    assert m.times(2) == (3, 1, 1)
    with pytest.raises(UsageError):
        Monomial((1, -1))


def test_ring_parse_and_format():
    r = RingSpec.parse("3:4,4,inf")
    assert r.caps == (4, 4, INF)
    assert str(r) == "3:4,4,inf"
    assert RingSpec.parse(str(R2)) == R2
    assert RingSpec.parse("3").is_polynomial
    assert R2.x1_cap == 2 and RingSpec(3).x1_cap is None and r.x1_cap is None
    with pytest.raises(UsageError):
        RingSpec(2, (0, INF))
    with pytest.raises(UsageError):
        RingSpec.parse("3:1,2")


def test_enumerate_examples():
    assert enumerate_degree(RingSpec(3), 2) == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert enumerate_degree(R2, 2) == ((1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert enumerate_degree(RingSpec(1, (2,)), 3) == ()


@pytest.mark.parametrize("ring, t, expected", [(RingSpec(3), 2, 6), (R2, 2, 5), (RingSpec(1), 7, 1), (RingSpec(0), 0, 1)])
def test_dim_degree_examples(ring, t, expected):
    assert dim_degree(ring, t) == expected


caps_strategy = st.lists(st.one_of(st.none(), st.integers(1, 4)), min_size=1, max_size=4)


@given(caps_strategy, st.integers(0, 6))
def test_enumeration_matches_brute_force(caps, t):
    ring = RingSpec(len(caps), tuple(INF if c is None else c for c in caps))
    got = enumerate_degree(ring, t)
    assert list(got) == brute_stratum(caps, t)
    assert len(got) == dim_degree(ring, t)
    assert all(compare_lex(a, b) == 1 for a, b in zip(got, got[1:]))


def test_monomial_set_validation(s3):
    with pytest.raises(UsageError):
        mset(s3, [(1, 0, 0), (1, 1, 0)])
    with pytest.raises(DefinednessError):
        mset(R2, [(2, 0, 0)])
    with pytest.raises(UsageError):
        mset(s3, [(1, 0)])
    M = mset(s3, [(1, 1, 0), (1, 1, 0)])
    assert len(M) == 1


def test_shadow_examples(s3):
    M = mset(s3, [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0)])
    assert shadow(M).members == {
        (3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1), (1, 0, 2), (0, 3, 0), (0, 2, 1)
    }
    M = mset(R2, [(1, 1, 0), (1, 0, 1)])
    assert shadow(M).members == {(1, 2, 0), (1, 1, 1), (1, 0, 2)}
    assert len(shadow(MonomialSet(s3, 2))) == 0


def test_shadow_restricted_variables(s3):
    M = mset(s3, [(1, 1, 0)])
    assert shadow(M, [1, 2]).members == {(1, 2, 0), (1, 1, 1)}


def test_slice_examples(s3):
    M = mset(s3, [(3, 1, 0), (1, 3, 0), (0, 3, 1)])
    assert slice_set(M, 0, 1).members == {(1, 3, 0)}
    assert len(slice_set(M, 0, 9)) == 0
    assert slice_set(M, 1, 3).members == {(1, 3, 0), (0, 3, 1)}


def test_deflate_examples(s3):
    d = deflate(mset(s3, [(1, 3, 0)]), 0, 1)
    assert d.members == {(3, 0)} and d.ring == RingSpec(2) and d.degree == 3
    assert len(deflate(MonomialSet(s3, 4), 0, 1)) == 0
    d = deflate(mset(s3, [(2, 1, 1), (2, 0, 2)]), 0, 2)
    assert d.members == {(1, 1), (0, 2)} and d.degree == 2
    with pytest.raises(UsageError):
        deflate(mset(s3, [(2, 1, 1), (1, 1, 2)]), 0, 2)


def test_deflate_into_zero_variables():
    d = deflate(mset(RingSpec(1), [(3,)]), 0, 3)
    assert d.ring.n == 0 and d.degree == 0 and d.members == {()}


def test_slice_profile_examples(s3):
    p = slice_profile(mset(s3, A), 0)
    assert p.counts == (1, 1, 0, 2, 0) and p.min_index == 0
    p = slice_profile(mset(R2, [(1, 1, 0), (1, 0, 1)]), 0)
    assert p.counts == (0, 2, 0) and p.min_index == 1
    p = slice_profile(MonomialSet.of(RingSpec(2), enumerate_degree(RingSpec(2), 2)), 0)
    assert p.counts == (1, 1, 1)
    assert slice_profile(MonomialSet(s3, 2), 0).min_index is None


subsets = st.tuples(st.integers(1, 4), st.integers(0, 4), st.integers(0, 2**31)).map(
    lambda x: (RingSpec(x[0]), x[1], x[2])
)


def _random_subset(ring, t, bits):
    stratum = enumerate_degree(ring, t)
    return MonomialSet(ring, t, frozenset(m for i, m in enumerate(stratum) if bits >> (i % 31) & 1))


@settings(max_examples=80)
@given(subsets)
def test_shadow_lands_in_next_stratum(args):
    ring, t, bits = args
    M = _random_subset(ring, t, bits)
    assert shadow(M).members <= set(enumerate_degree(ring, t + 1))


@given(st.integers(1, 4), st.integers(0, 5))
def test_full_stratum_maps_onto_full_stratum(n, t):
    ring = RingSpec(n)
    full = MonomialSet(ring, t, frozenset(enumerate_degree(ring, t)))
    assert len(shadow(full)) == dim_degree(ring, t + 1)


@settings(max_examples=80)
@given(subsets, st.integers(0, 3))
def test_slices_partition_and_deflate_roundtrip(args, axis):
    ring, t, bits = args
    axis %= ring.n
    M = _random_subset(ring, t, bits)
    parts = [slice_set(M, axis, k) for k in range(t + 1)]
    assert frozenset().union(*(p.members for p in parts)) == M.members
    assert sum(len(p) for p in parts) == len(M)
    for k, p in enumerate(parts):
        assert inflate(deflate(p, axis, k), axis, k, ring) == p
    prof = slice_profile(M, axis)
    assert prof.total == len(M)
    if prof.min_index is not None:
        assert all(c == 0 for c in prof.counts[: prof.min_index])


@settings(max_examples=80)
@given(subsets, st.integers(0, 3))
def test_shadow_decomposes_by_slices(args, axis):
    ring, t, bits = args
    axis %= ring.n
    M = _random_subset(ring, t, bits)
    up = shadow(M)
    others = [v for v in range(ring.n) if v != axis]
    for i in range(t + 2):
        expected = set()
        if i <= t and others:
            expected |= shadow(slice_set(M, axis, i), others).members
        if i >= 1:
            expected |= {m.times(axis) for m in slice_set(M, axis, i - 1).members}
        assert slice_set(up, axis, i).members == expected
