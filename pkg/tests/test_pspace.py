import itertools

import pytest
from hypothesis import given, settings, strategies as st

from designcodes.field import FieldCtx
from designcodes.pspace import (
    Subspace,
    enumerate_points,
    enumerate_subspaces,
    gaussian_coefficient,
    point_space,
    points_of_subspace,
    rref,
    subspace,
    subspace_contains,
    subspaces_of,
    superspaces,
)


def test_gaussian_known_values():
    assert gaussian_coefficient(3, 1, 2) == 7
    assert gaussian_coefficient(7, 1, 4) == 5461
    assert gaussian_coefficient(6, 3, 2) == 1395
    assert gaussian_coefficient(4, 2, 2) == 35
    for v, q in [(0, 2), (5, 3), (9, 4)]:
        assert gaussian_coefficient(v, 0, q) == 1
    assert gaussian_coefficient(3, 4, 2) == 0
    assert gaussian_coefficient(3, -1, 2) == 0


@given(
    st.integers(min_value=0, max_value=12),
    st.integers(min_value=0, max_value=12),
    st.sampled_from([2, 3, 4, 5, 8]),
)
def test_gaussian_symmetry(v, k, q):
    assert gaussian_coefficient(v, k, q) == gaussian_coefficient(v, v - k, q)


def test_points_order_v2(gf2):
    assert enumerate_points(2, gf2) == ((0, 1), (1, 0), (1, 1))


def test_points_counts(gf2, gf4):
    assert len(enumerate_points(1, gf4)) == 1
    assert len(enumerate_points(3, gf2)) == 7
    assert len(enumerate_points(4, gf4)) == gaussian_coefficient(4, 1, 4)


def test_points_are_sorted_and_normalized(gf4):
    pts = enumerate_points(3, gf4)
    assert list(pts) == sorted(pts)
    for p in pts:
        assert next(x for x in p if x) == 1


@pytest.mark.parametrize(
    "v,k,q",
    [(v, k, 2) for v in range(7) for k in range(v + 1)]
    + [(v, k, 4) for v in range(5) for k in range(v + 1)],
)
def test_enumeration_count_matches_gaussian(v, k, q):
    ctx = FieldCtx.of(q)
    assert sum(1 for _ in enumerate_subspaces(v, k, ctx)) == gaussian_coefficient(v, k, q)


@pytest.mark.slow
@pytest.mark.parametrize("v,k", [(7, 3), (8, 2), (8, 3)])
def test_enumeration_count_larger_binary(v, k, gf2):
    assert sum(1 for _ in enumerate_subspaces(v, k, gf2)) == gaussian_coefficient(v, k, 2)


def test_enumerated_subspaces_are_canonical(gf4):
    for s in enumerate_subspaces(4, 2, gf4):
        assert rref(s.gen, 4, gf4) == s.gen


def test_enumeration_is_duplicate_free(gf2):
    seen = set(s.gen for s in enumerate_subspaces(5, 2, gf2))
    assert len(seen) == gaussian_coefficient(5, 2, 2)


def test_points_of_subspace_examples(gf2, gf4):
    s = subspace([(1, 0, 0)], 3, gf2)
    sp = point_space(3, gf2)
    assert points_of_subspace(s) == (sp.index[(1, 0, 0)],)

    s2 = subspace([(1, 0, 0), (0, 1, 0)], 3, gf2)
    expect = tuple(sorted(sp.index[p] for p in [(0, 1, 0), (1, 0, 0), (1, 1, 0)]))
    assert points_of_subspace(s2) == expect

    for s4 in itertools.islice(enumerate_subspaces(3, 2, gf4), 10):
        assert len(points_of_subspace(s4)) == 5  # [2 1]_4


@settings(max_examples=30, deadline=None)
@given(st.randoms(use_true_random=False), st.sampled_from([2, 4]))
def test_points_count_is_gaussian(rng, q):
    ctx = FieldCtx.of(q)
    v = rng.randrange(2, 5)
    k = rng.randrange(1, v + 1)
    all_subs = list(enumerate_subspaces(v, k, ctx))
    s = all_subs[rng.randrange(len(all_subs))]
    pts = points_of_subspace(s)
    assert len(pts) == gaussian_coefficient(k, 1, q)
    assert len(set(pts)) == len(pts)


def test_superspace_counts(gf2):
    b = subspace([(1, 0, 0, 0, 0), (0, 1, 0, 0, 0)], 5, gf2)
    sup = superspaces(b, 3)
    assert len(sup) == 7  # [3 1]_2
    assert all(subspace_contains(s, b) for s in sup)

    b2 = subspace([(1, 0, 0, 0)], 4, gf2)
    assert len(superspaces(b2, 2)) == 7

    b3 = subspace([(1, 0), (0, 1)][:1], 2, gf2)
    assert len(superspaces(b3, 2)) == 1  # only the full space


def test_superspaces_match_full_enumeration(gf2, gf4):
    for ctx, v in [(gf2, 4), (gf4, 3)]:
        subs2 = list(enumerate_subspaces(v, 2, gf2 if ctx is gf2 else gf4))
        b = subs2[len(subs2) // 2]
        direct = set(s.gen for s in superspaces(b, 3))
        by_scan = set(
            s.gen for s in enumerate_subspaces(v, 3, ctx) if subspace_contains(s, b)
        )
        assert direct == by_scan


def test_superspaces_rejects_non_extension(gf2):
    b = subspace([(1, 0, 0)], 3, gf2)
    with pytest.raises(ValueError, match="proper extension"):
        superspaces(b, 1)


def test_contains_examples(gf2):
    s = subspace([(1, 0, 0), (0, 1, 0)], 3, gf2)
    assert subspace_contains(s, s)
    zero = subspace([], 3, gf2)
    assert subspace_contains(s, zero)
    assert subspace_contains(s, subspace([(1, 0, 0)], 3, gf2))
    assert not subspace_contains(s, subspace([(0, 0, 1)], 3, gf2))
    with pytest.raises(ValueError):
        subspace_contains(s, subspace([(1, 0)], 2, gf2))


def test_subspaces_of_counts(gf2, gf4):
    s = subspace([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)], 4, gf2)
    subs = list(subspaces_of(s, 2))
    assert len(subs) == gaussian_coefficient(3, 2, 2)
    assert len(set(x.gen for x in subs)) == len(subs)
    for t in subs:
        assert subspace_contains(s, t)

    s4 = next(iter(enumerate_subspaces(3, 2, gf4)))
    assert sum(1 for _ in subspaces_of(s4, 1)) == gaussian_coefficient(2, 1, 4)


def test_rref_canonicalizes_dependent_rows(gf4):
    # second row is 2 * first
    got = rref([(2, 2, 0), (3, 3, 0)], 3, gf4)
    assert got == ((1, 1, 0),)
