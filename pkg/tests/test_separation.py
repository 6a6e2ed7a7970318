from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given

from fcxlab.errors import NotDisjoint, NotRepresentable, NotSeparated, ZeroSetsIntersect
from fcxlab.ring import from_values, is_member
from fcxlab.separation import (
    completely_separated_in_complement,
    covers,
    fc_separated,
    separated_after_removal,
    separation_witness,
)
from fcxlab.spaces import CONV_SEQ, COFINITE_N, DISCRETE_N, INF, UPSet, finite
from strategies import upsets, window


def test_conv_seq_evens_odds():
    v = fc_separated(UPSet.evens(), UPSet.odds(), CONV_SEQ)
    assert v.separated
    assert v.z1 == UPSet.evens()
    assert v.z2 == UPSet.odds() | UPSet.from_points([INF])
    assert covers(v, UPSet.evens(), UPSet.odds())


def test_cofinite_evens_odds_not_separated():
    assert not fc_separated(UPSet.evens(), UPSet.odds(), COFINITE_N).separated


def test_finite_points_separated():
    v = fc_separated({0}, {2}, finite(3))
    assert v.separated and covers(v, {0}, {2})


def test_errors():
    with pytest.raises(NotDisjoint):
        fc_separated({0, 1}, {1}, finite(3))
    with pytest.raises(NotRepresentable):
        fc_separated({0}, {7}, finite(3))
    with pytest.raises(NotSeparated):
        separated_after_removal(UPSet.evens(), UPSet.odds(), COFINITE_N)


def test_witness_example():
    h = separation_witness(from_values([0, 1, 1, 1]), from_values([1, 1, 1, 0]))
    assert h == from_values([0, Fraction(1, 2), Fraction(1, 2), 1])


def test_witness_needs_disjoint_zero_sets():
    f = from_values([0, 1, 1])
    with pytest.raises(ZeroSetsIntersect):
        separation_witness(f, f)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_finite_decider_matches_exhaustive_search(n):
    X = finite(n)
    subsets = [frozenset(i for i in range(n) if m >> i & 1) for m in range(1 << n)]
    for A, B in product(subsets, subsets):
        if A & B:
            continue
        brute = any(A <= Z1 and B <= Z2 and not Z1 & Z2 for Z1 in subsets for Z2 in subsets)
        v = fc_separated(A, B, X)
        assert v.separated == brute
        h = separation_witness(v.f, v.g)
        assert all(h(a) == 0 for a in A) and all(h(b) == 1 for b in B)


def _check_witness(space, A, B):
    v = fc_separated(A, B, space)
    if not v.separated:
        return v
    h = separation_witness(v.f, v.g)
    assert is_member(h, space)
    pts = list(window(h, v.f, v.g)) + ([INF] if space.carrier.infinity else [])
    for x in pts:
        assert 0 <= h(x) <= 1
        assert (h(x) == 0) == (x in v.f.zero_set())
        assert (h(x) == 1) == (x in v.g.zero_set())
        if x in A:
            assert h(x) == 0
        if x in B:
            assert h(x) == 1
    return v


@given(upsets(), upsets())
def test_conv_seq_always_separated(A, B):
    B = B - A
    v = _check_witness(CONV_SEQ, A, B)
    assert v.separated
    r = separated_after_removal(A, B, CONV_SEQ)
    assert r.F == {INF} and r.cs


@given(upsets(infinity=False), upsets(infinity=False))
def test_cofinite_rule(A, B):
    B = B - A
    v = _check_witness(COFINITE_N, A, B)
    assert v.separated == (A.is_finite() or B.is_finite())
    if v.separated:
        r = separated_after_removal(A, B, COFINITE_N)
        assert r.cs


@given(upsets(infinity=False), upsets(infinity=False))
def test_discrete_always_separated(A, B):
    B = B - A
    assert _check_witness(DISCRETE_N, A, B).separated
    assert separated_after_removal(A, B, DISCRETE_N).F == frozenset()


def test_removal_examples():
    r = separated_after_removal({0}, {2}, finite(3))
    assert r.F == frozenset() and r.cs
    A = UPSet.from_points([1, 3])
    B = A.complement(with_infinity=False)
    r = separated_after_removal(A, B, COFINITE_N)
    assert r.F == {1, 3} and r.cs


def test_cofinite_subspace_needs_an_empty_side():
    A, B = UPSet.from_points([0]), UPSet.from_points([1])
    assert not completely_separated_in_complement(COFINITE_N, A, B, set())
    assert completely_separated_in_complement(COFINITE_N, A, B, {0})
