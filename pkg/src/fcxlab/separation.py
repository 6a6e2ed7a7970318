"""F_c-complete separation: deciders, explicit witnesses, finite removal."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NotDisjoint, NotSeparated, ZeroSetsIntersect
from .ring import RingElem, discontinuity_set, indicator, require_member
from .spaces import (
    INF,
    SpaceKind,
    SpaceModel,
    is_empty_set,
    is_finite_set,
    is_subset,
    remove_points,
)


@dataclass(frozen=True)
class SeparationVerdict:
    separated: bool
    z1: object = None
    z2: object = None
    #: members with Z(f) = z1 and Z(g) = z2
    f: Optional[RingElem] = None
    g: Optional[RingElem] = None


def _disjoint(space: SpaceModel, A, B) -> bool:
    return is_empty_set(A & B)


def fc_separated(A, B, space: SpaceModel) -> SeparationVerdict:
    """Decide whether A and B lie in disjoint zero sets of members.

    On the discrete models and the convergent sequence every indicator is a
    member, so ``Z1 = A`` and ``Z2 = X \\ A`` work.  On cofinite ℕ a member
    is constant off a finite set, so its zero set is finite or cofinite;
    two cofinite sets meet, hence one of A, B must be finite.
    """
    A = space.coerce_set(A)
    B = space.coerce_set(B)
    if not _disjoint(space, A, B):
        raise NotDisjoint("A and B intersect")
    if space.kind is SpaceKind.COFINITE_N:
        if is_finite_set(A):
            z1 = A
        elif is_finite_set(B):
            z1 = space.complement(B)
        else:
            return SeparationVerdict(False)
    else:
        z1 = A
    z2 = space.complement(z1)
    f = indicator(space, z2)
    g = indicator(space, z1)
    require_member(f, space)
    require_member(g, space)
    return SeparationVerdict(True, z1, z2, f, g)


def separation_witness(f: RingElem, g: RingElem) -> RingElem:
    """h = f² / (f² + g²): zero exactly on Z(f), one exactly on Z(g)."""
    denom = f * f + g * g
    if 0 in denom.value_set():
        raise ZeroSetsIntersect("Z(f) and Z(g) intersect")
    return (f * f).divide(denom)


@dataclass(frozen=True)
class RemovalVerdict:
    F: frozenset
    cs: bool


def completely_separated_in_complement(space: SpaceModel, A, B, F) -> bool:
    """Complete separation of ``A \\ F`` and ``B \\ F`` in the subspace ``X \\ F``.

    After removing a finite F our models leave either a discrete subspace,
    where any disjoint pair is completely separated, or an infinite cofinite
    subspace, on which continuous real functions are constant, so a pair is
    completely separated iff one side is empty.  A convergent sequence that
    keeps ∞ is not handled.
    """
    F = space.coerce_finite(F)
    a = remove_points(space, A, F)
    b = remove_points(space, B, F)
    if not is_empty_set(a & b):
        return False
    if space.is_discrete or (space.kind is SpaceKind.CONV_SEQ and INF in F):
        return True
    if space.kind is SpaceKind.COFINITE_N:
        return is_empty_set(a) or is_empty_set(b)
    raise NotImplementedError("subspace still contains the limit point")


def separated_after_removal(A, B, space: SpaceModel) -> RemovalVerdict:
    verdict = fc_separated(A, B, space)
    if not verdict.separated:
        raise NotSeparated("A and B are not F_c-completely separated")
    if space.kind is SpaceKind.CONV_SEQ:
        F = frozenset({INF})
    else:
        F = discontinuity_set(verdict.f, space) | discontinuity_set(verdict.g, space)
    return RemovalVerdict(F, completely_separated_in_complement(space, A, B, F))


def covers(verdict: SeparationVerdict, A, B) -> bool:
    return (
        verdict.separated
        and is_subset(A, verdict.z1)
        and is_subset(B, verdict.z2)
        and is_empty_set(verdict.z1 & verdict.z2)
    )
