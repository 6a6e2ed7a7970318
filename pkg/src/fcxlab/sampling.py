"""Seeded random members and representable sets for each space model."""

from __future__ import annotations

import random
from fractions import Fraction

from .ring import RingElem
from .spaces import SpaceKind, SpaceModel, UPSet

VALUE_POOL = tuple(Fraction(v) for v in (-2, -1, 0, 0, 1, 1, 2, 3)) + (Fraction(1, 2), Fraction(-3, 4))
MAX_TRANSIENT = 4
MAX_PERIOD = 3


def random_value(rng: random.Random) -> Fraction:
    return rng.choice(VALUE_POOL)


def random_member(space: SpaceModel, rng: random.Random) -> RingElem:
    """A random member of C_c(X)_F over ``space``.

    CofiniteN members must be constant off a finite set, so their block is a
    single value; every ultimately periodic function is a member elsewhere.
    """
    c = space.carrier
    if c.is_finite:
        return RingElem(c, tuple(random_value(rng) for _ in range(c.size)))
    tr = tuple(random_value(rng) for _ in range(rng.randrange(MAX_TRANSIENT + 1)))
    if space.kind is SpaceKind.COFINITE_N:
        bl = (random_value(rng),)
    else:
        bl = tuple(random_value(rng) for _ in range(rng.randint(1, MAX_PERIOD)))
    inf = None
    if c.infinity:
        # half the time continuous at ∞
        inf = bl[0] if len(set(bl)) == 1 and rng.random() < 0.5 else random_value(rng)
    return RingElem(c, tr, bl, inf)


def random_function(space: SpaceModel, rng: random.Random) -> RingElem:
    """A random ultimately periodic function on the carrier, member or not."""
    c = space.carrier
    if c.is_finite:
        return random_member(space, rng)
    tr = tuple(random_value(rng) for _ in range(rng.randrange(MAX_TRANSIENT + 1)))
    bl = tuple(random_value(rng) for _ in range(rng.randint(1, MAX_PERIOD)))
    return RingElem(c, tr, bl, random_value(rng) if c.infinity else None)


def random_set(space: SpaceModel, rng: random.Random):
    c = space.carrier
    if c.is_finite:
        return frozenset(i for i in range(c.size) if rng.random() < 0.5)
    kind = rng.random()
    tr = tuple(rng.random() < 0.5 for _ in range(rng.randrange(MAX_TRANSIENT + 1)))
    if kind < 0.3:
        bl = (False,)
    elif kind < 0.5:
        bl = (True,)
    else:
        bl = tuple(rng.random() < 0.5 for _ in range(rng.randint(1, MAX_PERIOD)))
    return UPSet(tr, bl, c.infinity and rng.random() < 0.5)


def random_disjoint_pair(space: SpaceModel, rng: random.Random):
    A = random_set(space, rng)
    B = random_set(space, rng) & space.complement(A)
    return A, B


def random_finite_set(space: SpaceModel, rng: random.Random, bound: int = 6) -> frozenset:
    c = space.carrier
    top = c.size if c.is_finite else bound
    return frozenset(i for i in range(top) if rng.random() < 0.3)
