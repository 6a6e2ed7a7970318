"""Space models, the representable set algebra and decidable topology.

Four models are supported:

``Finite(n)``
    points ``0..n-1``; the only T1 topology on a finite set is discrete.
``DiscreteN``
    ℕ with the discrete topology.
``CofiniteN``
    ℕ whose open sets are ∅ and the cofinite subsets.
``ConvSeq``
    ℕ ∪ {∞}, a convergent sequence: every n ∈ ℕ is isolated and the
    neighbourhoods of ∞ are the sets containing ∞ and a tail of ℕ.

Subsets of a finite model are plain ``frozenset`` objects.  Subsets of the
countable models are :class:`UPSet` values: ultimately periodic subsets of ℕ
plus a flag for ∞.  Universally quantified statements about "all subsets" of
a countable model are therefore relative to the UPSet algebra.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from . import _periodic
from .errors import BadKind, EmptySpace, NotRepresentable

RELATIVIZATION = (
    "finite models: all subsets; countable models: ultimately periodic subsets "
    "of N plus the infinity flag"
)


class _Infinity:
    """The distinguished non-isolated point of the convergent sequence."""

    _instance: Optional["_Infinity"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Point = Union[int, _Infinity]


def point_key(x: Point):
    """Sort key placing ∞ after every natural number."""
    return (1, 0) if x is INF else (0, x)


class SpaceKind(str, enum.Enum):
    FINITE = "finite"
    DISCRETE_N = "discrete_n"
    COFINITE_N = "cofinite_n"
    CONV_SEQ = "conv_seq"


@dataclass(frozen=True)
class Carrier:
    """Underlying point set: ``{0..size-1}`` or ℕ, optionally with ∞."""

    size: Optional[int] = None
    infinity: bool = False

    @property
    def is_finite(self) -> bool:
        return self.size is not None


@dataclass(frozen=True)
class UPSet:
    """Ultimately periodic subset of ℕ, plus membership of ∞.

    ``transient`` covers indices ``[0, T)``; ``block`` repeats from ``T``
    onwards.  Instances are canonicalised on construction, so ``==`` is set
    equality.  ``infinity`` is only meaningful for the convergent sequence and
    must stay ``False`` elsewhere.
    """

    transient: tuple = ()
    block: tuple = (False,)
    infinity: bool = False

    def __post_init__(self):
        tr, bl = _periodic.canonical(
            tuple(bool(b) for b in self.transient), tuple(bool(b) for b in self.block)
        )
        object.__setattr__(self, "transient", tr)
        object.__setattr__(self, "block", bl)
        object.__setattr__(self, "infinity", bool(self.infinity))

    # constructors -------------------------------------------------------

    @classmethod
    def empty(cls) -> "UPSet":
        return cls((), (False,))

    @classmethod
    def naturals(cls, infinity: bool = False) -> "UPSet":
        return cls((), (True,), infinity)

    @classmethod
    def evens(cls) -> "UPSet":
        return cls((), (True, False))

    @classmethod
    def odds(cls) -> "UPSet":
        return cls((), (False, True))

    @classmethod
    def from_points(cls, points: Iterable[Point]) -> "UPSet":
        pts = set(points)
        infinity = INF in pts
        nats = sorted(p for p in pts if p is not INF)
        if any(not isinstance(p, int) or p < 0 for p in nats):
            raise NotRepresentable(f"points must be natural numbers or INF: {nats}")
        size = nats[-1] + 1 if nats else 0
        return cls(tuple(i in pts for i in range(size)), (False,), infinity)

    @classmethod
    def residues(cls, period: int, residues: Iterable[int], start: int = 0) -> "UPSet":
        """``{i >= start : i mod period in residues}``."""
        res = {r % period for r in residues}
        block = tuple(((start + j) % period) in res for j in range(period))
        return cls((False,) * start, block)

    # structure ----------------------------------------------------------

    @property
    def period(self) -> int:
        return len(self.block)

    @property
    def seq(self):
        return self.transient, self.block

    def __contains__(self, x) -> bool:
        if x is INF:
            return self.infinity
        return _periodic.value_at(self.transient, self.block, x)

    def __iter__(self):
        if not self.is_finite():
            raise ValueError("cannot iterate an infinite set")
        return iter(sorted(self.points(), key=point_key))

    def is_finite(self) -> bool:
        return not any(self.block)

    def is_cofinite(self) -> bool:
        """Cofinite in ℕ (the ∞ flag is ignored)."""
        return all(self.block)

    def is_empty(self) -> bool:
        return self.is_finite() and not any(self.transient) and not self.infinity

    def points(self) -> frozenset:
        if not self.is_finite():
            raise ValueError("set is infinite")
        pts = {i for i, b in enumerate(self.transient) if b}
        if self.infinity:
            pts.add(INF)
        return frozenset(pts)

    def naturals_part(self) -> "UPSet":
        return UPSet(self.transient, self.block, False)

    # Boolean algebra ----------------------------------------------------

    def union(self, other: "UPSet") -> "UPSet":
        tr, bl = _periodic.combine(lambda a, b: a or b, self.seq, other.seq)
        return UPSet(tr, bl, self.infinity or other.infinity)

    def intersect(self, other: "UPSet") -> "UPSet":
        tr, bl = _periodic.combine(lambda a, b: a and b, self.seq, other.seq)
        return UPSet(tr, bl, self.infinity and other.infinity)

    def complement(self, with_infinity: bool = True) -> "UPSet":
        """Complement in ℕ ∪ {∞} (or in ℕ when ``with_infinity`` is false)."""
        return UPSet(
            tuple(not b for b in self.transient),
            tuple(not b for b in self.block),
            (not self.infinity) if with_infinity else False,
        )

    def difference(self, other: "UPSet") -> "UPSet":
        return self.intersect(other.complement())

    def issubset(self, other: "UPSet") -> bool:
        return self.intersect(other) == self

    __or__ = union
    __and__ = intersect
    __sub__ = difference
    __le__ = issubset

    def __repr__(self):
        bits = lambda bs: "".join("1" if b else "0" for b in bs)  # noqa: E731
        inf = ", inf" if self.infinity else ""
        return f"UPSet({bits(self.transient)}|{bits(self.block)}*{inf})"

    # JSON ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "transient": [int(b) for b in self.transient],
            "period": self.period,
            "block": [int(b) for b in self.block],
            "infinity": self.infinity,
        }


def canonicalize(S: UPSet) -> UPSet:
    return UPSet(S.transient, S.block, S.infinity)


@dataclass(frozen=True)
class SpaceModel:
    kind: SpaceKind
    n: Optional[int] = None

    @property
    def carrier(self) -> Carrier:
        if self.kind is SpaceKind.FINITE:
            return Carrier(size=self.n)
        return Carrier(infinity=self.kind is SpaceKind.CONV_SEQ)

    @property
    def is_finite(self) -> bool:
        return self.kind is SpaceKind.FINITE

    @property
    def is_discrete(self) -> bool:
        return self.kind in (SpaceKind.FINITE, SpaceKind.DISCRETE_N)

    def __str__(self):
        if self.kind is SpaceKind.FINITE:
            return f"Finite({self.n})"
        return {
            SpaceKind.DISCRETE_N: "DiscreteN",
            SpaceKind.COFINITE_N: "CofiniteN",
            SpaceKind.CONV_SEQ: "ConvSeq",
        }[self.kind]

    def contains_point(self, x) -> bool:
        if x is INF:
            return self.kind is SpaceKind.CONV_SEQ
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            return False
        return self.n is None or x < self.n

    def is_isolated(self, x: Point) -> bool:
        if not self.contains_point(x):
            raise NotRepresentable(f"{x!r} is not a point of {self}")
        if self.kind is SpaceKind.COFINITE_N:
            return False
        return x is not INF

    def non_isolated_points(self):
        """The finite set of non-isolated points, or ``None`` when it is infinite."""
        if self.kind is SpaceKind.CONV_SEQ:
            return frozenset({INF})
        if self.kind is SpaceKind.COFINITE_N:
            return None
        return frozenset()

    def universe(self):
        if self.is_finite:
            return frozenset(range(self.n))
        return UPSet.naturals(self.kind is SpaceKind.CONV_SEQ)

    def empty(self):
        return frozenset() if self.is_finite else UPSet.empty()

    def complement(self, A):
        A = self.coerce_set(A)
        if self.is_finite:
            return frozenset(range(self.n)) - A
        return A.complement(with_infinity=self.kind is SpaceKind.CONV_SEQ)

    def coerce_set(self, A):
        """Normalise ``A`` into this model's set algebra or raise NotRepresentable."""
        if self.is_finite:
            if isinstance(A, UPSet):
                if not A.is_finite():
                    raise NotRepresentable(f"infinite set {A!r} in {self}")
                A = A.points()
            A = frozenset(A)
            bad = [x for x in A if not self.contains_point(x)]
            if bad:
                raise NotRepresentable(f"points {bad} outside {self}")
            return A
        if not isinstance(A, UPSet):
            A = UPSet.from_points(A)
        if A.infinity and self.kind is not SpaceKind.CONV_SEQ:
            raise NotRepresentable(f"{self} has no point at infinity")
        return A

    def coerce_finite(self, F) -> frozenset:
        """Normalise a finite set of points of this space."""
        if isinstance(F, UPSet):
            if not F.is_finite():
                raise NotRepresentable("F must be finite")
            F = F.points()
        F = frozenset(F)
        bad = [x for x in F if not self.contains_point(x)]
        if bad:
            raise NotRepresentable(f"points {bad} outside {self}")
        return F

    def probe_points(self, *objs) -> list:
        """Points that determine every given object pointwise.

        For countable models this is the longest transient plus two common
        periods, followed by ∞ for the convergent sequence.
        """
        if self.is_finite:
            return list(range(self.n))
        seqs = [o.seq for o in objs] or [((), (False,))]
        pts: list = list(range(_periodic.probe_bound(*seqs)))
        if self.kind is SpaceKind.CONV_SEQ:
            pts.append(INF)
        return pts


def make_space(kind, n: Optional[int] = None, topology: Optional[str] = None) -> SpaceModel:
    try:
        kind = SpaceKind(kind)
    except ValueError:
        raise BadKind(f"unknown space kind {kind!r}") from None
    if kind is SpaceKind.FINITE:
        if n is None or isinstance(n, bool) or not isinstance(n, int):
            raise BadKind("Finite requires an integer n")
        if n == 0:
            raise EmptySpace("Finite(0) has no points")
        if n < 0:
            raise BadKind(f"Finite requires n >= 1, got {n}")
        if topology not in (None, "discrete"):
            raise BadKind("a finite T1 space is discrete; got topology " + repr(topology))
        return SpaceModel(kind, n)
    if n is not None:
        raise BadKind(f"{kind.value} takes no n")
    if topology is not None:
        raise BadKind(f"{kind.value} has a fixed topology")
    return SpaceModel(kind)


def finite(n: int) -> SpaceModel:
    return make_space(SpaceKind.FINITE, n)


DISCRETE_N = SpaceModel(SpaceKind.DISCRETE_N)
COFINITE_N = SpaceModel(SpaceKind.COFINITE_N)
CONV_SEQ = SpaceModel(SpaceKind.CONV_SEQ)


def upset_algebra(op: str, S: UPSet, S2: Optional[UPSet] = None, i: Optional[int] = None):
    if op == "union":
        return S | S2
    if op == "intersect":
        return S & S2
    if op == "complement":
        return S.complement()
    if op == "member":
        return i in S
    if op == "is_finite":
        return S.is_finite()
    if op == "is_cofinite":
        return S.is_cofinite()
    if op == "canonicalize":
        return canonicalize(S)
    raise ValueError(f"unknown UPSet operation {op!r}")


# topology ------------------------------------------------------------------


def is_finite_set(A) -> bool:
    return A.is_finite() if isinstance(A, UPSet) else True


def is_empty_set(A) -> bool:
    return A.is_empty() if isinstance(A, UPSet) else not A


def is_subset(A, B) -> bool:
    return A.issubset(B) if isinstance(A, UPSet) else A <= B


def remove_points(space: SpaceModel, A, F):
    A = space.coerce_set(A)
    if space.is_finite:
        return A - F
    return A - UPSet.from_points(F)


def is_open(space: SpaceModel, A) -> bool:
    A = space.coerce_set(A)
    if space.is_discrete:
        return True
    if space.kind is SpaceKind.COFINITE_N:
        return A.is_empty() or A.is_cofinite()
    # convergent sequence: a neighbourhood of ∞ contains a tail
    return (not A.infinity) or A.is_cofinite()


def is_closed(space: SpaceModel, A) -> bool:
    return is_open(space, space.complement(A))


def is_clopen(space: SpaceModel, A) -> bool:
    return is_open(space, A) and is_closed(space, A)


def is_clopen_in_subspace(space: SpaceModel, A, F) -> bool:
    """Decide whether ``A \\ F`` is clopen in the subspace ``X \\ F``."""
    A = space.coerce_set(A)
    F = space.coerce_finite(F)
    if space.is_discrete:
        return True
    rest = remove_points(space, A, F)
    if space.kind is SpaceKind.CONV_SEQ:
        if INF in F:
            return True
        # X \ F is again a convergent sequence; removing finitely many isolated
        # points does not change which sets contain a tail
        if rest.infinity:
            return rest.is_cofinite()
        return rest.is_finite()
    # CofiniteN: X \ F is an infinite cofinite space, whose only clopens are trivial
    sub = remove_points(space, space.universe(), F)
    return rest.is_empty() or sub.issubset(rest)


def clopen_removal(space: SpaceModel, A) -> Optional[frozenset]:
    """A finite F with ``A \\ F`` clopen in ``X \\ F``, or ``None`` if none exists.

    Total decision per model, no search: discrete models take ``F = ∅``; the
    convergent sequence takes ``F = {∞}`` unless ``A`` is already clopen; in
    the cofinite model a clopen subset of a cofinite subspace is empty or
    everything, so ``F`` exists iff ``A`` is finite (take ``F = A``) or
    cofinite (take ``F = ℕ \\ A``).
    """
    A = space.coerce_set(A)
    if space.is_discrete:
        return frozenset()
    if space.kind is SpaceKind.CONV_SEQ:
        return frozenset() if is_clopen(space, A) else frozenset({INF})
    if A.is_finite():
        return A.points()
    if A.is_cofinite():
        return space.complement(A).points()
    return None
