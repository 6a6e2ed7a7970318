"""Exact-rational elements of C_c(X)_F and their zero and discontinuity sets.

An element over ``Finite(n)`` is a vector of ``n`` rationals.  Over the
countable models it is an ultimately periodic rational sequence on ℕ, plus a
value at ∞ for the convergent sequence.  The value set of an element is
finite, so the countable-range condition holds by construction and
membership comes down to the discontinuity set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import _periodic
from .errors import ModelMismatch, NotMember, NotUnit
from .spaces import INF, Carrier, SpaceKind, SpaceModel, UPSet, point_key

Scalar = Union[int, Fraction, str]


def as_rational(c) -> Fraction:
    if isinstance(c, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"exact rational expected, got {type(c).__name__}")


class _InfiniteMarker:
    def __repr__(self):
        return "Infinite"


#: returned by :func:`discontinuity_set` when the set is infinite
INFINITE = _InfiniteMarker()


@dataclass(frozen=True)
class RingElem:
    """A function on the carrier of a space model, in canonical form.

    For finite carriers ``transient`` holds all ``n`` values and ``block`` is
    empty.  For ℕ and ℕ ∪ {∞} the pair (transient, block) is canonical and
    ``inf_value`` is set exactly when the carrier has ∞.
    """

    carrier: Carrier
    transient: tuple
    block: tuple = ()
    inf_value: Optional[Fraction] = None

    def __post_init__(self):
        tr = tuple(as_rational(v) for v in self.transient)
        bl = tuple(as_rational(v) for v in self.block)
        if self.carrier.is_finite:
            if bl or len(tr) != self.carrier.size:
                raise ValueError(f"expected {self.carrier.size} values and no block")
        else:
            tr, bl = _periodic.canonical(tr, bl)
        inf = self.inf_value
        if self.carrier.infinity:
            if inf is None:
                raise ValueError("carrier with infinity needs inf_value")
            inf = as_rational(inf)
        elif inf is not None:
            raise ValueError("inf_value given for a carrier without infinity")
        object.__setattr__(self, "transient", tr)
        object.__setattr__(self, "block", bl)
        object.__setattr__(self, "inf_value", inf)

    # ------------------------------------------------------------------

    @property
    def seq(self):
        return self.transient, self.block

    @property
    def period(self) -> int:
        return len(self.block)

    @property
    def values(self) -> tuple:
        """The value vector (finite carriers only)."""
        if not self.carrier.is_finite:
            raise ValueError("values is only defined for finite carriers")
        return self.transient

    def __call__(self, x) -> Fraction:
        if x is INF:
            if not self.carrier.infinity:
                raise KeyError(x)
            return self.inf_value
        if self.carrier.is_finite:
            return self.transient[x]
        return _periodic.value_at(self.transient, self.block, x)

    def value_set(self) -> frozenset:
        vals = set(self.transient) | set(self.block)
        if self.inf_value is not None:
            vals.add(self.inf_value)
        return frozenset(vals)

    def is_zero(self) -> bool:
        return self.value_set() == {0}

    def tail_constant(self) -> Optional[Fraction]:
        """The eventual constant value on ℕ, or ``None`` if the tail oscillates."""
        if self.carrier.is_finite:
            return None
        return self.block[0] if len(self.block) == 1 else None

    # arithmetic ---------------------------------------------------------

    def _lift(self, other) -> "RingElem":
        if isinstance(other, RingElem):
            if other.carrier != self.carrier:
                raise ModelMismatch(f"carriers differ: {self.carrier} vs {other.carrier}")
            return other
        return constant(self.carrier, other)

    def map(self, op, *others) -> "RingElem":
        """Pointwise ``op`` over ``self`` and ``others`` (elements or scalars)."""
        elems = [self] + [self._lift(o) for o in others]
        if self.carrier.is_finite:
            vals = tuple(op(*vs) for vs in zip(*(e.transient for e in elems)))
            return RingElem(self.carrier, vals)
        tr, bl = _periodic.combine(op, *(e.seq for e in elems))
        inf = op(*(e.inf_value for e in elems)) if self.carrier.infinity else None
        return RingElem(self.carrier, tr, bl, inf)

    def __add__(self, other):
        return self.map(lambda a, b: a + b, other)

    __radd__ = __add__

    def __sub__(self, other):
        return self.map(lambda a, b: a - b, other)

    def __rsub__(self, other):
        return self.map(lambda a, b: b - a, other)

    def __mul__(self, other):
        return self.map(lambda a, b: a * b, other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.map(lambda a: -a)

    def __abs__(self):
        return self.map(abs)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        return self.map(lambda a: a**k)

    def join(self, other) -> "RingElem":
        return self.map(max, other)

    def meet(self, other) -> "RingElem":
        return self.map(min, other)

    def divide(self, other) -> "RingElem":
        """Pointwise quotient; the denominator must vanish nowhere."""
        other = self._lift(other)
        if 0 in other.value_set():
            raise ZeroDivisionError("denominator has a zero")
        return self.map(lambda a, b: a / b, other)

    # sets ---------------------------------------------------------------

    def zero_set(self):
        if self.carrier.is_finite:
            return frozenset(i for i, v in enumerate(self.transient) if v == 0)
        inf = self.carrier.infinity and self.inf_value == 0
        return UPSet(
            tuple(v == 0 for v in self.transient), tuple(v == 0 for v in self.block), inf
        )

    def cozero_set(self):
        if self.carrier.is_finite:
            return frozenset(i for i, v in enumerate(self.transient) if v != 0)
        return self.zero_set().complement(with_infinity=self.carrier.infinity)

    def __repr__(self):
        fmt = lambda vs: ",".join(str(v) for v in vs)  # noqa: E731
        if self.carrier.is_finite:
            return f"RingElem[{fmt(self.transient)}]"
        inf = f"; inf={self.inf_value}" if self.carrier.infinity else ""
        return f"RingElem({fmt(self.transient)}|{fmt(self.block)}*{inf})"


# constructors -----------------------------------------------------------------


def _carrier(where) -> Carrier:
    return where.carrier if isinstance(where, SpaceModel) else where


def constant(where, r) -> RingElem:
    c = _carrier(where)
    r = as_rational(r)
    if c.is_finite:
        return RingElem(c, (r,) * c.size)
    return RingElem(c, (), (r,), r if c.infinity else None)


def zero(where) -> RingElem:
    return constant(where, 0)


def one(where) -> RingElem:
    return constant(where, 1)


def from_values(values) -> RingElem:
    values = tuple(values)
    return RingElem(Carrier(size=len(values)), values)


def sequence(transient, block, inf_value=None) -> RingElem:
    return RingElem(Carrier(infinity=inf_value is not None), tuple(transient), tuple(block), inf_value)


def indicator(space: SpaceModel, A) -> RingElem:
    """The 0/1 function that is 1 exactly on ``A``."""
    A = space.coerce_set(A)
    c = space.carrier
    if c.is_finite:
        return RingElem(c, tuple(1 if i in A else 0 for i in range(c.size)))
    return RingElem(
        c,
        tuple(int(b) for b in A.transient),
        tuple(int(b) for b in A.block),
        (1 if A.infinity else 0) if c.infinity else None,
    )


def chi(space: SpaceModel, x) -> RingElem:
    """χ_{x}, the characteristic function of a single point."""
    return indicator(space, frozenset({x}))


def ring_arith(op: str, f: RingElem, g_or_c=None) -> RingElem:
    if op == "add":
        return f + g_or_c
    if op == "mul":
        return f * g_or_c
    if op == "neg":
        return -f
    if op == "scalar_mul":
        return f * as_rational(g_or_c)
    if op == "join":
        return f.join(g_or_c)
    if op == "meet":
        return f.meet(g_or_c)
    if op == "abs":
        return abs(f)
    raise ValueError(f"unknown ring operation {op!r}")


def zero_set(f: RingElem):
    return f.zero_set()


def cozero_set(f: RingElem):
    return f.cozero_set()


# membership -------------------------------------------------------------------


def _check_carrier(f: RingElem, space: SpaceModel) -> None:
    if f.carrier != space.carrier:
        raise ModelMismatch(f"element lives on {f.carrier}, space is {space}")


def discontinuity_set(f: RingElem, space: SpaceModel):
    """Points of ``space`` at which ``f`` is discontinuous, or :data:`INFINITE`.

    Discrete models: every function is continuous.

    Convergent sequence: the points of ℕ are isolated, and f is continuous
    at ∞ iff f(n) → f(∞).  For an ultimately periodic sequence that means
    the block is one constant equal to the value at ∞.

    Cofinite ℕ: values are finitely many, so f is continuous at x iff
    f⁻¹(f(x)) is cofinite.  With a constant block c the discontinuities are
    exactly {x : f(x) ≠ c}.  An oscillating block gives no cofinite fibre,
    so every point is a discontinuity.
    """
    _check_carrier(f, space)
    if space.is_discrete:
        return frozenset()
    c = f.tail_constant()
    if space.kind is SpaceKind.CONV_SEQ:
        return frozenset() if c is not None and c == f.inf_value else frozenset({INF})
    if c is None:
        return INFINITE
    return frozenset(i for i, v in enumerate(f.transient) if v != c)


class Ring(str, enum.Enum):
    FcX = "FcX"
    Cc = "Cc"


class Reason(str, enum.Enum):
    CONTINUOUS = "continuous"
    FINITE_DISCONTINUITY = "finite_discontinuity_set"
    INFINITE_DISCONTINUITY = "infinite_discontinuity_set"
    DISCONTINUOUS = "discontinuous"


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    discontinuity_set: object
    reason: Reason
    countable_range: bool = True  # value sets are finite by construction

    def to_json(self) -> dict:
        d = self.discontinuity_set
        return {
            "member": self.member,
            "discontinuity_set": "infinite"
            if d is INFINITE
            else [str(x) if x is INF else x for x in sorted(d, key=point_key)],
            "reason": self.reason.value,
            "countable_range": self.countable_range,
        }


def membership(f: RingElem, space: SpaceModel, ring="FcX") -> MembershipVerdict:
    ring = Ring(ring)
    d = discontinuity_set(f, space)
    if d is INFINITE:
        return MembershipVerdict(False, d, Reason.INFINITE_DISCONTINUITY)
    if not d:
        return MembershipVerdict(True, d, Reason.CONTINUOUS)
    if ring is Ring.FcX:
        return MembershipVerdict(True, d, Reason.FINITE_DISCONTINUITY)
    return MembershipVerdict(False, d, Reason.DISCONTINUOUS)


def is_member(f: RingElem, space: SpaceModel, ring="FcX") -> bool:
    return membership(f, space, ring).member


def require_member(f: RingElem, space: SpaceModel) -> None:
    verdict = membership(f, space)
    if not verdict.member:
        raise NotMember(f"{f!r} is not in C_c(X)_F over {space}", verdict)


# classification ------------------------------------------------------------------


class Kind(str, enum.Enum):
    ZERO = "zero"
    UNIT = "unit"
    ZERO_DIVISOR = "zero_divisor"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    inverse: Optional[RingElem] = None
    #: χ_{x} for some x in Z(f), annihilating f
    witness: Optional[RingElem] = None


def first_point(A):
    """Least point of a non-empty set (∞ last)."""
    if isinstance(A, UPSet):
        for i, b in enumerate(A.transient):
            if b:
                return i
        if any(A.block):
            return len(A.transient) + A.block.index(True)
        if A.infinity:
            return INF
        raise ValueError("empty set")
    return min(A, key=point_key)


def inverse(f: RingElem) -> RingElem:
    if 0 in f.value_set():
        raise NotUnit(f"{f!r} has a zero")
    return one(f.carrier).divide(f)


def classify(f: RingElem, space: SpaceModel) -> Classification:
    require_member(f, space)
    if f.is_zero():
        return Classification(Kind.ZERO)
    Z = f.zero_set()
    if (Z.is_empty() if isinstance(Z, UPSet) else not Z):
        return Classification(Kind.UNIT, inverse=inverse(f))
    return Classification(Kind.ZERO_DIVISOR, witness=chi(space, first_point(Z)))


def level_set_witness(f: RingElem, r, dir: str) -> RingElem:
    """g with Z(g) = {f ≥ r} (``dir="geq"``) or {f ≤ r} (``dir="leq"``)."""
    r = as_rational(r)
    if dir == "geq":
        return (f - r).meet(0)
    if dir == "leq":
        return (f - r).join(0)
    raise ValueError(f"dir must be 'geq' or 'leq', got {dir!r}")
