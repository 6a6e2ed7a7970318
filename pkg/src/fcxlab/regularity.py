"""Regularity (F_cP) and Baer deciders per space model, with witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ModelMismatch
from .ideals import MAX_ENUMERATION_N, annihilator, ideal_from_generators, value_basis
from .ring import RingElem, indicator, membership, require_member
from .spaces import (
    RELATIVIZATION,
    SpaceKind,
    SpaceModel,
    UPSet,
    clopen_removal,
    finite,
    is_clopen_in_subspace,
)


def regular_witness(f: RingElem, space: SpaceModel) -> RingElem:
    """f⋆ with f²·f⋆ = f: 1/f off Z(f) and 0 on Z(f)."""
    require_member(f, space)
    g = f.map(lambda v: 1 / v if v else v)
    require_member(g, space)
    return g


@dataclass(frozen=True)
class RegularityReport:
    space: SpaceModel
    fcp: bool
    baer: bool
    #: a representable subset violating the Baer condition, if any
    witness: Optional[object] = None
    relativized_to: str = RELATIVIZATION

    def to_json(self) -> dict:
        w = self.witness
        if isinstance(w, UPSet):
            w = w.to_json()
        elif w is not None:
            w = sorted(w)
        return {
            "space": str(self.space),
            "fcp": self.fcp,
            "baer": self.baer,
            "witness": w,
            "relativized_to": self.relativized_to,
        }


def space_regularity_report(space: SpaceModel) -> RegularityReport:
    """F_cP and Baer verdicts from the clopen-after-finite-removal conditions.

    F_cP quantifies over zero sets of members, Baer over every representable
    subset.  In the discrete models and the convergent sequence a finite F
    always exists (∅, or {∞}).  In cofinite ℕ member zero sets are finite or
    cofinite, so F_cP holds.  The evens are neither, so no finite F makes
    them clopen in a cofinite subspace and Baer fails.
    """
    if space.kind is SpaceKind.COFINITE_N:
        evens = UPSet.evens()
        if clopen_removal(space, evens) is not None:
            raise AssertionError("evens should admit no clopen removal in CofiniteN")
        return RegularityReport(space, fcp=True, baer=False, witness=evens)
    return RegularityReport(space, fcp=True, baer=True)


@dataclass(frozen=True)
class CozWitness:
    element: Optional[RingElem]
    reason: str

    @property
    def ok(self) -> bool:
        return self.element is not None


def idempotent_coz_witness(space: SpaceModel, A) -> CozWitness:
    """An idempotent member e with COZ(e) = A, when one exists.

    An idempotent takes only the values 0 and 1, so the only candidate is
    the indicator of A.
    """
    e = indicator(space, A)
    verdict = membership(e, space)
    if verdict.member:
        return CozWitness(e, verdict.reason.value)
    return CozWitness(None, verdict.reason.value)


def pp_annihilator_idempotent(f: RingElem, n: Optional[int] = None) -> RingElem:
    """e = indicator of Z(f), the idempotent generating Ann(f) over Finite(n)."""
    if not f.carrier.is_finite:
        raise ModelMismatch("the PP idempotent is computed over Finite(n) only")
    n = f.carrier.size if n is None else n
    space = finite(n)
    require_member(f, space)
    e = indicator(space, f.zero_set())
    if e * e != e:
        raise AssertionError("indicator is not idempotent")
    if annihilator([f], n) != ideal_from_generators([e], n):
        raise AssertionError("Ann(f) is not generated by the indicator of Z(f)")
    if n <= MAX_ENUMERATION_N:
        for h in value_basis(n):
            if (f * h).is_zero() != (h * e == h):
                raise AssertionError(f"basis element {h!r} separates Ann(f) from <e>")
    return e


@dataclass(frozen=True)
class RegularityTriple:
    f: RingElem
    regular: bool
    zero_set_clopen: bool
    pp: bool

    @property
    def agree(self) -> bool:
        return self.regular == self.zero_set_clopen == self.pp


def fcp_triple(n: int, values=(-2, 0, 3)) -> list:
    """Evaluate the three F_cP conditions for every basis element over Finite(n).

    Regularity: the witness g satisfies f²g = f.  Clopen zero set: some finite
    F leaves Z(f) \\ F clopen in X \\ F.  PP: Ann(f) is generated by an
    idempotent, checked by brute-force annihilation over the basis.
    """
    space = finite(n)
    basis = value_basis(n, values)
    rows = []
    for f in basis:
        g = regular_witness(f, space)
        regular = f * f * g == f
        F = clopen_removal(space, f.zero_set())
        clopen = F is not None and is_clopen_in_subspace(space, f.zero_set(), F)
        e = indicator(space, f.zero_set())
        ann = {h for h in basis if (f * h).is_zero()}
        pp = e * e == e and ann == {h for h in basis if h * e == h}
        rows.append(RegularityTriple(f, regular, clopen, pp))
    return rows
