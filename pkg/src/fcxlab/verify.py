"""Cross-module verification suite and the restriction-map kernel probe.

Every check is registered under one ``check_id`` and tests one invariant.
Randomized checks draw from an RNG seeded by ``(seed, check_id)``, so a
check's outcome does not depend on which other checks run.
"""

from __future__ import annotations

import enum
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import zdgraph as zd
from .errors import ConfigError, FcxError
from .ideals import (
    FilterDesc,
    IdealDesc,
    all_subsets,
    annihilator,
    enumerate_filters_and_ideals,
    filter_ideal_galois,
    ideal_from_generators,
    ideal_predicates,
    idempotent_generator,
    j1_membership,
    prime_equivalents_check,
    proper_ideals,
    socle_membership,
    structure_space_report,
    sum_decomposition,
    sum_ideals,
    value_basis,
    zero_sets_of,
)
from .instance import encode_elem, encode_number, encode_point, encode_set, encode_space
from .regularity import (
    fcp_triple,
    idempotent_coz_witness,
    pp_annihilator_idempotent,
    regular_witness,
    space_regularity_report,
)
from .ring import (
    INFINITE,
    Kind,
    RingElem,
    chi,
    classify,
    discontinuity_set,
    indicator,
    is_member,
    level_set_witness,
    one,
    zero,
)
from .sampling import (
    random_disjoint_pair,
    random_finite_set,
    random_function,
    random_member,
    random_set,
    random_value,
)
from .separation import fc_separated, separated_after_removal, separation_witness
from .spaces import (
    CONV_SEQ,
    INF,
    RELATIVIZATION,
    SpaceKind,
    SpaceModel,
    UPSet,
    canonicalize,
    clopen_removal,
    finite,
    is_clopen_in_subspace,
    is_empty_set,
    is_finite_set,
    is_subset,
    make_space,
)

SCHEMA_VERSION = 1
SUITES = ("zerosets", "separation", "ideals", "regularity", "graph", "sections5")
MODELS = ("finite", "discrete_n", "cofinite_n", "conv_seq")

ZERO_SET_SAMPLES = 1000
RING_SAMPLES = 200
SEPARATION_SAMPLES = 100
REGULARITY_SAMPLES = 100
J1_SAMPLES = 50
DISCRETENESS_SAMPLES = 1000
#: largest n for the F_cP/clopen/PP triple and PP checks
TRIPLE_MAX_N = 4


class Status(str, enum.Enum):
    CONFIRMED = "confirmed"
    REFUTED = "refuted"
    SKIPPED = "skipped"
    #: an expected divergence from a published claim; does not fail the run
    REFUTED_CLAIM = "refuted(paper)"


@dataclass(frozen=True)
class Outcome:
    status: Status
    witness: object = None


CONFIRMED = Outcome(Status.CONFIRMED)


def _refuted(**witness) -> Outcome:
    return Outcome(Status.REFUTED, witness)


@dataclass(frozen=True)
class VerifyConfig:
    max_n: int = 4
    seed: int = 0
    models: tuple = MODELS
    suites: tuple = SUITES

    def __post_init__(self):
        if isinstance(self.max_n, bool) or not isinstance(self.max_n, int) or not 1 <= self.max_n <= 5:
            raise ConfigError(f"max_n must be an integer in 1..5, got {self.max_n!r}")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise ConfigError(f"seed must be an integer, got {self.seed!r}")
        for name, allowed in (("models", MODELS), ("suites", SUITES)):
            vals = getattr(self, name)
            if isinstance(vals, str) or not all(isinstance(v, str) for v in vals):
                raise ConfigError(f"{name} must be a list of names")
            bad = sorted(set(vals) - set(allowed))
            if bad:
                raise ConfigError(f"unknown {name} {bad}; choose from {list(allowed)}")
            if not vals:
                raise ConfigError(f"{name} must not be empty")
            # keep canonical order so equal configs give equal reports
            object.__setattr__(self, name, tuple(v for v in allowed if v in vals))

    @classmethod
    def from_dict(cls, d: dict) -> "VerifyConfig":
        if not isinstance(d, dict):
            raise ConfigError("config must be an object")
        extra = set(d) - {"max_n", "seed", "models", "suites"}
        if extra:
            raise ConfigError(f"unknown config fields {sorted(extra)}")
        kw = dict(d)
        for k in ("models", "suites"):
            if k in kw:
                if not isinstance(kw[k], list):
                    raise ConfigError(f"{k} must be a list")
                kw[k] = tuple(kw[k])
        return cls(**kw)

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "seed": self.seed,
            "models": list(self.models),
            "suites": list(self.suites),
        }


@dataclass(frozen=True)
class Check:
    check_id: str
    claim: str
    suite: str
    run: Callable[[random.Random], Outcome] = field(compare=False)


def model_space(name: str, max_n: int) -> SpaceModel:
    if name == "finite":
        return finite(max_n)
    return make_space(name)


# JSON helpers -------------------------------------------------------------------


def jsonable(obj):
    if isinstance(obj, RingElem):
        return encode_elem(obj)
    if isinstance(obj, UPSet):
        return obj.to_json()
    if isinstance(obj, (frozenset, set)):
        return encode_set(obj)
    if isinstance(obj, SpaceModel):
        return encode_space(obj)
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if obj is INF:
        return encode_point(obj)
    if obj is INFINITE:
        return "infinite"
    if isinstance(obj, float):
        return encode_number(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


# restriction-map kernel probe ------------------------------------------------------


def _nullspace(rows: list, ncols: int) -> list:
    """Basis of {c : rows·c = 0} over ℚ, by Gauss–Jordan elimination."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][col]
        m[r] = [v / lead for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                k = m[i][col]
                m[i] = [a - k * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -m[i][free]
        basis.append(vec)
    return basis


@dataclass(frozen=True)
class KernelFinding:
    space: SpaceModel
    removed: frozenset
    basis: tuple
    #: nonzero elements spanning the kernel of f ↦ f|_Y on span(basis)
    kernel: tuple
    injective: bool

    def to_json(self) -> dict:
        return {
            "space": str(self.space),
            "removed": encode_set(self.removed),
            "basis": [label for label, _ in self.basis],
            "kernel": [encode_elem(f) for f in self.kernel],
            "injective": self.injective,
        }


def _probe_basis(space: SpaceModel) -> list:
    if space.is_finite:
        return [(f"chi({x})", chi(space, x)) for x in range(space.n)]
    basis = [(f"chi({x})", chi(space, x)) for x in range(4)]
    if space.kind is SpaceKind.CONV_SEQ:
        basis.append(("chi(inf)", chi(space, INF)))
    basis.append(("1", one(space)))
    if space.kind is not SpaceKind.COFINITE_N:
        basis.append(("ind(evens)", indicator(space, UPSet.evens())))
    return basis


def restriction_kernel_probe(space: SpaceModel = CONV_SEQ, removed=None) -> KernelFinding:
    """Kernel of the restriction f ↦ f|_Y, Y = X ∖ removed, on a small basis.

    The default instance is the convergent sequence with Y = ℕ; χ_{∞} restricts
    to the zero function on Y, so the restriction map is not injective.
    """
    if removed is None:
        removed = {INF} if space.kind is SpaceKind.CONV_SEQ else set()
    removed = space.coerce_finite(removed)
    basis = _probe_basis(space)
    elems = [f for _, f in basis]
    points = [x for x in space.probe_points(*elems) if x not in removed]
    rows = [[f(x) for f in elems] for x in points]
    kernel = []
    for coeffs in _nullspace(rows, len(elems)):
        k = zero(space)
        for c, f in zip(coeffs, elems):
            k = k + f * c
        if k.is_zero():
            raise AssertionError("kernel combination collapsed to zero")
        if any(k(x) != 0 for x in points):
            raise AssertionError("kernel element does not restrict to zero")
        kernel.append(k)
    return KernelFinding(space, removed, tuple(basis), tuple(kernel), not kernel)


# check builders --------------------------------------------------------------------


def _sample_members(space, rng, k):
    return [random_member(space, rng) for _ in range(k)]


def _zero_set_checks(name: str, space: SpaceModel) -> list:
    sfx = f".{name}"

    def abs_power(rng):
        for f in _sample_members(space, rng, ZERO_SET_SAMPLES):
            Z = f.zero_set()
            forms = {"abs": abs(f), "abs_meet_1": abs(f).meet(1), "f^1": f, "f^2": f**2, "f^3": f**3}
            for label, g in forms.items():
                if g.zero_set() != Z:
                    return _refuted(f=f, form=label)
        return CONFIRMED

    def constants(rng):
        if zero(space).zero_set() != space.universe() or not is_empty_set(one(space).zero_set()):
            return _refuted(space=space)
        return CONFIRMED

    def pairs(rng):
        for _ in range(ZERO_SET_SAMPLES):
            yield random_member(space, rng), random_member(space, rng)

    def sum_squares(rng):
        for f, g in pairs(rng):
            inter = f.zero_set() & g.zero_set()
            if (f * f + g * g).zero_set() != inter or (abs(f) + abs(g)).zero_set() != inter:
                return _refuted(f=f, g=g)
        return CONFIRMED

    def product(rng):
        for f, g in pairs(rng):
            if (f * g).zero_set() != f.zero_set() | g.zero_set():
                return _refuted(f=f, g=g)
        return CONFIRMED

    def level_sets(rng):
        for f in _sample_members(space, rng, ZERO_SET_SAMPLES):
            r = random_value(rng)
            for d, keep in (("geq", lambda v: v >= r), ("leq", lambda v: v <= r)):
                g = level_set_witness(f, r, d)
                if not is_member(g, space):
                    return _refuted(f=f, r=r, dir=d, reason="witness not a member")
                Z = g.zero_set()
                if any((x in Z) != keep(f(x)) for x in space.probe_points(f, g)):
                    return _refuted(f=f, r=r, dir=d)
        return CONFIRMED

    def lattice(rng):
        for _ in range(RING_SAMPLES):
            f, g = random_member(space, rng), random_member(space, rng)
            j = f.join(g)
            if j != (f + g + abs(f - g)) * Fraction(1, 2) or f.meet(g) != -((-f).join(-g)):
                return _refuted(f=f, g=g)
            if any(j(x) != max(f(x), g(x)) for x in space.probe_points(f, g)):
                return _refuted(f=f, g=g, reason="join is not the pointwise max")
        return CONFIRMED

    def closure(rng):
        ops = {
            "add": lambda f, g: f + g,
            "mul": lambda f, g: f * g,
            "join": lambda f, g: f.join(g),
            "meet": lambda f, g: f.meet(g),
            "abs": lambda f, g: abs(f),
        }
        for _ in range(RING_SAMPLES):
            f, g = random_member(space, rng), random_member(space, rng)
            both = discontinuity_set(f, space) | discontinuity_set(g, space)
            for label, op in ops.items():
                h = op(f, g)
                d = discontinuity_set(h, space)
                if d is INFINITE or not d <= both:
                    return _refuted(f=f, g=g, op=label, discontinuity=d)
        return CONFIRMED

    def trichotomy(rng):
        for f in _sample_members(space, rng, RING_SAMPLES) + [zero(space)]:
            c = classify(f, space)
            Z = f.zero_set()
            if c.kind is Kind.ZERO:
                ok = f.is_zero()
            elif c.kind is Kind.UNIT:
                ok = is_empty_set(Z) and f * c.inverse == one(space)
            else:
                w = c.witness
                ok = (
                    not f.is_zero()
                    and not is_empty_set(Z)
                    and not w.is_zero()
                    and (f * w).is_zero()
                    and is_member(w, space)
                )
            if not ok:
                return _refuted(f=f, kind=c.kind)
        return CONFIRMED

    def discontinuity_rule(rng):
        # brute continuity per point over a window that fixes the whole pattern
        for _ in range(RING_SAMPLES):
            f = random_function(space, rng)
            pts = space.probe_points(f)
            tail = [x for x in pts if x is not INF and x >= len(f.transient)] if not space.is_finite else []
            if space.kind is SpaceKind.CONV_SEQ:
                brute = {INF} if any(f(x) != f(INF) for x in tail) else set()
            elif space.kind is SpaceKind.COFINITE_N:
                brute = {x for x in pts if any(f(y) != f(x) for y in tail)}
            else:
                brute = set()
            rule = discontinuity_set(f, space)
            if rule is INFINITE:
                ok = set(tail) <= brute and tail
            else:
                ok = brute == set(rule)
            if not ok:
                return _refuted(f=f, rule=rule, brute=frozenset(brute))
        return CONFIRMED

    def boolean_algebra(rng):
        for _ in range(RING_SAMPLES):
            A, B = random_set(space, rng), random_set(space, rng)
            comp = space.complement
            if comp(A | B) != comp(A) & comp(B) or comp(A & B) != comp(A) | comp(B):
                return _refuted(A=A, B=B)
            for x in space.probe_points(A, B):
                if (x in comp(A | B)) != (x not in A and x not in B):
                    return _refuted(A=A, B=B, point=x)
            if canonicalize(canonicalize(A)) != canonicalize(A):
                return _refuted(A=A, reason="canonicalization not idempotent")
            # an expanded, non-canonical representation must canonicalize back
            if UPSet(A.transient + A.block, A.block + A.block, A.infinity) != A:
                return _refuted(A=A, reason="expanded form canonicalizes differently")
        return CONFIRMED

    checks = [
        Check("zerosets.abs_power" + sfx, "Z(f) = Z(|f|) = Z(|f| ∧ 1) = Z(f^k)", "zerosets", abs_power),
        Check("zerosets.constants" + sfx, "Z(0) = X and Z(1) = ∅", "zerosets", constants),
        Check("zerosets.sum_squares" + sfx, "Z(f² + g²) = Z(f) ∩ Z(g) = Z(|f| + |g|)", "zerosets", sum_squares),
        Check("zerosets.product" + sfx, "Z(f·g) = Z(f) ∪ Z(g)", "zerosets", product),
        Check("zerosets.level_sets" + sfx, "{f ≥ r} and {f ≤ r} are zero sets of members", "zerosets", level_sets),
        Check("ring.lattice" + sfx, "f ∨ g = (f + g + |f − g|)/2 and f ∧ g = −(−f ∨ −g)", "zerosets", lattice),
        Check("ring.closure" + sfx, "D(f op g) ⊆ D(f) ∪ D(g), finite", "zerosets", closure),
        Check("ring.trichotomy" + sfx, "each member is zero, a unit (Z = ∅) or a zero divisor", "zerosets", trichotomy),
        Check("ring.discontinuity_rule" + sfx, "closed-form discontinuity set = pointwise continuity test", "zerosets", discontinuity_rule),
    ]
    if not space.is_finite:
        checks.append(
            Check("spaces.boolean_algebra" + sfx, "UPSets form a Boolean algebra; canonical form is idempotent", "zerosets", boolean_algebra)
        )
    return checks


def _brute_finite_separated(space, A, B) -> bool:
    subsets = all_subsets(space.n)
    return any(
        A <= Z1 and B <= Z2 and not Z1 & Z2 for Z1 in subsets for Z2 in subsets
    )


def _cofinite_falsify(space, A, B, rng) -> Optional[tuple]:
    """Search member pairs for disjoint zero sets covering A and B."""
    cands = []
    for _ in range(60):
        tr = tuple(random_value(rng) if rng.random() < 0.5 else 0 for _ in range(rng.randrange(6)))
        blk = (Fraction(0),) if rng.random() < 0.5 else (Fraction(1),)
        cands.append(RingElem(space.carrier, tr, blk))
    for F in (random_finite_set(space, rng) for _ in range(10)):
        cands.append(indicator(space, F))
        cands.append(one(space) - indicator(space, F))
    za = [f for f in cands if is_subset(A, f.zero_set())]
    zb = [g for g in cands if is_subset(B, g.zero_set())]
    for f in za:
        for g in zb:
            if is_empty_set(f.zero_set() & g.zero_set()):
                return f, g
    return None


def _separation_checks(name: str, space: SpaceModel) -> list:
    sfx = f".{name}"

    def decider(rng):
        for _ in range(SEPARATION_SAMPLES):
            A, B = random_disjoint_pair(space, rng)
            v = fc_separated(A, B, space)
            if space.is_finite:
                if v.separated != _brute_finite_separated(space, A, B):
                    return _refuted(A=A, B=B, decided=v.separated)
            if v.separated:
                if not (
                    is_member(v.f, space)
                    and is_member(v.g, space)
                    and v.f.zero_set() == v.z1
                    and v.g.zero_set() == v.z2
                    and is_subset(A, v.z1)
                    and is_subset(B, v.z2)
                    and is_empty_set(v.z1 & v.z2)
                ):
                    return _refuted(A=A, B=B, reason="witness pair does not cover")
            else:
                if is_finite_set(A) or is_finite_set(B):
                    return _refuted(A=A, B=B, reason="rejected although one side is finite")
                found = _cofinite_falsify(space, A, B, rng)
                if found:
                    return _refuted(A=A, B=B, f=found[0], g=found[1])
        return CONFIRMED

    def witness(rng):
        for _ in range(SEPARATION_SAMPLES):
            A, B = random_disjoint_pair(space, rng)
            v = fc_separated(A, B, space)
            if not v.separated:
                continue
            h = separation_witness(v.f, v.g)
            if not is_member(h, space):
                return _refuted(A=A, B=B, h=h, reason="h not a member")
            Zf, Zg = v.f.zero_set(), v.g.zero_set()
            for x in space.probe_points(h, v.f, v.g):
                hx = h(x)
                if not 0 <= hx <= 1 or (hx == 0) != (x in Zf) or (hx == 1) != (x in Zg):
                    return _refuted(A=A, B=B, h=h, point=x)
                if (x in A and hx != 0) or (x in B and hx != 1):
                    return _refuted(A=A, B=B, h=h, point=x)
        return CONFIRMED

    def removal(rng):
        for _ in range(SEPARATION_SAMPLES):
            A, B = random_disjoint_pair(space, rng)
            if not fc_separated(A, B, space).separated:
                continue
            r = separated_after_removal(A, B, space)
            if not r.cs:
                return _refuted(A=A, B=B, F=r.F)
        return CONFIRMED

    def zero_set_pairs(rng):
        tested = 0
        for _ in range(SEPARATION_SAMPLES):
            f = random_member(space, rng)
            Zf = f.zero_set()
            # a zero set disjoint from Z(f): some B ⊆ COZ(f) with 1_{X∖B} a member
            B = random_set(space, rng) & space.complement(Zf)
            g = indicator(space, space.complement(B))
            if not is_member(g, space):
                continue
            tested += 1
            if not fc_separated(Zf, g.zero_set(), space).separated:
                return _refuted(Z1=Zf, Z2=g.zero_set())
        return Outcome(Status.CONFIRMED, {"pairs": tested})

    checks = [
        Check("separation.decider" + sfx, "A, B separated ⇔ contained in disjoint zero sets of members", "separation", decider),
        Check("separation.witness" + sfx, "h = f²/(f² + g²): 0 ≤ h ≤ 1, h⁻¹(0) = Z(f), h⁻¹(1) = Z(g)", "separation", witness),
        Check("separation.removal" + sfx, "A ∖ F, B ∖ F completely separated in X ∖ F for finite F", "separation", removal),
        Check("separation.zero_set_pairs" + sfx, "disjoint zero sets are separated", "separation", zero_set_pairs),
    ]
    if space.kind is SpaceKind.COFINITE_N:

        def evens_odds(rng):
            v = fc_separated(UPSet.evens(), UPSet.odds(), space)
            return _refuted(z1=v.z1, z2=v.z2) if v.separated else Outcome(Status.CONFIRMED, {"separated": False})

        checks.append(Check("separation.evens_odds.cofinite_n", "evens and odds are not separated in cofinite ℕ", "separation", evens_odds))
    return checks


def _ideal_checks(n: int) -> list:
    sfx = f".n{n}"
    ideals = proper_ideals(n)
    full = frozenset(range(n))

    def basis_vectors():
        return [(f, f.values) for f in value_basis(n)]

    def filters(rng):
        c = enumerate_filters_and_ideals(n)
        ok = c.filter_count == 2**n - 1 and c.ultrafilter_count == n and c.bijective
        w = {"filters": c.filter_count, "ultrafilters": c.ultrafilter_count, "bijective": c.bijective}
        return Outcome(Status.CONFIRMED, w) if ok else Outcome(Status.REFUTED, w)

    def galois(rng):
        for I in ideals:
            if filter_ideal_galois("Zinv_of", filter_ideal_galois("Z_of", I)) != I:
                return _refuted(ideal=repr(I))
        for A in all_subsets(n):
            if A:
                F = FilterDesc(n, A)
                if filter_ideal_galois("Z_of", filter_ideal_galois("Zinv_of", F)) != F:
                    return _refuted(filter_base=A)
        return CONFIRMED

    def predicate_check(pred, label):
        def run(rng):
            for I in ideals:
                if not pred(I, ideal_predicates(I)):
                    return _refuted(ideal=repr(I), predicates=ideal_predicates(I).to_json())
            return CONFIRMED

        return run

    def prime_equivalents(rng):
        for I in ideals:
            t = prime_equivalents_check(I)
            if not t.agree or t.is_prime != (len(I.vanishing) == 1):
                return _refuted(table=t.to_json())
        return CONFIRMED

    def members_of(I, vecs):
        return frozenset(v for _, v in vecs if all(v[i] == 0 for i in I.vanishing))

    def gelfand(rng):
        vecs = basis_vectors()
        maxes = [I for I in ideals if ideal_predicates(I).maximal]
        for P in (I for I in ideals if ideal_predicates(I).prime):
            above = [M for M in maxes if members_of(P, vecs) <= members_of(M, vecs)]
            if len(above) != 1:
                return _refuted(prime=repr(P), maximal_above=[repr(M) for M in above])
        return CONFIRMED

    def sums(rng):
        basis = value_basis(n)
        for I in ideals:
            for J in ideals:
                S = sum_ideals(I, J)
                if S.vanishing != I.vanishing & J.vanishing:
                    return _refuted(I=repr(I), J=repr(J), sum=repr(S))
                for h in basis:
                    if h in S:
                        k, l = sum_decomposition(h, I, J)
                        if not (k in I and l in J and k + l == h):
                            return _refuted(I=repr(I), J=repr(J), h=h)
                    elif h in I or h in J:
                        return _refuted(I=repr(I), J=repr(J), h=h, reason="summand outside the sum")
        return CONFIRMED

    def ann_members(I, vecs):
        mem = [v for v in members_of(I, vecs)]
        return frozenset(w for _, w in vecs if all(all(a * b == 0 for a, b in zip(v, w)) for v in mem))

    def annihilators(rng):
        vecs = basis_vectors()
        for I in ideals:
            ann = annihilator(I)
            if ann.vanishing != full - I.vanishing or ann_members(I, vecs) != members_of(ann, vecs):
                return _refuted(ideal=repr(I), annihilator=repr(ann))
        return CONFIRMED

    def ann_monotone(rng):
        vecs = basis_vectors()
        ann = {I: ann_members(I, vecs) for I in ideals}
        for I in ideals:
            for J in ideals:
                if (ann[I] <= ann[J]) != (I.vanishing <= J.vanishing):
                    return _refuted(I=repr(I), J=repr(J))
        return CONFIRMED

    def socle_j1(rng):
        space = finite(n)
        for f in value_basis(n):
            if not socle_membership(f, space) or not j1_membership(f, space).member:
                return _refuted(f=f)
        return CONFIRMED

    def idempotents(rng):
        space = finite(n)
        for x in range(n):
            M = IdealDesc(n, {x})
            e = idempotent_generator(M)
            if e * e != e or not (e * chi(space, x)).is_zero() or ideal_from_generators([e], n) != M:
                return _refuted(point=x, e=e)
            if any(f * e != f for f in value_basis(n) if f in M):
                return _refuted(point=x, e=e, reason="f ∈ M with f·e ≠ f")
        return CONFIRMED

    def structure(rng):
        r = structure_space_report(n)
        ok = (
            len(r.max_ideals) == n
            and r.discrete
            and r.closures_trace_correctly
            and r.homeomorphism
            and all(good for _, good in r.gk_table)
        )
        return CONFIRMED if ok else Outcome(Status.REFUTED, r.to_json())

    def zero_set_family(rng):
        for I in ideals:
            fam = zero_sets_of(I)
            if fam != frozenset(Z for Z in all_subsets(n) if I.vanishing <= Z):
                return _refuted(ideal=repr(I))
        return CONFIRMED

    single = lambda I: len(I.vanishing) == 1  # noqa: E731
    return [
        Check("ideals.filters" + sfx, "filters ↔ nonempty A ⊆ X; ultrafilters ↔ points; M ↦ Z[M] bijective", "ideals", filters),
        Check("ideals.galois" + sfx, "Z⁻¹Z[I] = I and ZZ⁻¹[F] = F", "ideals", galois),
        Check("ideals.zero_sets" + sfx, "Z[M_A] = {Z : A ⊆ Z}", "ideals", zero_set_family),
        Check("ideals.zc_ideal" + sfx, "Z(f) ⊆ Z(g), f ∈ I ⇒ g ∈ I", "ideals", predicate_check(lambda I, p: p.zc_ideal, "zc")),
        Check("ideals.fixed" + sfx, "every proper ideal of a finite space is fixed", "ideals", predicate_check(lambda I, p: p.fixed and not p.free, "fixed")),
        Check("ideals.prime_maximal" + sfx, "prime ⇔ maximal ⇔ |A| = 1", "ideals", predicate_check(lambda I, p: p.prime == p.maximal == single(I), "prime")),
        Check("ideals.prime_equivalents" + sfx, "prime ⇔ contains a prime ⇔ fg = 0 ⇒ f ∈ I or g ∈ I ⇔ sign-constant on some Z ∈ Z[I]", "ideals", prime_equivalents),
        Check("ideals.gelfand" + sfx, "each prime lies in a unique maximal ideal", "ideals", gelfand),
        Check("ideals.sums" + sfx, "M_A + M_B = M_{A∩B}", "ideals", sums),
        Check("ideals.annihilator" + sfx, "Ann(M_A) = M_{X∖A} = M_{∪COZ[M_A]}", "ideals", annihilators),
        Check("ideals.ann_monotone" + sfx, "Ann(I) ⊆ Ann(J) ⇔ ∩Z[I] ⊆ ∩Z[J]", "ideals", ann_monotone),
        Check("ideals.essential_free" + sfx, "essential ⇔ free", "ideals", predicate_check(lambda I, p: p.essential == p.free, "essential")),
        Check("ideals.minimal" + sfx, "minimal ⇔ |Z[I]| = 2 ⇔ |A| = n − 1", "ideals", predicate_check(lambda I, p: p.minimal == (p.zero_set_count == 2) == (len(I.vanishing) == n - 1), "minimal")),
        Check("ideals.socle_j1" + sfx, "Soc = J₁ = whole ring over a finite space", "ideals", socle_j1),
        Check("ideals.idempotents" + sfx, "M_{x} = ⟨1 − χ_{x}⟩", "ideals", idempotents),
        Check("ideals.structure_space" + sfx, "Max is discrete and homeomorphic to X; M^p = M_{p}", "ideals", structure),
    ]


def _j1_members(space, rng):
    out = []
    for _ in range(J1_SAMPLES):
        if rng.random() < 0.3:
            # finite cozero set: zero tail (and zero at ∞)
            tr = tuple(random_value(rng) for _ in range(rng.randrange(5)))
            out.append(RingElem(space.carrier, tr, (0,), 0 if space.carrier.infinity else None))
        else:
            out.append(random_member(space, rng))
    return out


def _j1_check(name: str, space: SpaceModel) -> Check:
    def run(rng):
        for f in _j1_members(space, rng):
            v = j1_membership(f, space)
            if v.member != socle_membership(f, space):
                return _refuted(f=f, reason="J₁ verdict differs from the socle test")
            if v.member:
                for _ in range(5):
                    g = random_member(space, rng)
                    Z = (one(space) - f * g).zero_set()
                    if not Z.is_finite():
                        return _refuted(f=f, g=g)
            else:
                g = v.refuting_g
                if not is_member(g, space) or (one(space) - f * g).zero_set().is_finite():
                    return _refuted(f=f, g=g, reason="refutation does not give infinite Z(1 − fg)")
        return CONFIRMED

    return Check(f"ideals.j1.{name}", "f ∈ J₁ ⇔ COZ(f) finite", "ideals", run)


def _regularity_checks(name: str, space: SpaceModel) -> list:
    sfx = f".{name}"

    def witness(rng):
        for f in _sample_members(space, rng, REGULARITY_SAMPLES):
            g = regular_witness(f, space)
            if f * f * g != f or not is_member(g, space):
                return _refuted(f=f, g=g)
        return CONFIRMED

    expected_baer = space.kind is not SpaceKind.COFINITE_N

    def report(rng):
        r = space_regularity_report(space)
        ok = r.fcp and r.baer == expected_baer
        if not expected_baer:
            ok = ok and r.witness == UPSet.evens()
        return Outcome(Status.CONFIRMED if ok else Status.REFUTED, r.to_json())

    def clopen_decision(rng):
        for _ in range(RING_SAMPLES):
            A = random_set(space, rng)
            F = clopen_removal(space, A)
            if space.kind is SpaceKind.COFINITE_N:
                expect = is_finite_set(A) or A.naturals_part().is_cofinite()
                if (F is not None) != expect:
                    return _refuted(A=A, F=F)
                for G in (random_finite_set(space, rng) for _ in range(10)):
                    if is_clopen_in_subspace(space, A, G) and not expect:
                        return _refuted(A=A, F=G, reason="falsifier found a clopen removal")
            elif space.kind is SpaceKind.CONV_SEQ:
                if not is_clopen_in_subspace(space, A, {INF}):
                    return _refuted(A=A, F=frozenset({INF}))
            if F is not None and not is_clopen_in_subspace(space, A, F):
                return _refuted(A=A, F=F, reason="returned F does not work")
        return CONFIRMED

    def coz_idempotent(rng):
        for _ in range(REGULARITY_SAMPLES):
            A = random_set(space, rng)
            w = idempotent_coz_witness(space, A)
            if w.ok != is_member(indicator(space, A), space):
                return _refuted(A=A)
            if w.ok and (w.element * w.element != w.element or w.element.cozero_set() != A):
                return _refuted(A=A, e=w.element)
            if space.kind is SpaceKind.COFINITE_N and w.ok != (is_finite_set(A) or A.is_cofinite()):
                return _refuted(A=A, reason="idempotent exists for a set that is neither finite nor cofinite")
        return CONFIRMED

    def baer_link(rng):
        if expected_baer:
            for _ in range(SEPARATION_SAMPLES):
                A, B = random_disjoint_pair(space, rng)
                if not fc_separated(A, B, space).separated:
                    return _refuted(A=A, B=B)
            return CONFIRMED
        r = space_regularity_report(space)
        sep = fc_separated(UPSet.evens(), UPSet.odds(), space).separated
        if r.baer or sep:
            return _refuted(baer=r.baer, separated=sep)
        return CONFIRMED

    return [
        Check("regularity.witness" + sfx, "f²·f⋆ = f with f⋆ a member", "regularity", witness),
        Check("regularity.report" + sfx, "F_cP and Baer verdicts per model", "regularity", report),
        Check("regularity.clopen_decision" + sfx, "∃ finite F: A ∖ F clopen in X ∖ F, decided totally", "regularity", clopen_decision),
        Check("regularity.coz_idempotent" + sfx, "A = COZ(e) for an idempotent member e", "regularity", coz_idempotent),
        Check("regularity.baer_separation" + sfx, "Baer ⇔ every disjoint pair is separated", "regularity", baer_link),
    ]


def _finite_regularity_checks(n: int) -> list:
    sfx = f".n{n}"

    def triple(rng):
        for row in fcp_triple(n):
            if not (row.agree and row.regular):
                return _refuted(f=row.f, regular=row.regular, clopen=row.zero_set_clopen, pp=row.pp)
        return CONFIRMED

    def pp(rng):
        for f in value_basis(n):
            e = pp_annihilator_idempotent(f)
            if e * e != e or e != indicator(finite(n), f.zero_set()):
                return _refuted(f=f, e=e)
        return CONFIRMED

    return [
        Check("regularity.fcp_triple" + sfx, "regular ⇔ zero sets clopen after finite removal ⇔ PP", "regularity", triple),
        Check("regularity.pp" + sfx, "Ann(f) = ⟨e⟩ with e the indicator of Z(f)", "regularity", pp),
    ]


def _graph_checks(n: int) -> list:
    sfx = f".n{n}"
    cache = {}

    def graph():
        if "G" not in cache:
            G = zd.witness_graph(n, 2)
            cache["G"] = (G, zd.graph_oracle_metrics(G))
        return cache["G"]

    full = (1 << n) - 1

    def structure(rng):
        G, _ = graph()
        space = finite(n)
        if G.order != 2 * (2**n - 2):
            return _refuted(order=G.order)
        for i, u in enumerate(G.vertices):
            if classify(u, space).kind is not Kind.ZERO_DIVISOR:
                return _refuted(vertex=u)
            for j in range(i + 1, G.order):
                v = G.vertices[j]
                prod_zero = (u * v).is_zero()
                if prod_zero != (j in G.adj[i]) or prod_zero != (G.classes[i] | G.classes[j] == full):
                    return _refuted(u=u, v=v)
                if G.classes[i] == G.classes[j] and prod_zero:
                    return _refuted(u=u, v=v, reason="edge inside a class")
        return CONFIRMED

    def oracle(rng):
        G, m = graph()
        bad = zd.oracle_mismatches(G, m)
        if bad:
            return Outcome(Status.REFUTED, [b.to_json() for b in bad[:10]])
        return Outcome(Status.CONFIRMED, {"vertices": G.order, "pairs": G.order * (G.order - 1) // 2})

    def distance_props(rng):
        G, m = graph()
        for i in range(G.order):
            for j in range(i + 1, G.order):
                u, v = G.vertices[i], G.vertices[j]
                d = zd.distance_closed(u, v, n)
                if d not in (1, 2, 3) or d != zd.distance_closed(v, u, n) or m.dist[i][j] != m.dist[j][i]:
                    return _refuted(u=u, v=v, d=d)
                if (d == 1) != (j in G.adj[i]):
                    return _refuted(u=u, v=v, reason="d = 1 without adjacency")
        return CONFIRMED

    def common_neighbor(rng):
        G, _ = graph()
        for i in range(G.order):
            for j in range(i + 1, G.order):
                if bool(G.adj[i] & G.adj[j]) != bool(G.classes[i] & G.classes[j]):
                    return _refuted(u=G.vertices[i], v=G.vertices[j])
        return CONFIRMED

    def constant_metric(attr, expected):
        def run(rng):
            _, m = graph()
            got = getattr(m, attr)
            w = {attr: got, "expected": expected}
            return Outcome(Status.CONFIRMED if got == expected else Status.REFUTED, w)

        return run

    def girth(rng):
        G, m = graph()
        if n >= 3:
            return Outcome(Status.CONFIRMED if m.girth == 3 else Status.REFUTED, {"girth": m.girth, "expected": 3})
        if m.girth == math.inf:
            return Outcome(Status.CONFIRMED, {"girth": m.girth})
        # the 4-cycle f, g, 2f, 2g
        cycle = [G.label(i) for i in (0, 2, 1, 3)]
        return Outcome(Status.REFUTED_CLAIM, {"oracle_girth": m.girth, "claimed": math.inf, "cycle": cycle})

    def triangles(rng):
        G, _ = graph()
        space = finite(n)
        for i, u in enumerate(G.vertices):
            if zd.triangle_predicates("vertex", u, n=n) != zd.triangle_oracle_vertex(G, i):
                return _refuted(vertex=u)
            for j in G.adj[i]:
                if j > i and zd.triangle_predicates("edge", u, G.vertices[j], n) != zd.triangle_oracle_edge(G, i, j):
                    return _refuted(u=u, v=G.vertices[j])
                if j > i and not G.classes[i] & G.classes[j] and zd.triangle_oracle_edge(G, i, j):
                    return _refuted(u=u, v=G.vertices[j], reason="edge with disjoint zero sets in a triangle")
        for x in range(n):
            f = one(space) - chi(space, x)
            if zd.triangle_predicates("vertex", f, n=n):
                return _refuted(vertex=f)
        c0, f0 = chi(space, 0), one(space) - chi(space, 0)
        if zd.triangle_predicates("edge", c0, f0, n) or not zd.triangle_predicates("vertex", c0, n=n):
            return _refuted(chi0=c0)
        return CONFIRMED

    def monotone(rng):
        G, m = graph()
        G3 = zd.witness_graph(n, 3)
        idx3 = {v: k for k, v in enumerate(G3.vertices)}
        for i in range(G.order):
            d3 = zd.bfs_distances(G3, idx3[G.vertices[i]])
            for j in range(G.order):
                if d3[idx3[G.vertices[j]]] != m.dist[i][j]:
                    return _refuted(u=G.vertices[i], v=G.vertices[j])
        return CONFIRMED

    checks = [
        Check("graph.structure" + sfx, "f ~ g ⇔ fg = 0 ⇔ Z(f) ∪ Z(g) = X", "graph", structure),
        Check("graph.oracle_agreement" + sfx, "closed-form distance, eccentricity and cycle length = oracle", "graph", oracle),
        Check("graph.distance" + sfx, "d ∈ {1, 2, 3}, symmetric, d = 1 ⇔ adjacent", "graph", distance_props),
        Check("graph.common_neighbor" + sfx, "common neighbour ⇔ Z(f) ∩ Z(g) ≠ ∅", "graph", common_neighbor),
        Check("graph.diameter" + sfx, "diam = 3 for |X| ≥ 3, 2 for |X| = 2", "graph", constant_metric("diameter", 3 if n >= 3 else 2)),
        Check("graph.girth" + sfx, "gr = 3 for |X| ≥ 3, ∞ for |X| = 2", "graph", girth),
        Check("graph.radius" + sfx, "radius = 2", "graph", constant_metric("radius", 2)),
        Check("graph.monotonicity" + sfx, "a third representative per class changes no distance", "graph", monotone),
    ]
    if n >= 3:
        checks.append(Check("graph.triangles" + sfx, "not triangulated, not hyper-triangulated", "graph", triangles))
    return checks


def _discreteness_checks(name: str, space: SpaceModel) -> Check:
    def run(rng):
        if space.is_discrete:
            for f in (random_function(space, rng) for _ in range(DISCRETENESS_SAMPLES)):
                if is_member(f, space, "FcX") != is_member(f, space, "Cc"):
                    return _refuted(f=f)
            return Outcome(Status.CONFIRMED, {"samples": DISCRETENESS_SAMPLES, "agree": True})
        x = INF if space.kind is SpaceKind.CONV_SEQ else 0
        w = chi(space, x)
        if is_member(w, space, "FcX") and not is_member(w, space, "Cc"):
            return Outcome(Status.CONFIRMED, {"agree": False, "witness": f"chi({encode_point(x)})"})
        return _refuted(witness=w)

    return Check(f"sections5.discreteness.{name}", "C_c(X)_F = C_c(X) ⇔ X discrete", "sections5", run)


def _kernel_check() -> Check:
    def run(rng):
        finding = restriction_kernel_probe()
        if finding.injective:
            return Outcome(Status.CONFIRMED, finding.to_json())
        return Outcome(Status.REFUTED_CLAIM, finding.to_json())

    return Check("sections5.restriction_kernel", "f ↦ f|_Y is injective for Y = X ∖ {∞}", "sections5", run)


def build_checks(config: VerifyConfig) -> list:
    spaces = [(m, model_space(m, config.max_n)) for m in config.models]
    countable = [(m, s) for m, s in spaces if not s.is_finite]
    checks = []
    for suite in config.suites:
        if suite == "zerosets":
            for m, s in spaces:
                checks += _zero_set_checks(m, s)
        elif suite == "separation":
            for m, s in spaces:
                checks += _separation_checks(m, s)
        elif suite == "ideals":
            for n in range(1, config.max_n + 1):
                checks += _ideal_checks(n)
            checks += [_j1_check(m, s) for m, s in countable]
        elif suite == "regularity":
            for m, s in spaces:
                checks += _regularity_checks(m, s)
            for n in range(1, min(config.max_n, TRIPLE_MAX_N) + 1):
                checks += _finite_regularity_checks(n)
        elif suite == "graph":
            for n in range(2, config.max_n + 1):
                checks += _graph_checks(n)
            if config.max_n < 2:

                def skipped(rng):
                    return Outcome(Status.SKIPPED, {"reason": "the zero-divisor graph needs n ≥ 2"})

                checks.append(Check("graph.skipped", "zero-divisor graph checks", "graph", skipped))
        elif suite == "sections5":
            checks += [_discreteness_checks(m, s) for m, s in spaces]
            checks.append(_kernel_check())
    ids = [c.check_id for c in checks]
    if len(ids) != len(set(ids)):
        raise AssertionError("duplicate check ids")
    return sorted(checks, key=lambda c: c.check_id)


def run_check(check: Check, seed: int) -> Outcome:
    rng = random.Random(f"{seed}:{check.check_id}")
    try:
        return check.run(rng)
    except (FcxError, AssertionError, ArithmeticError) as e:
        return _refuted(error=f"{type(e).__name__}: {e}")


def run_verify_suite(config, timings: bool = False) -> dict:
    if isinstance(config, dict):
        config = VerifyConfig.from_dict(config)
    rows = []
    for check in build_checks(config):
        t0 = time.perf_counter()
        outcome = run_check(check, config.seed)
        row = {"check_id": check.check_id, "paper_ref": check.claim, "status": outcome.status.value}
        if outcome.witness is not None:
            row["witness"] = jsonable(outcome.witness)
        if timings:
            row["runtime_ms"] = round((time.perf_counter() - t0) * 1000, 3)
        rows.append(row)
    summary = {s.value: sum(r["status"] == s.value for r in rows) for s in Status}
    summary["total"] = len(rows)
    return {
        "schema_version": SCHEMA_VERSION,
        "config": config.to_json(),
        "relativization": RELATIVIZATION,
        "checks": rows,
        "summary": summary,
    }


def exit_code(report: dict) -> int:
    """0 unless an asserted invariant was refuted."""
    return 1 if report["summary"][Status.REFUTED.value] else 0
