"""Ideals and (Z_c)_F-filters of C_c(X)_F over Finite(n), plus socle and J₁.

Over ``Finite(n)`` the ring is ℚⁿ, a finite product of fields, and every
ideal is ``M_A = {f : A ⊆ Z(f)}`` for exactly one ``A ⊆ X``.  Ideals are
stored by their vanishing set; ``A = ∅`` is the whole ring.

Predicates are evaluated by brute force over a finite *value basis*
(all vectors with entries in a small value set) rather than read off the
vanishing set, so every structural claim is checked against the ring itself.
Membership in ``M_A`` depends only on zero sets, and products only on
pointwise values, so the sign basis ``{-1, 0, 1}ⁿ`` realizes every zero-set
and sign pattern.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .errors import EmptyGeneratorList, ImproperIdeal, NotMaximal, TooLarge
from .ring import RingElem, constant, from_values, indicator, require_member
from .spaces import SpaceModel, UPSet, finite

MAX_ENUMERATION_N = 5
SIGN_VALUES = (-1, 0, 1)


# descriptors -------------------------------------------------------------------


@dataclass(frozen=True)
class IdealDesc:
    """``M_A`` over ``Finite(n)``; ``vanishing = ∅`` is the improper ideal."""

    n: int
    vanishing: frozenset

    def __post_init__(self):
        object.__setattr__(self, "vanishing", frozenset(self.vanishing))
        if not self.vanishing <= frozenset(range(self.n)):
            raise ValueError(f"vanishing set {set(self.vanishing)} outside Finite({self.n})")

    @property
    def improper(self) -> bool:
        return not self.vanishing

    @property
    def is_zero(self) -> bool:
        return len(self.vanishing) == self.n

    def __contains__(self, f: RingElem) -> bool:
        return self.vanishing <= f.zero_set()

    def __repr__(self):
        return f"M_{{{','.join(map(str, sorted(self.vanishing)))}}}"


@dataclass(frozen=True)
class FilterDesc:
    """The principal (Z_c)_F-filter ``{Z : base ⊆ Z}`` over ``Finite(n)``."""

    n: int
    base: frozenset

    def __post_init__(self):
        object.__setattr__(self, "base", frozenset(self.base))
        if not self.base:
            raise ImproperIdeal("a filter base must be non-empty (∅ cannot belong to a filter)")

    def __contains__(self, Z) -> bool:
        return self.base <= frozenset(Z)


# value bases and masks --------------------------------------------------------------


def _mask(points) -> int:
    m = 0
    for i in points:
        m |= 1 << i
    return m


def _points(mask: int) -> frozenset:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def _zmask(vec) -> int:
    m = 0
    for i, v in enumerate(vec):
        if v == 0:
            m |= 1 << i
    return m


def value_basis(n: int, values: Sequence = SIGN_VALUES) -> list:
    """Every element of ℚⁿ with entries in ``values``."""
    return [from_values(v) for v in itertools.product(values, repeat=n)]


def all_subsets(n: int) -> list:
    return [_points(m) for m in range(1 << n)]


def proper_ideals(n: int) -> list:
    return [IdealDesc(n, _points(m)) for m in range(1, 1 << n)]


def _check_n(n: int) -> None:
    if n < 1:
        raise TooLarge(f"n must be at least 1, got {n}")
    if n > MAX_ENUMERATION_N:
        raise TooLarge(f"exhaustive enumeration limited to n <= {MAX_ENUMERATION_N}")


def _require_proper(I: IdealDesc) -> None:
    if I.improper:
        raise ImproperIdeal("the whole ring is not a proper ideal")


@dataclass
class _Census:
    """Brute-force facts about ℚⁿ over the sign basis, shared per n."""

    n: int
    vectors: list
    zmasks: list
    #: distinct (Z(f), Z(g), Z(fg)) mask triples over all basis pairs
    product_triples: frozenset
    #: distinct (Z(f), Z(g)) over pairs with f·g = 0
    annihilating_pairs: frozenset
    #: basis indices that are members, keyed by vanishing mask
    members: dict = field(default_factory=dict)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def member_set(self, A_mask: int) -> frozenset:
        got = self.members.get(A_mask)
        if got is None:
            got = frozenset(i for i, z in enumerate(self.zmasks) if A_mask & ~z == 0)
            self.members[A_mask] = got
        return got


@lru_cache(maxsize=None)
def _census(n: int) -> _Census:
    vectors = list(itertools.product(SIGN_VALUES, repeat=n))
    zmasks = [_zmask(v) for v in vectors]
    triples = set()
    ann = set()
    full = (1 << n) - 1
    for i, u in enumerate(vectors):
        for j, w in enumerate(vectors):
            pm = _zmask([a * b for a, b in zip(u, w)])
            triples.add((zmasks[i], zmasks[j], pm))
            if pm == full:
                ann.add((zmasks[i], zmasks[j]))
    return _Census(n, vectors, zmasks, frozenset(triples), frozenset(ann))


def _in(A_mask: int, z: int) -> bool:
    return A_mask & ~z == 0


# generated ideals and the Galois correspondence ------------------------------------------


def generated_basis(fns: Sequence[RingElem], n: int) -> frozenset:
    """Points i whose unit vector e_i lies in ⟨fns⟩, each by explicit combination.

    e_i = (1/f(i))·e_i·f whenever some generator has f(i) ≠ 0; otherwise every
    element of ⟨fns⟩ vanishes at i.  The returned set is ``X \\ ∩Z(fᵢ)``.
    """
    space = finite(n)
    got = set()
    for i in range(n):
        e = indicator(space, {i})
        for f in fns:
            if f(i) != 0:
                combo = e * f * (1 / f(i))
                if combo == e:
                    got.add(i)
                break
    return frozenset(got)


def ideal_from_generators(fns: Sequence[RingElem], n: int) -> IdealDesc:
    fns = list(fns)
    if not fns:
        raise EmptyGeneratorList("an ideal needs at least one generator")
    space = finite(n)
    for f in fns:
        require_member(f, space)
    A = frozenset(range(n))
    for f in fns:
        A &= f.zero_set()
    if generated_basis(fns, n) != frozenset(range(n)) - A:
        raise AssertionError("generated ideal disagrees with its vanishing set")
    return IdealDesc(n, A)


def zero_sets_of(I: IdealDesc) -> frozenset:
    """``Z[I]`` computed over the sign basis."""
    c = _census(I.n)
    A = _mask(I.vanishing)
    return frozenset(_points(c.zmasks[i]) for i in c.member_set(A))


def ideal_of_filter(flt: FilterDesc) -> frozenset:
    """``Z⁻¹[F]``: basis indices whose zero set lies in the filter."""
    c = _census(flt.n)
    return frozenset(i for i, z in enumerate(c.zmasks) if flt.base <= _points(z))


def filter_ideal_galois(dir: str, x):
    """``Z_of``: ideal → filter ``Z[I]``;  ``Zinv_of``: filter → ideal ``Z⁻¹[F]``."""
    if dir == "Z_of":
        _require_proper(x)
        family = zero_sets_of(x)
        base = frozenset.intersection(*family)
        flt = FilterDesc(x.n, base)
        if family != frozenset(Z for Z in all_subsets(x.n) if Z in flt):
            raise AssertionError("Z[I] is not the principal filter on ∩Z[I]")
        return flt
    if dir == "Zinv_of":
        if not isinstance(x, FilterDesc):
            raise TypeError("Zinv_of expects a FilterDesc")
        c = _census(x.n)
        members = ideal_of_filter(x)
        # the vanishing set of the ideal is the common zero set of its members
        A = c.full
        for i in members:
            A &= c.zmasks[i]
        I = IdealDesc(x.n, _points(A))
        if c.member_set(A) != members:
            raise AssertionError("Z⁻¹[F] is not of the form M_A")
        return I
    raise ValueError(f"dir must be 'Z_of' or 'Zinv_of', got {dir!r}")


# filters by exhaustive enumeration ---------------------------------------------------


def _up_sets(n: int) -> list:
    """All upward-closed families of subsets of an n-set, as mask frozensets."""
    order = sorted(range(1 << n), key=lambda m: -bin(m).count("1"))
    supers = {m: [m | (1 << b) for b in range(n) if not m >> b & 1] for m in order}
    out = []

    def walk(k: int, chosen: set) -> None:
        if k == len(order):
            out.append(frozenset(chosen))
            return
        m = order[k]
        walk(k + 1, chosen)
        if all(s in chosen for s in supers[m]):
            chosen.add(m)
            walk(k + 1, chosen)
            chosen.discard(m)

    walk(0, set())
    return out


def _is_filter(family: frozenset) -> bool:
    if not family or 0 in family:
        return False
    # upward closure makes it enough to intersect minimal members
    minimal = [m for m in family if not any(o != m and o & m == o for o in family)]
    return all((a & b) in family for a in minimal for b in minimal)


@dataclass(frozen=True)
class FilterCensus:
    n: int
    filters: tuple
    ultrafilters: tuple
    #: (x, ultrafilter Z[M_x]) per maximal ideal M_x
    bijection: tuple
    bijective: bool
    filter_bases: tuple

    @property
    def filter_count(self) -> int:
        return len(self.filters)

    @property
    def ultrafilter_count(self) -> int:
        return len(self.ultrafilters)


@lru_cache(maxsize=None)
def enumerate_filters_and_ideals(n: int) -> FilterCensus:
    """Count (Z_c)_F-filters and ultrafilters by enumerating all families of zero sets.

    Over ``Finite(n)`` every subset is a zero set, so the candidate families
    are the upward-closed families of subsets.
    """
    _check_n(n)
    filters = [f for f in _up_sets(n) if _is_filter(f)]
    ultra = [f for f in filters if not any(f < g for g in filters)]
    bases = []
    for f in filters:
        inter = (1 << n) - 1
        for m in f:
            inter &= m
        bases.append(_points(inter))
    rows = []
    for x in range(n):
        Z = frozenset(_mask(z) for z in zero_sets_of(IdealDesc(n, {x})))
        rows.append((x, Z))
    images = [Z for _, Z in rows]
    bijective = all(Z in ultra for Z in images) and len(set(images)) == len(ultra)
    return FilterCensus(
        n,
        tuple(frozenset(_points(m) for m in f) for f in filters),
        tuple(frozenset(_points(m) for m in f) for f in ultra),
        tuple((x, frozenset(_points(m) for m in Z)) for x, Z in rows),
        bijective,
        tuple(bases),
    )


# predicates ----------------------------------------------------------------------


@dataclass(frozen=True)
class IdealPredicates:
    ideal: IdealDesc
    fixed: bool
    free: bool
    zc_ideal: bool
    z0_ideal: bool
    prime: bool
    maximal: bool
    essential: bool
    minimal: bool
    #: |Z[I]|
    zero_set_count: int

    def to_json(self) -> dict:
        return {
            "vanishing": sorted(self.ideal.vanishing),
            "fixed": self.fixed,
            "free": self.free,
            "zc_ideal": self.zc_ideal,
            "z0_ideal": self.z0_ideal,
            "prime": self.prime,
            "maximal": self.maximal,
            "essential": self.essential,
            "minimal": self.minimal,
            "zero_set_count": self.zero_set_count,
        }


def _prime(c: _Census, A: int) -> bool:
    if A == 0:
        return False
    return all(_in(A, zi) or _in(A, zj) for zi, zj, zp in c.product_triples if _in(A, zp))


def _fg_zero_condition(c: _Census, A: int) -> bool:
    return all(_in(A, zi) or _in(A, zj) for zi, zj in c.annihilating_pairs)


def _annihilator_members(c: _Census, members: frozenset) -> frozenset:
    out = []
    for j, w in enumerate(c.vectors):
        if all(all(a * b == 0 for a, b in zip(c.vectors[i], w)) for i in members):
            out.append(j)
    return frozenset(out)


@lru_cache(maxsize=None)
def _predicate_table(n: int) -> dict:
    _check_n(n)
    c = _census(n)
    ideals = [_mask(I.vanishing) for I in proper_ideals(n)] + [0]
    member = {A: c.member_set(A) for A in ideals}
    zero_vec = next(i for i, v in enumerate(c.vectors) if not any(v))
    primes = [A for A in ideals if _prime(c, A)]
    minimal_primes = [P for P in primes if not any(member[Q] < member[P] for Q in primes)]
    table = {}
    for A in ideals:
        if A == 0:
            continue
        mem = member[A]
        zsets = {c.zmasks[i] for i in mem}
        common = c.full
        for z in zsets:
            common &= z
        zc = all(_in(A, zg) for i in mem for zg in c.zmasks if c.zmasks[i] & ~zg == 0)
        z0 = True
        for i in mem:
            over = [P for P in minimal_primes if i in member[P]]
            pa = frozenset.intersection(*(member[P] for P in over)) if over else member[0]
            if not pa <= mem:
                z0 = False
                break
        proper_others = [B for B in ideals if B != 0]
        maximal = not any(mem < member[B] for B in proper_others)
        nonzero = mem != {zero_vec}
        minimal = nonzero and not any(
            member[B] < mem and member[B] != {zero_vec} for B in ideals
        )
        ann = _annihilator_members(c, mem)
        table[A] = IdealPredicates(
            ideal=IdealDesc(n, _points(A)),
            fixed=common != 0,
            free=common == 0,
            zc_ideal=zc,
            z0_ideal=z0,
            prime=_prime(c, A),
            maximal=maximal,
            essential=ann == {zero_vec},
            minimal=minimal,
            zero_set_count=len(zsets),
        )
    return table


def ideal_predicates(I: IdealDesc, n: Optional[int] = None) -> IdealPredicates:
    n = I.n if n is None else n
    _require_proper(I)
    return _predicate_table(n)[_mask(I.vanishing)]


@dataclass(frozen=True)
class PrimeTable:
    ideal: IdealDesc
    is_prime: bool
    contains_prime: bool
    fg_zero_condition: bool
    sign_constant: bool

    @property
    def agree(self) -> bool:
        return len({self.is_prime, self.contains_prime, self.fg_zero_condition, self.sign_constant}) == 1

    def to_json(self) -> dict:
        return {
            "vanishing": sorted(self.ideal.vanishing),
            "prime": self.is_prime,
            "contains_prime": self.contains_prime,
            "fg_zero_condition": self.fg_zero_condition,
            "sign_constant_on_some_zero_set": self.sign_constant,
            "agree": self.agree,
        }


def _keeps_sign(vec, Z: int) -> bool:
    vals = [v for i, v in enumerate(vec) if Z >> i & 1]
    return all(v >= 0 for v in vals) or all(v <= 0 for v in vals)


def prime_equivalents_check(I: IdealDesc, n: Optional[int] = None) -> PrimeTable:
    """The four prime-ideal conditions for a z-ideal, each by brute force."""
    n = I.n if n is None else n
    _require_proper(I)
    c = _census(n)
    A = _mask(I.vanishing)
    mem = c.member_set(A)
    primes = [B for B in range(1, 1 << n) if _prime(c, B)]
    contains_prime = any(c.member_set(B) <= mem for B in primes)
    zsets = {c.zmasks[i] for i in mem}
    sign_constant = all(any(_keeps_sign(v, Z) for Z in zsets) for v in c.vectors)
    return PrimeTable(I, _prime(c, A), contains_prime, _fg_zero_condition(c, A), sign_constant)


# sums, annihilators, socle ---------------------------------------------------------


def sum_ideals(I: IdealDesc, J: IdealDesc) -> IdealDesc:
    """``M_A + M_B = M_{A∩B}``; an empty intersection gives the whole ring."""
    if I.n != J.n:
        raise ValueError("ideals over different spaces")
    return IdealDesc(I.n, I.vanishing & J.vanishing)


def sum_decomposition(h: RingElem, I: IdealDesc, J: IdealDesc):
    """Split ``h ∈ M_{A∩B}`` as ``k + l`` with ``k ∈ I`` and ``l ∈ J``.

    With f vanishing exactly on A and g exactly on B, take
    k = h·f²/(f²+g²) and l = h·g²/(f²+g²) where f²+g² ≠ 0, and 0 on A∩B.
    """
    n = I.n
    space = finite(n)
    f = indicator(space, frozenset(range(n)) - I.vanishing)
    g = indicator(space, frozenset(range(n)) - J.vanishing)
    d = f * f + g * g
    k = from_values(
        h(x) * f(x) ** 2 / d(x) if d(x) else 0 for x in range(n)
    )
    l = from_values(
        h(x) * g(x) ** 2 / d(x) if d(x) else 0 for x in range(n)
    )
    return k, l


def annihilator(S, n: Optional[int] = None) -> IdealDesc:
    """``Ann(S) = M_{∪COZ[S]}`` for an ideal or a list of elements."""
    if isinstance(S, IdealDesc):
        n = S.n
        return IdealDesc(n, frozenset(range(n)) - S.vanishing)
    S = list(S)
    if not S:
        raise EmptyGeneratorList("annihilator of an empty list")
    n = S[0].carrier.size if n is None else n
    coz = frozenset()
    for f in S:
        coz |= f.cozero_set()
    return IdealDesc(n, coz)


def annihilator_contains_brute(S: Sequence[RingElem], g: RingElem) -> bool:
    return all((f * g).is_zero() for f in S)


def socle_membership(f: RingElem, space: SpaceModel) -> bool:
    """f is in the socle iff it vanishes off a finite set."""
    require_member(f, space)
    coz = f.cozero_set()
    return coz.is_finite() if isinstance(coz, UPSet) else True


def idempotent_generator(M: IdealDesc, n: Optional[int] = None) -> RingElem:
    """``1 − χ_{x}``, the idempotent generating the maximal ideal ``M_{x}``."""
    n = M.n if n is None else n
    if len(M.vanishing) != 1:
        raise NotMaximal(f"{M!r} is not a maximal ideal")
    space = finite(n)
    return constant(space, 1) - indicator(space, M.vanishing)


def principal_ideal_contains(e: RingElem, f: RingElem) -> bool:
    """Whether f ∈ ⟨e⟩ for an idempotent e, i.e. f·e = f."""
    return f * e == f


# J₁ ---------------------------------------------------------------------------


@dataclass(frozen=True)
class J1Verdict:
    member: bool
    refuting_g: Optional[RingElem] = None


def j1_membership(f: RingElem, space: SpaceModel) -> J1Verdict:
    """Decide f ∈ J₁ = {f : Z(1 − fg) is finite for every g}.

    If COZ(f) is finite then Z(1 − fg) ⊆ COZ(f) for every g.  Otherwise the
    member g = 1/f on COZ(f), 0 on Z(f) gives Z(1 − fg) = COZ(f), infinite.
    """
    require_member(f, space)
    coz = f.cozero_set()
    if not isinstance(coz, UPSet) or coz.is_finite():
        return J1Verdict(True)
    g = f.map(lambda v: 1 / v if v else v)
    require_member(g, space)
    return J1Verdict(False, g)


# structure space ---------------------------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    n: int
    max_ideals: tuple
    #: (S, hull-kernel closure of S) for every subset S of Max, as point sets
    closure_table: tuple
    discrete: bool
    #: (p, M^p equals M_{p}) for every ultrafilter point p
    gk_table: tuple
    closures_trace_correctly: bool
    homeomorphism: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "max_ideals": [sorted(M.vanishing) for M in self.max_ideals],
            "closure_table": [[sorted(S), sorted(C)] for S, C in self.closure_table],
            "discrete": self.discrete,
            "gk_table": [[p, ok] for p, ok in self.gk_table],
            "closures_trace_correctly": self.closures_trace_correctly,
            "homeomorphism": self.homeomorphism,
        }


def structure_space_report(n: int) -> StructureReport:
    _check_n(n)
    c = _census(n)
    table = _predicate_table(n)
    maxes = sorted((A for A, p in table.items() if p.maximal), key=lambda m: sorted(_points(m)))
    max_points = {A: min(_points(A)) for A in maxes}
    closure_rows = []
    discrete = True
    for k in range(1 << len(maxes)):
        S = [maxes[i] for i in range(len(maxes)) if k >> i & 1]
        kernel = frozenset(range(len(c.vectors)))
        for A in S:
            kernel &= c.member_set(A)
        closure = [A for A in maxes if kernel <= c.member_set(A)]
        s_pts = frozenset(max_points[A] for A in S)
        c_pts = frozenset(max_points[A] for A in closure)
        closure_rows.append((s_pts, c_pts))
        discrete &= s_pts == c_pts
    census = enumerate_filters_and_ideals(n)
    # each ultrafilter is fixed at a single point; label it by that point
    ultra = {}
    for U in census.ultrafilters:
        (p,) = frozenset.intersection(*U)
        ultra[p] = frozenset(_mask(Z) for Z in U)
    gk = []
    for p in sorted(ultra):
        mp = frozenset(i for i, z in enumerate(c.zmasks) if z in ultra[p])
        gk.append((p, mp == c.member_set(1 << p)))
    traces = all(
        frozenset(p for p in ultra if Z in ultra[p]) == _points(Z) for Z in range(1 << n)
    )
    phi = {A: next(p for p in ultra if ultra[p] == _zero_set_masks(c, A)) for A in maxes}
    homeo = True
    for i, z in enumerate(c.zmasks):
        image = frozenset(phi[A] for A in maxes if i in c.member_set(A))
        homeo &= image == frozenset(p for p in ultra if z in ultra[p])
    return StructureReport(
        n,
        tuple(IdealDesc(n, _points(A)) for A in maxes),
        tuple(closure_rows),
        discrete,
        tuple(gk),
        traces,
        homeo,
    )


def _zero_set_masks(c: _Census, A: int) -> set:
    return {c.zmasks[i] for i in c.member_set(A)}
