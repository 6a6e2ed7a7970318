"""One test per acceptance criterion; the terminal summary prints AC<k> PASS/FAIL."""

import json
import random
import time
from itertools import product

import pytest

from fcxlab.ideals import (
    IdealDesc,
    annihilator,
    enumerate_filters_and_ideals,
    filter_ideal_galois,
    ideal_predicates,
    j1_membership,
    prime_equivalents_check,
    proper_ideals,
    socle_membership,
    sum_ideals,
    value_basis,
)
from fcxlab.regularity import fcp_triple, regular_witness, space_regularity_report
from fcxlab.ring import chi, is_member, level_set_witness, one, zero
from fcxlab.sampling import random_disjoint_pair, random_function, random_member, random_value
from fcxlab.separation import fc_separated, separation_witness
from fcxlab.spaces import CONV_SEQ, COFINITE_N, DISCRETE_N, INF, UPSet, finite
from fcxlab.verify import VerifyConfig, _cofinite_falsify, exit_code, restriction_kernel_probe, run_verify_suite
from fcxlab.zdgraph import (
    cycle_closed,
    cycle_oracle,
    distance_closed,
    eccentricity_closed,
    graph_oracle_metrics,
    triangle_oracle_edge,
    triangle_oracle_vertex,
    triangle_predicates,
    witness_graph,
)

MODELS = {"finite": finite(4), "discrete_n": DISCRETE_N, "cofinite_n": COFINITE_N, "conv_seq": CONV_SEQ}
COUNTABLE = {k: v for k, v in MODELS.items() if k != "finite"}


def _statuses(report, prefix):
    return {c["check_id"]: c["status"] for c in report["checks"] if c["check_id"].startswith(prefix)}


@pytest.mark.criterion("AC1")
def test_ac1_graph_oracle_agreement():
    t0 = time.perf_counter()
    for n in (2, 3, 4, 5):
        G = witness_graph(n, reps=2)
        assert G.order <= 60
        m = graph_oracle_metrics(G)
        for i in range(G.order):
            f = G.vertices[i]
            assert eccentricity_closed(f, n) == m.ecc[i]
            for j in range(i + 1, G.order):
                g = G.vertices[j]
                assert distance_closed(f, g, n) == m.dist[i][j]
                assert cycle_closed(f, g, n) == cycle_oracle(G, i, j)
    elapsed = time.perf_counter() - t0
    print(f"AC1 elapsed {elapsed:.2f}s")
    assert elapsed < 10


@pytest.mark.criterion("AC2")
def test_ac2_metric_constants():
    for n in (2, 3, 4, 5):
        m = graph_oracle_metrics(witness_graph(n))
        assert m.radius == 2
        if n == 2:
            assert m.diameter == 2
        else:
            assert (m.diameter, m.girth) == (3, 3)


@pytest.mark.criterion("AC3")
def test_ac3_girth_divergence_n2(default_report):
    F2 = finite(2)
    x0, x1 = chi(F2, 0), chi(F2, 1)
    # χ₀ – χ₁ – 2χ₀ – 2χ₁ – χ₀ is a 4-cycle
    cyc = [x0, x1, x0 * 2, x1 * 2]
    assert all((cyc[k] * cyc[(k + 1) % 4]).is_zero() for k in range(4))
    assert graph_oracle_metrics(witness_graph(2)).girth == 4
    r = run_verify_suite({"max_n": 2, "suites": ["graph"]})
    row = next(c for c in r["checks"] if c["check_id"] == "graph.girth.n2")
    assert row["status"] == "refuted(paper)"
    assert row["witness"]["oracle_girth"] == 4 and row["witness"]["claimed"] == "inf"
    assert exit_code(r) == 0
    assert exit_code(default_report) == 0


@pytest.mark.criterion("AC4")
def test_ac4_triangulation():
    for n in (3, 4, 5):
        F = finite(n)
        x0 = chi(F, 0)
        u = one(F) - x0
        G = witness_graph(n)
        iu, ix = G.index(u), G.index(x0)
        assert not triangle_predicates("vertex", u) and not triangle_oracle_vertex(G, iu)
        assert not triangle_predicates("edge", x0, u) and not triangle_oracle_edge(G, ix, iu)
        assert triangle_predicates("vertex", x0) and triangle_oracle_vertex(G, ix)


@pytest.mark.criterion("AC5")
def test_ac5_ideal_suite():
    t0 = time.perf_counter()
    for n in (1, 2, 3, 4):
        c = enumerate_filters_and_ideals(n)
        assert (c.filter_count, c.ultrafilter_count) == (2**n - 1, n)
        ideals = proper_ideals(n)
        X = frozenset(range(n))
        basis = value_basis(n)
        for I in ideals:
            A = I.vanishing
            assert filter_ideal_galois("Zinv_of", filter_ideal_galois("Z_of", I)) == I
            p = ideal_predicates(I)
            t = prime_equivalents_check(I)
            assert p.prime == p.maximal == (len(A) == 1) == t.is_prime
            assert t.agree and t.contains_prime == t.fg_zero_condition == t.sign_constant == t.is_prime
            assert annihilator(I) == IdealDesc(n, X - A)
            assert p.minimal == (p.zero_set_count == 2)
            for J in ideals:
                assert sum_ideals(I, J) == IdealDesc(n, A & J.vanishing)
                mono = annihilator(I).vanishing >= annihilator(J).vanishing
                assert mono == (A <= J.vanishing)
        assert all(socle_membership(f, finite(n)) for f in basis)
    r = run_verify_suite({"max_n": 4, "suites": ["ideals"]})
    assert r["summary"]["refuted"] == 0 and r["summary"]["confirmed"] == r["summary"]["total"]
    elapsed = time.perf_counter() - t0
    print(f"AC5 elapsed {elapsed:.2f}s")
    assert elapsed < 5


def _brute_classes(n, A, B):
    for z in product((0, 1), repeat=n):
        Z1 = {i for i in range(n) if z[i]}
        if A <= Z1 and not B & Z1:
            return True
    return False


@pytest.mark.criterion("AC6")
def test_ac6_separation(default_report):
    for name, space in MODELS.items():
        rng = random.Random(f"ac6:{name}")
        for _ in range(100):
            A, B = random_disjoint_pair(space, rng)
            v = fc_separated(A, B, space)
            if space.is_finite:
                assert v.separated == _brute_classes(space.n, set(A), set(B))
            elif not v.separated:
                assert _cofinite_falsify(space, A, B, rng) is None
            if v.separated:
                h = separation_witness(v.f, v.g)
                assert is_member(h, space)
                for x in space.probe_points(h, A, B):
                    assert 0 <= h(x) <= 1
                    if x in A:
                        assert h(x) == 0
                    if x in B:
                        assert h(x) == 1
    assert not fc_separated(UPSet.evens(), UPSet.odds(), COFINITE_N).separated
    statuses = _statuses(default_report, "separation.")
    assert statuses and set(statuses.values()) == {"confirmed"}


@pytest.mark.criterion("AC7")
def test_ac7_regularity(default_report):
    for name, space in MODELS.items():
        rng = random.Random(f"ac7:{name}")
        for _ in range(100):
            f = random_member(space, rng)
            assert f * f * regular_witness(f, space) == f
    for space in (finite(4), DISCRETE_N, CONV_SEQ):
        r = space_regularity_report(space)
        assert (r.fcp, r.baer) == (True, True)
    r = space_regularity_report(COFINITE_N)
    assert (r.fcp, r.baer) == (True, False) and r.witness == UPSet.evens()
    for n in (1, 2, 3, 4):
        assert all(t.agree for t in fcp_triple(n))
    statuses = _statuses(default_report, "regularity.")
    assert statuses and set(statuses.values()) == {"confirmed"}


@pytest.mark.criterion("AC8")
def test_ac8_j1(default_report):
    for name, space in COUNTABLE.items():
        rng = random.Random(f"ac8:{name}")
        for _ in range(50):
            f = random_member(space, rng)
            v = j1_membership(f, space)
            assert v.member == f.cozero_set().is_finite()
            if not v.member:
                assert is_member(v.refuting_g, space)
                Z = (one(space) - f * v.refuting_g).zero_set()
                assert not Z.is_finite()
    for n in (1, 2, 3):
        assert all(j1_membership(f, finite(n)).member for f in value_basis(n))
    statuses = _statuses(default_report, "ideals.j1")
    assert statuses and set(statuses.values()) == {"confirmed"}


@pytest.mark.criterion("AC9")
def test_ac9_discreteness_probes(default_report):
    rng = random.Random("ac9")
    for _ in range(1000):
        f = random_function(DISCRETE_N, rng)
        assert is_member(f, DISCRETE_N, "FcX") == is_member(f, DISCRETE_N, "Cc")
    w = chi(CONV_SEQ, INF)
    assert is_member(w, CONV_SEQ, "FcX") and not is_member(w, CONV_SEQ, "Cc")
    w = chi(COFINITE_N, 0)
    assert is_member(w, COFINITE_N, "FcX") and not is_member(w, COFINITE_N, "Cc")
    finding = restriction_kernel_probe()
    assert not finding.injective and chi(CONV_SEQ, INF) in finding.kernel
    statuses = _statuses(default_report, "sections5.")
    assert statuses.pop("sections5.restriction_kernel") == "refuted(paper)"
    assert set(statuses.values()) == {"confirmed"}


@pytest.mark.criterion("AC10")
def test_ac10_zero_set_identities(default_report):
    for name, space in MODELS.items():
        rng = random.Random(f"ac10:{name}")
        assert zero(space).zero_set() == space.universe()
        assert not any(True for _ in one(space).zero_set())
        for _ in range(1000):
            f, g = random_member(space, rng), random_member(space, rng)
            r = random_value(rng)
            Zf = f.zero_set()
            for h in (abs(f), abs(f).meet(1), f * f, f * f * f):
                assert h.zero_set() == Zf
            ge, le = level_set_witness(f, r, "geq"), level_set_witness(f, r, "leq")
            assert is_member(ge, space) and is_member(le, space)
            Zs, Za, Zp = (f * f + g * g).zero_set(), (abs(f) + abs(g)).zero_set(), (f * g).zero_set()
            Zge, Zle = ge.zero_set(), le.zero_set()
            for x in space.probe_points(f, g, ge, le):
                fx, gx = f(x), g(x)
                assert (x in Zf) == (fx == 0)
                assert (x in Zs) == (x in Za) == (fx == 0 and gx == 0)
                assert (x in Zp) == (fx == 0 or gx == 0)
                assert (x in Zge) == (fx >= r) and (x in Zle) == (fx <= r)
    statuses = _statuses(default_report, "zerosets.")
    assert len(statuses) == 5 * len(MODELS) and set(statuses.values()) == {"confirmed"}


@pytest.mark.criterion("AC11")
def test_ac11_determinism(default_report):
    again = run_verify_suite(VerifyConfig())
    a = json.dumps(default_report, ensure_ascii=False).encode()
    b = json.dumps(again, ensure_ascii=False).encode()
    assert a == b
