"""Acceptance criteria, one test each.  Every test records a PASS/FAIL line
that the terminal summary prints under "acceptance criteria".

Tolerances: all checks are exact (integer or GF(2) arithmetic, zero
tolerance).  Runtime limits are wall-clock bounds measured around the
criterion's own work.
"""

import time
from itertools import permutations

import numpy as np

from conftest import record_acceptance
from oracles import largest_nonsingular
from patternlab import geometry as geo, gf2, pattern as pm, surface as surf, witness

RUNTIME_D2 = 10.0
RUNTIME_D3 = 60.0
RUNTIME_SURFACE = 30.0
RUNTIME_TABLE = 600.0


def test_criterion_1_crossing_parity_d2():
    start = time.perf_counter()
    odd = 0
    for i in range(1000):
        rep = geo.crossing_parity_d2(geo.random_map(2, (2024, i)))
        odd += rep.total == 1
    elapsed = time.perf_counter() - start
    ok = odd == 1000 and elapsed < RUNTIME_D2
    record_acceptance("1 d=2 crossing parity", ok, f"{odd}/1000 odd, {elapsed:.2f}s (< {RUNTIME_D2}s)")
    assert ok


def test_criterion_2_linking_parity_d3():
    start = time.perf_counter()
    odd = agree = 0
    for i in range(500):
        m = geo.random_map(3, (2025, i))
        rep = geo.cgs_parity_d3(m, cross_check=False)
        odd += rep.total == 1
        agree += all(
            bit == geo.projection_parity(m, s, t)[0] == geo.piercing_parity(m, t, s)
            for (s, t), bit in rep.contributions.items())
    elapsed = time.perf_counter() - start
    ok = odd == 500 and agree == 500 and elapsed < RUNTIME_D3
    record_acceptance("2 d=3 linking parity", ok,
                      f"{odd}/500 odd, algorithms agree on {agree}/500, {elapsed:.2f}s (< {RUNTIME_D3}s)")
    assert ok


def test_criterion_3_chord_orders():
    reps = [geo.chord_parity_d1(p) for p in permutations((1, 2, 3, 4))]
    ok = len(reps) == 24 and all(r.count == 1 and r.total == 1 for r in reps)
    record_acceptance("3 circle orders of 4 points", ok,
                      f"{sum(r.count == 1 for r in reps)}/24 with exactly one interleaving pairing")
    assert ok


def test_criterion_4_surface_pipeline():
    start = time.perf_counter()
    s = surf.load_shipped("k7_torus.rot")
    A = surf.build_pattern_matrix(s)
    checks = pm.check_all(A)
    rank = A.rank()
    sweep = surf.cone_pairing_sweep(s)
    claim = witness.claimed_bounds(7, 1)["rank_bound_even"]
    findings = {
        "nontriviality_holds": checks["nontriviality"].holds,
        "claimed_even_bound": str(claim),
        "computed_rank": rank,
        "claim_exceeds_rank": claim > rank,
        "cone_pairing_all_one": set(sweep.values()) == {1},
    }
    elapsed = time.perf_counter() - start
    ok = (
        (len(s.faces), s.euler_char, s.genus) == (14, 0, 1)
        and A.size == 35 and A.entries.is_symmetric() and pm.is_even(A)
        and checks["triviality"].holds and checks["linear_dependence"].holds and checks["heredity"].holds
        and rank <= 2 * s.genus
        and elapsed < RUNTIME_SURFACE
    )
    record_acceptance("4 K7 torus pipeline", ok,
                      f"F=14 chi=0 g=1, rank {rank} <= 2, {elapsed:.2f}s; findings {findings}")
    assert ok


def test_criterion_5_witness_table():
    start = time.perf_counter()
    table = witness.build_table(1, 7, budget=witness.DEFAULT_BUDGET)
    report = witness.bounds_report(table)
    elapsed = time.perf_counter() - start
    anycol, evencol = table.column(False), table.column(True)
    n4, n5 = anycol[4], anycol[5]
    n5_enumerated = any(e.get("outcome") == "feasible" and "subspaces_tested" in e for e in n5.log)
    witnesses_ok = all(
        pm.passes_conditions(c.witness, even=c.even_mode) and pm.check_heredity(c.witness).holds
        for col in (anycol, evencol) for c in col.values())
    sharp = [c for c in report["recursion_checks"] if c["recursion"] in ("even_sharp", "any_sharp")]
    ok = (
        (n4.status, n4.value) == (witness.EXACT, 0)
        and n5.status == witness.EXACT and n5.value >= 1 and n5_enumerated
        and witnesses_ok
        and all(c["holds"] for c in sharp)
        and elapsed < RUNTIME_TABLE
    )
    values = {n: (anycol[n].value, evencol[n].value) for n in sorted(anycol)}
    record_acceptance("5 witness table k=1", ok,
                      f"(any, even) min ranks {values}; sharp recursions {[(c['recursion'], c['r'], c['holds']) for c in sharp]}; "
                      f"{elapsed:.2f}s (< {RUNTIME_TABLE:.0f}s)")
    assert ok


def test_criterion_6_cross_module_consistency():
    s = surf.load_shipped("k5_torus.rot")
    A = surf.build_pattern_matrix(s)
    residual = witness.build_model(5, 1).residual(A)
    sums = [surf.cone_pairing_sum(s, base + (cone,))
            for cone in range(1, 6) for base in [tuple(x for x in range(1, 6) if x != cone)]]
    ok = residual.bits == 0 and sums == [1] * 5
    record_acceptance("6 K5 torus matrix in feasible set", ok,
                      f"residual weight {residual.weight()}, cone-pairing sums {sums}")
    assert ok


def test_criterion_7_gf2_kernel():
    g = np.random.default_rng(77)
    agree = 0
    for _ in range(10**4):
        r, c = g.integers(1, 7, size=2)
        m = gf2.random_matrix(g, int(r), int(c))
        agree += gf2.rank(m) == largest_nonsingular(list(m.row_data), m.cols)
    even = 0
    for _ in range(10**3):
        a = gf2.random_symmetric(g, int(g.integers(1, 17)), zero_diagonal=True)
        even += gf2.rank(a) % 2 == 0
    ok = agree == 10**4 and even == 10**3
    record_acceptance("7 GF(2) rank kernel", ok,
                      f"oracle agreement {agree}/10000, alternating even rank {even}/1000")
    assert ok


def test_criterion_8_reductions():
    samples = restrict_ok = deflate_ok = project_ok = heredity_ok = 0
    deflated = projected = 0
    for n in (7, 8):
        for even in (False, True):
            model = witness.build_model(n, 1, even)
            g = np.random.default_rng((808, n, int(even)))
            for _ in range(30):
                A = model.decode(model.solution_space.sample(g))
                r = A.rank()
                samples += 1
                heredity_ok += pm.check_heredity(A).holds
                B = pm.restrict(A, range(1, n))
                restrict_ok += pm.passes_conditions(B, even=even) and B.rank() <= r
                if not even:
                    X = next(P for P in A.subsets if A[P, P])
                    D = pm.deflate_diag(A, X)
                    deflated += 1
                    deflate_ok += pm.passes_conditions(D) and D.rank() <= r - 1
                else:
                    X, Y = next((P, Q) for P, Q in A.nonzero_pairs() if P != Q)
                    E = pm.project_offdiag(A, X, Y)
                    projected += 1
                    project_ok += pm.passes_conditions(E, even=True) and E.rank() <= r - 2
    ok = (samples >= 100 and restrict_ok == samples and deflate_ok == deflated
          and project_ok == projected and heredity_ok == samples)
    record_acceptance("8 reductions preserve conditions", ok,
                      f"{samples} samples; restrict {restrict_ok}/{samples}, deflate_diag (rank <= r-1) "
                      f"{deflate_ok}/{deflated}, project_offdiag (rank <= r-2) {project_ok}/{projected}, "
                      f"heredity {heredity_ok}/{samples}")
    assert ok
