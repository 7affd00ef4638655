import numpy as np
import pytest

from oracles import all_vectors, rank_one_members, span_vectors
from patternlab import gf2, pattern as pm, surface, witness
from patternlab.pattern import PatternMatrix
from patternlab.witness import BOUNDED, EXACT, INFEASIBLE


@pytest.fixture(scope="module")
def table_k1():
    return witness.build_table(1, 7)


def test_gaussian_binomial():
    assert [witness.gaussian_binomial(4, r) for r in range(6)] == [1, 15, 35, 15, 1, 0]


@pytest.mark.parametrize("k", [0, 1, 2])
def test_zero_matrix_feasible_at_2k_plus_2(models, k):
    m = models(2 * k + 2, k)
    assert m.solution_space.feasible
    assert m.contains(PatternMatrix.zeros(2 * k + 2, k))


@pytest.mark.parametrize("k", [0, 1])
def test_zero_matrix_excluded_at_2k_plus_3(models, k):
    m = models(2 * k + 3, k)
    assert not m.contains(PatternMatrix.zeros(2 * k + 3, k))
    assert m.kind_counts()["nontriviality"] > 0


@pytest.mark.parametrize("n, even", [(5, False), (5, True), (6, False), (6, True), (7, True)])
def test_decoded_solutions_pass_checkers(models, n, even):
    m = models(n, 1, even)
    g = np.random.default_rng(n)
    for _ in range(10):
        x = m.solution_space.sample(g)
        A = m.decode(x)
        assert m.encode(A) == x
        assert pm.passes_conditions(A, even=even)
        assert m.contains(A)


@pytest.mark.parametrize("n, even", [(4, False), (5, False), (5, True), (6, False)])
def test_solution_dimension_is_nullity(models, n, even):
    m = models(n, 1, even)
    assert m.solution_space.dimension == len(m.variables) - gf2.rank(m.coeff)


def test_residual_flags_a_broken_matrix(models):
    m = models(5, 1)
    A = PatternMatrix.from_pairs(5, 1, [((1, 2, 3), (1, 2, 3))])
    assert not m.contains(A) and m.residual(A).weight() > 0
    with pytest.raises(ValueError):
        m.encode(PatternMatrix.zeros(6, 1))


def test_min_rank_n4_zero():
    res = witness.min_rank(witness.build_model(4, 1))
    assert (res.status, res.value, res.witness_source) == (EXACT, 0, "zero matrix")
    assert res.witness.entries.is_zero()


def test_min_rank_n5_any_matches_rank_one_scan(models):
    m = models(5, 1)
    res = witness.min_rank(m, hints=())
    # every nonzero v in GF(2)^10: some v v^T is admissible, so the minimum is 1
    hits = rank_one_members(m, all_vectors(m.size))
    assert hits.any()
    assert (res.status, res.value) == (EXACT, 1)
    assert pm.passes_conditions(res.witness) and res.witness.rank() == 1


def test_min_rank_n5_even_matches_full_enumeration(models):
    m = models(5, 1, True)
    space = m.solution_space
    assert space.dimension == 14
    best = min(m.decode(space.member(c)).rank() for c in range(1 << space.dimension))
    assert best == 2
    res = witness.min_rank(m, hints=())
    assert (res.status, res.value) == (EXACT, 2)


@pytest.mark.parametrize("n, expected", [(6, True), (7, False)])
def test_rank_one_attainable_only_up_to_six(models, n, expected):
    # rows of an admissible matrix are cocycles, so v ranges over the cocycle space
    m = models(n, 1)
    basis = witness._basis_array(m)
    assert rank_one_members(m, span_vectors(basis)).any() == expected


def test_min_rank_n7_values(models):
    any7 = witness.min_rank(models(7, 1), hints=witness.shipped_hints(7, 1))
    assert (any7.status, any7.value) == (EXACT, 2)
    even7 = witness.min_rank(models(7, 1, True), hints=witness.shipped_hints(7, 1))
    assert (even7.status, even7.value, even7.witness_source) == (EXACT, 2, "k7_torus.rot")


def test_infeasible_system_reported():
    m = witness.build_model(5, 1)
    # force an inconsistent system by appending 0 = 1
    bad = witness.FeasibilityModel(
        m.n, m.k, m.even_mode, m.variables,
        gf2.Gf2Matrix(m.coeff.rows + 1, m.coeff.cols, m.coeff.row_data + (0,)),
        gf2.Gf2Vector(m.rhs.length + 1, m.rhs.bits | (1 << m.rhs.length)),
        m.row_kinds + ("extra",))
    assert witness.min_rank(bad).status == INFEASIBLE


def test_budget_exhaustion_gives_bounds(models):
    res = witness.min_rank(models(7, 1), budget=10, hints=())
    assert res.status == BOUNDED and res.lower == 1
    assert res.upper is not None and res.upper >= res.lower
    assert pm.passes_conditions(res.witness)


def test_hints_are_verified(models):
    junk = PatternMatrix.zeros(7, 1)
    res = witness.min_rank(models(7, 1, True), hints=[("junk", junk)])
    assert res.witness_source != "junk"


def test_table_values(table_k1):
    got = {(row.n, even): (col.status, col.value)
           for row in table_k1.rows for even, col in ((False, row.any), (True, row.even))}
    expected_any = {3: 0, 4: 0, 5: 1, 6: 1, 7: 2}
    expected_even = {3: 0, 4: 0, 5: 2, 6: 2, 7: 2}
    for n in range(3, 8):
        assert got[(n, False)] == (EXACT, expected_any[n])
        assert got[(n, True)] == (EXACT, expected_even[n])


def test_table_monotone_and_even_parity(table_k1):
    for even in (False, True):
        col = table_k1.column(even)
        vals = [col[n].value for n in sorted(col)]
        assert vals == sorted(vals)
    for c in table_k1.column(True).values():
        assert c.value % 2 == 0 and pm.is_even(c.witness)


def test_table_witnesses_pass(table_k1):
    for row in table_k1.rows:
        for even, col in ((False, row.any), (True, row.even)):
            assert pm.passes_conditions(col.witness, even=even)
            assert all(r.holds for r in pm.check_all(col.witness).values())
            assert col.witness.rank() == col.upper


def test_recursions_hold_on_table(table_k1):
    report = witness.bounds_report(table_k1)
    checks = report["recursion_checks"]
    assert checks and all(c["holds"] for c in checks)
    sharp = [c for c in checks if c["recursion"] in ("even_sharp", "any_sharp")]
    assert sharp


def test_recursion_limits_chain():
    anyr, even = witness.recursion_limits(1, 4)
    assert even == [4, 4, 7, 7, 10]
    assert anyr == [4, 6, 8, 10, 12]
    anyr_u, even_u = witness.recursion_limits(1, 2, sharp=False)
    assert even_u == [4, 4, 9] and anyr_u == [4, 7, 10]


def test_bounds_report_flags(table_k1):
    report = witness.bounds_report(table_k1)
    row4 = next(r for r in report["rows"] if r["n"] == 4)
    # the claimed bounds at n=4 are (n-3)/2 = 1/2 and 2(n-3)/3 = 2/3, above the exact value 0
    assert row4["claims"]["rank_bound_any"]["num"] == 1 and row4["claims"]["rank_bound_any"]["den"] == 2
    assert row4["claims"]["rank_bound_even"]["num"] == 2 and row4["claims"]["rank_bound_even"]["den"] == 3
    flagged = {(f["n"], f["bound"]) for f in report["flags"]}
    assert (7, "rank_bound_even") in flagged
    f7 = next(f for f in report["flags"] if (f["n"], f["bound"]) == (7, "rank_bound_even"))
    assert f7["claimed"]["num"] == 8 and f7["claimed"]["den"] == 3 and f7["computed_upper"] == 2
    assert all(r["claims"]["rank_bound_any"]["provenance"] == "claimed" for r in report["rows"])


def test_kuhnel_bound_values():
    # for k = 1 the expression is (n-3)(n-4)/6; with n - 1 in place of n it matches 2 * Heawood
    from fractions import Fraction
    assert witness.kuhnel_bound(6, 1) == Fraction(3 * 2, 6)
    assert witness.kuhnel_bound(4, 2) == Fraction(0)


def test_shipped_hints_are_admissible():
    for n in (5, 6, 7):
        for source, A in witness.shipped_hints(n, 1):
            assert pm.passes_conditions(A, even=True), source
    assert witness.shipped_hints(5, 2) == []


def test_torus_k5_in_feasible_set(models, k5):
    A = surface.build_pattern_matrix(k5)
    m = models(5, 1)
    assert m.residual(A).bits == 0
