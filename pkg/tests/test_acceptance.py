"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion lines.
Criterion 2 is expected to fail: the printed reference tables for genus 4 and
genus 5 each omit one valid cover class, and the enumeration reports rather
than hides them (see the golden module; the omitted rows are re-verified
independently by criterion 2a and the covers test suite).
"""

import json
import random
import time
from fractions import Fraction
from math import gcd

from cyclocover import cli, golden
from cyclocover.conemetrics import all_admissible, count_checks, divisor_of, monomial_relations
from cyclocover.covers import (
    BranchingData,
    check,
    degree_bounds,
    genus,
    genus_oracle,
    validate,
    _sorted_index_tuples,
)
from cyclocover.exactmath import Polynomial
from cyclocover.lifts import AffineLift, IndexMap, lift_order, preimage_action
from cyclocover.periods import (
    jacobian,
    octa4_expected_coefficients,
    octa4_fixture,
    solve_coefficients,
)
from cyclocover.polyhedra import quotient_graph_params
from cyclocover.wronski import default_basis, total_weight, weight_census, wronskian
from helpers import covers_up_to


def report(number, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"CRITERION {number:>3} {status}  {detail}")


def test_criterion_01_golden_enumeration_n3(capsys):
    start = time.perf_counter()
    code = cli.main(["enumerate", "--max-genus", "5", "--punctures", "3"])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - start
    rows = json.loads(out)["results"]["covers"]
    got = {(r["degree"], tuple(r["indices"]), r["genus"]) for r in rows}
    want = set(golden.N3_COVERS)
    ok = code == 0 and got == want and elapsed < 60
    spot = {(7, (1, 1, 5), 3), (8, (1, 2, 5), 3), (12, (1, 3, 8), 3), (22, (1, 10, 11), 5)}
    with capsys.disabled():
        report(1, ok, f"golden 3-puncture enumeration, {len(got)} covers in {elapsed:.1f}s")
    assert spot <= got
    assert got == want
    assert code == 0
    assert elapsed < 60


def test_criterion_02_golden_tables_all_n(capsys):
    by_genus = {g: set() for g in (3, 4, 5)}
    for b, g in covers_up_to(5, min_genus=3):
        by_genus[g].add((b.degree, b.indices))
    problems = []
    for g in (3, 4, 5):
        table = set(golden.TABLES[g])
        computed = by_genus[g]
        missing = table - computed
        extras = computed - table
        assert not missing, f"genus {g}: reference rows not reproduced: {sorted(missing)}"
        if extras:
            problems.append(f"genus {g}: enumeration also finds {sorted(extras)}")
    ok = not problems
    with capsys.disabled():
        detail = "reference tables reproduced exactly" if ok else (
            "set equality fails; printed tables are missing valid covers: "
            + "; ".join(problems)
        )
        report(2, ok, detail)
    assert not problems, (
        "printed reference tables omit valid covers: " + "; ".join(problems)
    )


def test_criterion_02a_table_rows_and_omissions_verified(capsys):
    # supporting check for the criterion above: everything beyond the printed
    # tables is exactly the two known omissions, and each omission is a valid
    # cover confirmed by the independent genus oracle
    by_genus = {g: set() for g in (3, 4, 5)}
    for b, g in covers_up_to(5, min_genus=3):
        by_genus[g].add((b.degree, b.indices))
    ok = True
    for g in (3, 4, 5):
        extras = by_genus[g] - set(golden.TABLES[g])
        expected = set(golden.TABLE_OMISSIONS.get(g, ()))
        ok = ok and extras == expected
        for d, indices in extras:
            cover = validate(d, indices)
            ok = ok and genus(cover).genus == g == genus_oracle(cover)
    with capsys.disabled():
        report("2a", ok, "table containment and omission re-verification")
    assert ok


def test_criterion_03_octa4_wronski(capsys):
    start = time.perf_counter()
    b = validate(8, (1, 2, 5))
    rep = wronskian(b, default_basis(b))
    total = total_weight(rep, b, 3)
    elapsed = time.perf_counter() - start
    third = Fraction(1, 3)
    ok = (
        rep.w1 == Polynomial.from_roots([-third, -third])
        and rep.orders == (-2, -1, -2)
        and rep.weights == (2, 2, 2)
        and total == 24
        and elapsed < 1
    )
    with capsys.disabled():
        report(3, ok, f"Octa-4 Wronskian exact values in {elapsed * 1000:.0f}ms")
    assert rep.w1 == Polynomial.from_roots([-third, -third])
    assert rep.orders == (-2, -1, -2)
    assert rep.weights == (2, 2, 2)
    assert total == 24
    assert elapsed < 1


def test_criterion_04_octa8_census(capsys):
    b = validate(12, (1, 4, 7))
    rep = wronskian(b, default_basis(b))
    census = weight_census(rep)
    total = total_weight(rep, b, 4)
    ok = rep.weights == (4, 4, 4) and census == {4: 6, 1: 36} and total == 60
    with capsys.disabled():
        report(4, ok, f"Octa-8 census {census}, total {total}")
    assert rep.weights == (4, 4, 4)
    assert census == {4: 6, 1: 36}
    assert total == 60


def test_criterion_05_multiplier_counts(capsys):
    start = time.perf_counter()
    violations = []
    for b, g in covers_up_to(5):
        census = count_checks(b)
        if b.num_punctures == 3 and census.count != g:
            violations.append(f"{b}: count {census.count} != genus {g}")
        if census.count < g:
            violations.append(f"{b}: count {census.count} < genus {g}")
    elapsed = time.perf_counter() - start
    ok = not violations and elapsed < 30
    with capsys.disabled():
        report(5, ok, f"multiplier census over {len(covers_up_to(5))} covers in {elapsed:.1f}s")
    assert not violations, violations
    assert elapsed < 30


def test_criterion_06_divisor_properties(capsys):
    checked = 0
    for b, g in covers_up_to(5):
        for metric in all_admissible(b):
            div = divisor_of(metric)
            assert div.degree == 2 * g - 2, (b, metric)
            assert all(order >= 0 for order in div.entries.values()), (b, metric)
            checked += 1
    with capsys.disabled():
        report(6, True, f"divisor degree and positivity on {checked} metrics")


def test_criterion_07_oracle_equivalence(capsys):
    start = time.perf_counter()
    checked = 0
    # exhaustive over all valid covers with 3 or 4 punctures, d <= 50
    for n in (3, 4):
        for d in range(2, 51):
            for indices in _sorted_index_tuples(d, n):
                if check(d, indices):
                    continue
                b = BranchingData(d, indices)
                assert genus_oracle(b) == genus(b).genus, b
                checked += 1
    # exhaustive for 5..8 punctures at small degree
    for n in (5, 6, 7, 8):
        for d in range(2, 11):
            for indices in _sorted_index_tuples(d, n):
                if check(d, indices):
                    continue
                b = BranchingData(d, indices)
                assert genus_oracle(b) == genus(b).genus, b
                checked += 1
    # seeded random samples for 5..8 punctures up to d = 50
    rng = random.Random(2024)
    for n in (5, 6, 7, 8):
        hits = 0
        while hits < 200:
            d = rng.randint(2, 50)
            indices = tuple(rng.randint(1, d - 1) for _ in range(n))
            if check(d, indices):
                continue
            b = BranchingData(d, indices)
            assert genus_oracle(b) == genus(b).genus, b
            hits += 1
            checked += 1
    # every sheet permutation orbit count for d <= 50 against gcd; combined
    # with the additive structure of both genus counts this covers all n <= 8
    for d in range(2, 51):
        for di in range(1, d):
            seen = bytearray(d)
            orbits = 0
            for start_sheet in range(d):
                if seen[start_sheet]:
                    continue
                orbits += 1
                j = start_sheet
                while not seen[j]:
                    seen[j] = 1
                    j = (j + di) % d
            assert orbits == gcd(d, di)
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        report(7, True, f"oracle equivalence on {checked} covers in {elapsed:.1f}s")


def test_criterion_08_lift_orders(capsys):
    octa4 = validate(8, (1, 2, 5))
    swap = IndexMap(source=octa4, target=octa4, images=(2, 1, 0))
    expected = {1: 8, 3: 8, 5: 8, 7: 8, 2: 4, 6: 4, 4: 2}
    ok = True
    for nu, want in expected.items():
        lift = AffineLift(mu=5, nu=nu, modulus=8)
        ok = ok and lift_order(swap, lift) == want
        action = preimage_action(swap, lift)
        swapped_double = ((1, 0), (1, 1)) in action.swapped
        ok = ok and swapped_double == (nu % 2 == 1)

    klein = validate(7, (1, 2, 4))
    cycle = IndexMap(source=klein, target=klein, images=(1, 2, 0))
    for nu in range(7):
        ok = ok and lift_order(cycle, AffineLift(mu=2, nu=nu, modulus=7)) == 3
    identity = IndexMap(source=klein, target=klein, images=(0, 1, 2))
    for nu in range(1, 7):
        ok = ok and lift_order(identity, AffineLift(mu=1, nu=nu, modulus=7)) == 7
    with capsys.disabled():
        report(8, ok, "lift orders and label actions for Octa-4 and Klein")
    assert ok


def test_criterion_09_graph_parameters(capsys):
    got3 = [(p.vertices, p.degree) for p in quotient_graph_params(3)]
    got4 = [(p.vertices, p.degree) for p in quotient_graph_params(4)]
    ok = got3 == [(1, 6), (2, 4), (4, 3)] and got4 == [(1, 8), (2, 5), (3, 4), (6, 3)]
    with capsys.disabled():
        report(9, ok, f"graph parameters {got3} and {got4}")
    assert ok


def test_criterion_10_divisor_relations(capsys):
    mucube = [divisor_of(m) for m in all_admissible(validate(6, (1, 3, 5, 3)))]
    rels = monomial_relations(mucube, 2)
    ok = len(rels) == 1 and {rels[0].left, rels[0].right} == {(1, 0, 1), (0, 2, 0)}
    ok = ok and rels[0].square_side

    trunc = [divisor_of(m) for m in all_admissible(validate(5, (1, 2, 4, 3)))]
    rels_t = monomial_relations(trunc, 2)
    ok = ok and len(rels_t) == 1
    ok = ok and {rels_t[0].left, rels_t[0].right} == {(1, 0, 0, 1), (0, 1, 1, 0)}
    ok = ok and not rels_t[0].square_side
    ok = ok and not any(r.square_side for r in rels_t)

    octa8 = [divisor_of(m) for m in all_admissible(validate(12, (1, 4, 7)))]
    rels_o = monomial_relations(octa8, 2)
    ok = ok and len(rels_o) == 1
    ok = ok and {rels_o[0].left, rels_o[0].right} == {(1, 0, 0, 1), (0, 0, 2, 0)}
    with capsys.disabled():
        report(10, ok, "quadric relations: Mucube square pair, rank-4 obstruction, Octa-8")
    assert ok


def test_criterion_11_periods(capsys):
    start = time.perf_counter()
    pm, lat = octa4_fixture()
    jac, diag = jacobian(pm)
    coeffs, residual = solve_coefficients(pm, lat)
    elapsed = time.perf_counter() - start
    coeff_err = abs(coeffs - octa4_expected_coefficients()).max()
    ok = (
        coeff_err < 1e-9
        and abs(coeffs[1, 1] - 1) < 1e-9
        and diag.max_asymmetry < 1e-12
        and diag.min_imag_eigenvalue > 0
        and residual < 1e-9
        and elapsed < 1
    )
    with capsys.disabled():
        report(
            11,
            ok,
            f"periods: coeff err {coeff_err:.2e}, asymmetry {diag.max_asymmetry:.2e}, "
            f"min Im eig {diag.min_imag_eigenvalue:.3f}, {elapsed * 1000:.0f}ms",
        )
    assert ok


def test_criterion_12_degree_bounds(capsys):
    for b, g in covers_up_to(5):
        lower, upper = degree_bounds(g, b.num_punctures)
        assert lower <= b.degree <= upper, b
    # direct sweep: no valid genus-2 cover over 3 punctures has degree > 84
    stragglers = []
    for d in range(85, 337):
        for indices in _sorted_index_tuples(d, 3):
            if check(d, indices):
                continue
            if genus(BranchingData(d, indices)).genus == 2:
                stragglers.append((d, indices))
    ok = not stragglers
    with capsys.disabled():
        report(12, ok, "degree bounds hold; no genus-2 triple beyond 84")
    assert not stragglers, stragglers
