"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (collected into the terminal
summary) and asserts both the exact combinatorial outcome and its runtime
ceiling.  Tolerances are exact throughout; nothing here is approximate.
"""

from __future__ import annotations

import time

import pytest

from octminor import claims

# runtime ceilings in seconds
LIMITS = {1: 10, 2: 60, 3: 30, 4: 5, 5: 600, 6: 120, 7: 300, 8: 60, 9: 1200}


def run_criterion(number, checks, log, slow=False):
    start = time.perf_counter()
    results = [(name, *check(slow)) for name, check in checks]
    elapsed = time.perf_counter() - start
    ok = all(r[1] for r in results)
    within = elapsed < LIMITS[number]
    failing = [name for name, passed, _ in results if not passed]
    status = "PASS" if ok and within else "FAIL"
    detail = f"{elapsed:.1f}s (limit {LIMITS[number]}s)"
    if failing:
        detail += "; failing: " + ", ".join(failing)
    line = f"criterion {number}: {status} {detail}"
    log.append(line)
    print(line)
    for name, _, evidence in results:
        for ev in evidence:
            print(f"  [{name}] {ev}")
    assert ok, f"criterion {number} failed: {failing}"
    assert within, f"criterion {number} took {elapsed:.1f}s"


def test_criterion_1_lkk33_case_analysis(acceptance_log):
    run_criterion(1, [("lkk33-contraction-cases", claims.check_lkk33_cases)], acceptance_log)


def test_criterion_2_witness_table(acceptance_log):
    run_criterion(2, [("minor-witness-table", claims.check_witness_table)], acceptance_log)


def test_criterion_3_c6sq_four_splits(acceptance_log):
    run_criterion(3, [("c6sq-4splits-contain-oct1", claims.check_c6sq_splits)], acceptance_log)


def test_criterion_4_oct_extensions(acceptance_log):
    run_criterion(4, [("oct-single-extensions", claims.check_oct_extensions)], acceptance_log)


def test_criterion_5_census_oracle_equivalence(acceptance_log, slow):
    checks = [
        ("census-oct1-4connected", claims.check_census_oct1),
        ("census-oct2-4connected", claims.check_census_oct2),
    ]
    run_criterion(5, checks, acceptance_log, slow=slow)


def test_criterion_6_sum_planarity_laws(acceptance_log):
    run_criterion(6, [("sum-planarity-laws", claims.check_sum_laws)], acceptance_log)


def test_criterion_7_generator_soundness(acceptance_log):
    checks = [
        ("split-descendants-oct-free", claims.check_split_descendants),
        ("k4-3sum-family-sound", claims.check_k_family),
        ("handle-line-graphs-oct1", claims.check_handle_line_graphs),
    ]
    run_criterion(7, checks, acceptance_log)


def test_criterion_8_sanity_identities(acceptance_log):
    run_criterion(8, [("sanity-identities", claims.check_sanity)], acceptance_log)


@pytest.mark.slow
def test_criterion_9_thirteen_edge_count(acceptance_log):
    run_criterion(9, [("three-connected-13-edges", claims.check_thirteen_edge_count)], acceptance_log, slow=True)
