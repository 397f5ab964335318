"""The twelve acceptance criteria, each checked exactly and reported on one line.

Run under pytest for the summary section, or directly with
``python3 tests/test_acceptance.py`` to print the lines as they finish.
"""

import time
from fractions import Fraction
from math import factorial

import pytest

from staircase import tableau_a, verify
from staircase.markov import stationary_exact, transition_matrix
from staircase.state import State


def _report(*reports):
    failures = sum(len(r.failures) for r in reports)
    instances = sum(r.instances for r in reports)
    return failures == 0, f"{instances} instances, {failures} failures"


def counting():
    start = time.perf_counter()
    counts = {n: sum(1 for _ in tableau_a.enumerate_tableaux(n)) for n in range(1, 7)}
    elapsed = time.perf_counter() - start
    distinct = all(len(set(tableau_a.iter_cells(n))) == counts[n] for n in range(1, 6))
    ok = all(c == 4**n * factorial(n) for n, c in counts.items()) and distinct and elapsed <= 60
    return ok, f"size 6 gives {counts[6]} tableaux, {elapsed:.1f} s for sizes 1..6"


def insertion_bijection():
    return _report(verify.thm6(5))


def type_a_multipliers():
    return _report(verify.prop7(5))


def state_weights():
    return _report(verify.thm9(5))


def type_a_products():
    return _report(verify.cor8(6))


def system_21():
    return _report(verify.sys21(6))


def chain_oracle():
    report = verify.oracle(5)
    tasep = stationary_exact(transition_matrix(2, verify.TASEP))
    want = [Fraction(1, 5), Fraction(2, 5), Fraction(1, 5), Fraction(1, 5)]
    ok, detail = _report(report)
    return ok and [tasep[s] for s in State.all(2)] == want, detail + f" over {1 + len(verify.GENERIC_POINTS)} points"


def symmetries():
    return _report(verify.symmetry(4))


def inversion_tables():
    return _report(verify.run_suite("invtable", 6))


def type_b():
    return _report(verify.thm12(4), verify.prop13(4), verify.cor14(5))


def invariants():
    return _report(verify.invariants(5))


def system_41():
    report = verify.sys41(3)
    consistency = report.details.get("lambda_consistency", {})
    ok = report.ok and bool(consistency)
    return ok, f"middle equation: {report.instances} instances, {len(report.failures)} failures; lambda findings reported"


CRITERIA = [
    (1, "tableau counts 4^n n!", counting),
    (2, "insertion round trips", insertion_bijection),
    (3, "type-A weight multipliers", type_a_multipliers),
    (4, "state weights equal tableau sums", state_weights),
    (5, "type-A partition function products", type_a_products),
    (6, "system (I)-(III) with the standard lambda", system_21),
    (7, "Markov chain oracle", chain_oracle),
    (8, "C/P/CP symmetries", symmetries),
    (9, "inversion tables and q-statistics", inversion_tables),
    (10, "type-B bijection, multipliers and products", type_b),
    (11, "homogeneity and monomial counts", invariants),
    (12, "type-B system middle equation", system_41),
]


def _line(k, name, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {k}: {name} ({detail})"


@pytest.mark.slow
@pytest.mark.parametrize("k,name,check", CRITERIA, ids=[f"criterion_{k}" for k, _, _ in CRITERIA])
def test_criterion(k, name, check, acceptance_log):
    ok, detail = check()
    line = _line(k, name, ok, detail)
    acceptance_log.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = []
    for k, name, check in CRITERIA:
        ok, detail = check()
        results.append(ok)
        print(_line(k, name, ok, detail), flush=True)
    raise SystemExit(0 if all(results) else 1)
