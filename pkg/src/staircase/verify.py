"""Verification suites over exhaustive enumerations.

Each suite takes a maximum size and returns a :class:`Report`. The loops
work on raw kernel buffers, so they are as fast as the active backend.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import factorial, prod
from typing import Callable

from . import ansatz, markov, tableau_a, tableau_b
from .kernel import active as _k
from .poly import ALPHA, BETA, DELTA, GAMMA, ONE, Q, U, Z, ParamPoint, Polynomial, q_bracket
from .results import Report
from .state import State
from .symbols import events_for_size

TASEP = ParamPoint(1, 1, 0, 0, 0, 1)
GENERIC_POINTS = (
    ParamPoint(Fraction(1, 2), Fraction(1, 3), Fraction(1, 5), Fraction(1, 7), Fraction(1, 11), 1),
    ParamPoint(Fraction(2, 3), Fraction(1, 4), Fraction(3, 7), Fraction(1, 9), Fraction(2, 5), Fraction(5, 6)),
    ParamPoint(Fraction(1, 3), Fraction(3, 4), Fraction(1, 6), Fraction(2, 9), Fraction(3, 5), Fraction(1, 2)),
)


def _type_word(cells: bytes, n: int) -> str:
    return "".join("b" if cells[i * (i + 1) // 2 - 1] in (1, 4) else "w" for i in range(n, 0, -1))


def _add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _multiplier_table(n: int, events, multiplier, width: int) -> dict:
    table = {}
    for m in State.all(n):
        for e in events:
            target, poly = multiplier(e, m)
            exps, _ = poly.single_term()
            table[m.word, e.code()] = (target.word, tuple(exps[:width]))
    return table


# -- type A -----------------------------------------------------------------


def prop7(max_size: int) -> Report:
    """Weight after an insertion equals the tabulated multiplier times the old weight."""
    report = Report("weight(insert(T, e)) = M(e, type(T)) · weight(T)")
    for n in range(0, max_size + 1):
        events = events_for_size(n)
        codes = [e.code() for e in events]
        table = _multiplier_table(n, events, tableau_a.weight_multiplier, 6)
        for cells in tableau_a.iter_cells(n):
            word = _type_word(cells, n)
            w = _k.weight_a(cells, n)
            for code in codes:
                child = _k.insert_a(cells, n, *code)
                target, mult = table[word, code]
                got = (_type_word(child, n + 1), _k.weight_a(child, n + 1))
                want = (target, _add(w, mult))
                if got != want:
                    report.fail({"cells": cells.hex(), "event": code}, want, got)
            report.instances += len(codes)
    return report


def thm6(max_size: int) -> Report:
    """Insertion is a bijection onto tableaux one size larger."""
    report = Report("uninsert ∘ insert = id and insert ∘ uninsert = id")
    for n in range(0, max_size + 1):
        codes = [e.code() for e in events_for_size(n)]
        seen = 0
        for cells in tableau_a.iter_cells(n):
            seen += 1
            for code in codes:
                child = _k.insert_a(cells, n, *code)
                back = _k.uninsert_a(child, n + 1)
                if back != (cells, *code):
                    report.fail({"cells": cells.hex(), "event": code}, [cells.hex(), *code], [back[0].hex(), *back[1:]])
            report.instances += len(codes)
        report.record(seen == 4**n * factorial(n), {"n": n, "count": "4^n n!"}, 4**n * factorial(n), seen)
        for child in tableau_a.iter_cells(n + 1):
            parent, x, y, i = _k.uninsert_a(child, n + 1)
            report.record(_k.insert_a(parent, n, x, y, i) == child, {"cells": child.hex()})
    return report


def _inversion_tables(max_size: int) -> Report:
    report = Report("inversion tables: round trip and q-statistics")
    encode, decode = tableau_a._entry_from_event, tableau_a._event_from_entry
    for n in range(1, max_size + 1):
        # entry k encodes the event inserted into a size k-1 tableau
        for e in events_for_size(n - 1):
            entry = encode(n, e.code())
            report.record(decode(n, entry) == e.code(), {"k": n, "event": str(e)}, e.code(), decode(n, entry))
        for cells in tableau_a.iter_cells(n):
            back = _k.compose_a(_k.decompose_a(cells, n))
            if back != cells:
                report.fail({"tableau": cells.hex()}, cells.hex(), back.hex())
            report.instances += 1
        for allowed, stat in (("ab", tableau_a.q_stat_gd0), ("bg", tableau_a.q_stat_ad0)):
            for T in tableau_a.enumerate_tableaux(n, allowed):
                table = tableau_a.to_inversion_table(T)
                lhs, rhs = stat(table), tableau_a.q_degree(T)
                report.record(lhs == rhs, {"labels": allowed, "tableau": T.cells.hex()}, lhs, rhs)
    return report


def product_ad(n: int) -> Polynomial:
    return reduce(lambda acc, i: acc * (U**i * ALPHA + ALPHA * DELTA * q_bracket(i) + Q**i * DELTA), range(n), ONE)


def product_bg(n: int) -> Polynomial:
    return reduce(lambda acc, i: acc * (U**i * BETA + BETA * GAMMA * q_bracket(i) + Q**i * GAMMA), range(n), ONE)


def cor8(max_size: int) -> Report:
    """Tableau partition functions against the three product formulas."""
    report = Report("tableau partition function product identities")
    for n in range(1, max_size + 1):
        lhs = tableau_a.partition_fn(n).subs(q=1, u=1)
        report.record(lhs == ansatz.product_formula(n), {"identity": "q=u=1", "n": n}, lhs, ansatz.product_formula(n))
        lhs = tableau_a.partition_fn(n, "ad")
        report.record(lhs == product_ad(n), {"identity": "labels α, δ", "n": n}, lhs, product_ad(n))
        lhs = tableau_a.partition_fn(n, "bg")
        report.record(lhs == product_bg(n), {"identity": "labels β, γ", "n": n}, lhs, product_bg(n))
    return report


def invariants(max_size: int) -> Report:
    """Homogeneity of tableau weights and the monomial count of state weights."""
    report = Report("homogeneity and monomial counts")
    for n in range(0, max_size + 1):
        deg = n * (n + 1) // 2
        bad = [cells for cells in tableau_a.iter_cells(n) if sum(_k.weight_a(cells, n)) != deg]
        report.record(not bad, {"type": "A", "n": n, "degree": deg}, deg, [c.hex() for c in bad[:5]])
        if n <= 4:
            bad = [cells for cells in tableau_b.iter_cells_b(n) if sum(_k.weight_b(cells, n)[:6]) != n * (n + 1)]
            report.record(not bad, {"type": "B", "n": n, "degree": n * (n + 1)}, n * (n + 1), [c.hex() for c in bad[:5]])
        for m in State.all(n):
            w = ansatz.weight_of_state(m)
            count = w.evaluate(ParamPoint.all_ones())
            want = 2**n * factorial(n)
            report.record(
                count == want and w.is_homogeneous(deg) and w.coefficients_nonnegative_integers(),
                {"state": str(m)},
                want,
                count,
            )
    return report


# -- type B -----------------------------------------------------------------


def thm12(max_size: int) -> Report:
    """Type-B insertion is a bijection; counts are 4^n (2n-1)!!."""
    report = Report("type B: uninsert ∘ insert = id, insert ∘ uninsert = id, counts")
    for n in range(0, max_size + 1):
        codes = [e.code() for e in tableau_b.events_for_size_b(n)]
        seen = 0
        for cells in tableau_b.iter_cells_b(n):
            seen += 1
            if n < max_size:
                for code in codes:
                    child = _k.insert_b(cells, n, *code)
                    back = _k.uninsert_b(child, n + 1)
                    if back != (cells, *code):
                        report.fail({"cells": cells.hex(), "event": code}, [cells.hex(), *code], [back[0].hex(), *back[1:]])
                report.instances += len(codes)
            if n:
                parent, x, y, i = _k.uninsert_b(cells, n)
                report.record(_k.insert_b(parent, n - 1, x, y, i) == cells, {"cells": cells.hex()})
        want = 4**n * prod(range(1, 2 * n, 2))
        report.record(seen == want, {"n": n, "count": "4^n (2n-1)!!"}, want, seen)
    return report


def prop13(max_size: int) -> Report:
    """Type-B weight after insertion against the tabulated multipliers."""
    report = Report("weight_b(insert_b(H, e)) = M_B(e, type(H)) · weight_b(H)")
    for n in range(0, max_size + 1):
        events = tableau_b.events_for_size_b(n)
        codes = [e.code() for e in events]
        table = _multiplier_table(n, events, tableau_b.weight_multiplier_b, 7)
        for cells in tableau_b.iter_cells_b(n):
            word = _type_word(cells, n)
            w = _k.weight_b(cells, n)
            for code in codes:
                child = _k.insert_b(cells, n, *code)
                target, mult = table[word, code]
                got = (_type_word(child, n + 1), _k.weight_b(child, n + 1))
                want = (target, _add(w, mult))
                if got != want:
                    report.fail({"cells": cells.hex(), "event": code}, want, got)
            report.instances += len(codes)
    return report


def product_b_all(n: int) -> Polynomial:
    return (Z * (ALPHA + BETA) + GAMMA + DELTA) ** n * reduce(lambda acc, i: acc * (1 + i * (BETA + DELTA)), range(1, n), ONE)


def product_b_bg(n: int) -> Polynomial:
    return (Z * Q * BETA + U * GAMMA) ** n * reduce(
        lambda acc, k: acc * (Q**k * U**k + Q**k * q_bracket(k) * BETA), range(n), ONE
    )


def product_b_ad(n: int) -> Polynomial:
    return (Z * Q * ALPHA + U * DELTA) ** n * reduce(
        lambda acc, k: acc * (Q**k * U**k + U**k * q_bracket(k) * DELTA), range(n), ONE
    )


def cor14(max_size: int) -> Report:
    """Type-B partition functions against the three product formulas."""
    report = Report("type-B partition function product identities")
    for n in range(1, max_size + 1):
        lhs = tableau_b.partition_fn_b(n).subs(q=1, u=1)
        report.record(lhs == product_b_all(n), {"identity": "q=u=1", "n": n}, lhs, product_b_all(n))
        lhs = tableau_b.partition_fn_b(n, "bg")
        report.record(lhs == product_b_bg(n), {"identity": "labels β, γ", "n": n}, lhs, product_b_bg(n))
        lhs = tableau_b.partition_fn_b(n, "ad")
        report.record(lhs == product_b_ad(n), {"identity": "labels α, δ", "n": n}, lhs, product_b_ad(n))
    return report


# -- ansatz and chain -------------------------------------------------------


def thm9(max_size: int) -> Report:
    return ansatz.theorem9_check(max_size, min(max_size, 4))


def sys21(max_size: int) -> Report:
    return ansatz.check_system_21(max_size)


def sys41(max_size: int) -> Report:
    return ansatz.check_system_41(max_size)


def product(max_size: int) -> Report:
    return ansatz.product_formula_check(max_size)


def oracle(max_size: int, points=(TASEP, *GENERIC_POINTS)) -> Report:
    report = Report("Markov chain stationary vector = normalized state weights")
    for pt in points:
        for n in range(1, max_size + 1):
            report.merge(markov.oracle_compare(n, pt))
    if max_size >= 2:
        mu = markov.stationary_exact(markov.transition_matrix(2, TASEP))
        want = [Fraction(1, 5), Fraction(2, 5), Fraction(1, 5), Fraction(1, 5)]
        got = [mu[s] for s in State.all(2)]
        report.record(got == want, {"n": 2, "point": "TASEP"}, want, got)
    return report


def symmetry(max_size: int, points=GENERIC_POINTS[:2] + (TASEP,)) -> Report:
    report = Report("C/P/CP symmetries of the stationary distribution")
    for pt in points:
        for n in range(1, max_size + 1):
            report.merge(markov.symmetry_check(n, pt))
    return report


SUITES: dict[str, Callable[[int], Report]] = {
    "prop7": prop7,
    "thm6": thm6,
    "thm9": thm9,
    "thm12": thm12,
    "prop13": prop13,
    "cor8": cor8,
    "cor14": cor14,
    "sys21": sys21,
    "sys41": sys41,
    "oracle": oracle,
    "symmetry": symmetry,
    "product": product,
    "invtable": _inversion_tables,
    "invariants": invariants,
}

# Sizes at which each suite stays under a few seconds with the compiled kernel.
DEFAULT_SIZES = {
    "prop7": 4,
    "thm6": 4,
    "thm9": 4,
    "thm12": 3,
    "prop13": 3,
    "cor8": 5,
    "cor14": 4,
    "sys21": 5,
    "sys41": 3,
    "oracle": 4,
    "symmetry": 3,
    "product": 5,
    "invtable": 5,
    "invariants": 5,
}


def run_suite(name: str, max_size: int | None = None) -> Report:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](DEFAULT_SIZES[name] if max_size is None else max_size)


def run_all(max_size: int | None = None) -> list[Report]:
    """Every suite; type-B suites are capped at size 4 because they grow as 4^n (2n-1)!!."""
    out = []
    for name in SUITES:
        size = DEFAULT_SIZES[name] if max_size is None else max_size
        if name in ("thm12", "prop13", "cor14") and max_size is not None:
            size = min(size, 4)
        out.append(run_suite(name, size))
    return out
