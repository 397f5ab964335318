from collections import Counter
from operator import itemgetter

import pytest

from oracles import PSI, brute_type_b
from staircase import tableau_a as ta
from staircase import tableau_b as tb
from staircase.poly import ALPHA, BETA, DELTA, GAMMA, ONE, Q, U, Z, Polynomial
from staircase.state import State
from staircase.symbols import InsertionEvent, Label, Letter, Triple

a, b, g, d = Label.ALPHA, Label.BETA, Label.GAMMA, Label.DELTA


def H(n, labels):
    return tb.HalfTableauB.from_labels(n, labels)


SINGLE = {lab: H(1, {(1, 1): lab}) for lab in Label}
EMPTY = tb.HalfTableauB.empty()
AD = H(2, {(1, 1): a, (2, 2): d})


def test_expand_examples():
    full = tb.expand_to_full(SINGLE[a])
    assert full.labels() == {(1, 1): a, (2, 2): d}
    assert tb.expand_to_full(SINGLE[g]).labels() == {(1, 1): g, (2, 2): b}
    assert tb.expand_to_full(EMPTY) == ta.StaircaseTableau.empty()


def test_validate_examples():
    assert tb.validate_b(SINGLE[d])
    assert not tb.validate_b(H(1, {(-1, 1): a, (1, 1): a}))
    assert not tb.validate_b(H(1, {}))


def test_weight_examples():
    assert tb.weight_b(SINGLE[a]) == Z * Q * ALPHA
    assert tb.weight_b(SINGLE[b]) == Z * Q * BETA
    assert tb.weight_b(SINGLE[g]) == U * GAMMA
    assert tb.weight_b(SINGLE[d]) == U * DELTA
    assert tb.weight_b(AD) == Z * Q**2 * U**2 * ALPHA * DELTA
    assert tb.weight_b(EMPTY) == ONE


def test_type_examples():
    assert tb.type_of_b(SINGLE[d]) == State("b")
    assert tb.type_of_b(SINGLE[g]) == State("w")
    assert tb.type_of_b(AD) == State("bb")


def test_insert_examples():
    assert tb.insert_b(EMPTY, Letter(g)) == SINGLE[g]
    assert tb.insert_b(SINGLE[a], Letter(d)) == AD
    assert tb.insert_b(EMPTY, Letter(a)) == SINGLE[a]


def test_uninsert_examples():
    assert tb.uninsert_b(SINGLE[g]) == (EMPTY, Letter(g))
    assert tb.uninsert_b(AD) == (SINGLE[a], Letter(d))
    assert tb.uninsert_b(SINGLE[a]) == (EMPTY, Letter(a))


def test_triples_with_beta_delta_first_letter_are_allowed():
    out = tb.insert_b(SINGLE[a], Triple(d, b, 1))
    assert tb.uninsert_b(out) == (SINGLE[a], InsertionEvent(d, b, 1))


def test_event_count():
    for n in range(5):
        assert len(tb.events_for_size_b(n)) == 4 * (2 * n + 1)


def test_text_round_trip():
    for h in tb.enumerate_b(2):
        assert tb.HalfTableauB.parse(h.to_text()) == h
    assert AD.to_text() == ".\n..\n.d\na"


def test_parse_rejects_axis_label():
    with pytest.raises(ValueError):
        tb.HalfTableauB.parse("a\na")


def test_counts():
    assert [tb.count_b(n) for n in range(5)] == [1, 4, 48, 960, 26880]


def test_partition_function_small():
    assert tb.partition_fn_b(0) == ONE
    assert tb.partition_fn_b(1) == Z * Q * ALPHA + Z * Q * BETA + U * GAMMA + U * DELTA


def test_degree_is_cell_count():
    for n in range(4):
        for cells in tb.iter_cells_b(n):
            assert sum(tb.weight_exponents_b(tb.HalfTableauB(n, cells))[:6]) == n * (n + 1)


@pytest.mark.parametrize("n", [1, 2])
def test_matches_psi_symmetric_full_tableaux(n):
    brute = Counter()
    for full, exps, word in brute_type_b(n):
        brute[tuple(sorted(full.items())), exps, word] += 1
    ours = Counter()
    for h in tb.enumerate_b(n):
        full = tb.expand_to_full(h)
        ours[tuple(sorted(full.labels().items())), tb.weight_exponents_b(h), str(tb.type_of_b(h))] += 1
    assert ours == brute


@pytest.mark.slow
def test_matches_psi_symmetric_full_tableaux_size_3():
    size = 6
    index = {(r, c): r * (r - 1) // 2 + c - 1 for r in range(1, size + 1) for c in range(1, r + 1)}
    mirror = itemgetter(*(index[size + 1 - c, size + 1 - r] for (r, c) in index))
    psi = bytes([0, 4, 3, 2, 1, 0, 0]) + bytes(249)
    # axis cells map to themselves, so a labelled axis cell can never match its psi image
    full = {cells for cells in ta.iter_cells(size) if bytes(mirror(cells)).translate(psi) == cells}
    assert full == {tb.expand_to_full(h).cells for h in tb.enumerate_b(3)}


def test_expansion_is_psi_invariant():
    for n in range(5):
        size = 2 * n
        for h in tb.enumerate_b(n):
            labels = tb.expand_to_full(h).labels()
            reflected = {(size + 1 - c, size + 1 - r): Label(PSI[lab]) for (r, c), lab in labels.items()}
            assert reflected == labels


def test_weights_by_type_sum_to_partition_function():
    for n in range(4):
        total = sum(tb.weights_by_type_b(n).values(), Polynomial())
        assert total == tb.partition_fn_b(n)


def test_weight_multiplier_examples():
    assert tb.weight_multiplier_b(Letter(g), State("")) == (State("w"), U * GAMMA)
    assert tb.weight_multiplier_b(Letter(a), State("")) == (State("b"), Z * Q * ALPHA)
    target, mult = tb.weight_multiplier_b(Letter(d), State("b"))
    assert target == State("bb") and mult == Q * U**2 * DELTA
