from collections import Counter

import pytest

from oracles import brute_tableaux, brute_weight, brute_weights_by_type
from staircase import tableau_a as ta
from staircase.poly import ALPHA, BETA, DELTA, GAMMA, ONE, Q, Polynomial
from staircase.state import State
from staircase.symbols import InsertionEvent, Label, Letter, Triple, events_for_size

a, b, g, d = Label.ALPHA, Label.BETA, Label.GAMMA, Label.DELTA


def T(n, **cells):
    """T(2, c11='a', c22='d') builds a size-2 tableau."""
    return ta.StaircaseTableau.from_labels(n, {(int(k[1]), int(k[2])): v for k, v in cells.items()})


SINGLE = {lab: T(1, c11=lab.char) for lab in Label}


# -- validation --------------------------------------------------------------


def test_validate_examples():
    assert ta.validate(SINGLE[a])
    assert not ta.validate(T(2, c22="a"))
    assert not ta.validate(T(2, c11="a", c22="d", c21="b"))


def test_violations_name_the_rule():
    rules = {v.rule for v in ta.violations(T(2, c22="a"))}
    assert rules
    assert ta.violations(SINGLE[a]) == []


def test_column_rule():
    # alpha at (1, 1) forbids anything above it in column 1
    assert not ta.validate(T(2, c11="a", c21="b", c22="a"))
    assert ta.validate(T(2, c11="b", c21="a", c22="a"))


# -- fill, weight, type -------------------------------------------------------


@pytest.mark.parametrize(
    "tableau,letter",
    [(T(2, c11="a", c22="d"), "q"), (T(2, c11="a", c22="a"), "u"), (T(2, c11="b", c22="a"), "q")],
)
def test_fill_examples(tableau, letter):
    assert ta.fill(tableau).symbol(2, 1) == letter


def test_weight_examples():
    assert ta.weight(SINGLE[a]) == ALPHA
    assert ta.weight(T(2, c11="a", c22="d")) == Q * ALPHA * DELTA
    assert ta.weight(T(2, c11="b", c21="a", c22="a")) == ALPHA**2 * BETA


def test_type_examples():
    assert ta.type_of(SINGLE[a]) == State("b")
    assert ta.type_of(SINGLE[g]) == State("w")
    assert ta.type_of(T(2, c11="b", c22="a")) == State("bw")


def test_weight_rejects_invalid():
    with pytest.raises(ValueError):
        ta.weight(T(2, c22="a"))


def test_text_round_trip():
    t = T(3, c11="b", c21="a", c22="a", c33="g")
    assert ta.StaircaseTableau.parse(t.to_text()) == t
    assert t.to_text().splitlines()[0] == "..g"


def test_render_filled():
    assert ta.fill(T(2, c11="b", c22="a")).to_text() == "qa\nb"


# -- insertion ---------------------------------------------------------------


def test_insert_examples():
    t = ta.insert(SINGLE[a], Letter(d))
    assert t == T(2, c11="a", c22="d") and ta.weight(t) == Q * ALPHA * DELTA
    t = ta.insert(SINGLE[b], Letter(a))
    assert t == T(2, c11="b", c22="a") and ta.weight(t) == Q * ALPHA * BETA
    t = ta.insert(SINGLE[a], Triple(a, b, 1))
    assert t == T(2, c11="b", c21="a", c22="a")
    assert ta.weight(t) == ALPHA**2 * BETA and ta.type_of(t) == State("bw")


def test_uninsert_examples():
    assert ta.uninsert(T(2, c11="a", c22="d")) == (SINGLE[a], Letter(d))
    assert ta.uninsert(T(2, c11="b", c22="a")) == (SINGLE[b], Letter(a))
    assert ta.uninsert(T(2, c11="b", c21="a", c22="a")) == (SINGLE[a], Triple(a, b, 1))


def test_insert_rejects_bad_events():
    with pytest.raises(ValueError):
        ta.insert(SINGLE[a], InsertionEvent(a, b, 2))
    with pytest.raises(ValueError):
        ta.insert(SINGLE[a], InsertionEvent(b, b, 1))
    with pytest.raises(ValueError):
        ta.insert(SINGLE[a], InsertionEvent(a, g, 1))


def test_uninsert_empty_fails():
    with pytest.raises(ValueError):
        ta.uninsert(ta.StaircaseTableau.empty())


def test_event_count():
    for n in range(6):
        assert len(events_for_size(n)) == 4 * (n + 1)


def test_event_parsing():
    assert InsertionEvent.parse("a") == Letter(a)
    assert InsertionEvent.parse("g,d,3") == Triple(g, d, 3)
    assert str(Triple(g, d, 3)) == "g,d,3"


def test_weight_multiplier_examples():
    assert ta.weight_multiplier(Letter(d), State("b")) == (State("bb"), Q * DELTA)
    assert ta.weight_multiplier(Letter(a), State("w")) == (State("bw"), Q * ALPHA)
    assert ta.weight_multiplier(Triple(a, b, 1), State("b")) == (State("bw"), ALPHA * BETA)
    assert ta.weight_multiplier(Letter(b), State("")) == (State("w"), BETA)


# -- enumeration against the brute-force oracle ---------------------------------


def test_small_enumerations():
    assert [t.cells for t in ta.enumerate_tableaux(1)] == [SINGLE[lab].cells for lab in Label]
    assert [ta.count(n) for n in range(5)] == [1, 4, 32, 384, 6144]
    assert ta.count(2, "ad") == 6


def test_partition_function_small():
    assert ta.partition_fn(0) == ONE
    assert ta.partition_fn(1) == ALPHA + BETA + GAMMA + DELTA


def _as_cells(labels, n):
    buf = bytearray(n * (n + 1) // 2)
    for (i, j), lab in labels.items():
        buf[i * (i - 1) // 2 + j - 1] = lab
    return bytes(buf)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_matches_backtracking(n):
    brute = brute_tableaux(n)
    assert Counter(_as_cells(t, n) for t in brute) == Counter(ta.iter_cells(n))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_weights_match_independent_fill(n):
    for t in brute_tableaux(n):
        tab = ta.StaircaseTableau(n, _as_cells(t, n))
        assert ta.weight_exponents(tab) == brute_weight(t, n)[:6]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_weights_by_type_match_oracle(n):
    ours = ta.weights_by_type(n)
    theirs = {State(w): Polynomial.from_counts(c) for w, c in brute_weights_by_type(n).items()}
    assert ours == theirs


@pytest.mark.slow
def test_enumeration_matches_backtracking_size_5():
    assert Counter(_as_cells(t, 5) for t in brute_tableaux(5)) == Counter(ta.iter_cells(5))


@pytest.mark.parametrize("allowed", ["ad", "bg", "ab", "abd"])
def test_filter_equals_post_selection(allowed):
    chars = set(allowed)
    for n in range(1, 5):
        kept = [c for c in ta.iter_cells(n) if all(x == 0 or ".abgd"[x] in chars for x in c)]
        assert sorted(kept) == sorted(ta.iter_cells(n, allowed))


# -- inversion tables -------------------------------------------------------------


def entries(*items):
    return ta.ColoredInversionTable(tuple(ta.InversionEntry(*e) for e in items))


INV_EXAMPLES = [
    (T(2, c11="b", c21="a", c22="a"), entries((0, a), (1, a, b))),
    (T(2, c11="b", c22="a"), entries((1, None, b), (0, a))),
    (SINGLE[d], entries((1, None, d))),
]


@pytest.mark.parametrize("tableau,table", INV_EXAMPLES)
def test_inversion_table_examples(tableau, table):
    assert ta.to_inversion_table(tableau) == table
    assert ta.from_inversion_table(table) == tableau


def test_inversion_table_validation():
    with pytest.raises(ValueError):
        entries((2, None, b))  # value exceeds position
    with pytest.raises(ValueError):
        entries((0, b))  # zero needs an alpha/gamma colour
    with pytest.raises(ValueError):
        entries((0, a), (1, a, g))  # pair needs beta/delta second


def test_inversion_table_json():
    table = entries((0, a), (1, a, b), (3, None, d))
    assert table.to_json() == '[{"value":0,"x":"a"},{"value":1,"x":"a","y":"b"},{"value":3,"y":"d"}]'
    assert ta.ColoredInversionTable.from_json(table.to_json()) == table


def test_q_stat_examples():
    assert ta.q_stat_gd0(entries((0, a), (2, None, b))) == 0
    assert ta.q_stat_gd0(entries((1, None, b), (0, a))) == 1
    assert ta.q_stat_gd0(entries((0, a), (1, a, b))) == 0
    assert ta.q_stat_ad0(entries((0, g))) == 0
    assert ta.q_stat_ad0(entries((1, None, b), (0, g))) == 1
    assert ta.q_stat_ad0(entries((0, g), (2, None, b))) == 0


def test_q_stat_counts_distinct_larger_values():
    table = ta.to_inversion_table(T(3, c11="b", c22="a", c31="b", c33="a"))
    assert table.values() == [1, 1, 0]
    assert ta.q_stat_gd0(table) == 1 == ta.q_degree(T(3, c11="b", c22="a", c31="b", c33="a"))


def test_q_stat_rejects_other_colours():
    with pytest.raises(ValueError):
        ta.q_stat_gd0(entries((0, g)))
    with pytest.raises(ValueError):
        ta.q_stat_ad0(entries((0, a)))


@pytest.mark.parametrize("allowed,stat", [("ab", ta.q_stat_gd0), ("bg", ta.q_stat_ad0)])
def test_q_stats_match_q_degree(allowed, stat):
    for n in range(1, 6):
        for t in ta.enumerate_tableaux(n, allowed):
            assert stat(ta.to_inversion_table(t)) == ta.q_degree(t)


def test_entry_k_admits_4k_values():
    for k in range(1, 6):
        tables = {ta.to_inversion_table(t).entries[k - 1] for t in ta.enumerate_tableaux(k)}
        assert len(tables) == 4 * k
