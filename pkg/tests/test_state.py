import itertools

import pytest

from staircase.state import State, Symmetry, apply_word_symmetry, black_count, decompose_at, decompositions, white_count


def s(word):
    return State.parse(word)


def all_words(nmax):
    for n in range(nmax + 1):
        yield from State.all(n)


def test_white_count():
    assert white_count(s("")) == 0
    assert white_count(s("••∘")) == 1
    assert white_count(s("∘∘∘∘")) == 4


def test_counts_add_up():
    for m in all_words(5):
        assert white_count(m) + black_count(m) == len(m)


@pytest.mark.parametrize(
    "word,i,prefix,letter,suffix",
    [("•∘•", 2, "•", "∘", "•"), ("•", 1, "", "•", ""), ("∘∘••", 4, "", "∘", "∘••")],
)
def test_decompose_at(word, i, prefix, letter, suffix):
    d = decompose_at(s(word), i)
    assert (d.prefix, d.letter, d.suffix) == (s(prefix), s(letter).word, s(suffix))
    assert d.join() == s(word)


def test_decompose_at_out_of_range():
    with pytest.raises(IndexError):
        decompose_at(s("bw"), 3)
    with pytest.raises(IndexError):
        decompose_at(s("bw"), 0)


def test_decomposition_lengths():
    for m in all_words(5):
        for d in decompositions(m):
            assert len(d.prefix) == len(m) - d.position
            assert len(d.suffix) == d.position - 1


def test_positions_count_from_the_right():
    m = s("bww")
    assert m.letter(1) == "w"
    assert m.letter(3) == "b"


def test_parse_and_render():
    assert str(s("•∘")) == "bw"
    assert s("bw").pretty() == "•∘"
    with pytest.raises(ValueError):
        State.parse("bx")


def test_canonical_order():
    assert [str(m) for m in State.all(2)] == ["bb", "bw", "wb", "ww"]
    assert State.all(0) == [State("")]


@pytest.mark.parametrize(
    "kind,word,image", [(Symmetry.C, "•∘", "∘•"), (Symmetry.P, "•∘∘", "∘∘•"), (Symmetry.CP, "•∘∘", "••∘")]
)
def test_word_symmetries(kind, word, image):
    assert apply_word_symmetry(s(word), kind) == s(image)


def test_symmetries_are_involutions_and_compose():
    for m in all_words(8):
        for kind in Symmetry:
            assert apply_word_symmetry(apply_word_symmetry(m, kind), kind) == m
        c_then_p = apply_word_symmetry(apply_word_symmetry(m, "C"), "P")
        p_then_c = apply_word_symmetry(apply_word_symmetry(m, "P"), "C")
        assert c_then_p == p_then_c == apply_word_symmetry(m, "CP")


def test_all_enumerates_every_word():
    assert {m.word for m in State.all(3)} == {"".join(p) for p in itertools.product("bw", repeat=3)}
