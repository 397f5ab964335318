"""ASEP states as words over {black, white}.

A state is written m = m_n ... m_1: the leftmost letter is m_n, and
position i counts from the right. Black (a particle) renders as ``b``,
white (an empty site) as ``w``; the glyphs ``•`` and ``∘`` are accepted on
input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

BLACK = "b"
WHITE = "w"
_INPUT = {"b": BLACK, "•": BLACK, "w": WHITE, "∘": WHITE, "○": WHITE}


@dataclass(frozen=True, order=True)
class State:
    word: str = ""

    def __post_init__(self):
        if any(ch not in (BLACK, WHITE) for ch in self.word):
            raise ValueError(f"state letters must be 'b' or 'w', got {self.word!r}")

    @classmethod
    def parse(cls, text: str) -> State:
        try:
            return cls("".join(_INPUT[ch] for ch in text.strip()))
        except KeyError as exc:
            raise ValueError(f"unknown state letter {exc.args[0]!r}") from None

    @classmethod
    def all(cls, n: int) -> list[State]:
        """Every state of size n, in canonical order (``b`` before ``w``)."""
        return [cls("".join(p)) for p in itertools.product(BLACK + WHITE, repeat=n)]

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return self.word

    def __add__(self, other: State) -> State:
        return State(self.word + other.word)

    def letter(self, i: int) -> str:
        """m_i, with positions counted from the right."""
        n = len(self.word)
        if not 1 <= i <= n:
            raise IndexError(f"position {i} outside [1, {n}]")
        return self.word[n - i]

    def pretty(self) -> str:
        return self.word.replace(BLACK, "•").replace(WHITE, "∘")


@dataclass(frozen=True)
class Decomposition:
    """m = U m_i V with |U| = n - i and |V| = i - 1."""

    position: int
    prefix: State
    letter: str
    suffix: State

    def join(self, letter: str | None = None) -> State:
        return State(self.prefix.word + (letter or self.letter) + self.suffix.word)


class Symmetry(Enum):
    C = "C"
    P = "P"
    CP = "CP"


def white_count(m: State) -> int:
    return m.word.count(WHITE)


def black_count(m: State) -> int:
    return m.word.count(BLACK)


def decompose_at(m: State, i: int) -> Decomposition:
    n = len(m)
    if not 1 <= i <= n:
        raise IndexError(f"position {i} outside [1, {n}]")
    w = m.word
    return Decomposition(i, State(w[: n - i]), w[n - i], State(w[n - i + 1 :]))


def decompositions(m: State) -> list[Decomposition]:
    return [decompose_at(m, i) for i in range(1, len(m) + 1)]


_FLIP = str.maketrans(BLACK + WHITE, WHITE + BLACK)


def apply_word_symmetry(m: State, kind: Symmetry | str) -> State:
    kind = Symmetry(kind)
    w = m.word
    if kind is Symmetry.C:
        return State(w.translate(_FLIP))
    if kind is Symmetry.P:
        return State(w[::-1])
    return State(w[::-1].translate(_FLIP))
