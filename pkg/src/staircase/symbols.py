"""Greek labels and insertion events shared by both tableau types."""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, NamedTuple

from .poly import ALPHA as P_ALPHA
from .poly import BETA as P_BETA
from .poly import DELTA as P_DELTA
from .poly import GAMMA as P_GAMMA
from .state import BLACK, WHITE


class Label(IntEnum):
    ALPHA = 1
    BETA = 2
    GAMMA = 3
    DELTA = 4

    @property
    def char(self) -> str:
        return "abgd"[self - 1]

    @property
    def greek(self) -> str:
        return "αβγδ"[self - 1]

    @property
    def poly(self):
        return (P_ALPHA, P_BETA, P_GAMMA, P_DELTA)[self - 1]

    @property
    def is_alpha_gamma(self) -> bool:
        return bool(self & 1)

    @property
    def state_letter(self) -> str:
        """Diagonal reading: alpha/delta give a particle, beta/gamma a hole."""
        return BLACK if self in (Label.ALPHA, Label.DELTA) else WHITE

    def psi(self) -> Label:
        return _PSI[self]

    @classmethod
    def parse(cls, text: str) -> Label:
        key = text.strip().lower()
        if key in _BY_NAME:
            return _BY_NAME[key]
        raise ValueError(f"unknown label {text!r}")

    def __str__(self):
        return self.greek


_BY_NAME = {}
for _lab in Label:
    _BY_NAME[_lab.char] = _lab
    _BY_NAME[_lab.greek] = _lab
    _BY_NAME[_lab.name.lower()] = _lab
_PSI = {
    Label.ALPHA: Label.DELTA,
    Label.DELTA: Label.ALPHA,
    Label.BETA: Label.GAMMA,
    Label.GAMMA: Label.BETA,
}
LABELS = tuple(Label)
_BY_CODE = (None,) + LABELS

CELL_CHARS = ".abgdqu"


def label_of_code(code: int) -> Label | None:
    return _BY_CODE[code]


def parse_label_set(labels: Iterable[Label | str] | str | None) -> frozenset[Label] | None:
    if labels is None:
        return None
    if isinstance(labels, str):
        labels = list(labels)
    return frozenset(x if isinstance(x, Label) else Label.parse(x) for x in labels)


class InsertionEvent(NamedTuple):
    """Letter(x) when ``i == 0``, otherwise Triple(x, y, i)."""

    x: Label
    y: Label | None = None
    i: int = 0

    @property
    def is_letter(self) -> bool:
        return self.i == 0

    def code(self) -> tuple[int, int, int]:
        return (int(self.x), int(self.y or 0), self.i)

    @classmethod
    def from_code(cls, x: int, y: int, i: int) -> InsertionEvent:
        if i == 0:
            return cls(_BY_CODE[x])
        return cls(_BY_CODE[x], _BY_CODE[y], i)

    @classmethod
    def parse(cls, text: str) -> InsertionEvent:
        """``a`` for Letter(alpha), ``a,b,3`` for Triple(alpha, beta, 3)."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) == 1:
            return Letter(Label.parse(parts[0]))
        if len(parts) == 3:
            return Triple(Label.parse(parts[0]), Label.parse(parts[1]), int(parts[2]))
        raise ValueError(f"cannot parse insertion event {text!r}")

    def __str__(self):
        if self.i == 0:
            return self.x.char
        return f"{self.x.char},{self.y.char},{self.i}"


def Letter(g: Label) -> InsertionEvent:
    return InsertionEvent(Label(g))


def Triple(x: Label, y: Label, i: int) -> InsertionEvent:
    if i < 1:
        raise ValueError("triple position must be at least 1")
    return InsertionEvent(Label(x), Label(y), i)


def events_for_size(
    n: int, allowed: frozenset[Label] | None = None, *, first: Iterable[Label] = (Label.ALPHA, Label.GAMMA)
) -> list[InsertionEvent]:
    """Insertion events into a size-n tableau, in enumeration order.

    Letters come first (alpha, beta, gamma, delta), then triples ordered by
    position, first letter, second letter. ``first`` lists the letters
    allowed in a triple's first slot.
    """
    ok = (lambda lab: True) if allowed is None else (lambda lab: lab in allowed)
    events = [Letter(g) for g in LABELS if ok(g)]
    for i in range(1, n + 1):
        for x in first:
            if not ok(x):
                continue
            for y in (Label.BETA, Label.DELTA):
                if ok(y):
                    events.append(InsertionEvent(x, y, i))
    return events
