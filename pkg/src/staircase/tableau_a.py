"""Staircase tableaux (type A) and their insertion bijection.

Cells are addressed (i, j) with 1 <= j <= i <= n: row i from the bottom,
column j from the left, diagonal cell (i, i). Tableaux are immutable;
operations return new values.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple

from . import kernel
from .kernel import KernelError
from .poly import Polynomial
from .state import State, decompose_at, white_count
from .symbols import (
    CELL_CHARS,
    InsertionEvent,
    Label,
    events_for_size,
    label_of_code,
    parse_label_set,
)

_k = kernel.active


def _index(i: int, j: int) -> int:
    return i * (i - 1) // 2 + j - 1


@dataclass(frozen=True)
class StaircaseTableau:
    size: int
    cells: bytes

    def __post_init__(self):
        if len(self.cells) != self.size * (self.size + 1) // 2:
            raise ValueError("cell buffer length does not match the size")

    @classmethod
    def empty(cls) -> StaircaseTableau:
        return cls(0, b"")

    @classmethod
    def from_labels(cls, n: int, labels: Mapping[tuple[int, int], Label | str]) -> StaircaseTableau:
        buf = bytearray(n * (n + 1) // 2)
        for (i, j), lab in labels.items():
            if not 1 <= j <= i <= n:
                raise ValueError(f"cell ({i}, {j}) is outside a size-{n} tableau")
            buf[_index(i, j)] = Label.parse(lab) if isinstance(lab, str) else Label(lab)
        return cls(n, bytes(buf))

    @classmethod
    def parse(cls, text: str) -> StaircaseTableau:
        """Read the text form: top row first, ``a b g d .`` per cell."""
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        n = len(lines)
        buf = bytearray(n * (n + 1) // 2)
        for t, line in enumerate(lines):
            i = n - t
            if len(line) != i:
                raise ValueError(f"row {i} should have {i} cells, got {line!r}")
            for j, ch in enumerate(line, start=1):
                code = CELL_CHARS.find(ch)
                if not 0 <= code <= 4:
                    raise ValueError(f"bad cell character {ch!r}")
                buf[_index(i, j)] = code
        return cls(n, bytes(buf))

    def label(self, i: int, j: int) -> Label | None:
        if not 1 <= j <= i <= self.size:
            raise IndexError(f"cell ({i}, {j}) is outside a size-{self.size} tableau")
        return label_of_code(self.cells[_index(i, j)])

    def labels(self) -> dict[tuple[int, int], Label]:
        out = {}
        for i in range(1, self.size + 1):
            for j in range(1, i + 1):
                c = self.cells[_index(i, j)]
                if c:
                    out[(i, j)] = label_of_code(c)
        return out

    def diagonal(self) -> list[Label | None]:
        """Labels of c_1, ..., c_n."""
        return [label_of_code(self.cells[_index(i, i)]) for i in range(1, self.size + 1)]

    def to_text(self) -> str:
        return _render(self.cells, self.size)

    def __str__(self):
        return self.to_text()


def _render(cells: bytes, n: int) -> str:
    rows = []
    for i in range(n, 0, -1):
        start = _index(i, 1)
        rows.append("".join(CELL_CHARS[c] for c in cells[start : start + i]))
    return "\n".join(rows)


@dataclass(frozen=True)
class FilledTableau:
    """A tableau with every empty cell assigned ``q`` or ``u``."""

    tableau: StaircaseTableau
    cells: bytes

    def symbol(self, i: int, j: int) -> str:
        return CELL_CHARS[self.cells[_index(i, j)]]

    def to_text(self) -> str:
        return _render(self.cells, self.tableau.size)


class Violation(NamedTuple):
    rule: str
    cell: tuple[int, int]
    detail: str


def violations(T: StaircaseTableau) -> list[Violation]:
    """Every broken placement rule, in row-major order."""
    n = T.size
    out = []
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            c = T.cells[_index(i, j)]
            if c > 4:
                out.append(Violation("bad-symbol", (i, j), f"cell code {c}"))
                continue
            if i == j and not c:
                out.append(Violation("diagonal-unlabeled", (i, i), "diagonal cells must be labeled"))
            if c and c & 1:
                for k in range(i + 1, n + 1):
                    if T.cells[_index(k, j)]:
                        out.append(
                            Violation("above-alpha-gamma", (k, j), f"cell above {label_of_code(c)} at ({i}, {j})")
                        )
            if c and not c & 1:
                for k in range(1, j):
                    if T.cells[_index(i, k)]:
                        out.append(
                            Violation("left-of-beta-delta", (i, k), f"cell left of {label_of_code(c)} at ({i}, {j})")
                        )
    return out


def validate(T: StaircaseTableau) -> bool:
    return _k.is_valid_a(T.cells, T.size)


def _require_valid(T: StaircaseTableau) -> None:
    if not _k.is_valid_a(T.cells, T.size):
        raise ValueError(f"invalid staircase tableau: {violations(T)}")


def fill(T: StaircaseTableau) -> FilledTableau:
    _require_valid(T)
    return FilledTableau(T, _k.fill_a(T.cells, T.size))


def weight_exponents(T: StaircaseTableau) -> tuple[int, ...]:
    """Exponents of (alpha, beta, gamma, delta, q, u) in the weight."""
    _require_valid(T)
    return _k.weight_a(T.cells, T.size)


def weight(T: StaircaseTableau) -> Polynomial:
    return Polynomial.monomial(weight_exponents(T))


def type_of(T: StaircaseTableau) -> State:
    _require_valid(T)
    return State("".join(lab.state_letter for lab in reversed(T.diagonal())))


def insert(T: StaircaseTableau, e: InsertionEvent) -> StaircaseTableau:
    _require_valid(T)
    e = InsertionEvent(*e)
    if e.i and not e.x.is_alpha_gamma:
        raise ValueError("a triple's first letter must be alpha or gamma")
    out = StaircaseTableau(T.size + 1, _k.insert_a(T.cells, T.size, *e.code()))
    if not _k.is_valid_a(out.cells, out.size):
        raise KernelError("insertion produced an invalid tableau")
    return out


def uninsert(T: StaircaseTableau) -> tuple[StaircaseTableau, InsertionEvent]:
    if T.size < 1:
        raise ValueError("the empty tableau has no insertion history")
    _require_valid(T)
    cells, x, y, i = _k.uninsert_a(T.cells, T.size)
    return StaircaseTableau(T.size - 1, cells), InsertionEvent.from_code(x, y, i)


def iter_cells(n: int, allowed: Iterable[Label | str] | None = None) -> Iterator[bytes]:
    """Raw cell buffers of every size-n tableau, in insertion-tree order."""
    allowed = parse_label_set(allowed)
    level = [b""]
    for size in range(n - 1):
        codes = [e.code() for e in events_for_size(size, allowed)]
        level = [child for cells in level for child in _k.children_a(cells, size, codes)]
    if n == 0:
        yield b""
        return
    codes = [e.code() for e in events_for_size(n - 1, allowed)]
    for cells in level:
        yield from _k.children_a(cells, n - 1, codes)


def enumerate_tableaux(n: int, allowed: Iterable[Label | str] | None = None) -> Iterator[StaircaseTableau]:
    """Every size-n tableau once; with ``allowed``, only those using those labels."""
    if n < 0:
        raise ValueError("size must be non-negative")
    for cells in iter_cells(n, allowed):
        if not _k.is_valid_a(cells, n):
            raise KernelError(f"insertion produced an invalid tableau: {cells!r}")
        yield StaircaseTableau(n, cells)


def count(n: int, allowed: Iterable[Label | str] | None = None) -> int:
    return sum(1 for _ in iter_cells(n, allowed))


def partition_fn(n: int, allowed: Iterable[Label | str] | None = None) -> Polynomial:
    """Sum of weights over size-n tableaux (u kept symbolic)."""
    weigh = _k.weight_a
    counts = Counter(weigh(cells, n) for cells in iter_cells(n, allowed))
    return Polynomial.from_counts(counts)


def weights_by_type(n: int) -> dict[State, Polynomial]:
    """Sum of tableau weights grouped by type."""
    buckets: dict[str, Counter] = {}
    offs = [_index(i, i) for i in range(n, 0, -1)]
    for cells in iter_cells(n):
        word = "".join("b" if cells[o] in (1, 4) else "w" for o in offs)
        buckets.setdefault(word, Counter())[_k.weight_a(cells, n)] += 1
    return {State(w): Polynomial.from_counts(c) for w, c in sorted(buckets.items())}


def weight_multiplier(e: InsertionEvent, m: State) -> tuple[State, Polynomial]:
    """Type and weight factor gained by inserting ``e`` into a tableau of type m.

    u is restored so the factor has total degree n + 1.
    """
    e = InsertionEvent(*e)
    n = len(m)
    exps = [0] * 6
    if e.is_letter:
        exps[e.x - 1] += 1
        if e.x.is_alpha_gamma:
            exps[4] = white_count(m)
        elif e.x is Label.DELTA:
            exps[4] = n
        target = State(e.x.state_letter + m.word)
    else:
        d = decompose_at(m, e.i)
        exps[e.x - 1] += 1
        exps[e.y - 1] += 1
        exps[4] = white_count(d.prefix) + (len(d.suffix) if e.y is Label.DELTA else 0)
        target = State(e.x.state_letter + d.join(e.y.state_letter).word)
    exps[5] = n + 1 - sum(exps)
    return target, Polynomial.monomial(exps)


# -- coloured inversion tables ----------------------------------------------


class InversionEntry(NamedTuple):
    value: int
    x: Label | None = None
    y: Label | None = None

    def __str__(self):
        colors = ",".join(c.char for c in (self.x, self.y) if c is not None)
        return f"{self.value}_{colors}"


@dataclass(frozen=True)
class ColoredInversionTable:
    entries: tuple[InversionEntry, ...]

    def __post_init__(self):
        for k, entry in enumerate(self.entries, start=1):
            _check_entry(k, entry)

    def __len__(self):
        return len(self.entries)

    def values(self) -> list[int]:
        return [e.value for e in self.entries]

    def labels_used(self) -> set[Label]:
        return {c for e in self.entries for c in (e.x, e.y) if c is not None}

    def to_json_obj(self) -> list[dict]:
        out = []
        for e in self.entries:
            obj = {"value": e.value}
            if e.x is not None:
                obj["x"] = e.x.char
            if e.y is not None:
                obj["y"] = e.y.char
            out.append(obj)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: list) -> ColoredInversionTable:
        entries = []
        for item in obj:
            x = Label.parse(item["x"]) if item.get("x") else None
            y = Label.parse(item["y"]) if item.get("y") else None
            entries.append(InversionEntry(int(item["value"]), x, y))
        return cls(tuple(entries))

    @classmethod
    def from_json(cls, text: str) -> ColoredInversionTable:
        return cls.from_json_obj(json.loads(text))

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def _check_entry(k: int, entry: InversionEntry) -> None:
    v, x, y = entry
    ag = x is not None and x.is_alpha_gamma
    bd = y is not None and not y.is_alpha_gamma
    if v == 0 and k > 0 and ag and y is None:
        return
    if v == k and bd and x is None:
        return
    if 0 < v < k and ag and bd:
        return
    raise ValueError(f"entry {k} = {entry} has an illegal value/colour combination")


def _entry_from_event(k: int, code: tuple[int, int, int]) -> InversionEntry:
    x, y, i = code
    if i:
        return InversionEntry(i, label_of_code(x), label_of_code(y))
    if x & 1:
        return InversionEntry(0, label_of_code(x))
    return InversionEntry(k, None, label_of_code(x))


def _event_from_entry(k: int, entry: InversionEntry) -> tuple[int, int, int]:
    if entry.value == 0:
        return (int(entry.x), 0, 0)
    if entry.value == k:
        return (int(entry.y), 0, 0)
    return (int(entry.x), int(entry.y), entry.value)


def to_inversion_table(T: StaircaseTableau) -> ColoredInversionTable:
    _require_valid(T)
    codes = _k.decompose_a(T.cells, T.size)
    return ColoredInversionTable(tuple(_entry_from_event(k, c) for k, c in enumerate(codes, start=1)))


def from_inversion_table(I: ColoredInversionTable) -> StaircaseTableau:
    if not isinstance(I, ColoredInversionTable):
        I = ColoredInversionTable(tuple(InversionEntry(*e) for e in I))
    codes = [_event_from_entry(k, e) for k, e in enumerate(I.entries, start=1)]
    return StaircaseTableau(len(codes), _k.compose_a(codes))


def _require_colors(I: ColoredInversionTable, allowed: set[Label]) -> None:
    extra = I.labels_used() - allowed
    if extra:
        names = ", ".join(sorted(lab.greek for lab in extra))
        raise ValueError(f"statistic undefined with colours {names}")


def q_stat_gd0(I: ColoredInversionTable) -> int:
    """Sum over k of the number of distinct earlier values exceeding v_k.

    Matches the q-degree when gamma = delta = 0. Repeated larger values count
    once: (1, 1, 0) scores 1, not 2.
    """
    _require_colors(I, {Label.ALPHA, Label.BETA})
    v = I.values()
    return sum(len({v[j] for j in range(k) if v[j] > v[k]}) for k in range(len(v)))


def q_stat_ad0(I: ColoredInversionTable) -> int:
    """Sum of max(i - 1 - v_i, 0); matches the q-degree when alpha = delta = 0."""
    _require_colors(I, {Label.BETA, Label.GAMMA})
    return sum(max(i - 1 - v, 0) for i, v in enumerate(I.values(), start=1))


def q_degree(T: StaircaseTableau) -> int:
    return weight_exponents(T)[4]


__all__ = [
    "ColoredInversionTable",
    "FilledTableau",
    "InversionEntry",
    "StaircaseTableau",
    "Violation",
    "count",
    "enumerate_tableaux",
    "fill",
    "from_inversion_table",
    "insert",
    "iter_cells",
    "partition_fn",
    "q_degree",
    "q_stat_ad0",
    "q_stat_gd0",
    "to_inversion_table",
    "type_of",
    "uninsert",
    "validate",
    "violations",
    "weight",
    "weight_exponents",
    "weight_multiplier",
    "weights_by_type",
]
