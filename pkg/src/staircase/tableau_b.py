"""Type-B staircase tableaux, stored as bottom halves.

A half tableau of size n has positive rows 1..n (row i holds columns 1..i)
and negative rows -n..-1 above them (row -i holds columns 1..i, the last one
an axis cell that is always empty). Bottom to top the rows read
1, ..., n, -n, ..., -1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from . import kernel
from .kernel import KernelError
from .poly import Polynomial
from .state import State, decompose_at, white_count
from .symbols import (
    CELL_CHARS,
    LABELS,
    InsertionEvent,
    Label,
    events_for_size,
    label_of_code,
    parse_label_set,
)
from .tableau_a import StaircaseTableau, Violation, violations

_k = kernel.active


def _row_offset(n: int, row: int) -> int:
    """Offset of ``row`` (positive or negative) in the half-tableau buffer."""
    if 1 <= row <= n:
        return row * (row - 1) // 2
    if -n <= row <= -1:
        i = -row
        # negative rows after the positive block, stored -n, ..., -1
        return n * (n + 1) // 2 + sum(range(i + 1, n + 1))
    raise IndexError(f"row {row} is outside a size-{n} half tableau")


@dataclass(frozen=True)
class HalfTableauB:
    size: int
    cells: bytes

    def __post_init__(self):
        if len(self.cells) != self.size * (self.size + 1):
            raise ValueError("cell buffer length does not match the size")

    @classmethod
    def empty(cls) -> HalfTableauB:
        return cls(0, b"")

    @classmethod
    def from_labels(cls, n: int, labels: Mapping[tuple[int, int], Label | str]) -> HalfTableauB:
        """Cells keyed (row, column); rows may be negative."""
        buf = bytearray(n * (n + 1))
        for (row, col), lab in labels.items():
            if not 1 <= col <= abs(row):
                raise ValueError(f"cell ({row}, {col}) is outside the half tableau")
            buf[_row_offset(n, row) + col - 1] = Label.parse(lab) if isinstance(lab, str) else Label(lab)
        return cls(n, bytes(buf))

    @classmethod
    def parse(cls, text: str) -> HalfTableauB:
        """Read 2n lines: rows -1, ..., -n, n, ..., 1 from top to bottom."""
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if len(lines) % 2:
            raise ValueError("a half tableau has an even number of rows")
        n = len(lines) // 2
        rows = [-i for i in range(1, n + 1)] + list(range(n, 0, -1))
        buf = bytearray(n * (n + 1))
        for row, line in zip(rows, lines):
            if len(line) != abs(row):
                raise ValueError(f"row {row} should have {abs(row)} cells, got {line!r}")
            if row < 0 and line[-1] != ".":
                raise ValueError(f"axis cell of row {row} must be '.'")
            off = _row_offset(n, row)
            for j, ch in enumerate(line):
                code = CELL_CHARS.find(ch)
                if not 0 <= code <= 4:
                    raise ValueError(f"bad cell character {ch!r}")
                buf[off + j] = code
        return cls(n, bytes(buf))

    def label(self, row: int, col: int) -> Label | None:
        if not 1 <= col <= abs(row):
            raise IndexError(f"cell ({row}, {col}) is outside the half tableau")
        return label_of_code(self.cells[_row_offset(self.size, row) + col - 1])

    def diagonal(self) -> list[Label | None]:
        return [self.label(i, i) for i in range(1, self.size + 1)]

    def to_text(self) -> str:
        n = self.size
        rows = [-i for i in range(1, n + 1)] + list(range(n, 0, -1))
        out = []
        for row in rows:
            off = _row_offset(n, row)
            out.append("".join(CELL_CHARS[c] for c in self.cells[off : off + abs(row)]))
        return "\n".join(out)

    def __str__(self):
        return self.to_text()


def expand_to_full(H: HalfTableauB) -> StaircaseTableau:
    """The psi-symmetric size-2n tableau whose bottom half is H."""
    full = StaircaseTableau(2 * H.size, _k.expand_b(H.cells, H.size))
    if not _k.is_valid_a(full.cells, full.size):
        raise ValueError("expansion is not a valid staircase tableau")
    return full


def violations_b(H: HalfTableauB) -> list[Violation]:
    n = H.size
    out = [
        Violation("axis-nonempty", (-i, i), "axis cells must be empty")
        for i in range(1, n + 1)
        if H.cells[_row_offset(n, -i) + i - 1]
    ]
    full = StaircaseTableau(2 * n, _k.expand_b(H.cells, n))
    return out + violations(full)


def validate_b(H: HalfTableauB) -> bool:
    return _k.is_valid_b(H.cells, H.size)


def _require_valid(H: HalfTableauB) -> None:
    if not _k.is_valid_b(H.cells, H.size):
        raise ValueError(f"invalid type-B half tableau: {violations_b(H)}")


def weight_exponents_b(H: HalfTableauB) -> tuple[int, ...]:
    """Exponents of (alpha, beta, gamma, delta, q, u, z)."""
    _require_valid(H)
    return _k.weight_b(H.cells, H.size)


def weight_b(H: HalfTableauB) -> Polynomial:
    return Polynomial.monomial(weight_exponents_b(H))


def type_of_b(H: HalfTableauB) -> State:
    _require_valid(H)
    return State("".join(lab.state_letter for lab in reversed(H.diagonal())))


def insert_b(H: HalfTableauB, e: InsertionEvent) -> HalfTableauB:
    _require_valid(H)
    e = InsertionEvent(*e)
    out = HalfTableauB(H.size + 1, _k.insert_b(H.cells, H.size, *e.code()))
    if not _k.is_valid_b(out.cells, out.size):
        raise KernelError("insertion produced an invalid half tableau")
    return out


def uninsert_b(H: HalfTableauB) -> tuple[HalfTableauB, InsertionEvent]:
    if H.size < 1:
        raise ValueError("the empty tableau has no insertion history")
    _require_valid(H)
    cells, x, y, i = _k.uninsert_b(H.cells, H.size)
    return HalfTableauB(H.size - 1, cells), InsertionEvent.from_code(x, y, i)


def events_for_size_b(n: int, allowed: frozenset[Label] | None = None) -> list[InsertionEvent]:
    return events_for_size(n, allowed, first=LABELS)


def iter_cells_b(n: int, allowed: Iterable[Label | str] | None = None) -> Iterator[bytes]:
    allowed = parse_label_set(allowed)
    if n == 0:
        yield b""
        return
    level = [b""]
    for size in range(n - 1):
        codes = [e.code() for e in events_for_size_b(size, allowed)]
        level = [child for cells in level for child in _k.children_b(cells, size, codes)]
    codes = [e.code() for e in events_for_size_b(n - 1, allowed)]
    for cells in level:
        yield from _k.children_b(cells, n - 1, codes)


def enumerate_b(n: int, allowed: Iterable[Label | str] | None = None) -> Iterator[HalfTableauB]:
    if n < 0:
        raise ValueError("size must be non-negative")
    for cells in iter_cells_b(n, allowed):
        if not _k.is_valid_b(cells, n):
            raise KernelError(f"insertion produced an invalid half tableau: {cells!r}")
        yield HalfTableauB(n, cells)


def count_b(n: int, allowed: Iterable[Label | str] | None = None) -> int:
    return sum(1 for _ in iter_cells_b(n, allowed))


def partition_fn_b(n: int, allowed: Iterable[Label | str] | None = None) -> Polynomial:
    counts = Counter(_k.weight_b(cells, n) for cells in iter_cells_b(n, allowed))
    return Polynomial.from_counts(counts)


def weights_by_type_b(n: int) -> dict[State, Polynomial]:
    buckets: dict[str, Counter] = {}
    diag = [i * (i + 1) // 2 - 1 for i in range(n, 0, -1)]
    for cells in iter_cells_b(n):
        word = "".join("b" if cells[o] in (1, 4) else "w" for o in diag)
        buckets.setdefault(word, Counter())[_k.weight_b(cells, n)] += 1
    return {State(w): Polynomial.from_counts(c) for w, c in sorted(buckets.items())}


_Z_EVENTS = (Label.ALPHA, Label.BETA)


def weight_multiplier_b(e: InsertionEvent, m: State) -> tuple[State, Polynomial]:
    """Type and weight factor of a type-B insertion into a tableau of type m.

    u is restored so the factor has degree 2(n + 1) when z is ignored.
    """
    e = InsertionEvent(*e)
    n = len(m)
    shift = {Label.ALPHA: n + 1, Label.BETA: 1, Label.GAMMA: 0, Label.DELTA: n}[e.x]
    exps = [0] * 7
    exps[e.x - 1] += 1
    if e.x in _Z_EVENTS:
        exps[6] = 1
    if e.is_letter:
        exps[4] = white_count(m) + shift
        target = State(e.x.state_letter + m.word)
    else:
        d = decompose_at(m, e.i)
        exps[e.y - 1] += 1
        exps[4] = white_count(d.prefix) + (len(d.suffix) if e.y is Label.DELTA else 0) + shift
        target = State(e.x.state_letter + d.join(e.y.state_letter).word)
    exps[5] = 2 * (n + 1) - sum(exps[:6])
    return target, Polynomial.monomial(exps)
