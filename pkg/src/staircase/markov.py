"""The exclusion process as an explicit Markov chain, solved exactly.

This is the brute-force oracle for the tableau formula: build the
2^n x 2^n transition matrix over rationals and find its stationary vector
by Gaussian elimination.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .ansatz import stationary_tableaux
from .poly import ParamPoint
from .results import RationalDistribution, Report
from .state import BLACK, WHITE, State, Symmetry, apply_word_symmetry


class SolverError(ArithmeticError):
    """The chain does not have a unique stationary distribution."""


class TransitionMatrix:
    """Exact one-step probabilities between states of a fixed size."""

    def __init__(self, states: list[State], rows: list[dict[int, Fraction]]):
        self.states = states
        self.index = {s: k for k, s in enumerate(states)}
        self._rows = rows

    @property
    def size(self) -> int:
        return len(self.states)

    def __getitem__(self, key: tuple[State | str, State | str]) -> Fraction:
        a, b = (s if isinstance(s, State) else State.parse(s) for s in key)
        return self._rows[self.index[a]].get(self.index[b], Fraction(0))

    def row(self, s: State | str) -> dict[State, Fraction]:
        s = s if isinstance(s, State) else State.parse(s)
        return {self.states[j]: p for j, p in sorted(self._rows[self.index[s]].items())}

    def dense(self) -> list[list[Fraction]]:
        n = self.size
        return [[r.get(j, Fraction(0)) for j in range(n)] for r in self._rows]

    def to_json_obj(self) -> dict:
        return {
            "states": [str(s) for s in self.states],
            "rows": [{str(self.states[j]): str(p) for j, p in sorted(r.items())} for r in self._rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _moves(s: State, pt: ParamPoint):
    w = s.word
    n = len(w)
    for k in range(n - 1):
        pair = w[k : k + 2]
        if pair == BLACK + WHITE:
            yield w[:k] + WHITE + BLACK + w[k + 2 :], pt.u
        elif pair == WHITE + BLACK:
            yield w[:k] + BLACK + WHITE + w[k + 2 :], pt.q
    if w[-1] == BLACK:
        yield w[:-1] + WHITE, pt.beta
    else:
        yield w[:-1] + BLACK, pt.delta
    if w[0] == WHITE:
        yield BLACK + w[1:], pt.alpha
    else:
        yield WHITE + w[1:], pt.gamma


def transition_matrix(n: int, pt: ParamPoint) -> TransitionMatrix:
    if n < 1:
        raise ValueError("the chain needs at least one site")
    pt.check_probabilities()
    states = State.all(n)
    index = {s.word: k for k, s in enumerate(states)}
    scale = Fraction(1, n + 1)
    rows = []
    for k, s in enumerate(states):
        row: dict[int, Fraction] = {}
        out = Fraction(0)
        for target, rate in _moves(s, pt):
            if rate:
                p = rate * scale
                j = index[target]
                row[j] = row.get(j, Fraction(0)) + p
                out += p
        row[k] = 1 - out
        rows.append({j: p for j, p in row.items() if p})
    return TransitionMatrix(states, rows)


def _null_vector(a: list[list[Fraction]]) -> list[Fraction]:
    """A basis vector of the null space of a square matrix of nullity one."""
    rows, cols = len(a), len(a[0])
    a = [r[:] for r in a]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((k for k in range(r, rows) if a[k][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for k in range(rows):
            if k != r and a[k][c]:
                f = a[k][c]
                a[k] = [x - f * y for x, y in zip(a[k], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in set(pivots)]
    if len(free) != 1:
        raise SolverError(f"stationary equations have nullity {len(free)}, expected 1")
    f = free[0]
    x = [Fraction(0)] * cols
    x[f] = Fraction(1)
    for row_idx, c in enumerate(pivots):
        x[c] = -a[row_idx][f]
    return x


def stationary_exact(M: TransitionMatrix) -> RationalDistribution:
    """Solve pi M = pi, sum(pi) = 1 exactly."""
    n = M.size
    dense = M.dense()
    system = [[dense[j][i] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    x = _null_vector(system)
    total = sum(x)
    return RationalDistribution({s: v / total for s, v in zip(M.states, x)})


def _distribution_report(report: Report, inputs: dict, expected: RationalDistribution, got: RationalDistribution):
    for s in expected:
        report.record(expected[s] == got[s], {**inputs, "state": str(s)}, expected[s], got[s])


def oracle_compare(n: int, pt: ParamPoint) -> Report:
    """Markov-chain stationary vector against normalized state weights."""
    report = Report("stationary distribution = normalized state weights")
    chain = stationary_exact(transition_matrix(n, pt))
    formula = stationary_tableaux(n, pt)
    _distribution_report(report, {"n": n, "point": str(pt)}, chain, formula)
    return report


_SWAPS = {
    Symmetry.C: (("alpha", "gamma"), ("beta", "delta"), ("q", "u")),
    Symmetry.P: (("alpha", "delta"), ("beta", "gamma"), ("q", "u")),
    Symmetry.CP: (("alpha", "beta"), ("gamma", "delta")),
}


def symmetry_check(n: int, pt: ParamPoint, kinds=tuple(Symmetry)) -> Report:
    """mu_pt(m) = mu_pt'(S(m)) for each word symmetry S and its parameter swap."""
    report = Report("C/P/CP symmetries of the stationary distribution")
    base = stationary_exact(transition_matrix(n, pt))
    for kind in kinds:
        kind = Symmetry(kind)
        image = stationary_exact(transition_matrix(n, pt.swap(*_SWAPS[kind])))
        for m in base:
            sm = apply_word_symmetry(m, kind)
            report.record(
                base[m] == image[sm],
                {"symmetry": kind.value, "n": n, "point": str(pt), "state": str(m)},
                base[m],
                image[sm],
            )
    return report


__all__ = [
    "SolverError",
    "TransitionMatrix",
    "oracle_compare",
    "stationary_exact",
    "symmetry_check",
    "transition_matrix",
]
