"""Exact sparse polynomials in alpha, beta, gamma, delta, q, u, z."""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

VARS = ("alpha", "beta", "gamma", "delta", "q", "u", "z")
NVARS = len(VARS)
_SHORT = {"alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ", "q": "q", "u": "u", "z": "z"}
_ZERO_EXP = (0,) * NVARS


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _coeff(c):
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficient must be an exact rational, got {c!r}")
    return _norm(Fraction(c)) if not isinstance(c, int) else c


def _parse_coeff(text: str):
    return _norm(Fraction(text))


class Polynomial:
    """Immutable polynomial with exact rational coefficients.

    Terms map exponent tuples (ordered as :data:`VARS`) to nonzero
    coefficients. Integral coefficients are stored as ``int``, others as
    ``Fraction``.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != NVARS or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent tuple {exp!r}")
                c = _coeff(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> Polynomial:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> Polynomial:
        c = _coeff(c)
        return cls._raw({_ZERO_EXP: c} if c else {})

    @classmethod
    def var(cls, name: str) -> Polynomial:
        exp = [0] * NVARS
        exp[VARS.index(name)] = 1
        return cls._raw({tuple(exp): 1})

    @classmethod
    def monomial(cls, exponents: Iterable[int], coeff=1) -> Polynomial:
        """Single term; ``exponents`` may omit trailing zeros (e.g. z)."""
        exp = tuple(exponents)
        exp = exp + (0,) * (NVARS - len(exp))
        return cls({exp: coeff})

    @classmethod
    def from_counts(cls, counts: Mapping[tuple, int]) -> Polynomial:
        """Sum of monomials given as ``{exponents: multiplicity}``."""
        terms = {}
        for exp, c in counts.items():
            if c:
                exp = tuple(exp) + (0,) * (NVARS - len(exp))
                terms[exp] = terms.get(exp, 0) + c
        return cls._raw({e: c for e, c in terms.items() if c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _lift(other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return Polynomial.const(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for exp, c in b.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = _norm(v)
            else:
                out.pop(exp, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        get = out.get
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple([a + b for a, b in zip(e1, e2)])
                out[exp] = get(exp, 0) + c1 * c2
        return Polynomial._raw({e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, point) -> Fraction:
        """Exact value at a :class:`ParamPoint` (or any 7-sequence)."""
        values = point.as_tuple() if isinstance(point, ParamPoint) else tuple(point)
        powers = [dict() for _ in range(NVARS)]
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = Fraction(c)
            for k, e in enumerate(exp):
                if e:
                    cache = powers[k]
                    if e not in cache:
                        cache[e] = Fraction(values[k]) ** e
                    term *= cache[e]
            total += term
        return total

    def subs(self, **values) -> Polynomial:
        """Partially evaluate, e.g. ``p.subs(q=1, u=1)``."""
        idx = {VARS.index(k): Fraction(v) for k, v in values.items()}
        out: dict = {}
        for exp, c in self._terms.items():
            coeff = Fraction(c)
            new = list(exp)
            for k, v in idx.items():
                if exp[k]:
                    coeff *= v ** exp[k]
                new[k] = 0
            key = tuple(new)
            out[key] = out.get(key, 0) + coeff
        return Polynomial._raw({e: _norm(c) for e, c in out.items() if c})

    # -- degrees -------------------------------------------------------------

    def degree_in(self, name: str) -> int:
        k = VARS.index(name)
        return max((e[k] for e in self._terms), default=-1)

    def total_degrees(self, ignore: Iterable[str] = ()) -> set[int]:
        skip = {VARS.index(v) for v in ignore}
        return {sum(e for k, e in enumerate(exp) if k not in skip) for exp in self._terms}

    def is_homogeneous(self, degree: int | None = None, ignore: Iterable[str] = ()) -> bool:
        degs = self.total_degrees(ignore)
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def coefficients_nonnegative_integers(self) -> bool:
        return all(isinstance(c, int) and c > 0 for c in self._terms.values())

    def single_term(self) -> tuple[tuple, object]:
        if len(self._terms) != 1:
            raise ValueError("not a monomial")
        return next(iter(self._terms.items()))

    # -- serialization -------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        return sorted(self._terms.items(), reverse=True)

    def to_json_obj(self) -> dict:
        return {
            "vars": list(VARS),
            "terms": [{"coeff": str(c), "exp": list(e)} for e, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> Polynomial:
        if list(obj.get("vars", VARS)) != list(VARS):
            raise ValueError("unsupported variable order")
        return cls({tuple(t["exp"]): _parse_coeff(t["coeff"]) for t in obj["terms"]})

    @classmethod
    def from_json(cls, text: str) -> Polynomial:
        return cls.from_json_obj(json.loads(text))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "".join(
                _SHORT[v] + (f"^{e}" if e > 1 else "") for v, e in zip(VARS, exp) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Polynomial({self})"


ZERO = Polynomial._raw({})
ONE = Polynomial._raw({_ZERO_EXP: 1})
ALPHA = Polynomial.var("alpha")
BETA = Polynomial.var("beta")
GAMMA = Polynomial.var("gamma")
DELTA = Polynomial.var("delta")
Q = Polynomial.var("q")
U = Polynomial.var("u")
Z = Polynomial.var("z")


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def evaluate(p: Polynomial, point) -> Fraction:
    return p.evaluate(point)


def q_bracket(k: int, x: Polynomial = U, y: Polynomial = Q) -> Polynomial:
    """x^(k-1) + x^(k-2) y + ... + y^(k-1); zero for k = 0."""
    return sum((x ** (k - 1 - j) * y**j for j in range(k)), ZERO)


@dataclass(frozen=True)
class ParamPoint:
    """A rational value for each indeterminate; z defaults to 1."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction
    q: Fraction
    u: Fraction
    z: Fraction = Fraction(1)

    def __post_init__(self):
        for name in VARS:
            v = getattr(self, name)
            if isinstance(v, str):
                v = Fraction(v)
            elif isinstance(v, bool) or not isinstance(v, Rational):
                raise TypeError(f"{name} must be an exact rational, got {v!r}")
            object.__setattr__(self, name, Fraction(v))

    @classmethod
    def all_ones(cls) -> ParamPoint:
        return cls(1, 1, 1, 1, 1, 1)

    def as_tuple(self) -> tuple[Fraction, ...]:
        return tuple(getattr(self, v) for v in VARS)

    def swap(self, *pairs: tuple[str, str]) -> ParamPoint:
        """Exchange the values of each named pair of indeterminates."""
        changes = {}
        for a, b in pairs:
            changes[a] = getattr(self, b)
            changes[b] = getattr(self, a)
        return replace(self, **changes)

    def check_probabilities(self) -> None:
        for name in VARS[:6]:
            v = getattr(self, name)
            if not 0 <= v <= 1:
                raise ValueError(f"{name} = {v} is outside [0, 1]")

    def __str__(self):
        return ", ".join(f"{v}={getattr(self, v)}" for v in VARS[:6])
