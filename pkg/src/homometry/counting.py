"""Rational generating functions for the number of nontrivial homometry classes.

Each generating function is a sum of terms ``P(x) / prod (1 - x^d)^e`` with
integer polynomial numerators.  Coefficients come from the linear recurrence
of each term's expanded denominator, in exact integer arithmetic, so
``h_n`` for ``n`` in the tens of thousands is immediate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .classification import ClassType, index_set

Poly = tuple[tuple[int, int], ...]  # sparse (exponent, coefficient) pairs


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _expand_denominator(factors: Sequence[tuple[int, int]]) -> list[int]:
    q = [1]
    for d, e in factors:
        one = [1] + [0] * (d - 1) + [-1]
        for _ in range(e):
            q = _poly_mul(q, one)
    return q


class CoefficientStream:
    """Maclaurin coefficients of ``numerator / denominator`` via the denominator's recurrence."""

    def __init__(self, numerator: Poly, denominator: Sequence[int]):
        if denominator[0] != 1:
            raise ValueError("denominator must have constant term 1")
        self._num = dict(numerator)
        self._den = list(denominator)
        self._coeffs: list[int] = []

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        self.extend(n)
        return self._coeffs[n]

    def extend(self, n: int) -> None:
        den = self._den
        c = self._coeffs
        for k in range(len(c), n + 1):
            v = self._num.get(k, 0)
            for t in range(1, min(k, len(den) - 1) + 1):
                if den[t]:
                    v -= den[t] * c[k - t]
            c.append(v)

    def prefix(self, n: int) -> list[int]:
        self.extend(n)
        return self._coeffs[: n + 1]


def _sup(k: int) -> str:
    return "" if k == 1 else f"^{k}"


def _mono(coef: int, exp: int, var: str) -> str:
    body = "1" if exp == 0 else f"{var}{_sup(exp)}"
    if abs(coef) == 1:
        return body
    return f"{abs(coef)}" + ("" if exp == 0 else body)


@dataclass(frozen=True)
class GFTerm:
    numerator: Poly
    denominator: tuple[tuple[int, int], ...]  # (d, multiplicity) for each factor (1 - x^d)
    _stream: list = field(default_factory=list, compare=False, repr=False)

    def stream(self) -> CoefficientStream:
        if not self._stream:
            self._stream.append(CoefficientStream(self.numerator, _expand_denominator(self.denominator)))
        return self._stream[0]

    def coefficient(self, n: int) -> int:
        return self.stream()[n]

    def substitute(self, power: int) -> GFTerm:
        """The term with ``x`` replaced by ``x^power``."""
        return GFTerm(
            tuple((e * power, c) for e, c in self.numerator),
            tuple((d * power, k) for d, k in self.denominator),
        )

    def to_text(self, var: str = "x") -> str:
        nums = [(e, c) for e, c in self.numerator if c]
        parts = []
        for idx, (e, c) in enumerate(nums):
            sign = "-" if c < 0 else ("+" if idx else "")
            parts.append(f"{' ' if idx else ''}{sign}{' ' if idx else ''}{_mono(c, e, var)}")
        num = "".join(parts)
        if len(nums) > 1:
            num = f"({num})"
        factors = "".join(f"(1-{var}{_sup(d)}){_sup(k)}" for d, k in self.denominator)
        if len(self.denominator) > 1 or any(k > 1 for _, k in self.denominator):
            factors = f"({factors})"
        return f"{num}/{factors}"


@dataclass(frozen=True)
class RationalGF:
    """A sum of :class:`GFTerm` with an overall sign per term carried in the numerators."""

    terms: tuple[GFTerm, ...]

    def coefficient(self, n: int) -> int:
        return sum(t.coefficient(n) for t in self.terms)

    def coefficients(self, n: int) -> list[int]:
        prefixes = [t.stream().prefix(n) for t in self.terms]
        return [sum(col) for col in zip(*prefixes)]

    def substitute(self, power: int) -> RationalGF:
        return RationalGF(tuple(t.substitute(power) for t in self.terms))

    def to_text(self, var: str = "x") -> str:
        out = ""
        for idx, t in enumerate(self.terms):
            text = t.to_text(var)
            if idx == 0:
                out = text
            elif text.startswith("-"):
                out += " - " + text[1:]
            else:
                out += " + " + text
        return out

    def __add__(self, other: RationalGF) -> RationalGF:
        return RationalGF(self.terms + other.terms)


def _term(num: dict[int, int], *factors: tuple[int, int]) -> GFTerm:
    return GFTerm(tuple(sorted(num.items())), tuple(factors))


_TYPE_GF = {
    ClassType.A: RationalGF((
        _term({10: 2}, (2, 1), (4, 2)),
        _term({18: -3}, (6, 1), (12, 1)),
    )),
    ClassType.B: RationalGF((_term({10: 1, 15: 4}, (5, 1), (10, 1)),)),
    ClassType.C: RationalGF((_term({12: 1}, (6, 1), (12, 1)),)),
    ClassType.D: RationalGF((_term({18: 3}, (6, 1), (12, 1)),)),
    ClassType.E: RationalGF((_term({18: 1}, (6, 1), (12, 1)),)),
    ClassType.F: RationalGF((_term({16: 4}, (8, 2)),)),
    ClassType.G: RationalGF((_term({20: 4}, (20, 1)),)),
}

THEOREM_GF = RationalGF((
    _term({10: 2}, (2, 1), (4, 2)),
    _term({10: 1, 15: 4}, (5, 1), (10, 1)),
    _term({12: 1, 18: 1}, (6, 1), (12, 1)),
    _term({16: 4}, (8, 2)),
    _term({20: 4}, (20, 1)),
))


def type_gf(kind: ClassType) -> RationalGF:
    return _TYPE_GF[kind]


def theorem_gf() -> RationalGF:
    return THEOREM_GF


def h_coefficient(n: int) -> int:
    """Number of nontrivial homometry classes of length-n bracelets with five black beads."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return THEOREM_GF.coefficient(n)


def refined_counts(n: int) -> tuple[int, int]:
    """``(pairs, triples)``: only the E family contributes triples."""
    total = h_coefficient(n)
    triples = _TYPE_GF[ClassType.E].coefficient(n)
    return total - triples, triples


def type_breakdown(n: int) -> dict[str, int]:
    return {k.tag: _TYPE_GF[k].coefficient(n) for k in ClassType}


def index_set_count(kind: ClassType, m: int) -> int:
    return len(index_set(kind, m))


# ---------------------------------------------------------------------------
# the six standard series over m >= 1, each as (name, m -> coefficient, closed form in y)

STANDARD_SERIES: tuple[tuple[str, Callable[[int], int], RationalGF], ...] = (
    ("1", lambda m: 1, RationalGF((_term({1: 1}, (1, 1)),))),
    ("floor(m/2)", lambda m: m // 2, RationalGF((_term({2: 1}, (1, 1), (2, 1)),))),
    ("m", lambda m: m, RationalGF((_term({1: 1}, (1, 2)),))),
    ("floor((m-1)/2)", lambda m: (m - 1) // 2, RationalGF((_term({3: 1}, (1, 1), (2, 1)),))),
    ("m-1", lambda m: m - 1, RationalGF((_term({2: 1}, (1, 2)),))),
    ("floor((m-1)/2)^2", lambda m: ((m - 1) // 2) ** 2, RationalGF((_term({3: 1, 5: 1}, (1, 1), (2, 2)),))),
)
