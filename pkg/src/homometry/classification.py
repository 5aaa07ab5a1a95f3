"""The seven families of nontrivial homometry classes of five-bead bracelets.

For ``n = l * m`` each type contributes one class per parameter in its index
set.  Members are built from the closed formulas, reduced mod ``n`` and
stored canonically, so classes from different formulas can be compared as
plain sets of bracelets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterable

from .bracelets import BinaryBracelet, are_homometric


class ClassType(Enum):
    A = ("A", 2)
    B = ("B", 5)
    C = ("C", 6)
    D = ("D", 6)
    E = ("E", 6)
    F = ("F", 8)
    G = ("G", 20)

    def __init__(self, tag: str, divisor: int):
        self.tag = tag
        self.divisor = divisor

    def __str__(self) -> str:
        return self.tag

    @classmethod
    def from_tag(cls, tag: str) -> ClassType:
        return cls[tag.upper()]


Params = tuple[int, ...]


def _index_a(m: int) -> list[Params]:
    out = []
    top = (m - 1) // 2  # largest integer strictly below m/2
    for i in range(1, top + 1):
        for j in range(1, top + 1):
            if i == j:
                continue
            # "if j = m/3 then i = m/6", only meaningful when m/3 is an integer
            if 3 * j == m and 6 * i != m:
                continue
            out.append((i, j))
    return out


def _index_b(m: int) -> list[Params]:
    # the excluded points m/2, m, 3m/2, 2m, written as 2i in {m, 2m, 3m, 4m}
    return [(i,) for i in range(1, 5 * m // 2 + 1) if 2 * i not in (m, 2 * m, 3 * m, 4 * m)]


def _index_c(m: int) -> list[Params]:
    return [(i,) for i in range(1, m // 2 + 1)]


def _index_d(m: int) -> list[Params]:
    return [(i,) for i in range(1, 3 * m) if 2 * i < 3 * m and 2 * i != m and i != m]


def _index_e(m: int) -> list[Params]:
    return [(i,) for i in range(1, m) if 2 * i < m]


def _index_f(m: int) -> list[Params]:
    return [(i,) for i in range(1, 4 * m) if i not in (m, 2 * m, 3 * m)]


def _index_g(m: int) -> list[Params]:
    return [(i,) for i in range(1, 5)]


_INDEX: dict[ClassType, Callable[[int], list[Params]]] = {
    ClassType.A: _index_a,
    ClassType.B: _index_b,
    ClassType.C: _index_c,
    ClassType.D: _index_d,
    ClassType.E: _index_e,
    ClassType.F: _index_f,
    ClassType.G: _index_g,
}


@lru_cache(maxsize=256)
def _index_cached(kind: ClassType, m: int) -> tuple[tuple[Params, ...], frozenset[Params]]:
    params = tuple(_INDEX[kind](m))
    return params, frozenset(params)


def index_set(kind: ClassType, m: int) -> list[Params]:
    """Parameters of ``kind`` for ``n = l * m``, sorted."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return list(_index_cached(kind, m)[0])


def _formulas(kind: ClassType, m: int, params: Params) -> list[list[int]]:
    i = params[0]
    if kind is ClassType.A:
        j = params[1]
        return [[0, i, i + j, m + i - j, m], [0, m + i, i + j, m + i - j, m]]
    if kind is ClassType.B:
        return [[0, i, m, 2 * m, 2 * m + i], [0, i, m, m + i, 3 * m]]
    if kind is ClassType.C:
        return [[0, m + i, 2 * m, 2 * m + i, 4 * m], [0, 2 * m, 2 * m + i, 3 * m + i, 4 * m]]
    if kind is ClassType.D:
        return [[i, m - i, 2 * m, 2 * m + i, 3 * m], [0, i, m - i, 2 * m + i, 5 * m]]
    if kind is ClassType.E:
        return [
            [0, i, m + i, 2 * m + i, 3 * m],
            [0, i, m, 2 * m, 3 * m + i],
            [0, m - i, m, 2 * m, 4 * m - i],
        ]
    if kind is ClassType.F:
        return [[0, i, m, 2 * m + i, 4 * m], [0, i, m + i, 2 * m, 4 * m + i]]
    # the continuous type G pairs scaled by n = 20m; every parameter term carries the factor m
    t = i
    return [
        [0, 5 * m, 8 * m * t, 15 * m + 4 * m * t, 5 * m - 4 * m * t],
        [0, 5 * m, 4 * m * t, 15 * m + 8 * m * t, 15 * m - 4 * m * t],
    ]


@dataclass(frozen=True)
class HomometryClass:
    n: int
    kind: ClassType
    m: int
    params: Params
    members: tuple[BinaryBracelet, ...]

    @property
    def member_set(self) -> frozenset[BinaryBracelet]:
        return frozenset(self.members)

    def to_json(self) -> dict:
        out = {"n": self.n, "type": self.kind.tag, "m": self.m, "i": self.params[0]}
        if len(self.params) > 1:
            out["j"] = self.params[1]
        out["members"] = [list(b.beads) for b in self.members]
        return out

    def to_json_line(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def label(self) -> str:
        return f"{self.kind.tag}({','.join(str(p) for p in self.params)})"


def instantiate(kind: ClassType, n: int, params: Params) -> HomometryClass:
    if n % kind.divisor:
        raise ValueError(f"type {kind.tag} needs n divisible by {kind.divisor}, got {n}")
    m = n // kind.divisor
    params = tuple(params)
    if m < 1 or params not in _index_cached(kind, m)[1]:
        raise ValueError(f"parameters {params} are outside the index set of type {kind.tag} for m={m}")
    members = []
    for raw in _formulas(kind, m, params):
        residues = {v % n for v in raw}
        if len(residues) != 5:
            raise ValueError(f"type {kind.tag}{params} at n={n}: formula {raw} has coincident beads")
        members.append(BinaryBracelet.of(residues, n))
    if len(set(members)) != len(members):
        raise ValueError(f"type {kind.tag}{params} at n={n}: members coincide: {members}")
    for a in members[1:]:
        if not are_homometric(members[0], a):
            raise ValueError(f"type {kind.tag}{params} at n={n}: members are not homometric")
    return HomometryClass(n, kind, m, params, tuple(sorted(members)))


@lru_cache(maxsize=64)
def classes_for_n(n: int) -> tuple[HomometryClass, ...]:
    """Every class the seven families produce at length ``n``, by type tag then parameters."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = []
    seen: dict[BinaryBracelet, HomometryClass] = {}
    for kind in ClassType:
        if n % kind.divisor:
            continue
        for params in index_set(kind, n // kind.divisor):
            cls = instantiate(kind, n, params)
            for b in cls.members:
                if b in seen:
                    raise AssertionError(f"{b} lies in both {seen[b].label()} and {cls.label()}")
                seen[b] = cls
            out.append(cls)
    return tuple(out)


@lru_cache(maxsize=64)
def _lookup_table(n: int) -> dict[frozenset[BinaryBracelet], HomometryClass]:
    return {c.member_set: c for c in classes_for_n(n)}


def lookup_type(members: Iterable[BinaryBracelet]) -> tuple[ClassType, Params] | None:
    """Type and parameters of the class with exactly these members, or ``None``."""
    members = frozenset(members)
    if not members:
        return None
    ns = {b.n for b in members}
    if len(ns) != 1:
        raise ValueError(f"members of different lengths: {sorted(ns)}")
    found = _lookup_table(ns.pop()).get(members)
    return None if found is None else (found.kind, found.params)


def type_counts(n: int) -> dict[str, int]:
    counts = {k.tag: 0 for k in ClassType}
    for c in classes_for_n(n):
        counts[c.kind.tag] += 1
    return counts
