"""Difference tables, their solution sets, and the search for a minimal covering set.

The ten symbols ``ij`` (``0 <= i < j <= 4``) stand for the differences
``x_j - x_i`` of a canonical vector, with ``x_0 = 0``.  They sit in a
staircase whose position ``ij`` covers the interval ``[i, j]``; permuting the
symbols over the positions and marking bars gives a difference table, which
encodes one way the ten distances of a bracelet with canonical vector ``x``
could match those of a second bracelet with canonical vector ``y``.

Every value here is an integer affine form in ``x``.  A :class:`Form` is a
5-tuple ``(c1, c2, c3, c4, c0)`` meaning ``c . x + c0``.
"""

from __future__ import annotations

import json
import logging
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .exactmath import (
    NVARS,
    AffineMap4,
    Cell,
    CellUnion,
    LinearConstraint,
    Parametrization,
    Rel,
    cell_within,
    coalesce,
    feasible,
    format_affine,
    parametrize,
    parse_affine,
    parse_chain,
    sample_point,
    union_contains,
)

log = logging.getLogger(__name__)

VALID_PQ = ((0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


@dataclass(frozen=True, order=True)
class DiffSymbol:
    i: int
    j: int

    def __post_init__(self):
        if not 0 <= self.i < self.j <= 4:
            raise ValueError(f"invalid difference symbol {self.i}{self.j}")

    def __str__(self) -> str:
        return f"{self.i}{self.j}"

    @classmethod
    def parse(cls, text: str) -> DiffSymbol:
        return cls(int(text[0]), int(text[1]))

    def contains(self, other: DiffSymbol) -> bool:
        """Interval containment ``[other.i, other.j] within [self.i, self.j]``."""
        return self.i <= other.i and other.j <= self.j


SYMBOLS: tuple[DiffSymbol, ...] = tuple(DiffSymbol(i, j) for i in range(5) for j in range(i + 1, 5))
INDEX = {s: k for k, s in enumerate(SYMBOLS)}
STAIRCASE_ROWS = tuple(tuple(k for k, s in enumerate(SYMBOLS) if s.i == r) for r in range(4))
# staircase positions carry the same labels as the symbols of the unpermuted table
POSITIONS = SYMBOLS

Form = tuple[int, int, int, int, int]


def _symbol_form(s: DiffSymbol) -> Form:
    c = [0] * (NVARS + 1)
    c[s.j - 1] += 1
    if s.i:
        c[s.i - 1] -= 1
    return tuple(c)


def _bar(f: Form) -> Form:
    return tuple(-v for v in f[:NVARS]) + (1 - f[NVARS],)


SYMBOL_FORMS = tuple(_symbol_form(s) for s in SYMBOLS)

_LONG = {0: frozenset(), 1: frozenset({INDEX[DiffSymbol(0, 4)]}), 2: frozenset({INDEX[DiffSymbol(0, 3)], INDEX[DiffSymbol(0, 4)]})}


def p_long_symbols(p: int) -> frozenset[DiffSymbol]:
    if p not in _LONG:
        raise ValueError(f"long count must be 0, 1 or 2, got {p}")
    return frozenset(SYMBOLS[k] for k in _LONG[p])


def _check_pq(p: int, q: int) -> None:
    if (p, q) not in VALID_PQ:
        raise ValueError(f"(p, q) = ({p}, {q}) is not one of {VALID_PQ}")


@dataclass(frozen=True)
class DifferenceTable:
    """``perm[k]`` is the index of the symbol placed at position ``k``."""

    p: int
    q: int
    perm: tuple[int, ...]
    barred: tuple[bool, ...]

    def entries(self) -> Iterator[tuple[DiffSymbol, DiffSymbol, bool]]:
        for pos, (k, bar) in enumerate(zip(self.perm, self.barred)):
            yield POSITIONS[pos], SYMBOLS[k], bar

    def entry_form(self, pos: int) -> Form:
        f = SYMBOL_FORMS[self.perm[pos]]
        return _bar(f) if self.barred[pos] else f

    def y_forms(self) -> tuple[Form, ...]:
        return tuple(self.entry_form(pos) for pos in STAIRCASE_ROWS[0])

    def to_text(self) -> str:
        """Rows of the staircase separated by ``/``; a trailing ``*`` marks a bar."""
        rows = []
        for row in STAIRCASE_ROWS:
            rows.append(" ".join(f"{SYMBOLS[self.perm[k]]}{'*' if self.barred[k] else ''}" for k in row))
        return " / ".join(rows)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "entries": {str(pos): {"symbol": str(sym), "barred": bar} for pos, sym, bar in self.entries()},
        }

    @classmethod
    def from_json(cls, data: dict) -> DifferenceTable:
        perm = tuple(INDEX[DiffSymbol.parse(data["entries"][str(pos)]["symbol"])] for pos in POSITIONS)
        table = build_table(perm, data["p"], data["q"])
        given = tuple(bool(data["entries"][str(pos)]["barred"]) for pos in POSITIONS)
        if given != table.barred:
            raise ValueError("bar flags disagree with the bar rule")
        return table


def _bars(perm: Sequence[int], p: int, q: int) -> tuple[bool, ...]:
    p_long, q_long = _LONG[p], _LONG[q]
    return tuple((perm[pos] in p_long) != (pos in q_long) for pos in range(len(perm)))


def build_table(perm: Sequence[int | DiffSymbol], p: int, q: int) -> DifferenceTable:
    """Table with ``perm[pos]`` at each position.

    A bar is toggled on every entry whose symbol is p-long and on every
    position whose original symbol is q-long; two toggles cancel.
    """
    _check_pq(p, q)
    perm = tuple(INDEX[s] if isinstance(s, DiffSymbol) else int(s) for s in perm)
    if sorted(perm) != list(range(len(SYMBOLS))):
        raise ValueError(f"not a permutation of the ten symbols: {perm}")
    return DifferenceTable(p, q, perm, _bars(perm, p, q))


def parse_table(text: str, p: int, q: int) -> DifferenceTable:
    """Inverse of :meth:`DifferenceTable.to_text`; the bars must agree with the bar rule."""
    rows = [r.split() for r in text.split("/")]
    if [len(r) for r in rows] != [4, 3, 2, 1]:
        raise ValueError(f"expected staircase rows of lengths 4,3,2,1: {text!r}")
    tokens = [t for r in rows for t in r]
    perm = [INDEX[DiffSymbol.parse(t.rstrip("*"))] for t in tokens]
    table = build_table(perm, p, q)
    printed = tuple(t.endswith("*") for t in tokens)
    if printed != table.barred:
        raise ValueError(f"printed bars {printed} disagree with the bar rule {table.barred}")
    return table


# ---------------------------------------------------------------------------
# the constraint system


def _row(lhs: Form, rel: Rel, rhs: Form) -> LinearConstraint:
    """``lhs rel rhs`` for two forms."""
    return LinearConstraint._from_ints([a - b for a, b in zip(lhs[:NVARS], rhs[:NVARS])], rhs[NVARS] - lhs[NVARS], rel)


ZERO: Form = (0, 0, 0, 0, 0)
ONE: Form = (0, 0, 0, 0, 1)


def _half_rows(f: Form, rel: Rel, other_side_is_half_left: bool = False) -> LinearConstraint:
    """``f rel 1/2`` (or ``1/2 rel f``) with everything doubled to stay integral."""
    doubled = tuple(2 * v for v in f)
    return _row(ONE, rel, doubled) if other_side_is_half_left else _row(doubled, rel, ONE)


def _long_count_rows(value, p: int) -> list[LinearConstraint]:
    """Long-count inequalities on the value function ``value(sym)`` of the seven forms involved."""
    if p == 0:
        return [_half_rows(value("04"), Rel.LE)]
    if p == 1:
        return [
            _half_rows(value("04"), Rel.LT, other_side_is_half_left=True),
            _half_rows(value("03"), Rel.LE),
            _half_rows(value("14"), Rel.LE),
        ]
    return [
        _half_rows(value("03"), Rel.LT, other_side_is_half_left=True),
        _half_rows(value("02"), Rel.LT),
        _half_rows(value("14"), Rel.LE),
    ]


def _ordering_cells(value, p: int) -> list[list[LinearConstraint]]:
    """The conditional ordering split into two convex alternatives."""
    if p in (0, 1):
        a, b = value("01"), value("34")
        c, d = value("12"), value("23")
    else:
        a, b = value("01"), _bar(value("04"))
        c, d = value("12"), value("34")
    return [[_row(a, Rel.LT, b)], [_row(a, Rel.EQ, b), _row(c, Rel.LE, d)]]


def _noncongruent_cells(x: Sequence[Form], y: Sequence[Form], p: int, q: int) -> list[list[LinearConstraint]]:
    if p != q:
        return [[_row(x[k], Rel.LT, y[k])] for k in range(NVARS)] + [[_row(y[k], Rel.LT, x[k])] for k in range(NVARS)]
    cells = []
    for k in range(NVARS):
        cells.append([_row(x[t], Rel.EQ, y[t]) for t in range(k)] + [_row(x[k], Rel.LT, y[k])])
    return cells


def base_rows(table: DifferenceTable) -> list[LinearConstraint]:
    """The unconditional part of the system: positivity, long counts, and the six sums."""
    x_value = lambda name: SYMBOL_FORMS[INDEX[DiffSymbol.parse(name)]]  # noqa: E731
    d_value = lambda name: table.entry_form(INDEX[DiffSymbol.parse(name)])  # noqa: E731
    xs = [x_value(f"0{k}") for k in range(1, 5)]
    rows = [_row(ZERO, Rel.LT, xs[0])] + [_row(xs[k], Rel.LT, xs[k + 1]) for k in range(3)]
    rows += _long_count_rows(x_value, table.p)
    for s in SYMBOLS:
        if s.j - s.i > 1:
            total = ZERO
            for d in range(s.i, s.j):
                f = d_value(f"{d}{d + 1}")
                total = tuple(a + b for a, b in zip(total, f))
            rows.append(_row(d_value(str(s)), Rel.EQ, total))
    rows += _long_count_rows(d_value, table.q)
    return rows


def constraint_cells(table: DifferenceTable) -> CellUnion:
    """The full system as a union of feasible convex cells."""
    base = Cell.of(base_rows(table))
    if not feasible(base):
        return CellUnion()
    x_value = lambda name: SYMBOL_FORMS[INDEX[DiffSymbol.parse(name)]]  # noqa: E731
    d_value = lambda name: table.entry_form(INDEX[DiffSymbol.parse(name)])  # noqa: E731
    xs = [x_value(f"0{k}") for k in range(1, 5)]
    ys = list(table.y_forms())
    cells = []
    for p_alt in _ordering_cells(x_value, table.p):
        cp = base.with_rows(p_alt)
        if not feasible(cp):
            continue
        for q_alt in _ordering_cells(d_value, table.q):
            cq = cp.with_rows(q_alt)
            if not feasible(cq):
                continue
            for nc in _noncongruent_cells(xs, ys, table.p, table.q):
                cell = cq.with_rows(nc)
                if feasible(cell):
                    cells.append(cell)
    return CellUnion(tuple(cells))


def y_map(table: DifferenceTable) -> AffineMap4:
    forms = table.y_forms()
    return AffineMap4(
        tuple(tuple(Fraction(v) for v in f[:NVARS]) for f in forms),
        tuple(Fraction(f[NVARS]) for f in forms),
    )


def y_in_parameters(ymap: AffineMap4, par: Parametrization) -> tuple[str, ...]:
    """Coordinates of ``y`` written in the free coordinates of ``par``."""
    names = [f"x{k + 1}" for k in par.free]
    ys = []
    for row, off in zip(ymap.matrix, ymap.offset):
        const = off + sum((a * b for a, b in zip(row, par.basepoint)), Fraction(0))
        terms = [(sum((a * d[i] for i, a in enumerate(row)), Fraction(0)), n) for d, n in zip(par.directions, names)]
        ys.append(format_affine(const, terms))
    return tuple(ys)


@dataclass(frozen=True)
class SolutionSet:
    x_set: CellUnion
    y_map: AffineMap4
    table: DifferenceTable | None = field(default=None, compare=False)

    @cached_property
    def witness(self):
        """A fixed point of the x-set, or ``None`` when it is empty."""
        for cell in self.x_set:
            if feasible(cell):
                return sample_point(cell)
        return None

    def is_empty(self) -> bool:
        return self.witness is None

    def pieces(self) -> list[tuple[Parametrization, tuple[str, ...]]]:
        """Parametrized pieces of the coalesced x-set with y written in the same parameters."""
        out = []
        for cell in coalesce(self.x_set).cells:
            par = parametrize(cell)
            out.append((par, y_in_parameters(self.y_map, par)))
        return out

    def to_json(self) -> list[dict]:
        out = []
        for par, ys in self.pieces():
            text = par.describe()
            x_text, _, ranges = text.partition(" : ")
            out.append({"x": x_text, "y": "(" + ", ".join(ys) + ")", "range": ranges, "dimension": par.dimension})
        return out


def solution_set(table: DifferenceTable) -> SolutionSet:
    return SolutionSet(constraint_cells(table), y_map(table), table)


def xy_subset(a: SolutionSet, b: SolutionSet) -> bool:
    """Whether every pair ``(x, y_a(x))`` of ``a`` is also a pair of ``b``."""
    w = a.witness
    if w is None:
        return True
    if b.witness is None:
        return False
    if not b.x_set.contains(w) or a.y_map(w) != b.y_map(w):
        return False
    eqs = a.y_map.difference_rows(b.y_map)
    for cell in a.x_set:
        if not feasible(cell):
            continue
        if not all(cell_within(cell, row) for row in eqs if not row.is_trivial):
            return False
    return union_contains(b.x_set, a.x_set)


def solution_sets_equal(a: SolutionSet, b: SolutionSet) -> bool:
    return xy_subset(a, b) and xy_subset(b, a)


# ---------------------------------------------------------------------------
# pruning


# pairs (sub, sup) of positions where the interval of ``sub`` is a proper subinterval of ``sup``
_NESTED = tuple(
    (a, b) for a in range(len(POSITIONS)) for b in range(len(POSITIONS)) if a != b and POSITIONS[b].contains(POSITIONS[a])
)
_NESTED_BY_LATER: dict[int, tuple[tuple[int, int], ...]] = {
    k: tuple((a, b) for a, b in _NESTED if max(a, b) == k) for k in range(len(POSITIONS))
}


def _nested_conflict(perm: Sequence[int], bars: Sequence[bool], sub: int, sup: int) -> bool:
    """Whether the entries at nested positions ``sub`` inside ``sup`` contradict the six sums.

    The six sums make every position value the sum of the diagonal values in
    its interval, all of which are positive, so the value at ``sub`` must be
    strictly smaller than the value at ``sup``.  With both entries unbarred
    the values are the symbol differences, and a symbol at ``sub`` whose
    interval contains the symbol at ``sup`` has the larger difference.  With
    both barred the values are ``1 - difference`` and the roles swap.  Mixed
    bars give no sign information and are never pruned.
    """
    s_sub, s_sup = SYMBOLS[perm[sub]], SYMBOLS[perm[sup]]
    b_sub, b_sup = bars[sub], bars[sup]
    if not b_sub and not b_sup:
        return s_sub.contains(s_sup)
    if b_sub and b_sup:
        return s_sup.contains(s_sub)
    return False


def pruned(table: DifferenceTable) -> bool:
    """A sound sufficient condition for the solution set to be empty."""
    return any(_nested_conflict(table.perm, table.barred, a, b) for a, b in _NESTED)


def _prefix_ok(perm: list[int], p: int, q: int) -> bool:
    k = len(perm) - 1
    p_long, q_long = _LONG[p], _LONG[q]
    bars = [(perm[t] in p_long) != (t in q_long) for t in range(k + 1)]
    return not any(_nested_conflict(perm, bars, a, b) for a, b in _NESTED_BY_LATER[k])


def surviving_permutations(p: int, q: int, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    """Lexicographic enumeration of permutations extending ``prefix`` that pass the pruning."""
    perm = list(prefix)
    for t in range(1, len(perm) + 1):
        if not _prefix_ok(perm[:t], p, q):
            return
    unused = [k for k in range(len(SYMBOLS)) if k not in perm]

    def walk():
        if not unused:
            yield tuple(perm)
            return
        for idx in range(len(unused)):
            k = unused.pop(idx)
            perm.append(k)
            if _prefix_ok(perm, p, q):
                yield from walk()
            perm.pop()
            unused.insert(idx, k)

    yield from walk()


# ---------------------------------------------------------------------------
# the antichain search


class Antichain:
    """Solution sets maximal under ``xy_subset`` seen so far, in insertion order."""

    def __init__(self):
        self.members: list[SolutionSet] = []
        self.considered = 0
        self.nonempty = 0

    def offer(self, sol: SolutionSet) -> bool:
        """One step of the covering loop; returns whether ``sol`` was inserted."""
        self.considered += 1
        if sol.is_empty():
            return False
        self.nonempty += 1
        if any(xy_subset(sol, m) for m in self.members):
            return False
        self.members = [m for m in self.members if not xy_subset(m, sol)]
        self.members.append(sol)
        return True

    def covers(self, sol: SolutionSet) -> bool:
        return sol.is_empty() or any(xy_subset(sol, m) for m in self.members)

    def tables(self) -> list[DifferenceTable]:
        return [m.table for m in self.members]


def _offer_perm(chain: Antichain, perm: Sequence[int], p: int, q: int) -> None:
    table = build_table(perm, p, q)
    if pruned(table):
        chain.considered += 1
        return
    chain.offer(solution_set(table))


@dataclass(frozen=True)
class SampledMode:
    count: int = 100_000
    seed: int = 0


FULL = "full"


def random_permutations(count: int, seed: int) -> Iterator[tuple[int, ...]]:
    rng = random.Random(seed)
    base = list(range(len(SYMBOLS)))
    for _ in range(count):
        rng.shuffle(base)
        yield tuple(base)


def minimal_tables(p: int, q: int, mode: SampledMode | str = FULL, *, threads: int = 1,
                   checkpoint: Path | None = None, max_chunks: int | None = None) -> Antichain:
    """Run the covering loop over tables of type ``(p, q)``.

    ``mode`` is either :data:`FULL` (all permutations in lexicographic order,
    chunked by the first two images and resumable through ``checkpoint``) or
    a :class:`SampledMode`, which seeds the loop with the reference tables
    and then offers a reproducible random sample.
    """
    _check_pq(p, q)
    if isinstance(mode, SampledMode):
        chain = Antichain()
        for name in REFERENCE_ORDER[(p, q)]:
            chain.offer(solution_set(PAPER_TABLES[name]))
        for perm in random_permutations(mode.count, mode.seed):
            _offer_perm(chain, perm, p, q)
        return chain
    if mode != FULL:
        raise ValueError(f"unknown mode {mode!r}")
    return _full_search(p, q, threads=threads, checkpoint=checkpoint, max_chunks=max_chunks)


def chunk_prefixes() -> list[tuple[int, int]]:
    return [(a, b) for a in range(len(SYMBOLS)) for b in range(len(SYMBOLS)) if a != b]


def _run_chunk(args: tuple[int, int, tuple[int, int]]) -> tuple[tuple[int, int], list[tuple[int, ...]], int]:
    p, q, prefix = args
    chain = Antichain()
    done = 0
    for perm in surviving_permutations(p, q, prefix):
        done += 1
        chain.offer(solution_set(build_table(perm, p, q)))
    return prefix, [m.table.perm for m in chain.members], done


def default_checkpoint(p: int, q: int) -> Path:
    root = Path(os.environ.get("HOMOMETRY_CHECKPOINT_DIR", ".homometry-checkpoints"))
    return root / f"minimal-tables-{p}{q}.json"


def _load_checkpoint(path: Path, p: int, q: int) -> dict:
    data = json.loads(path.read_text())
    header = data.get("header", {})
    if (header.get("p"), header.get("q"), header.get("mode")) != (p, q, FULL):
        raise ValueError(f"checkpoint {path} belongs to a different run: {header}")
    return data


def _save_checkpoint(path: Path, p: int, q: int, completed: list, done: int, chain: Antichain) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    data = {
        "header": {"p": p, "q": q, "mode": FULL, "seed": None},
        "completed_chunks": [list(c) for c in completed],
        "permutations_done": done,
        "antichain": [list(t.perm) for t in chain.tables()],
    }
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(data, indent=1))
    tmp.replace(path)


def _full_search(p: int, q: int, *, threads: int, checkpoint: Path | None, max_chunks: int | None) -> Antichain:
    chain = Antichain()
    completed: list[tuple[int, int]] = []
    done = 0
    if checkpoint is not None and checkpoint.exists():
        data = _load_checkpoint(checkpoint, p, q)
        completed = [tuple(c) for c in data["completed_chunks"]]
        done = data["permutations_done"]
        for perm in data["antichain"]:
            chain.offer(solution_set(build_table(perm, p, q)))
        log.info("resumed %s with %d chunks done", checkpoint, len(completed))
    todo = [c for c in chunk_prefixes() if c not in set(completed)]
    if max_chunks is not None:
        todo = todo[:max_chunks]
    jobs = [(p, q, c) for c in todo]

    def absorb(result):
        nonlocal done
        prefix, perms, count = result
        for perm in perms:
            chain.offer(solution_set(build_table(perm, p, q)))
        completed.append(prefix)
        done += count
        if checkpoint is not None:
            _save_checkpoint(checkpoint, p, q, completed, done, chain)
        log.info("chunk %s: %d surviving permutations, antichain size %d", prefix, count, len(chain.members))

    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for result in pool.map(_run_chunk, jobs):
                absorb(result)
    else:
        for job in jobs:
            absorb(_run_chunk(job))
    chain.considered = done
    return chain


def full_search_complete(checkpoint: Path) -> bool:
    data = json.loads(checkpoint.read_text())
    return len(data["completed_chunks"]) == len(chunk_prefixes())


# ---------------------------------------------------------------------------
# the reference tables and their recorded solution sets

_TABLE_TEXT = {
    (0, 1): {
        "A1": "01 12 13 14* / 34 24 04 / 23 03 / 02",
        "A2": "34 23 13 03* / 01 02 04 / 12 14 / 24",
        "D1": "24 12 02 04* / 23 34 14 / 01 03 / 13",
        "D2": "24 12 02 14* / 34 23 04 / 01 03 / 13",
        "D3": "02 23 24 03* / 01 12 04 / 34 14 / 13",
        "F1": "01 23 13 14* / 02 34 04 / 12 24 / 03",
        "F2": "24 12 13 02* / 01 34 04 / 23 14 / 03",
        "G1": "34 23 13 04* / 01 02 14 / 12 24 / 03",
        "G2": "12 02 13 04* / 01 23 14 / 34 03 / 24",
    },
    (0, 2): {
        "B1": "13 03 04* 14* / 01 02 24 / 12 23 / 34",
    },
    (1, 1): {
        "A3": "12 02 03 24* / 01 34 14 / 23 04* / 13",
        "B2": "01 02 04* 14* / 12 34 24 / 13 03 / 23",
        "B3": "12 13 03 02* / 23 34 14 / 01 04* / 24",
        "B6": "02 04* 03 12* / 01 23 14 / 34 13 / 24",
        "F3": "34 23 03 13* / 01 24 14 / 02 04* / 12",
    },
    (1, 2): {
        "C": "02 03 14* 04 / 23 01 24 / 13 34 / 12",
        "D4": "02 03 14* 24* / 23 34 04* / 13 01 / 12",
        "G3": "03 24 14* 04 / 12 01 34 / 13 02 / 23",
        "G4": "12 04* 14* 03* / 24 13 02 / 01 34 / 23",
    },
    (2, 2): {
        "B4": "24 03* 04 02* / 01 13 14 / 12 23 / 34",
        "B5": "12 03* 04 02* / 24 13 14 / 01 23 / 34",
        "F4": "12 23 03 24* / 34 04* 14 / 02 13 / 01",
    },
}

REFERENCE_ORDER = {pq: tuple(names) for pq, names in _TABLE_TEXT.items()}
PAPER_TABLES: dict[str, DifferenceTable] = {
    name: parse_table(text, *pq) for pq, group in _TABLE_TEXT.items() for name, text in group.items()
}
TABLE_PQ = {name: pq for pq, group in _TABLE_TEXT.items() for name in group}

# x as affine expressions in x1..x4, y in the same variables, and the region as
# alternative lists of inequality chains.  The second A2 piece carries a
# corrected lower bound; see the notes on reference data.
_RECORDED = {
    "A1": (("x1", "x2", "1/2 + 2x1 - x2", "1/2"), ("x1", "x2 - x1", "1/2 + x1 - x2", "1/2 + x1"),
           [["0 < 3x1 < x2 < x1 + 1/4"], ["0 < 3x1 = x2 <= 1/4"]]),
    "A2": (("2x3 - x2 - 1/2", "x2", "x3", "1/2"), ("1/2 - x3", "x3 - x2", "1/2 + x2 - x3", "1 - x3"),
           [["x2 < 2x3 - 1/2 < 2x2", "3x3 - 1 < x2"], ["1/8 < 3x3 - 1 = x2 <= 1/4"]]),
    "D1": (("2x2 - 1/2", "x2", "1/3", "1/6 + x2"), ("1/6", "1/2 - x2", "x2", "5/6 - x2"), [["1/4 < x2 < 1/3"]]),
    "D2": (("2x2 - 1/2", "x2", "2x2 - 1/6", "1/6 + x2"), ("1/6", "1/2 - x2", "x2", "1/3 + x2"), [["1/4 < x2 < 5/18"]]),
    "D3": (("x1", "1/6", "1/3 + x1", "1/2 - x1"), ("1/6", "1/6 + x1", "1/3 - x1", "2/3 - x1"), [["0 < x1 <= 1/18"]]),
    "F1": (("x1", "1/8", "1/4 + x1", "1/2"), ("x1", "1/8 + x1", "1/4", "1/2 + x1"), [["0 < x1 < 1/8"]]),
    "F2": (("x1", "1/4 + x1", "3/8", "1/2"), ("1/4 - x1", "1/4", "3/8 - x1", "3/4 - x1"), [["0 < x1 < 1/8"]]),
    "G1": (("1/20", "2/20", "6/20", "9/20"), ("3/20", "4/20", "5/20", "11/20"), [[]]),
    "G2": (("1/20", "4/20", "7/20", "9/20"), ("3/20", "4/20", "6/20", "11/20"), [[]]),
    "B1": (("x1", "1/5", "2/5", "2/5 + x1"), ("2/5 - x1", "2/5", "3/5 - x1", "3/5"), [["0 < x1 < 1/10"]]),
    "A3": (("x1", "2x3 - 1/2", "x3", "1/2 + x1"), ("2x3 - x1 - 1/2", "2x3 - 1/2", "x3", "2x3 - x1"),
           [["0 < x1 < x3 - 1/4 < 1/4"]]),
    "B2": (("x1", "1/5", "1/5 + x1", "3/5"), ("x1", "1/5", "2/5", "2/5 + x1"), [["1/10 < x1 < 1/5"]]),
    "B3": (("x1", "1/5 + x1", "2/5", "3/5"), ("1/5", "2/5 - x1", "2/5", "4/5 - x1"), [["1/10 <= x1 < 1/5"]]),
    "B6": (("1/10", "3/10", "5/10", "6/10"), ("3/10", "4/10", "5/10", "8/10"), [[]]),
    "F3": (("x1", "1/4", "3/8 + x1", "1/2 + x1"), ("1/8", "1/8 + x1", "3/8 + x1", "5/8"), [["0 < x1 < 1/8"]]),
    "C": (("x1", "1/3", "1/6 + x1", "2/3"), ("1/3", "1/6 + x1", "1/3 + x1", "2/3"), [["1/6 < x1 <= 1/4"]]),
    "D4": (("x1", "2x1 - 1/6", "1/6 + x1", "2/3"), ("2x1 - 1/6", "1/6 + x1", "1/3 + x1", "1/6 + 2x1"),
           [["1/6 < x1 <= 1/4"]]),
    "G3": (("4/20", "5/20", "7/20", "13/20"), ("7/20", "8/20", "11/20", "13/20"), [[]]),
    "G4": (("2/20", "7/20", "8/20", "11/20"), ("5/20", "9/20", "11/20", "12/20"), [[]]),
    "B4": (("1/5", "x2", "1/5 + x2", "3/5"), ("3/5 - x2", "4/5 - x2", "3/5", "1 - x2"), [["3/10 < x2 < 2/5"]]),
    "B5": (("x1", "1/5 + x1", "2/5 + x1", "3/5"), ("1/5", "3/5 - x1", "3/5", "4/5 - x1"), [["1/10 < x1 < 1/5"]]),
    "F4": (("1/8", "x2", "1/4 + x2", "5/8"), ("x2 - 1/8", "1/4", "1/4 + x2", "3/8 + x2"), [["1/4 < x2 < 3/8"]]),
}


def recorded_solution_set(name: str) -> SolutionSet:
    """The solution set of a reference table as written in closed form."""
    xs, ys, pieces = _RECORDED[name]
    links = []
    for k, text in enumerate(xs):
        coeffs, const = parse_affine(text)
        coeffs = list(coeffs)
        coeffs[k] -= 1
        links.append(LinearConstraint.make(coeffs, -const, Rel.EQ))
    cells = []
    for chains in pieces:
        rows = list(links)
        for chain in chains:
            rows += parse_chain(chain)
        cells.append(Cell.of(rows))
    forms = [parse_affine(t) for t in ys]
    ymap = AffineMap4(tuple(c for c, _ in forms), tuple(k for _, k in forms))
    return SolutionSet(CellUnion(tuple(cells)).pruned(), ymap, PAPER_TABLES[name])


# ---------------------------------------------------------------------------
# intersections


@dataclass(frozen=True)
class Intersection:
    a: str
    b: str
    x_set: CellUnion
    y_a: AffineMap4
    y_b: AffineMap4


def pairwise_intersections(names: Iterable[str] | None = None) -> list[Intersection]:
    """Nonempty intersections of x-sets over pairs of reference tables with the same ``p``."""
    names = list(PAPER_TABLES) if names is None else list(names)
    sols = {n: solution_set(PAPER_TABLES[n]) for n in names}
    out = []
    for idx, a in enumerate(names):
        for b in names[idx + 1:]:
            if TABLE_PQ[a][0] != TABLE_PQ[b][0]:
                continue
            inter = sols[a].x_set.intersect(sols[b].x_set)
            if len(inter):
                out.append(Intersection(a, b, inter, sols[a].y_map, sols[b].y_map))
    return out


def triple_intersections(names: Iterable[str] | None = None) -> list[tuple[str, str, str, CellUnion]]:
    """Nonempty intersections over triples of distinct reference tables with the same ``p``."""
    names = list(PAPER_TABLES) if names is None else list(names)
    sols = {n: solution_set(PAPER_TABLES[n]) for n in names}
    out = []
    for i, a in enumerate(names):
        for j in range(i + 1, len(names)):
            b = names[j]
            if TABLE_PQ[a][0] != TABLE_PQ[b][0]:
                continue
            ab = sols[a].x_set.intersect(sols[b].x_set)
            if not len(ab):
                continue
            for c in names[j + 1:]:
                if TABLE_PQ[c][0] != TABLE_PQ[a][0]:
                    continue
                abc = ab.intersect(sols[c].x_set)
                if len(abc):
                    out.append((a, b, c, abc))
    return out
