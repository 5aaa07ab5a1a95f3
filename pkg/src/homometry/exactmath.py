"""Exact rational polyhedral cells in four variables.

A :class:`Cell` is a conjunction of linear constraints ``a.x REL c`` over
``Q^4`` with ``REL`` one of ``=``, ``<``, ``<=``.  Every constraint is stored
in primitive integer form (coefficients and constant scaled by a positive
rational so that they are coprime integers), which keeps Fourier-Motzkin
elimination in plain integer arithmetic while denoting exactly the same
rational halfspace.

Nothing in this module touches floating point.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Iterator, Sequence

Rational = Fraction
QVec4 = tuple[Fraction, Fraction, Fraction, Fraction]

NVARS = 4


class Rel(str, Enum):
    EQ = "="
    LT = "<"
    LE = "<="


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True, order=True)
class LinearConstraint:
    """``coeffs . x  relation  constant`` in primitive integer form."""

    coeffs: tuple[int, int, int, int]
    constant: int
    relation: Rel

    @classmethod
    def make(cls, coeffs: Sequence, constant, relation: Rel | str) -> LinearConstraint:
        relation = Rel(relation)
        values = [Fraction(v) for v in coeffs] + [Fraction(constant)]
        if len(values) != NVARS + 1:
            raise ValueError(f"expected {NVARS} coefficients, got {len(values) - 1}")
        den = reduce(_lcm, (v.denominator for v in values), 1)
        ints = [int(v * den) for v in values]
        return cls._from_ints(ints[:NVARS], ints[NVARS], relation)

    @classmethod
    def _from_ints(cls, coeffs: Sequence[int], constant: int, relation: Rel) -> LinearConstraint:
        g = reduce(gcd, coeffs, abs(constant))
        if g > 1:
            coeffs = [c // g for c in coeffs]
            constant //= g
        if relation is Rel.EQ:
            lead = next((c for c in coeffs if c), constant)
            if lead < 0:
                coeffs = [-c for c in coeffs]
                constant = -constant
        return cls(tuple(coeffs), constant, relation)

    @property
    def is_trivial(self) -> bool:
        return not any(self.coeffs)

    def holds_trivially(self) -> bool:
        """Truth value of an all-zero row ``0 REL constant``."""
        if self.relation is Rel.EQ:
            return self.constant == 0
        if self.relation is Rel.LT:
            return 0 < self.constant
        return 0 <= self.constant

    def lhs(self, point: Sequence) -> Fraction:
        return sum((Fraction(a) * Fraction(v) for a, v in zip(self.coeffs, point)), Fraction(0))

    def satisfied_by(self, point: Sequence) -> bool:
        value = self.lhs(point)
        if self.relation is Rel.EQ:
            return value == self.constant
        if self.relation is Rel.LT:
            return value < self.constant
        return value <= self.constant

    def negations(self) -> tuple[LinearConstraint, ...]:
        """Constraints whose union is the complement of this one."""
        neg = [-c for c in self.coeffs]
        if self.relation is Rel.LE:
            return (LinearConstraint._from_ints(neg, -self.constant, Rel.LT),)
        if self.relation is Rel.LT:
            return (LinearConstraint._from_ints(neg, -self.constant, Rel.LE),)
        return (
            LinearConstraint._from_ints(list(self.coeffs), self.constant, Rel.LT),
            LinearConstraint._from_ints(neg, -self.constant, Rel.LT),
        )

    def to_text(self) -> str:
        coeffs = " ".join(str(c) for c in self.coeffs)
        return f"{coeffs} {self.relation.value} {self.constant}"

    @classmethod
    def from_text(cls, line: str) -> LinearConstraint:
        parts = line.split()
        if len(parts) != NVARS + 2:
            raise ValueError(f"malformed constraint line: {line!r}")
        return cls.make([Fraction(p) for p in parts[:NVARS]], Fraction(parts[-1]), parts[NVARS])


FALSE = LinearConstraint((0, 0, 0, 0), 0, Rel.LT)


def _normalize(rows: Iterable[LinearConstraint]) -> tuple[LinearConstraint, ...]:
    """Drop vacuous rows, keep the tightest of parallel inequalities.

    Returns ``(FALSE,)`` as soon as a contradiction is visible.
    """
    eqs: set[LinearConstraint] = set()
    tight: dict[tuple[int, ...], LinearConstraint] = {}
    eq_keys: dict[tuple[int, ...], int] = {}
    for row in rows:
        if row.is_trivial:
            if row.holds_trivially():
                continue
            return (FALSE,)
        if row.relation is Rel.EQ:
            previous = eq_keys.get(row.coeffs)
            if previous is not None and previous != row.constant:
                return (FALSE,)
            eq_keys[row.coeffs] = row.constant
            eqs.add(row)
            continue
        old = tight.get(row.coeffs)
        if old is None or row.constant < old.constant or (
            row.constant == old.constant and row.relation is Rel.LT
        ):
            tight[row.coeffs] = row
    # opposite parallel inequalities: a.x <= c and -a.x <= -c' with c' > c
    for coeffs, row in tight.items():
        opp = tight.get(tuple(-c for c in coeffs))
        if opp is None:
            continue
        # a.x (<,<=) c and a.x (>,>=) -opp.constant
        low, high = -opp.constant, row.constant
        if low > high or (low == high and (row.relation is Rel.LT or opp.relation is Rel.LT)):
            return (FALSE,)
    return tuple(sorted(eqs | set(tight.values())))


@dataclass(frozen=True)
class Cell:
    """Convex set ``{x in Q^4 : every constraint holds}``.

    All-zero rows are normalized away at construction; a cell that is
    recognisably contradictory stores the single row ``0 < 0``.
    """

    constraints: tuple[LinearConstraint, ...] = ()

    @classmethod
    def of(cls, rows: Iterable[LinearConstraint]) -> Cell:
        return cls(_normalize(rows))

    def __and__(self, other: Cell) -> Cell:
        return Cell.of(self.constraints + other.constraints)

    def with_rows(self, rows: Iterable[LinearConstraint]) -> Cell:
        return Cell.of(self.constraints + tuple(rows))

    def contains(self, point: Sequence) -> bool:
        return all(row.satisfied_by(point) for row in self.constraints)

    @property
    def obviously_empty(self) -> bool:
        return self.constraints == (FALSE,)

    def to_text(self) -> str:
        return "\n".join(row.to_text() for row in self.constraints)

    @classmethod
    def from_text(cls, text: str) -> Cell:
        rows = [LinearConstraint.from_text(line) for line in text.splitlines() if line.strip()]
        return cls.of(rows)


@dataclass(frozen=True)
class CellUnion:
    cells: tuple[Cell, ...] = ()

    @classmethod
    def of(cls, cells: Iterable[Cell]) -> CellUnion:
        return cls(tuple(cells))

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def contains(self, point: Sequence) -> bool:
        return any(cell.contains(point) for cell in self.cells)

    def is_empty(self) -> bool:
        return not any(feasible(cell) for cell in self.cells)

    def pruned(self) -> CellUnion:
        return CellUnion(tuple(c for c in self.cells if feasible(c)))

    def intersect(self, other: CellUnion) -> CellUnion:
        out = []
        for a in self.cells:
            for b in other.cells:
                c = a & b
                if feasible(c):
                    out.append(c)
        return CellUnion(tuple(out))


@dataclass(frozen=True)
class AffineMap4:
    """``x -> matrix . x + offset`` with exact rational entries."""

    matrix: tuple[QVec4, QVec4, QVec4, QVec4]
    offset: QVec4

    def __call__(self, point: Sequence) -> QVec4:
        return tuple(
            sum((a * Fraction(v) for a, v in zip(row, point)), Fraction(0)) + b
            for row, b in zip(self.matrix, self.offset)
        )

    def difference_rows(self, other: AffineMap4) -> list[LinearConstraint]:
        """Equations stating ``self(x) == other(x)`` coordinate-wise."""
        rows = []
        for r1, r2, b1, b2 in zip(self.matrix, other.matrix, self.offset, other.offset):
            rows.append(LinearConstraint.make([a - b for a, b in zip(r1, r2)], b2 - b1, Rel.EQ))
        return rows


# ---------------------------------------------------------------------------
# elimination

_Row = tuple[int, int, int, int, int, Rel]


def _as_rows(cell: Cell) -> list[_Row]:
    return [(*row.coeffs, row.constant, row.relation) for row in cell.constraints]


def _from_row(row: _Row) -> LinearConstraint:
    return LinearConstraint._from_ints(row[:NVARS], row[NVARS], row[NVARS + 1])


def _combine(r: _Row, s: _Row, k: int) -> _Row:
    """Positive combination of ``r`` (coefficient > 0 at k) and ``s`` (< 0 at k)."""
    a, b = r[k], -s[k]
    coeffs = [b * r[i] + a * s[i] for i in range(NVARS)]
    constant = b * r[NVARS] + a * s[NVARS]
    rel = Rel.LT if Rel.LT in (r[NVARS + 1], s[NVARS + 1]) else Rel.LE
    return (*coeffs, constant, rel)


def _substitute(eq: _Row, row: _Row, k: int) -> _Row:
    """Eliminate variable k from ``row`` using the equation ``eq``."""
    e, r = eq[k], row[k]
    if e < 0:
        eq = tuple(-v for v in eq[: NVARS + 1]) + (eq[NVARS + 1],)
        e = -e
    vals = [e * row[i] - r * eq[i] for i in range(NVARS + 1)]
    return (*vals, row[NVARS + 1])


def _eliminate_rows(rows: list[LinearConstraint], k: int) -> tuple[LinearConstraint, ...]:
    raw = [(*row.coeffs, row.constant, row.relation) for row in rows]
    pivot = next((r for r in raw if r[NVARS + 1] is Rel.EQ and r[k] != 0), None)
    if pivot is not None:
        out = [_substitute(pivot, r, k) if r[k] else r for r in raw if r is not pivot]
    else:
        pos = [r for r in raw if r[k] > 0]
        neg = [r for r in raw if r[k] < 0]
        out = [r for r in raw if r[k] == 0]
        out.extend(_combine(r, s, k) for r in pos for s in neg)
    return _normalize(_from_row(r) for r in out)


def eliminate(cell: Cell, var_index: int) -> Cell:
    """Exact projection of ``cell`` along the variable ``x_{var_index}`` (1-based).

    The returned cell no longer involves that variable.  Equations with a
    nonzero pivot are used for substitution; otherwise Fourier-Motzkin
    combines every lower with every upper bound, and a combination is strict
    when either parent is strict.
    """
    if not 1 <= var_index <= NVARS:
        raise ValueError(f"var_index must be in 1..{NVARS}")
    if cell.obviously_empty:
        return cell
    return Cell(_eliminate_rows(list(cell.constraints), var_index - 1))


def _elimination_order(rows: Sequence[LinearConstraint], remaining: set[int]) -> int:
    for r in rows:
        if r.relation is Rel.EQ:
            for k in sorted(remaining):
                if r.coeffs[k]:
                    return k
    best, best_cost = None, None
    for k in sorted(remaining):
        pos = sum(1 for r in rows if r.coeffs[k] > 0)
        neg = sum(1 for r in rows if r.coeffs[k] < 0)
        cost = pos * neg - pos - neg
        if best_cost is None or cost < best_cost:
            best, best_cost = k, cost
    return best


def feasible(cell: Cell) -> bool:
    """True iff some rational point satisfies every constraint of ``cell``."""
    rows = cell.constraints
    remaining = {k for k in range(NVARS) if any(r.coeffs[k] for r in rows)}
    while True:
        if rows == (FALSE,):
            return False
        if not remaining:
            return True
        k = _elimination_order(rows, remaining)
        rows = _eliminate_rows(list(rows), k)
        remaining = {j for j in remaining if j != k and any(r.coeffs[j] for r in rows)}


# ---------------------------------------------------------------------------
# set operations


def subtract(a: Cell, b: Cell) -> CellUnion:
    """Disjoint decomposition of ``a \\ b`` into feasible cells."""
    pieces = []
    prefix = a
    for row in b.constraints:
        for neg in row.negations():
            piece = prefix.with_rows([neg])
            if feasible(piece):
                pieces.append(piece)
        prefix = prefix.with_rows([row])
        if not feasible(prefix):
            break
    return CellUnion(tuple(pieces))


def union_contains(big: CellUnion, small: CellUnion) -> bool:
    """True iff every point of ``small`` lies in ``big``."""
    for cell in small:
        residue = [cell] if feasible(cell) else []
        for other in big:
            if not residue:
                break
            residue = [piece for r in residue for piece in subtract(r, other).cells]
        if residue:
            return False
    return True


def cell_within(cell: Cell, row: LinearConstraint) -> bool:
    """True iff every point of ``cell`` satisfies ``row``."""
    return not any(feasible(cell.with_rows([neg])) for neg in row.negations())


def _weakenings(row: LinearConstraint) -> tuple[LinearConstraint, ...]:
    """``row`` followed by the weaker rows it implies, strongest first."""
    if row.relation is Rel.LT:
        return (row, LinearConstraint._from_ints(list(row.coeffs), row.constant, Rel.LE))
    if row.relation is Rel.EQ:
        up = LinearConstraint._from_ints(list(row.coeffs), row.constant, Rel.LE)
        down = LinearConstraint._from_ints([-c for c in row.coeffs], -row.constant, Rel.LE)
        return (row, up, down)
    return (row,)


def _hull_rows(a: Cell, b: Cell) -> list[LinearConstraint]:
    rows = []
    for own, other in ((a, b), (b, a)):
        for row in own.constraints:
            weak = _weakenings(row)
            if row.relation is Rel.EQ:
                rows += [w for w in weak if cell_within(other, w)][:1] or [w for w in weak[1:] if cell_within(other, w)]
            else:
                rows += next(([w] for w in weak if cell_within(other, w)), [])
    return rows


def coalesce(union: CellUnion) -> CellUnion:
    """Merge cells whose union is itself convex; drop contained cells.

    Two cells are replaced by the cell of rows of either one (weakened from
    strict to non-strict, or from an equation to one of its halves, where
    needed) that the other satisfies, whenever that hull is covered by the
    two cells.  The surviving cells have redundant rows removed.
    """
    cells = [c for c in union.cells if feasible(c)]
    changed = True
    while changed:
        changed = False
        for i in range(len(cells)):
            for j in range(len(cells)):
                if i == j:
                    continue
                a, b = cells[i], cells[j]
                if union_contains(CellUnion((b,)), CellUnion((a,))):
                    del cells[i]
                    changed = True
                    break
                hull = Cell.of(_hull_rows(a, b))
                if union_contains(CellUnion((a, b)), CellUnion((hull,))):
                    cells[i] = hull
                    del cells[j]
                    changed = True
                    break
            if changed:
                break
    return CellUnion(tuple(simplify(c) for c in cells))


# ---------------------------------------------------------------------------
# points and parametrizations


def _bounds_1d(rows: Iterable[LinearConstraint], k: int, values: dict[int, Fraction]):
    """Bounds on x_k from rows whose other variables are fixed in ``values``."""
    lo = hi = None
    lo_strict = hi_strict = False
    exact = None
    for row in rows:
        a = row.coeffs[k]
        rest = sum((Fraction(row.coeffs[j]) * values[j] for j in values if row.coeffs[j]), Fraction(0))
        if a == 0:
            continue
        bound = (Fraction(row.constant) - rest) / a
        if row.relation is Rel.EQ:
            exact = bound
            continue
        strict = row.relation is Rel.LT
        if a > 0:
            if hi is None or bound < hi or (bound == hi and strict):
                hi, hi_strict = bound, strict
        else:
            if lo is None or bound > lo or (bound == lo and strict):
                lo, lo_strict = bound, strict
    return exact, lo, lo_strict, hi, hi_strict


def sample_point(cell: Cell, rng: random.Random | None = None) -> QVec4:
    """A rational point of ``cell``; random within the cell when ``rng`` is given.

    Raises ``ValueError`` when the cell is empty.
    """
    if not feasible(cell):
        raise ValueError("cannot sample an infeasible cell")
    stages = [cell.constraints]
    order = []
    rows = cell.constraints
    remaining = set(range(NVARS))
    while remaining:
        k = _elimination_order(rows, remaining)
        order.append(k)
        rows = _eliminate_rows(list(rows), k)
        stages.append(rows)
        remaining.discard(k)
    values: dict[int, Fraction] = {}
    for depth in range(NVARS - 1, -1, -1):
        k = order[depth]
        exact, lo, lo_strict, hi, hi_strict = _bounds_1d(stages[depth], k, values)
        if exact is not None:
            values[k] = exact
            continue
        if lo is not None and hi is not None:
            if lo == hi:
                values[k] = lo
            elif rng is None:
                values[k] = (lo + hi) / 2
            else:
                values[k] = lo + (hi - lo) * Fraction(rng.randint(1, 999), 1000)
        elif lo is not None:
            values[k] = lo + (Fraction(rng.randint(1, 9)) if rng else 1)
        elif hi is not None:
            values[k] = hi - (Fraction(rng.randint(1, 9)) if rng else 1)
        else:
            values[k] = Fraction(rng.randint(-9, 9)) if rng else Fraction(0)
    point = tuple(values[k] for k in range(NVARS))
    assert cell.contains(point), "back-substitution left the cell"
    return point


@dataclass(frozen=True)
class Bound:
    lower: Fraction | None
    upper: Fraction | None
    lower_strict: bool
    upper_strict: bool

    def to_text(self, name: str) -> str:
        left = "" if self.lower is None else f"{format_rational(self.lower)} {'<' if self.lower_strict else '<='} "
        right = "" if self.upper is None else f" {'<' if self.upper_strict else '<='} {format_rational(self.upper)}"
        return f"{left}{name}{right}"


@dataclass(frozen=True)
class Parametrization:
    """``x = basepoint + sum_k z_k * directions[k]`` over a parameter region.

    Parameter ``z_k`` is the coordinate ``x_{free[k]}`` itself, so
    ``directions[k]`` has a 1 in that coordinate.  ``bounds[k]`` is the exact
    projection of the region onto ``z_k``; ``region`` holds the full region as
    constraints on those free coordinates (other coefficients zero).
    """

    basepoint: QVec4
    directions: tuple[QVec4, ...]
    free: tuple[int, ...]
    bounds: tuple[Bound, ...]
    region: Cell

    @property
    def dimension(self) -> int:
        return len(self.directions)

    def point(self, params: Sequence) -> QVec4:
        out = list(self.basepoint)
        for z, d in zip(params, self.directions):
            for i in range(NVARS):
                out[i] += Fraction(z) * d[i]
        return tuple(out)

    def describe(self) -> str:
        names = [f"x{k + 1}" for k in self.free]
        coords = []
        for i in range(NVARS):
            coords.append(format_affine(self.basepoint[i], [(d[i], n) for d, n in zip(self.directions, names)]))
        text = "(" + ", ".join(coords) + ")"
        if self.dimension == 1:
            text += " : " + self.bounds[0].to_text(names[0])
        elif self.directions:
            text += " : " + ", ".join(format_row(r) for r in simplify(self.region).constraints)
        return text


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_affine(const: Fraction, terms: list[tuple[Fraction, str]]) -> str:
    """Render ``const + sum coef * name``; a positive constant leads, a negative one trails."""
    parts = []
    for coef, name in terms:
        if coef == 0:
            continue
        mag = Fraction(abs(coef))
        num = "" if mag.numerator == 1 else str(mag.numerator)
        body = f"{num}{name}" + ("" if mag.denominator == 1 else f"/{mag.denominator}")
        parts.append(("-" if coef < 0 else "+", body))
    parts.sort(key=lambda part: part[0] == "-")
    if const > 0 or (const == 0 and not parts):
        parts.insert(0, ("+", format_rational(const)))
    elif const < 0:
        parts.append(("-", format_rational(-const)))
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def format_row(row: LinearConstraint, names: Sequence[str] | None = None) -> str:
    """Human form of a constraint, solved for its highest-index variable."""
    names = names or [f"x{k + 1}" for k in range(NVARS)]
    k = max(i for i in range(NVARS) if row.coeffs[i])
    a = Fraction(row.coeffs[k])
    rhs = [(-Fraction(row.coeffs[i]) / a, names[i]) for i in range(k) if row.coeffs[i]]
    const = Fraction(row.constant) / a
    if row.relation is Rel.EQ:
        rel = "="
    elif a > 0:
        rel = "<" if row.relation is Rel.LT else "<="
    else:
        rel = ">" if row.relation is Rel.LT else ">="
    return f"{names[k]} {rel} {format_affine(const, rhs)}"


def simplify(cell: Cell) -> Cell:
    """Same set with redundant rows removed (rows implied by the remaining ones)."""
    rows = list(cell.constraints)
    if rows == [FALSE]:
        return cell
    k = 0
    while k < len(rows):
        rest = Cell.of(rows[:k] + rows[k + 1:])
        if cell_within(rest, rows[k]):
            del rows[k]
        else:
            k += 1
    return Cell.of(rows)


def implicit_equalities(cell: Cell) -> Cell:
    """Same set, with every inequality that is tight on the whole cell made an equation."""
    rows = []
    for row in cell.constraints:
        if row.relation is Rel.LE:
            strict = LinearConstraint._from_ints(list(row.coeffs), row.constant, Rel.LT)
            if not feasible(cell.with_rows([strict])):
                row = LinearConstraint._from_ints(list(row.coeffs), row.constant, Rel.EQ)
        rows.append(row)
    return Cell.of(rows)


def parametrize(cell: Cell) -> Parametrization:
    """Affine-hull parametrization of a feasible cell.

    Pivots are taken on the highest-index variables so that the free
    parameters are the lowest-index coordinates.
    """
    if not feasible(cell):
        raise ValueError("cannot parametrize an infeasible cell")
    cell = implicit_equalities(cell)
    eqs = [
        [Fraction(c) for c in row.coeffs] + [Fraction(row.constant)]
        for row in cell.constraints
        if row.relation is Rel.EQ
    ]
    pivots: dict[int, list[Fraction]] = {}
    for col in range(NVARS - 1, -1, -1):
        src = next((r for r in eqs if r[col] != 0), None)
        if src is None:
            continue
        eqs.remove(src)
        src = [v / src[col] for v in src]
        eqs = [[v - r[col] * s for v, s in zip(r, src)] for r in eqs]
        for p, prow in pivots.items():
            if prow[col] != 0:
                pivots[p] = [v - prow[col] * s for v, s in zip(prow, src)]
        pivots[col] = src
    free = tuple(k for k in range(NVARS) if k not in pivots)
    base = [Fraction(0)] * NVARS
    dirs = {k: [Fraction(0)] * NVARS for k in free}
    for k in free:
        dirs[k][k] = Fraction(1)
    for p, prow in pivots.items():
        # x_p + sum_{free f} prow[f] x_f = prow[const]
        base[p] = prow[NVARS]
        for f in free:
            dirs[f][p] = -prow[f]
    directions = tuple(tuple(dirs[k]) for k in free)
    region_rows = []
    for row in cell.constraints:
        if row.relation is Rel.EQ:
            continue
        coeffs = [Fraction(0)] * NVARS
        const = Fraction(row.constant)
        for i, a in enumerate(row.coeffs):
            if not a:
                continue
            const -= a * base[i]
            for f in free:
                coeffs[f] += a * dirs[f][i]
        region_rows.append(LinearConstraint.make(coeffs, const, row.relation))
    region = Cell.of(region_rows)
    bounds = []
    for f in free:
        projected = region
        for g in free:
            if g != f:
                projected = eliminate(projected, g + 1)
        _, lo, lo_s, hi, hi_s = _bounds_1d(projected.constraints, f, {})
        bounds.append(Bound(lo, hi, lo_s, hi_s))
    return Parametrization(tuple(base), directions, free, tuple(bounds), region)


# ---------------------------------------------------------------------------
# a small text syntax for affine forms, used for reference data and the CLI

_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*(x[1-4])?")


def parse_affine(text: str) -> tuple[tuple[Fraction, ...], Fraction]:
    """Parse ``"1/2 + 2x1 - x2"`` into ``(coefficients, constant)``."""
    coeffs = [Fraction(0)] * NVARS
    const = Fraction(0)
    s = text.replace(" ", "")
    pos = 0
    if not s:
        raise ValueError("empty affine expression")
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse affine expression {text!r} at {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        value = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            coeffs[int(m.group(3)[1]) - 1] += sign * value
        else:
            const += sign * value
        pos = m.end()
    return tuple(coeffs), const


_REL_SPLIT = re.compile(r"(<=|<|=)")


def parse_chain(text: str) -> list[LinearConstraint]:
    """Parse a chain like ``"0 < 3x1 <= x2 < x1 + 1/4"`` into constraints."""
    parts = _REL_SPLIT.split(text)
    exprs = [parse_affine(p) for p in parts[0::2]]
    rels = parts[1::2]
    rows = []
    for (lc, lk), rel, (rc, rk) in zip(exprs, rels, exprs[1:]):
        rows.append(LinearConstraint.make([a - b for a, b in zip(lc, rc)], rk - lk, Rel(rel)))
    return rows
