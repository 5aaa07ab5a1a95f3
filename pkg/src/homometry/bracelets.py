"""Binary bracelets with five black beads, and five-point configurations on the circle.

Discrete objects live in ``Z_n``; continuous ones are exact rationals in
``[0, 1)``.  The brute-force oracle at the bottom groups every bracelet of a
given length by its distance multiset and is the ground truth against which
the classification and the generating function are checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

K = 5
HALF = Fraction(1, 2)

DistanceMultiset = tuple  # sorted 10-tuple of ints (discrete) or Fractions (continuous)


def lee_distance(a: int, b: int, n: int) -> int:
    d = abs(a - b) % n
    return min(d, n - d)


def circle_distance(t: Fraction, u: Fraction) -> Fraction:
    d = abs(Fraction(t) - Fraction(u))
    return min(d, 1 - d)


def _gaps(beads: Sequence[int], n: int) -> tuple[int, ...]:
    s = sorted(beads)
    return tuple(s[i + 1] - s[i] for i in range(len(s) - 1)) + (s[0] + n - s[-1],)


def _from_gaps(gaps: Sequence[int]) -> tuple[int, ...]:
    out = [0]
    for g in gaps[:-1]:
        out.append(out[-1] + g)
    return tuple(out)


def canonicalize(beads: Iterable[int], n: int) -> tuple[int, ...]:
    """Lexicographically least sorted representative containing 0 of the dihedral orbit.

    Only images anchored at a bead can start with 0, and comparing sorted
    anchored tuples is the same as comparing their gap sequences, so the ten
    rotations of the gap cycle and of its reversal suffice.
    """
    residues = {b % n for b in beads}
    if len(residues) != K:
        raise ValueError(f"expected {K} distinct residues mod {n}, got {sorted(residues)}")
    gaps = _gaps(sorted(residues), n)
    rev = gaps[::-1]
    best = min(min(g[i:] + g[:i] for i in range(K)) for g in (gaps, rev))
    return _from_gaps(best)


@dataclass(frozen=True, order=True)
class BinaryBracelet:
    """A dihedral orbit of a 5-subset of ``Z_n``, stored by its canonical form."""

    n: int
    beads: tuple[int, ...]

    def __post_init__(self):
        canon = canonicalize(self.beads, self.n)
        if canon != tuple(self.beads):
            object.__setattr__(self, "beads", canon)

    @classmethod
    def of(cls, beads: Iterable[int], n: int) -> BinaryBracelet:
        return cls(n, tuple(beads))

    def __str__(self) -> str:
        return f"{self.n}:[{','.join(str(b) for b in self.beads)}]"

    @classmethod
    def parse(cls, text: str) -> BinaryBracelet:
        n_text, body = text.split(":", 1)
        beads = [int(b) for b in body.strip().strip("[]").split(",")]
        return cls.of(beads, int(n_text))

    def scaled(self) -> PointConfig:
        return PointConfig(tuple(Fraction(b, self.n) for b in self.beads))


def distance_multiset(b: BinaryBracelet) -> DistanceMultiset:
    return tuple(sorted(lee_distance(s, t, b.n) for s, t in combinations(b.beads, 2)))


def format_multiset(d: DistanceMultiset) -> str:
    return ",".join(str(v) for v in d)


def are_homometric(a: BinaryBracelet, b: BinaryBracelet) -> bool:
    if a.n != b.n:
        raise ValueError(f"bracelets of different lengths {a.n} and {b.n}")
    return distance_multiset(a) == distance_multiset(b)


# ---------------------------------------------------------------------------
# continuous configurations


@dataclass(frozen=True)
class PointConfig:
    points: tuple[Fraction, ...]

    def __post_init__(self):
        pts = tuple(Fraction(p) % 1 for p in self.points)
        if len(pts) != K or len(set(pts)) != K:
            raise ValueError(f"need {K} distinct points in [0, 1), got {pts}")
        object.__setattr__(self, "points", pts)

    def distances(self) -> DistanceMultiset:
        return tuple(sorted(circle_distance(s, t) for s, t in combinations(self.points, 2)))

    def anchored(self) -> list[tuple[Fraction, ...]]:
        """The ten sorted representatives containing 0: each point moved to 0, with and without reflection."""
        reps = []
        for a in self.points:
            reps.append(tuple(sorted((s - a) % 1 for s in self.points)))
            reps.append(tuple(sorted((a - s) % 1 for s in self.points)))
        return reps


@dataclass(frozen=True)
class CanonicalVector:
    long_count: int
    x: tuple[Fraction, Fraction, Fraction, Fraction]


def _long_differences(rep: Sequence[Fraction]) -> int:
    return sum(1 for s, t in combinations(rep, 2) if abs(t - s) > HALF)


def long_count_continuous(cfg: PointConfig) -> int:
    """Long count in {0, 1, 2, 3}.

    For a representative anchored at a bead, the differences exceeding 1/2
    are exactly the chords separating the centre from the arc just before
    that bead, so the least count over the five anchors is the number of
    chords a ray from the centre must cross to leave the pentagon.
    """
    reps = [tuple(sorted((s - a) % 1 for s in cfg.points)) for a in cfg.points]
    return min(_long_differences(rep) for rep in reps)


def satisfies_canonical_inequalities(x: Sequence[Fraction], p: int) -> bool:
    """The ordering, long-count and tie-break inequalities of a canonical vector."""
    x1, x2, x3, x4 = x
    if not 0 < x1 < x2 < x3 < x4 < 1:
        return False
    if p == 0:
        long_ok = x4 <= HALF
    elif p == 1:
        long_ok = x4 > HALF and x3 <= HALF and x4 - x1 <= HALF
    elif p == 2:
        long_ok = x3 > HALF and x2 < HALF and x4 - x1 <= HALF
    else:
        raise ValueError(f"no canonical vector for long count {p}")
    if not long_ok:
        return False
    if p in (0, 1):
        a, b = x1, x4 - x3
        tie_lo, tie_hi = x2 - x1, x3 - x2
    else:
        a, b = x1, 1 - x4
        tie_lo, tie_hi = x2 - x1, x4 - x3
    return a < b or (a == b and tie_lo <= tie_hi)


def canonical_candidates(cfg: PointConfig, p: int) -> list[tuple[Fraction, ...]]:
    """Anchored representatives whose nonzero coordinates satisfy the canonical inequalities for ``p``."""
    found = []
    for rep in cfg.anchored():
        x = rep[1:]
        if satisfies_canonical_inequalities(x, p) and x not in found:
            found.append(x)
    return found


def canonical_vector(cfg: PointConfig) -> CanonicalVector:
    p = long_count_continuous(cfg)
    if p == 3:
        raise ValueError("configurations with long count 3 have no canonical vector")
    found = canonical_candidates(cfg, p)
    if len(found) != 1:
        raise AssertionError(f"expected one canonical representative, found {found}")
    return CanonicalVector(p, found[0])


def long_count(b: BinaryBracelet) -> int:
    """Discrete long count: that of the scaled configuration ``beads / n``."""
    reps = [sorted((s - a) % b.n for s in b.beads) for a in b.beads]
    return min(sum(1 for s, t in combinations(rep, 2) if 2 * (t - s) > b.n) for rep in reps)


# ---------------------------------------------------------------------------
# enumeration and the brute-force oracle


def _anchored_subsets(n: int) -> np.ndarray:
    """All 5-subsets of Z_n containing 0, as an (N, 5) int64 array in lexicographic order."""
    flat = np.fromiter(
        (v for combo in combinations(range(1, n), K - 1) for v in combo),
        dtype=np.int64,
    )
    rows = flat.reshape(-1, K - 1)
    return np.hstack([np.zeros((rows.shape[0], 1), dtype=np.int64), rows])


def _canonical_mask(beads: np.ndarray, n: int) -> np.ndarray:
    nxt = np.hstack([beads[:, 1:], beads[:, :1] + n])
    gaps = nxt - beads
    base = np.int64(n + 1)

    def key(g: np.ndarray) -> np.ndarray:
        return ((g[:, 0] * base + g[:, 1]) * base + g[:, 2]) * base + g[:, 3]

    own = key(gaps)
    best = own.copy()
    rev = gaps[:, ::-1]
    for g in (gaps, rev):
        for i in range(K):
            best = np.minimum(best, key(np.roll(g, -i, axis=1)))
    return own == best


def canonical_array(n: int) -> np.ndarray:
    """Canonical forms of every bracelet of length n, lexicographically sorted."""
    if n < K:
        return np.zeros((0, K), dtype=np.int64)
    beads = _anchored_subsets(n)
    return beads[_canonical_mask(beads, n)]


def enumerate_bracelets(n: int) -> Iterator[BinaryBracelet]:
    for row in canonical_array(n):
        yield BinaryBracelet(n, tuple(int(v) for v in row))


def _multiset_array(beads: np.ndarray, n: int) -> np.ndarray:
    cols = []
    for i, j in combinations(range(K), 2):
        d = np.abs(beads[:, j] - beads[:, i])
        cols.append(np.minimum(d, n - d))
    return np.sort(np.stack(cols, axis=1), axis=1)


@dataclass(frozen=True)
class HomometryClassRaw:
    n: int
    distances: DistanceMultiset
    members: tuple[BinaryBracelet, ...]


def brute_force_classes(n: int) -> list[HomometryClassRaw]:
    """Every nontrivial homometry class of length-n bracelets, sorted by distance multiset."""
    beads = canonical_array(n)
    if beads.shape[0] == 0:
        return []
    ms = _multiset_array(beads, n)
    keys, inverse, counts = np.unique(ms, axis=0, return_inverse=True, return_counts=True)
    inverse = inverse.reshape(-1)
    out = []
    for group in np.flatnonzero(counts >= 2):
        rows = beads[inverse == group]
        members = tuple(BinaryBracelet(n, tuple(int(v) for v in r)) for r in rows)
        out.append(HomometryClassRaw(n, tuple(int(v) for v in keys[group]), tuple(sorted(members))))
    return out


def burnside_count(n: int) -> int:
    """Number of bracelets of length n with five black beads, by Burnside over D_2n."""
    from math import comb, gcd

    if n < K:
        return 0
    fixed = 0
    for r in range(n):
        c = n // gcd(n, r)  # cycle length of rotation by r
        if K % c == 0:
            fixed += comb(n // c, K // c)
    # reflections: with n odd each has one fixed bead; with n even half fix two beads, half none
    if n % 2:
        fixed += n * comb((n - 1) // 2, (K - 1) // 2)
    else:
        half = n // 2
        fixed += half * comb(half - 1, (K - 1) // 2) * 2  # two fixed beads, choose one of them black
        fixed += half * 0  # no fixed beads: an odd number of black beads is impossible
    return fixed // (2 * n)
