"""Cross-checks between the brute-force oracle, the classification and the counting series.

Each suite returns a :class:`VerificationReport`.  Mismatches in gated checks
make the CLI exit with 1; a counterexample to the unit-action conjecture is
reported separately and exits with 2.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Callable, Iterable

from .bracelets import BinaryBracelet, are_homometric, brute_force_classes, distance_multiset, lee_distance, long_count
from .classification import classes_for_n, lookup_type
from .counting import h_coefficient, refined_counts

ALLOWED_LONG_COUNT_PAIRS = frozenset({(0, 1), (0, 2), (1, 1), (1, 2), (2, 2)})

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_COUNTEREXAMPLE = 2


@dataclass
class VerificationReport:
    suite: str
    n_min: int
    n_max: int
    rows: list[dict] = field(default_factory=list)
    mismatches: list[dict] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def exit_code(self) -> int:
        if self.mismatches:
            return EXIT_MISMATCH
        if self.counterexamples:
            return EXIT_COUNTEREXAMPLE
        return EXIT_OK

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "ok": self.ok,
            "exit_code": self.exit_code(),
            "rows": self.rows,
            "mismatches": self.mismatches,
            "counterexamples": self.counterexamples,
            "elapsed_seconds": round(self.elapsed, 3),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    def summary(self) -> str:
        lines = [f"{self.suite}: n in [{self.n_min}, {self.n_max}]"]
        if self.rows:
            keys = list(self.rows[0])
            widths = [max(len(k), *(len(str(r.get(k, ""))) for r in self.rows)) for k in keys]
            lines.append("  ".join(k.rjust(w) for k, w in zip(keys, widths)))
            for r in self.rows:
                if any(isinstance(v, bool) and not v for v in r.values()) or len(self.rows) <= 80:
                    lines.append("  ".join(str(r.get(k, "")).rjust(w) for k, w in zip(keys, widths)))
        lines.append(f"mismatches: {len(self.mismatches)}")
        for m in self.mismatches[:20]:
            lines.append(f"  MISMATCH {json.dumps(m)}")
        if self.counterexamples:
            lines.append(f"CONJECTURE COUNTEREXAMPLES: {len(self.counterexamples)}")
            for c in self.counterexamples[:20]:
                lines.append(f"  {json.dumps(c)}")
        lines.append(f"status: {'PASS' if self.ok else 'FAIL'} (exit {self.exit_code()})")
        return "\n".join(lines)


def _map(fn: Callable, items: Iterable, threads: int) -> list:
    items = list(items)
    if threads > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _cross_check_one(n: int) -> tuple[dict, list[dict]]:
    oracle = {frozenset(c.members) for c in brute_force_classes(n)} if n >= 5 else set()
    classified = {c.member_set for c in classes_for_n(n)}
    h = h_coefficient(n)
    pairs, triples = refined_counts(n)
    oracle_triples = sum(1 for c in oracle if len(c) == 3)
    row = {
        "n": n,
        "oracle": len(oracle),
        "classes": len(classified),
        "h_n": h,
        "pairs": pairs,
        "triples": triples,
        "match": oracle == classified and len(oracle) == h and oracle_triples == triples,
    }
    problems = []
    for members in sorted(oracle - classified, key=lambda s: sorted(s)):
        problems.append({"n": n, "kind": "missing from classification", "members": sorted(str(b) for b in members)})
    for members in sorted(classified - oracle, key=lambda s: sorted(s)):
        problems.append({"n": n, "kind": "not an oracle class", "members": sorted(str(b) for b in members)})
    if len(oracle) != h:
        problems.append({"n": n, "kind": "count", "oracle": len(oracle), "h_n": h})
    if oracle_triples != triples:
        problems.append({"n": n, "kind": "triples", "oracle": oracle_triples, "series": triples})
    return row, problems


def cross_check(n_max: int, *, n_min: int = 1, threads: int = 1) -> VerificationReport:
    """Oracle, classification and generating function must agree for every ``n`` in range."""
    start = time.perf_counter()
    report = VerificationReport("cross-check", n_min, n_max)
    for row, problems in _map(_cross_check_one, range(n_min, n_max + 1), threads):
        report.rows.append(row)
        report.mismatches.extend(problems)
    report.elapsed = time.perf_counter() - start
    return report


def _long_counts_one(n: int) -> tuple[dict, list[dict]]:
    tally: dict[tuple[int, int], int] = {}
    problems = []
    classes = brute_force_classes(n) if n >= 5 else []
    for cls in classes:
        for a, b in combinations(cls.members, 2):
            pair = tuple(sorted((long_count(a), long_count(b))))
            tally[pair] = tally.get(pair, 0) + 1
            if pair not in ALLOWED_LONG_COUNT_PAIRS:
                problems.append({"n": n, "members": [str(a), str(b)], "long_counts": list(pair)})
    if n < 10 and classes:
        problems.append({"n": n, "kind": "nontrivial class below n=10", "count": len(classes)})
    row = {"n": n, "classes": len(classes)}
    row.update({f"{p}{q}": tally.get((p, q), 0) for p in range(4) for q in range(p, 4) if (p, q) in ALLOWED_LONG_COUNT_PAIRS})
    row["other"] = sum(v for k, v in tally.items() if k not in ALLOWED_LONG_COUNT_PAIRS)
    return row, problems


def check_long_count_pairs(n_max: int, *, n_min: int = 1, threads: int = 1) -> VerificationReport:
    """Every pair of homometric bracelets has long counts in the allowed set."""
    start = time.perf_counter()
    report = VerificationReport("long-counts", n_min, n_max)
    for row, problems in _map(_long_counts_one, range(n_min, n_max + 1), threads):
        report.rows.append(row)
        report.mismatches.extend(problems)
    report.elapsed = time.perf_counter() - start
    return report


def units_mod_sign(n: int) -> list[int]:
    """Representatives ``1 <= u <= n/2`` of the units of ``Z_n`` modulo ``u ~ -u``."""
    return [u for u in range(1, n // 2 + 1) if gcd(u, n) == 1]


def scale_bracelet(b: BinaryBracelet, u: int) -> BinaryBracelet:
    return BinaryBracelet.of([(u * s) % b.n for s in b.beads], b.n)


def _un_action_one(n: int) -> tuple[dict, list[dict], list[dict]]:
    problems, counter = [], []
    moved = 0
    checked = 0
    for u in units_mod_sign(n):
        for cls in classes_for_n(n):
            checked += 1
            image = [scale_bracelet(b, u) for b in cls.members]
            # multiplication by a unit permutes the distance values, so images stay homometric
            expected = tuple(sorted(lee_distance(0, u * d, n) for d in distance_multiset(cls.members[0])))
            if any(distance_multiset(b) != expected for b in image) or not all(
                are_homometric(image[0], b) for b in image[1:]
            ):
                problems.append({"n": n, "u": u, "class": cls.label(), "kind": "image not homometric"})
                continue
            found = lookup_type(image)
            if found is None:
                problems.append({"n": n, "u": u, "class": cls.label(), "kind": "image class not found",
                                 "image": sorted(str(b) for b in image)})
                continue
            kind, params = found
            if kind is not cls.kind:
                counter.append({"n": n, "u": u, "class": cls.label(),
                                "image": f"{kind.tag}({','.join(map(str, params))})"})
            elif tuple(params) != cls.params:
                moved += 1
    row = {"n": n, "units": len(units_mod_sign(n)), "class_images": checked, "moved": moved,
           "type_changes": len(counter)}
    return row, problems, counter


def un_action_experiment(n_max: int, *, n_min: int = 1, threads: int = 1) -> VerificationReport:
    """Whether multiplying by units of ``Z_n`` maps each class to a class of the same type."""
    start = time.perf_counter()
    report = VerificationReport("unit-action", n_min, n_max)
    for row, problems, counter in _map(_un_action_one, range(n_min, n_max + 1), threads):
        report.rows.append(row)
        report.mismatches.extend(problems)
        report.counterexamples.extend(counter)
    report.elapsed = time.perf_counter() - start
    return report
