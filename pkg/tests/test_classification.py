from __future__ import annotations

import json

import pytest

from homometry.bracelets import BinaryBracelet, are_homometric, brute_force_classes, canonicalize
from homometry.classification import (
    ClassType,
    _formulas,
    classes_for_n,
    index_set,
    instantiate,
    lookup_type,
    type_counts,
)
from homometry.counting import h_coefficient


def b(beads, n):
    return BinaryBracelet.of(beads, n)


def test_divisors():
    assert [(k.tag, k.divisor) for k in ClassType] == [
        ("A", 2), ("B", 5), ("C", 6), ("D", 6), ("E", 6), ("F", 8), ("G", 20)
    ]
    assert ClassType.from_tag("E") is ClassType.E


def test_index_set_examples():
    # m = 6: 1 <= i, j < 3, i != j, and j = 2 = m/3 forces i = 1 = m/6
    assert index_set(ClassType.A, 6) == [(1, 2), (2, 1)]
    assert all(index_set(ClassType.G, m) == [(1,), (2,), (3,), (4,)] for m in (1, 2, 7))
    assert index_set(ClassType.E, 2) == []
    assert index_set(ClassType.E, 3) == [(1,)]
    assert index_set(ClassType.F, 1) == []


def test_type_b_exclusions_are_integer_only():
    # 1 <= i <= 5m/2 without 2i in {m, 2m, 3m, 4m}
    assert index_set(ClassType.B, 1) == []
    assert index_set(ClassType.B, 2) == [(5,)]
    assert [i for (i,) in index_set(ClassType.B, 3)] == [1, 2, 4, 5, 7]
    assert [i for (i,) in index_set(ClassType.B, 4)] == [1, 3, 5, 7, 9, 10]


def test_instantiate_examples():
    g = instantiate(ClassType.G, 20, (1,))
    assert {x.beads for x in g.members} == {canonicalize([0, 1, 2, 6, 9], 20), canonicalize([0, 3, 4, 5, 11], 20)}
    e = instantiate(ClassType.E, 18, (1,))
    assert len(e.members) == 3
    assert {x.beads for x in e.members} == {
        canonicalize([0, 1, 4, 7, 9], 18), canonicalize([0, 1, 3, 6, 10], 18), canonicalize([0, 2, 3, 6, 11], 18)
    }
    a = instantiate(ClassType.A, 12, (1, 2))
    assert [x.beads for x in a.members] == [(0, 1, 2, 4, 7), (0, 1, 3, 5, 6)]
    assert a.label() == "A(1,2)"


def test_instantiate_rejects_bad_input():
    with pytest.raises(ValueError):
        instantiate(ClassType.G, 30, (1,))
    with pytest.raises(ValueError):
        instantiate(ClassType.A, 12, (2, 2))


def test_literal_type_g_formula_without_the_factor_m_fails():
    # scaling the continuous pairs by n = 20m multiplies every parameter term by m as well
    def literal(m, t):
        return [[0, 5 * m, 8 * t, 15 * m + 4 * t, 5 * m - 4 * t], [0, 5 * m, 4 * t, 15 * m + 8 * t, 15 * m - 4 * t]]

    n, m = 40, 2
    oracle = {frozenset(c.members) for c in brute_force_classes(n)}
    literal_ok = []
    for t in range(1, 5):
        raw = literal(m, t)
        members = frozenset(b({v % n for v in r}, n) for r in raw if len({v % n for v in r}) == 5)
        literal_ok.append(members in oracle)
    assert not all(literal_ok)
    corrected = [frozenset(b({v % n for v in r}, n) for r in _formulas(ClassType.G, m, (t,))) for t in range(1, 5)]
    assert all(members in oracle for members in corrected)


def test_classes_for_n_examples():
    assert [c.label() for c in classes_for_n(12)] == ["A(1,2)", "A(2,1)", "C(1)"]
    assert classes_for_n(11) == ()
    assert len(classes_for_n(20)) == 22


@pytest.mark.parametrize("n", [10, 12, 18, 20, 24, 30, 36, 40, 48, 60])
def test_classes_equal_oracle(n):
    assert {c.member_set for c in classes_for_n(n)} == {frozenset(c.members) for c in brute_force_classes(n)}


def test_class_invariants_up_to_200():
    for n in range(1, 201):
        classes = classes_for_n(n)
        assert len(classes) == h_coefficient(n)
        assert len({c.member_set for c in classes}) == len(classes)
        for c in classes:
            assert (len(c.members) == 3) == (c.kind is ClassType.E)
            assert c.params in index_set(c.kind, c.m)
            assert list(c.members) == sorted(set(c.members))
            assert all(are_homometric(c.members[0], x) for x in c.members[1:])


def test_lookup_type():
    assert lookup_type([b([0, 1, 3, 5, 6], 12), b([0, 1, 2, 4, 7], 12)]) == (ClassType.A, (1, 2))
    assert lookup_type([b([0, 1, 2, 3, 4], 12)]) is None
    g = instantiate(ClassType.G, 20, (1,))
    assert lookup_type(g.members) == (ClassType.G, (1,))


def test_json_line():
    c = classes_for_n(12)[0]
    assert json.loads(c.to_json_line()) == {"n": 12, "type": "A", "m": 6, "i": 1, "j": 2,
                                            "members": [[0, 1, 2, 4, 7], [0, 1, 3, 5, 6]]}
    assert "j" not in classes_for_n(12)[2].to_json()


def test_type_counts():
    assert type_counts(24) == {"A": 17, "B": 0, "C": 2, "D": 3, "E": 1, "F": 8, "G": 0}
