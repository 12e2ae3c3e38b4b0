from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewnichols.rootsys import (CartanType, build_root_system, classify_negative_pairs,
                                 find_orthogonal_witness, neighbor_sets, pairing,
                                 reflect, root_leq, support)

TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"]
COUNTS = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9, "C3": 9, "D4": 12, "G2": 6,
          "F4": 24, "E6": 36, "E7": 63, "E8": 120}


@pytest.mark.parametrize("t", TYPES)
def test_positive_root_counts(t):
    assert build_root_system(t).n_pos == COUNTS[t]


@pytest.mark.parametrize("bad", ["Z9", "A0", "E9", "G3", "", "B"])
def test_bad_type_strings(bad):
    with pytest.raises(ValueError):
        build_root_system(bad)


def test_parse_case_insensitive():
    assert CartanType.parse("e8") == CartanType("E", 8)
    assert build_root_system("b2") is build_root_system("B2")


@pytest.mark.parametrize("t", TYPES)
def test_simple_roots_first_and_heights_sorted(t):
    rs = build_root_system(t)
    pos = rs.positive_roots
    assert pos[:rs.rank] == tuple(rs.simple(i) for i in range(rs.rank))
    heights = [sum(a) for a in pos]
    assert heights == sorted(heights)


@pytest.mark.parametrize("t", TYPES)
def test_reflections_permute_roots(t):
    rs = build_root_system(t)
    roots = set(rs.positive_roots) | {tuple(-c for c in a) for a in rs.positive_roots}
    for a in rs.positive_roots[:rs.rank]:
        assert {reflect(rs, a, g) for g in roots} == roots


def test_cartan_integers_b2():
    rs = build_root_system("B2")
    # beta1 long, beta2 short
    assert pairing(rs, (1, 0), (0, 1)) == -2
    assert pairing(rs, (0, 1), (1, 0)) == -1
    assert reflect(rs, (1, 0), (0, 1)) == (1, 1)
    assert reflect(rs, (0, 1), (1, 0)) == (1, 2)


def test_pairing_rejects_non_roots():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        pairing(rs, (2, 0), (1, 0))


@pytest.mark.parametrize("t", ["A3", "D4", "E6"])
def test_simply_laced_pairing_symmetric(t):
    rs = build_root_system(t)
    for a in rs.positive_roots:
        for b in rs.positive_roots:
            assert pairing(rs, a, b) == pairing(rs, b, a)


@pytest.mark.parametrize("t", ["B3", "G2", "D4"])
def test_root_order_is_partial_order(t):
    pos = build_root_system(t).positive_roots
    for a in pos:
        for b in pos:
            if root_leq(a, b) and root_leq(b, a):
                assert a == b
            for c in pos:
                if root_leq(a, b) and root_leq(b, c):
                    assert root_leq(a, c)


@given(st.sampled_from(TYPES[:9]), st.data())
@settings(max_examples=60, deadline=None)
def test_double_reflection_is_identity(t, data):
    rs = build_root_system(t)
    a = data.draw(st.sampled_from(rs.positive_roots))
    g = data.draw(st.sampled_from(rs.positive_roots))
    assert reflect(rs, a, reflect(rs, a, g)) == g
    assert reflect(rs, a, a) == tuple(-c for c in a)


def test_support_and_neighbors():
    rs = build_root_system("A3")
    assert support((1, 1, 0)) == {0, 1}
    plus, minus, near = neighbor_sets(rs, (1, 1, 1), 1)
    assert near == {0, 2} and plus == {0, 2} and not minus
    with pytest.raises(ValueError):
        neighbor_sets(rs, (1, 0, 0), 2)


def test_classification_e6_e7():
    e6 = build_root_system("E6")
    assert classify_negative_pairs(e6) == [((1, 1, 2, 2, 2, 1), 3)]
    e7 = build_root_system("E7")
    assert classify_negative_pairs(e7) == [
        ((1, 1, 2, 2, 2, 1, 0), 3), ((1, 1, 2, 2, 2, 1, 1), 3),
        ((1, 1, 2, 2, 2, 2, 1), 3), ((1, 1, 2, 3, 2, 2, 1), 4),
        ((1, 2, 2, 3, 2, 2, 1), 4), ((1, 2, 2, 3, 3, 2, 1), 3),
        ((1, 2, 2, 4, 3, 2, 1), 2),
    ]


@pytest.mark.parametrize("t", ["A3", "A4", "D4", "B3"])
def test_no_pairs_below_rank_six(t):
    # every coefficient > 1 with (a, b) < 0 first appears in E-types
    rs = build_root_system(t)
    if rs.simply_laced:
        assert classify_negative_pairs(rs) == []


def test_e8_exception():
    rs = build_root_system("E8")
    missing = [(a, b) for a, b in classify_negative_pairs(rs)
               if find_orthogonal_witness(rs, a, b) is None]
    assert missing == [((2, 3, 4, 5, 4, 3, 2, 1), 3)]
    a, b = missing[0]
    plus, _, _ = neighbor_sets(rs, a, b)
    assert a[b] == 5 and sum(a[j] for j in plus) == 7


def test_witness_properties():
    for t in ("E6", "E7", "E8"):
        rs = build_root_system(t)
        for a, b in classify_negative_pairs(rs):
            c = find_orthogonal_witness(rs, a, b)
            if c is None:
                continue
            assert rs.inner(a, c) == 0 and rs.inner(c, rs.simple(b)) > 0
            assert root_leq(tuple(a[b] * x for x in c), a)
