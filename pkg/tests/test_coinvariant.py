from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement, product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from skewnichols.coinvariant import (Polynomial, act, div_diff, div_diff_w, leibniz_check,
                                     normal_form, normal_form_deg, reynolds, skew_div_diff,
                                     skew_div_diff_all, skew_positive_operator,
                                     skew_recursive_operator)
from skewnichols.rootsys import build_root_system
from skewnichols.weylgroup import from_word, identity, longest_element, weyl_group

# Gram matrices of the simple roots, written out by hand
GRAM = {
    "A2": [[2, -1], [-1, 2]],
    "B2": [[2, -1], [-1, 1]],
    "G2": [[2, -3], [-3, 6]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
}

POINCARE = {"A2": [1, 2, 2, 1], "B2": [1, 2, 2, 2, 1], "A3": [1, 3, 5, 6, 5, 3, 1]}


def _to_sympy(f, xs):
    return sum((sympy.Rational(c) * sympy.prod([x ** e for x, e in zip(xs, k)])
                for k, c in f.terms.items()), sympy.Integer(0))


def _sympy_div_diff(t, a, f):
    gram = sympy.Matrix(GRAM[t])
    n = gram.rows
    xs = sympy.symbols(f"b1:{n + 1}")
    av = sympy.Matrix(a)
    aa = (av.T * gram * av)[0]
    # b_j -> b_j - 2 (beta_j, a)/(a, a) a
    subs = {}
    for j in range(n):
        coef = 2 * (gram[j, :] * av)[0] / aa
        subs[xs[j]] = xs[j] - coef * sum(av[i] * xs[i] for i in range(n))
    fe = _to_sympy(f, xs)
    num = sympy.expand(fe - fe.subs(subs, simultaneous=True))
    lin = sum(av[i] * xs[i] for i in range(n))
    q, r = sympy.div(num, lin, *xs)
    assert r == 0
    return sympy.expand(q), xs


def _monomials(n, d):
    for c in combinations_with_replacement(range(n), d):
        yield Polynomial({tuple(c.count(i) for i in range(n)): 1}, n)


def _basis(n, d):
    return list(_monomials(n, d))


@st.composite
def polys(draw, n, max_deg=4, homogeneous=False):
    d = draw(st.integers(0, max_deg))
    terms = {}
    for _ in range(draw(st.integers(0, 4))):
        dd = d if homogeneous else draw(st.integers(0, max_deg))
        exps = [0] * n
        for _ in range(dd):
            exps[draw(st.integers(0, n - 1))] += 1
        terms[tuple(exps)] = terms.get(tuple(exps), 0) + draw(st.integers(-5, 5))
    return Polynomial(terms, n)


@pytest.mark.parametrize("t", sorted(GRAM))
@given(data=st.data())
@settings(max_examples=25, deadline=None)
def test_div_diff_matches_sympy(t, data):
    rs = build_root_system(t)
    a = data.draw(st.sampled_from(rs.positive_roots))
    f = data.draw(polys(rs.rank))
    q, xs = _sympy_div_diff(t, a, f)
    assert sympy.expand(_to_sympy(div_diff(rs, a, f), xs) - q) == 0


def test_div_diff_on_linear_forms():
    rs = build_root_system("B2")
    for a in rs.positive_roots:
        assert div_diff(rs, a, Polynomial.linear(a)) == Polynomial.const(2, 2)
        assert div_diff(rs, a, Polynomial.const(2, 7)) == Polynomial({}, 2)
    a2 = build_root_system("A2")
    assert div_diff(a2, (1, 0), Polynomial.var(2, 1)) == Polynomial.const(2, -1)
    with pytest.raises(ValueError):
        div_diff(a2, (2, 1), Polynomial.var(2, 0))


def test_div_diff_negative_root():
    rs = build_root_system("A2")
    f = Polynomial.parse("b1^2 b2 + 3 * b2^3", 2)
    assert div_diff(rs, (-1, -1), f) == -div_diff(rs, (1, 1), f)


@pytest.mark.parametrize("t", ["A2", "B2", "G2"])
def test_div_diff_squares_to_zero(t):
    rs = build_root_system(t)
    for d in range(1, 5):
        for m in _monomials(rs.rank, d):
            for a in rs.positive_roots:
                assert not div_diff(rs, a, div_diff(rs, a, m))


def test_braid_relation_a2():
    rs = build_root_system("A2")
    s = [rs.simple(0), rs.simple(1)]
    for d in range(5):
        for m in _monomials(2, d):
            lhs, rhs = m, m
            for i in (0, 1, 0):
                lhs = div_diff(rs, s[i], lhs)
            for i in (1, 0, 1):
                rhs = div_diff(rs, s[i], rhs)
            assert lhs == rhs


@given(f=polys(3), h=polys(3), i=st.integers(0, 2))
@settings(max_examples=60, deadline=None)
def test_twisted_leibniz_rule(f, h, i):
    rs = build_root_system("A3")
    a = rs.simple(i)
    s = from_word(rs, (i,))
    lhs = div_diff(rs, a, f * h)
    rhs = div_diff(rs, a, f) * h + act(rs, s, f) * div_diff(rs, a, h)
    assert lhs == rhs


def test_act_composition():
    g = weyl_group(build_root_system("B2"))
    f = Polynomial.parse("b1^3 - 2 * b1 b2 + b2^2", 2)
    for x in range(len(g)):
        for y in range(len(g)):
            lhs = act(g.rs, g.elements[g.mul(x, y)], f)
            assert lhs == act(g.rs, g.elements[x], act(g.rs, g.elements[y], f))
    assert act(g.rs, identity(g.rs), f) == f


@pytest.mark.parametrize("t", sorted(POINCARE))
def test_normal_form_ranks_match_poincare_polynomial(t):
    rs = build_root_system(t)
    ranks = []
    for d in range(rs.n_pos + 1):
        rows = [list(normal_form(rs, m).values) for m in _basis(rs.rank, d)]
        ranks.append(sympy.Matrix(rows).rank() if rows else 0)
    assert ranks == POINCARE[t]


@pytest.mark.parametrize("t", ["A2", "B2"])
def test_invariant_ideal_is_killed(t):
    rs = build_root_system(t)
    top = rs.n_pos
    for d in range(1, top + 1):
        for m in _basis(rs.rank, d):
            inv = reynolds(rs, m)
            assert normal_form_deg(rs, inv, d).is_zero()
            for e in range(0, top - d + 1):
                for q in _basis(rs.rank, e):
                    prod = inv * q
                    if prod:
                        assert normal_form(rs, prod).is_zero()


def test_top_class_is_nonzero():
    rs = build_root_system("A2")
    top = Polynomial.parse("b1^2 b2 + b1 b2^2", 2)
    c = normal_form(rs, top)
    assert c.degree == 3 and not c.is_zero()
    with pytest.raises(ValueError):
        normal_form(rs, Polynomial({}, 2))
    with pytest.raises(ValueError):
        normal_form(rs, Polynomial.parse("b1 + b1^2", 2))


def test_skew_extremes():
    g = weyl_group(build_root_system("A3"))
    rs = g.rs
    f = Polynomial.parse("b1^2 b2 b3 + 2 * b2^3 b3 - b1 b3^3", 3)
    for w in range(len(g)):
        table = skew_div_diff_all(rs, g.elements[w], f)
        assert table[w] == f
        assert table.get(0, Polynomial({}, 3)) == div_diff_w(rs, g.elements[w], f)


def test_skew_word_independence_a2():
    g = weyl_group(build_root_system("A2"))
    rs = g.rs
    for w in range(len(g)):
        for d in range(4):
            for m in _monomials(2, d):
                tables = [skew_div_diff_all(rs, g.elements[w], m, word)
                          for word in g.reduced_words(w)]
                keys = set().union(*tables)
                for v in keys:
                    classes = {normal_form_deg(rs, tab.get(v, Polynomial({}, 2)),
                                               d - g.lengths[w] + g.lengths[v])
                               for tab in tables}
                    assert len(classes) == 1


def test_cover_gives_root_operator():
    g = weyl_group(build_root_system("B2"))
    rs = g.rs
    for w in range(len(g)):
        for a_idx, a in enumerate(rs.positive_roots):
            v = g.mul(g.reflection_ids[a_idx], w)
            if g.lengths[v] != g.lengths[w] - 1:
                continue
            for d in range(1, 4):
                for m in _monomials(2, d):
                    got = skew_div_diff(rs, g.elements[w], g.elements[v], m)
                    # d_{w/v} = v^{-1} d_a v with w = s_a v
                    want = act(rs, g.elements[g.inv(v)], div_diff(rs, a, act(rs, g.elements[v], m)))
                    assert got == normal_form_deg(rs, want, d - 1)


@pytest.mark.parametrize("t", ["A2", "B2"])
def test_operators_agree_exhaustively(t):
    g = weyl_group(build_root_system(t))
    rs = g.rs
    E = g.elements
    for w, v in product(range(len(g)), repeat=2):
        if not g.leq(v, w):
            continue
        for d in range(g.lengths[w] - g.lengths[v], 4):
            for m in _monomials(rs.rank, d):
                ref = skew_div_diff(rs, E[w], E[v], m)
                assert skew_positive_operator(rs, E[w], E[v], m) == ref
                assert skew_recursive_operator(rs, E[w], E[v], m) == ref


def test_positive_operator_rejects_incomparable():
    rs = build_root_system("A2")
    with pytest.raises(ValueError):
        skew_positive_operator(rs, from_word(rs, (0,)), from_word(rs, (1,)), Polynomial.var(2, 0))


@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_operators_agree_sampled_a3(data):
    g = weyl_group(build_root_system("A3"))
    rs = g.rs
    w = data.draw(st.integers(0, len(g) - 1))
    v = data.draw(st.sampled_from(sorted(g.below(w))))
    f = data.draw(polys(3, max_deg=4, homogeneous=True))
    if not f:
        return
    ref = skew_div_diff(rs, g.elements[w], g.elements[v], f)
    assert skew_positive_operator(rs, g.elements[w], g.elements[v], f) == ref
    assert skew_recursive_operator(rs, g.elements[w], g.elements[v], f) == ref


@pytest.mark.parametrize("t", ["A2", "B2"])
@given(data=st.data())
@settings(max_examples=30, deadline=None)
def test_leibniz_check(t, data):
    g = weyl_group(build_root_system(t))
    w = data.draw(st.integers(0, len(g) - 1))
    f = data.draw(polys(2, max_deg=3, homogeneous=True))
    h = data.draw(polys(2, max_deg=3, homogeneous=True))
    assert leibniz_check(g.rs, g.elements[w], f, h)


def test_leibniz_longest_element():
    rs = build_root_system("A2")
    f = Polynomial.parse("b1 b2", 2)
    h = Polynomial.parse("b1 - 3 * b2", 2)
    assert leibniz_check(rs, longest_element(rs), f, h)


def test_parse_and_str():
    f = Polynomial.parse("3 * b1^2 b2 - 1/2 * b3 + 4", 3)
    assert f.terms == {(2, 1, 0): 3, (0, 0, 1): Fraction(-1, 2), (0, 0, 0): 4}
    assert Polynomial.parse(str(f), 3) == f
    assert Polynomial.parse("0", 2) == Polynomial({}, 2)
    assert str(Polynomial({}, 2)) == "0"
    with pytest.raises(ValueError):
        Polynomial.parse("b4", 3)


@given(polys(3))
@settings(max_examples=80, deadline=None)
def test_str_round_trip(f):
    assert Polynomial.parse(str(f), 3) == f
