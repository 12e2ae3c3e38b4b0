"""
Skew elements x_{w/v} of the Nichols algebra and their invariants.

x_{w/v} is the left tensor factor paired with x_v in the coproduct of x_w.
Five independent constructions are provided (coproduct, two positive subset
sums, the bar-antipode sum and a recursion on l(v)); all return
representatives in the tensor algebra, compared via :func:`nichols_equal`.
The circled variant is x°_{w/v} = rho(x_{w^-1/v^-1}).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from .braided import (BraidedVector, coproduct, gen, is_zero_in_nichols,
                      left_derivative, one, pairing, right_derivative, rho,
                      symmetrizer, word_vector)
from .chaincomb import chain_root_sequences, cocover_table
from .rootsys import Root, RootSystem
from .weylgroup import GroupElement, Word, WeylGroup, weyl_group

__all__ = [
    "SkewElement", "ROUTES", "skew", "skew_from_coproduct", "skew_positive",
    "skew_positive_circ", "sbar_skew", "skew_recursive", "skew_recursive_circ",
    "skew_circ", "nichols_equal", "monomial_factor_order2", "monomial_forms_order2",
    "monomial_necessary_check", "c_invariant_pairing", "c_invariant_chains",
    "chain_index_sets",
    "skew_equal_criterion", "derivative_of_skew", "reflection_skew_prediction",
]

ROUTES = ("coproduct", "positive", "positive_circ", "sbar", "recursive")


@dataclass(frozen=True)
class SkewElement:
    w: GroupElement
    v: GroupElement
    rep: BraidedVector
    route: str


def _ids(rs: RootSystem, w: GroupElement, v: GroupElement) -> tuple[WeylGroup, int, int]:
    g = weyl_group(rs)
    return g, g.id(w), g.id(v)


def _subsets(g: WeylGroup, word: Word, target: int):
    """Position sets J whose complement in word is a reduced word of target."""
    ell = len(word)
    k = g.lengths[target]
    for keep in combinations(range(ell), k):
        ok, x = g.is_reduced(tuple(word[p] for p in keep))
        if ok and x == target:
            kept = set(keep)
            yield tuple(p for p in range(ell) if p not in kept)


def _root_sum(roots: list[tuple[int, int]], subsets) -> BraidedVector:
    """Sum over J of prod_{j in J} x_{alpha_j}, roots given as (sign, index)."""
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    for J in subsets:
        sign = 1
        word = []
        for j in J:
            s, a = roots[j]
            sign *= s
            word.append(a)
        acc[tuple(word)] += sign
    return BraidedVector(acc)


def _prefix(g: WeylGroup, word: Word) -> list[tuple[int, int]]:
    out, u = [], 0
    for b in word:
        out.append(g.act_root(u, b))
        u = g.rmul(u, b)
    return out


def _suffix(g: WeylGroup, word: Word) -> list[tuple[int, int]]:
    out, u = [], 0
    for b in reversed(word):
        out.append(g.act_root(u, b))
        u = g.rmul(u, b)
    return out[::-1]


# id-level constructions, cached per group

def _coproduct_all(g: WeylGroup, w: int) -> dict[int, BraidedVector]:
    cache = g.__dict__.setdefault("_skew_cop", {})
    r = cache.get(w)
    if r is None:
        rs = g.rs
        simple_of = {rs.index[rs.simple(i)]: i for i in range(rs.rank)}
        split = coproduct(rs, word_vector(rs, g.word(w)))
        acc: dict[int, dict] = defaultdict(lambda: defaultdict(int))
        for (left, right), c in split.pairs.items():
            ok, v = g.is_reduced(tuple(simple_of[a] for a in right))
            if ok:
                acc[v][left] += c
        r = {v: BraidedVector(t) for v, t in acc.items()}
        cache[w] = r
    return r


def _positive(g: WeylGroup, w: int, v: int) -> BraidedVector:
    wo = g.longest
    word = g.word(g.mul(v, wo))
    return _root_sum(_prefix(g, word), _subsets(g, word, g.mul(w, wo)))


def _positive_circ(g: WeylGroup, w: int, v: int) -> BraidedVector:
    wo = g.longest
    word = g.word(g.mul(wo, v))
    return _root_sum(_suffix(g, word), _subsets(g, word, g.mul(wo, w)))


def _recursive(g: WeylGroup, w: int, v: int) -> BraidedVector:
    cache = g.__dict__.setdefault("_skew_rec", {})
    key = (w, v)
    r = cache.get(key)
    if r is not None:
        return r
    if v == w:
        r = one()
    elif not g.leq(v, w):
        r = BraidedVector()
    else:
        rs = g.rs
        b = min(i for i in range(rs.rank) if g.lengths[g.rmul(v, i)] > g.lengths[v])
        v1, w1 = g.rmul(v, b), g.rmul(w, b)
        s, a = g.act_root(v, rs.index[rs.simple(b)])
        r = _recursive(g, w, v1) * BraidedVector({(a,): s})
        if g.lengths[w1] > g.lengths[w]:
            r = r + _recursive(g, w1, v1)
    cache[key] = r
    return r


def _recursive_circ(g: WeylGroup, w: int, v: int) -> BraidedVector:
    cache = g.__dict__.setdefault("_skew_rec_circ", {})
    key = (w, v)
    r = cache.get(key)
    if r is not None:
        return r
    if v == w:
        r = one()
    elif not g.leq(v, w):
        r = BraidedVector()
    else:
        rs = g.rs
        b = min(i for i in range(rs.rank) if g.lengths[g.lmul[i][v]] > g.lengths[v])
        v1, w1 = g.lmul[b][v], g.lmul[b][w]
        s, a = g.act_root(g.inv(v), rs.index[rs.simple(b)])
        r = BraidedVector({(a,): s}) * _recursive_circ(g, w, v1)
        if g.lengths[w1] > g.lengths[w]:
            r = r + _recursive_circ(g, w1, v1)
    cache[key] = r
    return r


def _sbar_sum(g: WeylGroup, word: Word, v: int) -> BraidedVector:
    return _root_sum(_prefix(g, word), _subsets(g, word, v))


def _rep(g: WeylGroup, w: int, v: int, route: str) -> BraidedVector:
    if not g.leq(v, w):
        return BraidedVector()
    if route == "coproduct":
        return _coproduct_all(g, w).get(v, BraidedVector())
    if route == "positive":
        return _positive(g, w, v)
    if route == "positive_circ":
        return rho(_positive_circ(g, g.inv(w), g.inv(v)))
    if route == "sbar":
        # x_{w/v} = Sbar(x_{v w_o / w w_o}), expanded by the bar-antipode sum
        wo = g.longest
        return _sbar_sum(g, g.word(g.mul(v, wo)), g.mul(w, wo))
    if route == "recursive":
        return _recursive(g, w, v)
    raise ValueError(f"unknown route {route!r}; expected one of {', '.join(ROUTES)}")


# public API

def skew(rs: RootSystem, w: GroupElement, v: GroupElement, route: str = "positive") -> SkewElement:
    """x_{w/v} via the named route; zero when v is not below w."""
    g, wi, vi = _ids(rs, w, v)
    return SkewElement(w, v, _rep(g, wi, vi, route), route)


def skew_from_coproduct(rs: RootSystem, w: GroupElement, v: GroupElement) -> SkewElement:
    return skew(rs, w, v, "coproduct")


def skew_positive(rs: RootSystem, w: GroupElement, v: GroupElement) -> SkewElement:
    """Positive subset sum over a reduced word of v w_o."""
    g, wi, vi = _ids(rs, w, v)
    if not g.leq(vi, wi):
        raise ValueError("v is not below w")
    return SkewElement(w, v, _positive(g, wi, vi), "positive")


def skew_positive_circ(rs: RootSystem, w: GroupElement, v: GroupElement) -> SkewElement:
    """x°_{w/v} as a positive subset sum over a reduced word of w_o v."""
    g, wi, vi = _ids(rs, w, v)
    if not g.leq(vi, wi):
        raise ValueError("v is not below w")
    return SkewElement(w, v, _positive_circ(g, wi, vi), "positive_circ")


def sbar_skew(rs: RootSystem, w: GroupElement, v: GroupElement, word_of_w: Word) -> BraidedVector:
    """Sbar(x_{w/v}) as a subset sum of prefix roots of the given reduced word."""
    g, wi, vi = _ids(rs, w, v)
    ok, x = g.is_reduced(tuple(word_of_w))
    if not ok or x != wi:
        raise ValueError("word is not a reduced word of w")
    if not g.leq(vi, wi):
        return BraidedVector()
    return _sbar_sum(g, tuple(word_of_w), vi)


def skew_recursive(rs: RootSystem, w: GroupElement, v: GroupElement) -> SkewElement:
    return skew(rs, w, v, "recursive")


def skew_recursive_circ(rs: RootSystem, w: GroupElement, v: GroupElement) -> SkewElement:
    """x°_{w/v} via the left-ascent recursion."""
    g, wi, vi = _ids(rs, w, v)
    return SkewElement(w, v, _recursive_circ(g, wi, vi), "recursive_circ")


def skew_circ(rs: RootSystem, w: GroupElement, v: GroupElement, route: str = "positive") -> BraidedVector:
    """x°_{w/v} = rho(x_{w^-1/v^-1})."""
    g, wi, vi = _ids(rs, w, v)
    return rho(_rep(g, g.inv(wi), g.inv(vi), route))


def nichols_equal(rs: RootSystem, a: BraidedVector, b: BraidedVector) -> bool:
    return is_zero_in_nichols(rs, a - b)


def monomial_forms_order2(rs: RootSystem, x: BraidedVector) -> list[tuple[Root, Root, int]]:
    """
    Every (a, c, lam) with x = lam * x_a x_c in the Nichols algebra, for a
    homogeneous degree-2 x; found by comparing symmetrizer images.
    """
    target = symmetrizer(rs, 2, x.component(2)).terms
    if not target:
        return []
    key = min(target)
    out = []
    n = rs.n_pos
    for a in range(n):
        for c in range(n):
            img = symmetrizer(rs, 2, BraidedVector({(a, c): 1})).terms
            if set(img) != set(target) or not img.get(key):
                continue
            num, den = target[key], img[key]
            if num % den == 0:
                lam = num // den
                if all(target[k] == lam * img[k] for k in img):
                    out.append((rs.positive_roots[a], rs.positive_roots[c], lam))
    return out


def monomial_factor_order2(rs: RootSystem, w: GroupElement, v: GroupElement) -> tuple[Root, Root] | None:
    """
    Roots (a, c) with x°_{w/v} = x_a x_c for an interval of length two, or
    None when the constructive reduction finds no such factorization.
    """
    g, wi, vi = _ids(rs, w, v)
    if not g.leq(vi, wi) or g.lengths[wi] - g.lengths[vi] != 2:
        raise ValueError("requires v <= w with l(w) - l(v) = 2")
    target = rho(_rep(g, g.inv(wi), g.inv(vi), "positive"))
    n = rs.rank
    cur_v, cur_w = vi, wi
    moved = True
    while moved:
        moved = False
        for b in range(n):
            sv = g.lmul[b][cur_v]
            if g.lengths[sv] > g.lengths[cur_v] and not g.leq(sv, cur_w):
                cur_v, cur_w = sv, g.lmul[b][cur_w]
                moved = True
                break
    for b in range(n):
        sv, sw = g.lmul[b][cur_v], g.lmul[b][cur_w]
        if (g.lengths[sv] > g.lengths[cur_v] and g.leq(sv, cur_w)
                and g.lengths[sw] < g.lengths[cur_w]):
            s1, a = g.act_root(g.inv(cur_v), rs.index[rs.simple(b)])
            c = g.root_of_reflection(g.mul(g.inv(cur_w), sv))
            if c is None or a == c:
                continue
            if nichols_equal(rs, target, BraidedVector({(a, c): 1})):
                return rs.positive_roots[a], rs.positive_roots[c]
    return None


def monomial_necessary_check(rs: RootSystem, w: GroupElement, v: GroupElement) -> tuple[frozenset[Root], bool]:
    """The cover roots {a : v < s_a v <= w} and whether there are at most l(v, w)."""
    g, wi, vi = _ids(rs, w, v)
    if not g.leq(vi, wi):
        raise ValueError("v is not below w")
    roots = frozenset(rs.positive_roots[a] for a, y in cocover_table(g)[vi] if g.leq(y, wi))
    return roots, len(roots) <= g.lengths[wi] - g.lengths[vi]


def c_invariant_pairing(rs: RootSystem, w: GroupElement, v: GroupElement,
                        w2: GroupElement, v2: GroupElement) -> int:
    """<x_{w/v}, Sbar(x_{w2/v2})> evaluated through the symmetrizer."""
    g = weyl_group(rs)
    wi, vi, w2i, v2i = (g.id(x) for x in (w, v, w2, v2))
    left = _rep(g, wi, vi, "positive")
    if not left or not g.leq(v2i, w2i):
        return 0
    right = _sbar_sum(g, g.word(w2i), v2i)
    return pairing(rs, left, right)


def chain_index_sets(rs: RootSystem, w: GroupElement, v: GroupElement,
                     w2: GroupElement, v2: GroupElement,
                     word_of_w2: Word | None = None) -> list[tuple[int, ...]]:
    """
    Position sets J (1-based) of a reduced word of w2 whose complement is a
    reduced word of v2 and whose prefix roots, in order, climb from v to w
    by covers.
    """
    g = weyl_group(rs)
    wi, vi, w2i, v2i = (g.id(x) for x in (w, v, w2, v2))
    word = g.word(w2i) if word_of_w2 is None else tuple(word_of_w2)
    ok, x = g.is_reduced(word)
    if not ok or x != w2i:
        raise ValueError("word is not a reduced word of w2")
    if not g.leq(vi, wi) or not g.leq(v2i, w2i):
        return []
    if g.lengths[wi] - g.lengths[vi] != g.lengths[w2i] - g.lengths[v2i]:
        return []
    roots = _prefix(g, word)
    refl = g.reflection_ids
    out = []
    for J in _subsets(g, word, v2i):
        u = vi
        for j in J:
            y = g.mul(refl[roots[j][1]], u)
            if g.lengths[y] != g.lengths[u] + 1:
                break
            u = y
        else:
            if u == wi:
                out.append(tuple(j + 1 for j in J))
    return out


def c_invariant_chains(rs: RootSystem, w: GroupElement, v: GroupElement,
                       w2: GroupElement, v2: GroupElement, word_of_w2: Word | None = None) -> int:
    """c_{w/v, w2/v2} as the number of :func:`chain_index_sets`."""
    return len(chain_index_sets(rs, w, v, w2, v2, word_of_w2))


def skew_equal_criterion(rs: RootSystem, w: GroupElement, v: GroupElement,
                         w2: GroupElement, v2: GroupElement) -> bool:
    """Equal length gaps, equal w v^-1, and equal sets of saturated-chain root sequences."""
    g = weyl_group(rs)
    wi, vi, w2i, v2i = (g.id(x) for x in (w, v, w2, v2))
    if not g.leq(vi, wi) or not g.leq(v2i, w2i):
        raise ValueError("both pairs must be Bruhat comparable")
    if g.lengths[wi] - g.lengths[vi] != g.lengths[w2i] - g.lengths[v2i]:
        return False
    if g.mul(wi, g.inv(vi)) != g.mul(w2i, g.inv(v2i)):
        return False
    return chain_root_sequences(rs, v, w) == chain_root_sequences(rs, v2, w2)


def derivative_of_skew(rs: RootSystem, a: Root, w: GroupElement, v: GroupElement,
                       side: str = "left") -> BraidedVector:
    """The braided derivative by x_a of x_{w/v}, from the left or from the right."""
    x = skew(rs, w, v, "positive").rep
    if side == "left":
        return left_derivative(rs, gen(rs, a), x)
    if side == "right":
        return right_derivative(rs, x, gen(rs, a))
    raise ValueError("side must be 'left' or 'right'")


def reflection_skew_prediction(rs: RootSystem, a: Root, w: GroupElement, v: GroupElement,
                               side: str = "left") -> BraidedVector:
    """x_{s_a w / v} (left) or x_{w / s_a v} (right) when the cover holds, else 0."""
    g, wi, vi = _ids(rs, w, v)
    r = g.reflection_id(tuple(a))
    if side == "left":
        u = g.mul(r, wi)
        if g.lengths[u] == g.lengths[wi] - 1:
            return _rep(g, u, vi, "positive")
        return BraidedVector()
    if side == "right":
        u = g.mul(r, vi)
        if g.lengths[u] == g.lengths[vi] + 1:
            return _rep(g, wi, u, "positive")
        return BraidedVector()
    raise ValueError("side must be 'left' or 'right'")
