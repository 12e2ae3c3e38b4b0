"""
Divided differences on polynomials and classes in the coinvariant algebra.

Polynomials are in the simple-root coordinates b_1..b_r (so b_i is the
simple root beta_i viewed as a linear form).  A class in the coinvariant
algebra is represented by the vector of constant terms of d_u f over all u
of length deg f, listed in group enumeration order.

>>> from skewnichols.rootsys import build_root_system
>>> rs = build_root_system("A2")
>>> b1, b2 = Polynomial.var(2, 0), Polynomial.var(2, 1)
>>> div_diff(rs, (1, 0), b1)
Polynomial({(0, 0): 2})
>>> div_diff(rs, (1, 0), b2)
Polynomial({(0, 0): -1})
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Union

from .rootsys import Root, RootSystem
from .weylgroup import GroupElement, WeylGroup, reflection, weyl_group

__all__ = [
    "Polynomial", "CoinvariantClass", "act", "div_diff", "div_diff_w",
    "normal_form", "normal_form_deg", "skew_div_diff", "skew_div_diff_all", "skew_positive_operator",
    "skew_recursive_operator", "leibniz_check", "reynolds",
]

Coeff = Union[int, Fraction]
Exps = tuple[int, ...]


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _div(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


class Polynomial:
    """Exact multivariate polynomial; ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: dict[Exps, Coeff] | None = None, nvars: int | None = None) -> None:
        self.terms: dict[Exps, Coeff] = {k: _norm(c) for k, c in (terms or {}).items() if c}
        if nvars is None:
            nvars = len(next(iter(self.terms))) if self.terms else 0
        self.nvars = nvars

    @classmethod
    def const(cls, n: int, c: Coeff) -> Polynomial:
        return cls({(0,) * n: c}, n)

    @classmethod
    def var(cls, n: int, i: int) -> Polynomial:
        return cls({tuple(int(k == i) for k in range(n)): 1}, n)

    @classmethod
    def linear(cls, coeffs) -> Polynomial:
        n = len(coeffs)
        return cls({tuple(int(k == i) for k in range(n)): c for i, c in enumerate(coeffs)}, n)

    @classmethod
    def parse(cls, text: str, n: int) -> Polynomial:
        """Parse ``"3 * b1^2 b2 - 1/2 * b3"``-style input."""
        out: dict[Exps, Coeff] = defaultdict(int)
        s = text.replace(" ", "")
        if not s or s == "0":
            return cls({}, n)
        for m in re.finditer(r"([+-]?)([^+-]+)", s):
            sign, body = m.groups()
            parts = body.split("*")
            coeff: Coeff = 1
            exps = [0] * n
            for p in parts:
                if re.fullmatch(r"(b\d+(\^\d+)?)+", p):
                    for i, e in re.findall(r"b(\d+)(?:\^(\d+))?", p):
                        i = int(i) - 1
                        if not 0 <= i < n:
                            raise ValueError(f"variable b{i + 1} out of range")
                        exps[i] += int(e or 1)
                else:
                    coeff = coeff * _norm(Fraction(p))
            out[tuple(exps)] += -coeff if sign == "-" else coeff
        return cls(dict(out), n)

    def __repr__(self) -> str:
        return f"Polynomial({dict(sorted(self.terms.items()))})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in sorted(self.terms.items(), reverse=True):
            mono = " ".join(f"b{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(k) if e)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = f"{mag}"
            else:
                body = mono if mag == 1 else f"{mag} * {mono}"
            parts.append(f"{sign} {body}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: Polynomial) -> Polynomial:
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return Polynomial(acc, self.nvars)

    def __neg__(self) -> Polynomial:
        return Polynomial({k: -c for k, c in self.terms.items()}, self.nvars)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial | Coeff) -> Polynomial:
        if not isinstance(other, Polynomial):
            return Polynomial({k: c * other for k, c in self.terms.items()}, self.nvars)
        acc: dict[Exps, Coeff] = defaultdict(int)
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                acc[tuple(a + b for a, b in zip(k1, k2))] += c1 * c2
        return Polynomial(acc, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        out = Polynomial.const(self.nvars, 1)
        for _ in range(e):
            out = out * self
        return out

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def constant_term(self) -> Coeff:
        return self.terms.get((0,) * self.nvars, 0)


@dataclass(frozen=True)
class CoinvariantClass:
    degree: int
    values: tuple[Coeff, ...]

    def is_zero(self) -> bool:
        return not any(self.values)

    def __add__(self, other: CoinvariantClass) -> CoinvariantClass:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return CoinvariantClass(self.degree, tuple(_norm(a + b) for a, b in zip(self.values, other.values)))


def _apply(rs: RootSystem, w: GroupElement, f: Polynomial) -> Polynomial:
    n = rs.rank
    images = [Polynomial.linear(col) for col in w.cols]
    powers: dict[tuple[int, int], Polynomial] = {}
    acc = Polynomial({}, n)
    for k, c in f.terms.items():
        term = Polynomial.const(n, c)
        for i, e in enumerate(k):
            if e:
                p = powers.get((i, e))
                if p is None:
                    p = powers[i, e] = images[i] ** e
                term = term * p
        acc = acc + term
    return acc


def act(rs: RootSystem, w: GroupElement, f: Polynomial) -> Polynomial:
    """Substitute b_i -> w(beta_i)."""
    return _apply(rs, w, f)


def _divide_linear(g: Polynomial, lin: Root) -> Polynomial:
    """Exact quotient of g by the linear form sum lin_i b_i."""
    n = g.nvars
    k = max(i for i, c in enumerate(lin) if c)
    ck = lin[k]
    rest = [(i, c) for i, c in enumerate(lin) if c and i != k]
    # order: b_k exponent first, then the rest lexicographically
    def key(e: Exps):
        return (e[k],) + e
    rem = dict(g.terms)
    quot: dict[Exps, Coeff] = {}
    while rem:
        lead = max(rem, key=key)
        if lead[k] == 0:
            raise ArithmeticError("division by a root left a remainder")
        q = _div(rem[lead], ck)
        qe = tuple(e - (i == k) for i, e in enumerate(lead))
        quot[qe] = quot.get(qe, 0) + q
        del rem[lead]
        for i, c in rest:
            e = tuple(x + (j == i) for j, x in enumerate(qe))
            v = rem.get(e, 0) - q * c
            if v:
                rem[e] = v
            else:
                rem.pop(e, None)
    return Polynomial(quot, n)


def div_diff(rs: RootSystem, a: Root, f: Polynomial) -> Polynomial:
    """(f - s_a f) / a."""
    a = tuple(a)
    if not rs.is_root(a):
        raise ValueError(f"{a} is not a root")
    g = f - _apply(rs, reflection(rs, a), f)
    if not g:
        return Polynomial({}, rs.rank)
    return _divide_linear(g, a)


def _simple_dd(rs: RootSystem, i: int, f: Polynomial) -> Polynomial:
    return div_diff(rs, rs.simple(i), f)


def div_diff_w(rs: RootSystem, w: GroupElement, f: Polynomial) -> Polynomial:
    """d_{b_1} ... d_{b_l} f along the canonical reduced word of w."""
    g = weyl_group(rs)
    for b in reversed(g.word(g.id(w))):
        f = _simple_dd(rs, b, f)
    return f


def _all_dd(rs: RootSystem, f: Polynomial, max_len: int) -> dict[int, Polynomial]:
    """d_u f for every u with l(u) <= max_len, keyed by element id."""
    g = weyl_group(rs)
    table = {0: f}
    frontier = [0]
    for _ in range(max_len):
        nxt = []
        for u in frontier:
            for i in range(rs.rank):
                y = g.lmul[i][u]
                if g.lengths[y] > g.lengths[u] and y not in table:
                    table[y] = _simple_dd(rs, i, table[u])
                    nxt.append(y)
        frontier = nxt
    return table


def normal_form(rs: RootSystem, f: Polynomial, degree: int | None = None) -> CoinvariantClass:
    """
    Constant terms of d_u f for all u of length deg f, in id order.  The
    degree must be given for the zero polynomial.
    """
    if degree is None:
        degs = f.degrees()
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous" if degs else
                             "zero polynomial needs an explicit degree")
        degree = degs.pop()
    return normal_form_deg(rs, f, degree)


def normal_form_deg(rs: RootSystem, f: Polynomial, d: int) -> CoinvariantClass:
    if f and f.degrees() != {d}:
        raise ValueError(f"polynomial is not homogeneous of degree {d}")
    g = weyl_group(rs)
    us = [u for u in range(len(g)) if g.lengths[u] == d]
    if not us:
        return CoinvariantClass(d, ())
    table = _all_dd(rs, f, d)
    return CoinvariantClass(d, tuple(table[u].constant_term() for u in us))


def skew_div_diff_all(rs: RootSystem, w: GroupElement, f: Polynomial,
                      word: tuple[int, ...] | None = None) -> dict[int, Polynomial]:
    """
    Polynomial-level skew divided differences d_{w/v} f for every v <= w at
    once, keyed by the id of v; the positions kept as reflections form a
    reduced word of v.
    """
    g = weyl_group(rs)
    wid = g.id(w)
    word = g.word(wid) if word is None else tuple(word)
    ok, x = g.is_reduced(word)
    if not ok or x != wid:
        raise ValueError("word is not a reduced word of w")
    simple_refl = [g.elements[g.lmul[i][0]] for i in range(rs.rank)]
    states: dict[int, Polynomial] = {0: f}
    for b in reversed(word):
        nxt: dict[int, Polynomial] = {}
        for u, p in states.items():
            d = _simple_dd(rs, b, p)
            if d:
                nxt[u] = nxt[u] + d if u in nxt else d
            y = g.lmul[b][u]
            if g.lengths[y] > g.lengths[u]:
                s = _apply(rs, simple_refl[b], p)
                nxt[y] = nxt[y] + s if y in nxt else s
        states = nxt
    return {v: _apply(rs, g.elements[g.inv(v)], p) for v, p in states.items()}


def skew_div_diff(rs: RootSystem, w: GroupElement, v: GroupElement, f: Polynomial,
                  word: tuple[int, ...] | None = None) -> CoinvariantClass:
    """Class of d_{w/v} f (zero when v is not below w)."""
    g = weyl_group(rs)
    d = _hdeg(f) - (g.lengths[g.id(w)] - g.lengths[g.id(v)])
    p = skew_div_diff_all(rs, w, f, word).get(g.id(v), Polynomial({}, rs.rank))
    return normal_form_deg(rs, p, d) if d >= 0 else CoinvariantClass(d, ())


def _hdeg(f: Polynomial) -> int:
    degs = f.degrees()
    if len(degs) > 1:
        raise ValueError("polynomial is not homogeneous")
    return degs.pop() if degs else 0


def _positive_poly(rs: RootSystem, g: WeylGroup, w: int, v: int, f: Polynomial) -> Polynomial:
    wo = g.longest
    word = g.word(g.mul(wo, v))
    # suffix roots s_{b_l} ... s_{b_{i+1}}(b_i)
    roots: list[Root] = []
    u = 0
    for b in reversed(word):
        roots.append(g.elements[u].apply(rs.simple(b)))
        u = g.rmul(u, b)
    roots.reverse()
    target = g.mul(wo, w)
    ell = len(word)
    acc = Polynomial({}, rs.rank)
    for keep in combinations(range(ell), g.lengths[target]):
        ok, x = g.is_reduced(tuple(word[p] for p in keep))
        if not ok or x != target:
            continue
        kept = set(keep)
        p = f
        for j in reversed([j for j in range(ell) if j not in kept]):
            p = div_diff(rs, roots[j], p)
            if not p:
                break
        acc = acc + p
    return acc


def skew_positive_operator(rs: RootSystem, w: GroupElement, v: GroupElement, f: Polynomial) -> CoinvariantClass:
    """Class of the positive subset sum of products of d_a applied to f."""
    g = weyl_group(rs)
    wi, vi = g.id(w), g.id(v)
    if not g.leq(vi, wi):
        raise ValueError("v is not below w")
    d = _hdeg(f) - (g.lengths[wi] - g.lengths[vi])
    if d < 0:
        return CoinvariantClass(d, ())
    return normal_form_deg(rs, _positive_poly(rs, g, wi, vi, f), d)


def _recursive_poly(rs: RootSystem, g: WeylGroup, w: int, v: int, f: Polynomial) -> Polynomial:
    if v == w:
        return f
    if not g.leq(v, w):
        return Polynomial({}, rs.rank)
    b = min(i for i in range(rs.rank) if g.lengths[g.lmul[i][v]] > g.lengths[v])
    v1, w1 = g.lmul[b][v], g.lmul[b][w]
    a = g.elements[g.inv(v)].apply(rs.simple(b))
    out = div_diff(rs, a, _recursive_poly(rs, g, w, v1, f))
    if g.lengths[w1] > g.lengths[w]:
        out = out + _recursive_poly(rs, g, w1, v1, f)
    return out


def skew_recursive_operator(rs: RootSystem, w: GroupElement, v: GroupElement, f: Polynomial) -> CoinvariantClass:
    """Class of d_{w/v} f via the left-ascent recursion."""
    g = weyl_group(rs)
    wi, vi = g.id(w), g.id(v)
    d = _hdeg(f) - (g.lengths[wi] - g.lengths[vi])
    if d < 0:
        return CoinvariantClass(d, ())
    return normal_form_deg(rs, _recursive_poly(rs, g, wi, vi, f), d)


def leibniz_check(rs: RootSystem, w: GroupElement, f: Polynomial, h: Polynomial) -> bool:
    """Compare d_w(f h) with the sum over v <= w of d_v(f) * v(d_{w/v} h) in S_W."""
    g = weyl_group(rs)
    wi = g.id(w)
    df, dh = _hdeg(f), _hdeg(h)
    deg = df + dh - g.lengths[wi]
    if deg < 0:
        return True
    lhs = div_diff_w(rs, w, f * h)
    skews = skew_div_diff_all(rs, w, h)
    rhs = Polynomial({}, rs.rank)
    for v, p in skews.items():
        left = div_diff_w(rs, g.elements[v], f)
        if left and p:
            rhs = rhs + left * _apply(rs, g.elements[v], p)
    return normal_form_deg(rs, lhs, deg) == normal_form_deg(rs, rhs, deg)


def reynolds(rs: RootSystem, f: Polynomial) -> Polynomial:
    """Sum of w . f over the whole group (a W-invariant polynomial)."""
    g = weyl_group(rs)
    acc = Polynomial({}, rs.rank)
    for x in g.elements:
        acc = acc + _apply(rs, x, f)
    return acc
