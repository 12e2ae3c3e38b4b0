"""
Shuffle elements and Bruhat intervals of length two.

A shuffle element has exactly one left simple ascent, its pivot.  The checks
here are written as falsification probes: each takes one candidate and says
whether the claimed conclusion holds, raising ``ValueError`` when the
hypotheses are not met.  Simple roots are 0-based indices.

>>> from skewnichols.rootsys import build_root_system
>>> from skewnichols.weylgroup import from_word
>>> rs = build_root_system("A3")
>>> is_shuffle(rs, from_word(rs, (1,))) is None
True
>>> interval2_witnesses(rs, from_word(rs, (1,)), from_word(rs, (0, 2, 1)))
[0, 2]
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .rootsys import Root, RootSystem, neighbor_sets, root_leq, support
from .weylgroup import GroupElement, WeylGroup, weyl_group

__all__ = [
    "ShuffleCertificate", "AbsurdItems", "is_shuffle", "left_ascents",
    "min_AD", "minimal_roots", "ad_set", "absurd_hypothesis", "absurd_item_check",
    "shuffle_theorem_check", "interval2_witnesses", "interval2_theorem_check",
    "interval2_hypothesis", "simple_product_violations", "simple_product_check",
]


@dataclass(frozen=True)
class ShuffleCertificate:
    v: GroupElement
    pivot: int


class AbsurdItems(NamedTuple):
    pivot_in_support: bool
    negative_pairing: bool
    pivot_coeff_dominates: bool
    no_orthogonal_witness: bool
    pivot_coeff_above_one: bool


def _neg(rs: RootSystem, x: Root) -> bool:
    return any(c < 0 for c in x)


def left_ascents(rs: RootSystem, v: GroupElement) -> list[int]:
    g = weyl_group(rs)
    x = g.id(v)
    return [i for i in range(rs.rank) if g.lengths[g.lmul[i][x]] > g.lengths[x]]


def is_shuffle(rs: RootSystem, v: GroupElement) -> ShuffleCertificate | None:
    """Certificate with the pivot if v has exactly one left simple ascent."""
    asc = left_ascents(rs, v)
    return ShuffleCertificate(v, asc[0]) if len(asc) == 1 else None


def _ad(g: WeylGroup, v: int, w: int) -> list[int]:
    vi, wi = g.elements[g.inv(v)], g.elements[g.inv(w)]
    rs = g.rs
    return [a for a, r in enumerate(rs.positive_roots)
            if not _neg(rs, vi.apply(r)) and _neg(rs, wi.apply(r))]


def ad_set(rs: RootSystem, v: GroupElement, w: GroupElement) -> frozenset[Root]:
    """Positive roots a with v^-1(a) > 0 and w^-1(a) < 0."""
    g = weyl_group(rs)
    return frozenset(rs.positive_roots[a] for a in _ad(g, g.id(v), g.id(w)))


def minimal_roots(roots) -> frozenset[Root]:
    """Members with no strictly smaller member in the root order."""
    roots = list(roots)
    return frozenset(a for a in roots
                     if not any(b != a and root_leq(b, a) for b in roots))


def min_AD(rs: RootSystem, v: GroupElement, w: GroupElement) -> frozenset[Root]:
    return minimal_roots(ad_set(rs, v, w))


def absurd_hypothesis(rs: RootSystem, v: GroupElement) -> list[Root]:
    """
    For a shuffle v with pivot b, all a that are minimal in AD(v, s_a s_b v).
    The expected answer is always empty in simply laced types.
    """
    cert = is_shuffle(rs, v)
    if cert is None:
        raise ValueError("v is not a shuffle element")
    g = weyl_group(rs)
    x = g.id(v)
    sb = g.lmul[cert.pivot][x]
    refl = g.reflection_ids
    out = []
    for a, r in enumerate(rs.positive_roots):
        w = g.mul(refl[a], sb)
        if r in minimal_roots(rs.positive_roots[i] for i in _ad(g, x, w)):
            out.append(r)
    return out


def absurd_item_check(rs: RootSystem, v: GroupElement, pivot: int, a: Root) -> AbsurdItems:
    """Evaluate the five listed consequences for a hypothetical minimal a."""
    cert = is_shuffle(rs, v)
    if cert is None or cert.pivot != pivot:
        raise ValueError("v is not a shuffle element with the given pivot")
    a = tuple(a)
    g = weyl_group(rs)
    x = g.id(v)
    w = g.mul(g.reflection_id(a), g.lmul[pivot][x])
    if a not in minimal_roots(rs.positive_roots[i] for i in _ad(g, x, w)):
        raise ValueError("a is not minimal in AD(v, s_a s_b v)")
    bvec = rs.simple(pivot)
    in_supp = pivot in support(a)
    neg = rs.inner(a, bvec) < 0
    n = a[pivot]
    if in_supp:
        plus, _, _ = neighbor_sets(rs, a, pivot)
        dominates = n > sum(a[j] for j in plus)
    else:
        dominates = False
    no_witness = not any(
        root_leq(tuple(n * c for c in r), a) and rs.inner(r, bvec) > 0 and rs.inner(a, r) == 0
        for r in rs.positive_roots)
    return AbsurdItems(in_supp, neg, dominates, no_witness, n > 1)


def shuffle_theorem_check(rs: RootSystem, v: GroupElement, pivot: int, w: GroupElement,
                          require_cover: bool = True) -> bool:
    """
    For a shuffle v with pivot b and s_b v covered by w, report whether
    s_b w < w.  With ``require_cover=False`` only s_b v < w is demanded.
    """
    cert = is_shuffle(rs, v)
    if cert is None or cert.pivot != pivot:
        raise ValueError("v is not a shuffle element with the given pivot")
    g = weyl_group(rs)
    x, wi = g.id(v), g.id(w)
    sv = g.lmul[pivot][x]
    gap = g.lengths[wi] - g.lengths[sv]
    if not g.leq(sv, wi) or gap < 1 or (require_cover and gap != 1):
        raise ValueError("s_b v is not " + ("covered by w" if require_cover else "below w"))
    return g.lengths[g.lmul[pivot][wi]] < g.lengths[wi]


def interval2_hypothesis(rs: RootSystem, v: GroupElement, w: GroupElement) -> bool:
    """l(w) - l(v) = 2, v <= w, and s_b v <= w for every left ascent b of v."""
    g = weyl_group(rs)
    x, wi = g.id(v), g.id(w)
    if g.lengths[wi] - g.lengths[x] != 2 or not g.leq(x, wi):
        return False
    return all(g.leq(g.lmul[b][x], wi) for b in left_ascents(rs, v))


def interval2_witnesses(rs: RootSystem, v: GroupElement, w: GroupElement) -> list[int]:
    """All left ascents b of v with s_b w < w."""
    if not interval2_hypothesis(rs, v, w):
        raise ValueError("interval hypotheses not met")
    g = weyl_group(rs)
    wi = g.id(w)
    return [b for b in left_ascents(rs, v) if g.lengths[g.lmul[b][wi]] < g.lengths[wi]]


def interval2_theorem_check(rs: RootSystem, v: GroupElement, w: GroupElement,
                            strong: bool = False) -> int | None:
    """
    Smallest left ascent b of v with s_b w < w, or None.  With ``strong=True``
    (which additionally needs v not weakly below w) every left ascent must
    qualify, otherwise None is returned.
    """
    found = interval2_witnesses(rs, v, w)
    if strong:
        from .weylgroup import weak_left_leq
        if weak_left_leq(rs, v, w):
            raise ValueError("strong form requires v not weakly below w")
        return found[0] if found and found == left_ascents(rs, v) else None
    return found[0] if found else None


def simple_product_violations(rs: RootSystem) -> tuple[int, list[tuple[int, int, Root, Root]]]:
    """
    Scan all b != b' simple and a, a' positive with s_b s_b' = s_a s_a'.
    Returns (number of solutions, solutions where neither a nor a' is simple-in-{b, b'}).
    """
    g = weyl_group(rs)
    refl = g.reflection_ids
    n = rs.rank
    simple_idx = [rs.index[rs.simple(i)] for i in range(n)]
    by_product: dict[int, list[tuple[int, int]]] = {}
    for a, ra in enumerate(refl):
        for c, rc in enumerate(refl):
            by_product.setdefault(g.mul(ra, rc), []).append((a, c))
    hits, bad = 0, []
    for b in range(n):
        for b2 in range(n):
            if b == b2:
                continue
            allowed = {simple_idx[b], simple_idx[b2]}
            target = g.mul(refl[simple_idx[b]], refl[simple_idx[b2]])
            for a, c in by_product.get(target, []):
                hits += 1
                if a not in allowed and c not in allowed:
                    bad.append((b, b2, rs.positive_roots[a], rs.positive_roots[c]))
    return hits, bad


def simple_product_check(rs: RootSystem) -> bool:
    return not simple_product_violations(rs)[1]
