"""
Saturated Bruhat chains and the reduced-word deletion maps.

Given a reduced word of w and v <= w, exactly one set of positions can be
deleted one letter at a time (last position first, or first position first)
so that every stage is a Bruhat cover.  The resulting reduced words of v
define the maps :func:`r_map` and :func:`r_circ_map`.

Position sequences are 1-based throughout this module, as in the CLI.

>>> from skewnichols.rootsys import build_root_system
>>> rs = build_root_system("A2")
>>> unique_subsequences(rs, (1, 0, 1), from_word(rs, (1,)))
((2, 3), (1, 2))
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .rootsys import Root, RootSystem
from .weylgroup import GroupElement, Word, WeylGroup, from_word, weyl_group

__all__ = [
    "ChainSequence", "saturated_chains", "unique_subsequences",
    "r_map", "r_circ_map", "cocover_table", "chain_root_sequences",
]


@dataclass(frozen=True)
class ChainSequence:
    """Roots a_1..a_m with v < s_{a_1} v < ... < s_{a_m} ... s_{a_1} v, all covers."""
    roots: tuple[Root, ...]
    base: GroupElement


def cocover_table(g: WeylGroup) -> list[list[tuple[int, int]]]:
    """For each element u, the pairs (root index a, id of s_a u) with u covered by s_a u."""
    table = getattr(g, "_cocovers", None)
    if table is None:
        refl = g.reflection_ids
        table = []
        for u in range(len(g)):
            lu = g.lengths[u] + 1
            row = []
            for a, r in enumerate(refl):
                y = g.mul(r, u)
                if g.lengths[y] == lu:
                    row.append((a, y))
            table.append(row)
        g._cocovers = table
    return table


def _chains(g: WeylGroup, v: int, w: int) -> list[tuple[int, ...]]:
    memo: dict[int, list[tuple[int, ...]]] = {}
    table = cocover_table(g)
    lw = g.lengths[w]

    def rec(u: int) -> list[tuple[int, ...]]:
        if u == w:
            return [()]
        r = memo.get(u)
        if r is None:
            r = []
            if g.lengths[u] < lw:
                for a, y in table[u]:
                    if g.leq(y, w):
                        r.extend((a,) + rest for rest in rec(y))
            memo[u] = r
        return r

    if not g.leq(v, w):
        return []
    return rec(v)


def chain_root_sequences(rs: RootSystem, v: GroupElement, w: GroupElement) -> set[tuple[int, ...]]:
    """Saturated chains from v to w as tuples of positive root indices."""
    g = weyl_group(rs)
    return set(_chains(g, g.id(v), g.id(w)))


def saturated_chains(rs: RootSystem, v: GroupElement, w: GroupElement) -> list[ChainSequence]:
    """All saturated chains from v up to w (empty list if v is not below w)."""
    g = weyl_group(rs)
    pos = rs.positive_roots
    return [ChainSequence(tuple(pos[a] for a in seq), v)
            for seq in sorted(_chains(g, g.id(v), g.id(w)))]


def _check_word(g: WeylGroup, word: Word) -> int:
    if any(not 0 <= b < g.rs.rank for b in word):
        raise ValueError("letter out of range")
    ok, w = g.is_reduced(tuple(word))
    if not ok:
        raise ValueError(f"word {tuple(b + 1 for b in word)} is not reduced")
    return w


def _staged_ok(g: WeylGroup, word: Word, removals: list[frozenset[int]]) -> bool:
    # each stage must be a reduced word; lengths then go up by one per stage
    prev = None
    for rem in removals:
        sub = tuple(b for p, b in enumerate(word) if p not in rem)
        ok, x = g.is_reduced(sub)
        if not ok:
            return False
        if prev is not None and not g.leq(prev, x):
            return False
        prev = x
    return True


def _search(rs: RootSystem, word: Word, v: GroupElement, kind: str, check_unique: bool):
    g = weyl_group(rs)
    w = _check_word(g, word)
    vid = g.id(v)
    if not g.leq(vid, w):
        raise ValueError("v is not below w in the Bruhat order")
    ell = len(word)
    m = ell - g.lengths[vid]
    found = None
    for combo in combinations(range(ell), m):
        if kind == "j":
            stages = [frozenset(combo[i:]) for i in range(m + 1)]
        else:
            stages = [frozenset(combo[:m - i]) for i in range(m + 1)]
        sub = tuple(b for p, b in enumerate(word) if p not in stages[0])
        if g.from_word(sub) != vid:
            continue
        if _staged_ok(g, word, stages):
            if found is not None:
                raise AssertionError(f"{kind}-sequence is not unique")
            found = tuple(p + 1 for p in combo)
            if not check_unique:
                break
    if found is None:
        raise AssertionError(f"no {kind}-sequence exists")
    return found


def unique_subsequences(rs: RootSystem, word_of_w: Word, v: GroupElement,
                        check_unique: bool = False) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    The j-sequence (stage i deletes positions j_i..j_m) and the k-sequence
    (stage i deletes k_1..k_{m-i+1}), both 1-based.
    """
    word = tuple(word_of_w)
    return (_search(rs, word, v, "j", check_unique),
            _search(rs, word, v, "k", check_unique))


def _delete(word: Word, positions: tuple[int, ...]) -> Word:
    drop = {p - 1 for p in positions}
    return tuple(b for p, b in enumerate(word) if p not in drop)


def r_map(rs: RootSystem, word_of_w: Word, v: GroupElement) -> Word:
    """Reduced word of v left after deleting the j-sequence."""
    word = tuple(word_of_w)
    return _delete(word, _search(rs, word, v, "j", False))


def r_circ_map(rs: RootSystem, word_of_w: Word, v: GroupElement) -> Word:
    """Reduced word of v left after deleting the k-sequence."""
    word = tuple(word_of_w)
    return _delete(word, _search(rs, word, v, "k", False))
