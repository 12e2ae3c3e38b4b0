"""
Weyl group elements, lengths, reduced words, Bruhat and weak orders.

An element is stored by its action on the simple roots: ``cols[i]`` is the
coefficient vector of ``w(beta_i)``.  Words are tuples of 0-based simple-root
indices, read left to right as products ``s_{b_1} s_{b_2} ...``.

Group-wide tables (element list, multiplication by simple reflections,
lengths, Bruhat memo) live in a :class:`WeylGroup` that is built lazily per
root system and shared by the module-level functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsys import Root, RootSystem

__all__ = [
    "GroupElement", "Word", "WeylGroup", "weyl_group", "group_order",
    "identity", "from_word", "length", "longest_element", "inverse", "mul",
    "act", "reflection", "canonical_reduced_word", "all_reduced_words",
    "bruhat_leq", "covers", "cocovers", "weak_left_leq", "ascent_descent",
    "reflection_ordering", "prefix_roots", "suffix_roots", "is_reduced",
]

Word = tuple[int, ...]


@dataclass(frozen=True)
class GroupElement:
    cols: tuple[Root, ...]

    @property
    def matrix(self) -> list[list[int]]:
        """Row-major integer matrix; column i holds w(beta_i)."""
        n = len(self.cols)
        return [[self.cols[j][i] for j in range(n)] for i in range(n)]

    def apply(self, a: Root) -> Root:
        n = len(self.cols)
        out = [0] * n
        for i, c in enumerate(a):
            if c:
                col = self.cols[i]
                for k in range(n):
                    out[k] += c * col[k]
        return tuple(out)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(tuple(self.apply(c) for c in other.cols))


def identity(rs: RootSystem) -> GroupElement:
    return GroupElement(tuple(rs.simple(i) for i in range(rs.rank)))


def reflection(rs: RootSystem, a: Root) -> GroupElement:
    """The reflection s_a as a group element."""
    return GroupElement(tuple(rs.reflect_vec(a, rs.simple(i)) for i in range(rs.rank)))


class WeylGroup:
    """Enumerated group with integer ids; id 0 is the identity."""

    def __init__(self, rs: RootSystem) -> None:
        self.rs = rs
        n = rs.rank
        one = identity(rs)
        simples = [reflection(rs, rs.simple(i)) for i in range(n)]
        self.elements: list[GroupElement] = [one]
        self.ids: dict[GroupElement, int] = {one: 0}
        self.lengths: list[int] = [0]
        self.lmul: list[list[int]] = []  # lmul[i][x] = id of s_i * x
        frontier = [0]
        left: dict[tuple[int, int], int] = {}
        while frontier:
            nxt = []
            for x in frontier:
                w = self.elements[x]
                for i in range(n):
                    y = simples[i] * w
                    j = self.ids.get(y)
                    if j is None:
                        j = len(self.elements)
                        self.ids[y] = j
                        self.elements.append(y)
                        self.lengths.append(self.lengths[x] + 1)
                        nxt.append(j)
                    left[i, x] = j
            frontier = nxt
        size = len(self.elements)
        self.lmul = [[left[i, x] for x in range(size)] for i in range(n)]
        self.longest = max(range(size), key=self.lengths.__getitem__)
        self._inv: list[int] = [-1] * size
        self._bruhat: dict[tuple[int, int], bool] = {}
        self._mul: dict[tuple[int, int], int] = {}
        self._words: dict[int, frozenset[Word]] = {}

    def __len__(self) -> int:
        return len(self.elements)

    def id(self, w: GroupElement) -> int:
        return self.ids[w]

    def mul(self, x: int, y: int) -> int:
        key = (x, y)
        r = self._mul.get(key)
        if r is None:
            r = self.ids[self.elements[x] * self.elements[y]]
            self._mul[key] = r
        return r

    def inv(self, x: int) -> int:
        r = self._inv[x]
        if r < 0:
            # inverse of s_{b1}...s_{bk} is s_{bk}...s_{b1}
            r = 0
            for b in self.word(x):
                r = self.lmul[b][r]
            self._inv[x] = r
        return r

    def left_descents(self, x: int) -> list[int]:
        lx = self.lengths[x]
        return [i for i in range(self.rs.rank) if self.lengths[self.lmul[i][x]] < lx]

    def word(self, x: int) -> Word:
        """Canonical reduced word: peel the smallest left descent each time."""
        out = []
        while x:
            i = self.left_descents(x)[0]
            out.append(i)
            x = self.lmul[i][x]
        return tuple(out)

    def from_word(self, word: Word) -> int:
        x = 0
        for b in reversed(word):
            x = self.lmul[b][x]
        return x

    def reduced_words(self, x: int) -> frozenset[Word]:
        r = self._words.get(x)
        if r is None:
            if x == 0:
                r = frozenset({()})
            else:
                r = frozenset((i,) + rest
                              for i in self.left_descents(x)
                              for rest in self.reduced_words(self.lmul[i][x]))
            self._words[x] = r
        return r

    def iter_reduced_words(self, x: int):
        """Reduced words of x in lexicographic order, generated lazily."""
        if x == 0:
            yield ()
            return
        for i in self.left_descents(x):
            for rest in self.iter_reduced_words(self.lmul[i][x]):
                yield (i,) + rest

    def leq(self, v: int, w: int) -> bool:
        if v == 0:
            return True
        key = (v, w)
        r = self._bruhat.get(key)
        if r is None:
            lv, lw = self.lengths[v], self.lengths[w]
            if lv > lw:
                r = False
            elif lv == lw:
                r = v == w
            else:
                i = self.left_descents(w)[0]
                sv = self.lmul[i][v]
                if self.lengths[sv] < lv:
                    r = self.leq(sv, self.lmul[i][w])
                else:
                    r = self.leq(v, self.lmul[i][w])
            self._bruhat[key] = r
        return r

    def rmul(self, x: int, i: int) -> int:
        """Id of x * s_i."""
        return self.inv(self.lmul[i][self.inv(x)])

    def right_descents(self, x: int) -> list[int]:
        return self.left_descents(self.inv(x))

    def reflection_id(self, a: Root) -> int:
        return self.ids[reflection(self.rs, a)]

    @property
    def reflection_ids(self) -> list[int]:
        """Element id of s_a for each positive root index."""
        r = getattr(self, "_refl_ids", None)
        if r is None:
            r = [self.reflection_id(a) for a in self.rs.positive_roots]
            self._refl_ids = r
            self._refl_root = {x: i for i, x in enumerate(r)}
        return r

    def root_of_reflection(self, x: int) -> int | None:
        """Positive root index a with s_a = x, or None."""
        self.reflection_ids
        return self._refl_root.get(x)

    def act_root(self, x: int, a: int) -> tuple[int, int]:
        """w(alpha_a) as (sign, positive root index)."""
        rs = self.rs
        return rs.signed_index(self.elements[x].apply(rs.positive_roots[a]))

    def is_reduced(self, word: Word) -> tuple[bool, int]:
        """(reduced?, id of the product)."""
        x = 0
        for b in reversed(word):
            y = self.lmul[b][x]
            if self.lengths[y] < self.lengths[x]:
                return False, self.from_word(word)
            x = y
        return True, x

    def below(self, w: int) -> list[int]:
        """All v <= w, sorted by (length, id)."""
        return sorted((v for v in range(len(self)) if self.leq(v, w)),
                      key=lambda v: (self.lengths[v], v))

    def intervals(self, length: int | None = None):
        """Yield all pairs (v, w) with v <= w, optionally with fixed length gap."""
        for w in range(len(self)):
            for v in range(len(self)):
                if length is not None and self.lengths[w] - self.lengths[v] != length:
                    continue
                if self.leq(v, w):
                    yield v, w


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystem) -> WeylGroup:
    return WeylGroup(rs)


_EXCEPTIONAL_DEGREES = {
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ("F", 4): (2, 6, 8, 12),
    ("G", 2): (2, 6),
}


def group_order(rs: RootSystem) -> int:
    """|W| from the degrees of the basic invariants, without enumeration."""
    fam, n = rs.type.family, rs.rank
    if fam == "A":
        degs = range(2, n + 2)
    elif fam in "BC":
        degs = range(2, 2 * n + 1, 2)
    elif fam == "D":
        degs = list(range(2, 2 * n - 1, 2)) + [n]
    else:
        degs = _EXCEPTIONAL_DEGREES[fam, n]
    out = 1
    for d in degs:
        out *= d
    return out


def _is_neg(a: Root) -> bool:
    return any(c < 0 for c in a)


def from_word(rs: RootSystem, word: Word) -> GroupElement:
    """Product of simple reflections, left to right."""
    w = identity(rs)
    for b in word:
        if not 0 <= b < rs.rank:
            raise ValueError(f"letter {b} out of range for rank {rs.rank}")
        w = w * reflection(rs, rs.simple(b))
    return w


def act(w: GroupElement, a: Root) -> Root:
    return w.apply(a)


def mul(v: GroupElement, w: GroupElement) -> GroupElement:
    return v * w


def inverse(rs: RootSystem, w: GroupElement) -> GroupElement:
    return from_word(rs, canonical_reduced_word(rs, w)[::-1])


def length(rs: RootSystem, w: GroupElement) -> int:
    """Number of positive roots sent to negative roots."""
    return sum(1 for a in rs.positive_roots if _is_neg(w.apply(a)))


def _left_descent(rs: RootSystem, w: GroupElement) -> int | None:
    lw = length(rs, w)
    for i in range(rs.rank):
        if length(rs, _simple_refl(rs, i) * w) < lw:
            return i
    return None


@lru_cache(maxsize=None)
def _simple_refl(rs: RootSystem, i: int) -> GroupElement:
    return reflection(rs, rs.simple(i))


def longest_element(rs: RootSystem) -> GroupElement:
    w = identity(rs)
    grown = True
    while grown:
        grown = False
        lw = length(rs, w)
        for i in range(rs.rank):
            u = _simple_refl(rs, i) * w
            if length(rs, u) > lw:
                w, grown = u, True
                break
    return w


def canonical_reduced_word(rs: RootSystem, w: GroupElement) -> Word:
    """
    Deterministic reduced word: repeatedly strip the smallest-index left
    descent, appending it to the output.
    """
    out = []
    while True:
        i = _left_descent(rs, w)
        if i is None:
            return tuple(out)
        out.append(i)
        w = _simple_refl(rs, i) * w


def is_reduced(rs: RootSystem, word: Word) -> bool:
    return length(rs, from_word(rs, word)) == len(word)


@lru_cache(maxsize=4096)
def _reduced_words(rs: RootSystem, w: GroupElement) -> frozenset[Word]:
    lw = length(rs, w)
    if lw == 0:
        return frozenset({()})
    out = set()
    for i in range(rs.rank):
        u = _simple_refl(rs, i) * w
        if length(rs, u) < lw:
            out.update((i,) + rest for rest in _reduced_words(rs, u))
    return frozenset(out)


def all_reduced_words(rs: RootSystem, w: GroupElement) -> list[Word]:
    """Every reduced word of w, sorted."""
    return sorted(_reduced_words(rs, w))


@lru_cache(maxsize=None)
def _leq(rs: RootSystem, v: GroupElement, w: GroupElement) -> bool:
    lv, lw = length(rs, v), length(rs, w)
    if lv == 0:
        return True
    if lv >= lw:
        return v == w
    i = _left_descent(rs, w)
    s = _simple_refl(rs, i)
    sv = s * v
    if length(rs, sv) < lv:
        return _leq(rs, sv, s * w)
    return _leq(rs, v, s * w)


def bruhat_leq(rs: RootSystem, v: GroupElement, w: GroupElement) -> bool:
    """Bruhat order via the recursive lifting criterion."""
    return _leq(rs, v, w)


def covers(rs: RootSystem, w: GroupElement) -> list[tuple[Root, GroupElement]]:
    """All (a, s_a w) with s_a w covered by w."""
    lw = length(rs, w)
    out = []
    for a in rs.positive_roots:
        u = reflection(rs, a) * w
        if length(rs, u) == lw - 1:
            out.append((a, u))
    return out


def cocovers(rs: RootSystem, v: GroupElement) -> list[tuple[Root, GroupElement]]:
    """All (a, s_a v) with v covered by s_a v."""
    lv = length(rs, v)
    out = []
    for a in rs.positive_roots:
        u = reflection(rs, a) * v
        if length(rs, u) == lv + 1:
            out.append((a, u))
    return out


def weak_left_leq(rs: RootSystem, v: GroupElement, w: GroupElement) -> bool:
    """True iff l(w v^-1) + l(v) = l(w)."""
    return length(rs, w * inverse(rs, v)) + length(rs, v) == length(rs, w)


def ascent_descent(rs: RootSystem, v: GroupElement, w: GroupElement):
    """
    Return ``(A_l(v), A(v), D(v), AD(v, w))``: left simple ascents as indices,
    then ascent roots, descent roots, and A(v) & D(w) as sets of roots.
    """
    vi = inverse(rs, v)
    wi = inverse(rs, w)
    a_left = frozenset(i for i in range(rs.rank) if not _is_neg(vi.apply(rs.simple(i))))
    asc = frozenset(a for a in rs.positive_roots if not _is_neg(vi.apply(a)))
    desc = frozenset(rs.positive_roots) - asc
    ad = frozenset(a for a in asc if _is_neg(wi.apply(a)))
    return a_left, asc, desc, ad


def reflection_ordering(rs: RootSystem, word: Word) -> list[Root]:
    """alpha_i = s_{b_1} ... s_{b_{i-1}}(b_i) for a reduced word of w_o."""
    if len(word) != rs.n_pos or not is_reduced(rs, word):
        raise ValueError("word is not a reduced word of the longest element")
    return prefix_roots(rs, word)


def prefix_roots(rs: RootSystem, word: Word) -> list[Root]:
    """alpha_i = s_{b_1} ... s_{b_{i-1}}(b_i), for any word."""
    out = []
    u = identity(rs)
    for b in word:
        out.append(u.apply(rs.simple(b)))
        u = u * reflection(rs, rs.simple(b))
    return out


def suffix_roots(rs: RootSystem, word: Word) -> list[Root]:
    """alpha_i = s_{b_l} ... s_{b_{i+1}}(b_i), for any word."""
    out = []
    u = identity(rs)
    for b in reversed(word):
        out.append(u.apply(rs.simple(b)))
        u = u * reflection(rs, rs.simple(b))
    return out[::-1]
