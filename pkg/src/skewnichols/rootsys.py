"""
Crystallographic root systems in simple-root coordinates.

Roots are integer tuples ``(n_1, ..., n_r)`` meaning ``sum n_i * beta_i``.
Simple roots are addressed by their 0-based index; node labels follow the
Bourbaki plates.

>>> rs = build_root_system("A2")
>>> rs.positive_roots
((1, 0), (0, 1), (1, 1))
>>> reflect(rs, (1, 0), (0, 1))
(1, 1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

__all__ = [
    "Root", "CartanType", "RootSystem", "build_root_system",
    "pairing", "reflect", "support", "neighbor_sets",
    "classify_negative_pairs", "find_orthogonal_witness", "root_leq",
]

Root = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, n = self.family, self.rank
        if fam in _MIN_RANK:
            ok = n >= _MIN_RANK[fam]
        elif fam == "E":
            ok = n in (6, 7, 8)
        elif fam == "F":
            ok = n == 4
        elif fam == "G":
            ok = n == 2
        else:
            raise ValueError(f"unknown Cartan family {fam!r}")
        if not ok:
            raise ValueError(f"rank {n} is not admissible for family {fam}")

    @classmethod
    def parse(cls, text: str) -> CartanType:
        """Parse strings such as ``"A3"`` or ``"e8"``."""
        s = text.strip().upper()
        if len(s) < 2 or not s[1:].isdigit():
            raise ValueError(f"cannot parse Cartan type {text!r}")
        return cls(s[0], int(s[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _edges(ct: CartanType) -> list[tuple[int, int]]:
    n = ct.rank
    fam = ct.family
    if fam in "ABCFG":
        return [(i, i + 1) for i in range(n - 1)]
    if fam == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    # E_n: 1-3-4-5-...-n with 2 attached to 4
    return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]


def _squared_lengths(ct: CartanType) -> list[int]:
    # short roots have squared length 2
    n = ct.rank
    if ct.family == "B":
        return [4] * (n - 1) + [2]
    if ct.family == "C":
        return [2] * (n - 1) + [4]
    if ct.family == "F":
        return [4, 4, 2, 2]
    if ct.family == "G":
        return [2, 6]
    return [2] * n


def _symmetric_form(ct: CartanType) -> tuple[tuple[int, ...], ...]:
    n = ct.rank
    sq = _squared_lengths(ct)
    form = [[0] * n for _ in range(n)]
    for i in range(n):
        form[i][i] = sq[i]
    for i, j in _edges(ct):
        # (b_i, b_j) = -max(|b_i|^2, |b_j|^2) / 2 for adjacent nodes
        form[i][j] = form[j][i] = -max(sq[i], sq[j]) // 2
    return tuple(tuple(row) for row in form)


@dataclass(frozen=True, eq=False)
class RootSystem:
    type: CartanType
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    symmetric_form: tuple[tuple[int, ...], ...]
    index: dict[Root, int] = field(repr=False)
    # refl[a][b] = (sign, c) with s_{alpha_a}(alpha_b) = sign * alpha_c
    refl: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)

    def __hash__(self) -> int:
        return hash(self.type)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and other.type == self.type

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def n_pos(self) -> int:
        return len(self.positive_roots)

    @property
    def simply_laced(self) -> bool:
        return self.type.family in "ADE"

    def simple(self, i: int) -> Root:
        return tuple(int(k == i) for k in range(self.rank))

    def inner(self, a: Root, b: Root) -> int:
        f = self.symmetric_form
        return sum(a[i] * f[i][j] * b[j]
                   for i in range(self.rank) if a[i]
                   for j in range(self.rank) if b[j])

    def is_root(self, a: Root) -> bool:
        a = tuple(a)
        return a in self.index or tuple(-c for c in a) in self.index

    def signed_index(self, a: Root) -> tuple[int, int]:
        """Return ``(sign, i)`` with ``a == sign * positive_roots[i]``."""
        a = tuple(a)
        i = self.index.get(a)
        if i is not None:
            return 1, i
        i = self.index.get(tuple(-c for c in a))
        if i is None:
            raise ValueError(f"{a} is not a root of {self.type}")
        return -1, i

    def cartan_pair(self, g: Root, a: Root) -> int:
        return 2 * self.inner(g, a) // self.inner(a, a)

    def reflect_vec(self, a: Root, g: Root) -> Root:
        k = self.cartan_pair(g, a)
        return tuple(x - k * y for x, y in zip(g, a))


def _close_positive_roots(ct: CartanType, form) -> list[Root]:
    n = ct.rank
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for a in frontier:
            for i in range(n):
                if a == simple[i]:
                    continue
                num = 2 * sum(a[k] * form[k][i] for k in range(n))
                c = num // form[i][i]
                b = tuple(a[k] - (c if k == i else 0) for k in range(n))
                if b not in found:
                    found.add(b)
                    nxt.append(b)
        frontier = nxt
    # by height, ties broken so that beta_1, beta_2, ... come in index order
    return sorted(found, key=lambda r: (sum(r), tuple(-c for c in r)))


@lru_cache(maxsize=None)
def _build(ct: CartanType) -> RootSystem:
    form = _symmetric_form(ct)
    n = ct.rank
    cartan = tuple(tuple(2 * form[i][j] // form[j][j] for j in range(n)) for i in range(n))
    pos = _close_positive_roots(ct, form)
    index = {r: i for i, r in enumerate(pos)}
    rs = RootSystem(ct, cartan, tuple(pos), form, index, ())
    table = []
    for a in pos:
        row = []
        for b in pos:
            row.append(rs.signed_index(rs.reflect_vec(a, b)))
        table.append(tuple(row))
    object.__setattr__(rs, "refl", tuple(table))
    return rs


def build_root_system(ct: CartanType | str) -> RootSystem:
    """Construct (and cache) the root system of a Cartan type."""
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    return _build(ct)


def _check_root(rs: RootSystem, a: Root) -> Root:
    a = tuple(a)
    if len(a) != rs.rank or not rs.is_root(a):
        raise ValueError(f"{a} is not a root of {rs.type}")
    return a


def pairing(rs: RootSystem, g: Root, a: Root) -> int:
    """The Cartan integer <g, a> = 2 (g, a) / (a, a)."""
    return rs.cartan_pair(_check_root(rs, g), _check_root(rs, a))


def reflect(rs: RootSystem, a: Root, g: Root) -> Root:
    """s_a(g) = g - <g, a> a."""
    return rs.reflect_vec(_check_root(rs, a), _check_root(rs, g))


def root_leq(a: Root, b: Root) -> bool:
    """The root order: b - a has only nonnegative coefficients."""
    return all(x <= y for x, y in zip(a, b))


def support(a: Root) -> frozenset[int]:
    """Indices of the simple roots occurring in a positive root."""
    return frozenset(i for i, c in enumerate(a) if c > 0)


def neighbor_sets(rs: RootSystem, a: Root, b: int) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """
    The sets ``(N+, N-, N)`` of simple roots b' in the support of ``a`` that are
    joined to the simple root ``b`` in the Dynkin diagram, split by the sign of
    (a, b').
    """
    a = _check_root(rs, a)
    supp = support(a)
    if b not in supp:
        raise ValueError(f"simple root {b + 1} is not in the support of {a}")
    bvec = rs.simple(b)
    near = frozenset(j for j in supp if rs.inner(bvec, rs.simple(j)) < 0)
    plus = frozenset(j for j in near if rs.inner(a, rs.simple(j)) > 0)
    return plus, near - plus, near


def classify_negative_pairs(rs: RootSystem) -> list[tuple[Root, int]]:
    """All (a, b) with b in the support of a, (a, b) < 0 and n_b(a) > 1."""
    out = []
    for a in rs.positive_roots:
        for b in sorted(support(a)):
            if a[b] > 1 and rs.inner(a, rs.simple(b)) < 0:
                out.append((a, b))
    return out


def find_orthogonal_witness(rs: RootSystem, a: Root, b: int) -> Root | None:
    """
    Smallest positive root a2 (in enumeration order) with n_b(a) * a2 <= a,
    (a2, b) > 0 and (a, a2) = 0, or None.
    """
    a = _check_root(rs, a)
    bvec = rs.simple(b)
    if b not in support(a) or rs.inner(a, bvec) >= 0:
        raise ValueError("requires b in the support of a and (a, b) < 0")
    n = a[b]
    for c in rs.positive_roots:
        if (root_leq(tuple(n * x for x in c), a)
                and rs.inner(c, bvec) > 0 and rs.inner(a, c) == 0):
            return c
    return None
