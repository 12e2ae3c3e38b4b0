"""
Words in positive roots, the braided symmetrizer and the Nichols algebra.

A :class:`BraidedVector` is an integer combination of words; a word is a
tuple of indices into ``rs.positive_roots``.  Negative roots never appear:
``x_{-a} = -x_a`` is folded into the coefficient.  Equality in the Nichols
algebra is decided by the symmetrizer kernel test :func:`is_zero_in_nichols`.

>>> from skewnichols.rootsys import build_root_system
>>> rs = build_root_system("A2")
>>> a, b, ab = (gen(rs, r) for r in rs.positive_roots)
>>> is_zero_in_nichols(rs, a * ab + ab * b - b * a)
True
>>> is_zero_in_nichols(rs, a * b)
False
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Mapping

from .rootsys import Root, RootSystem
from .weylgroup import GroupElement, Word, identity, reflection

__all__ = [
    "RootWord", "BraidedVector", "TensorSplit", "gen", "one", "word_vector",
    "braiding", "symmetrizer", "is_zero_in_nichols", "pairing", "coproduct",
    "rho", "sbar", "w_act", "w_degree", "left_derivative", "right_derivative",
    "opposite_left_derivative", "opposite_right_derivative",
]

RootWord = tuple[int, ...]


def _clean(terms: Mapping) -> dict:
    return {k: c for k, c in terms.items() if c}


class BraidedVector:
    """Finite integer combination of root words; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[RootWord, int] | None = None) -> None:
        self.terms: dict[RootWord, int] = _clean(terms or {})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[RootWord, int]]) -> BraidedVector:
        acc: dict[RootWord, int] = defaultdict(int)
        for word, c in pairs:
            acc[tuple(word)] += c
        return cls(acc)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        # wordwise equality in the tensor algebra, not in the Nichols algebra
        return isinstance(other, BraidedVector) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "BraidedVector(0)"
        return f"BraidedVector({dict(sorted(self.terms.items()))})"

    def __add__(self, other: BraidedVector) -> BraidedVector:
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return BraidedVector(acc)

    def __neg__(self) -> BraidedVector:
        return BraidedVector({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: BraidedVector) -> BraidedVector:
        return self + (-other)

    def __rmul__(self, scalar: int) -> BraidedVector:
        return BraidedVector({k: scalar * c for k, c in self.terms.items()})

    def __mul__(self, other: BraidedVector | int) -> BraidedVector:
        if isinstance(other, int):
            return other * self
        acc: dict[RootWord, int] = defaultdict(int)
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                acc[k1 + k2] += c1 * c2
        return BraidedVector(acc)

    def degrees(self) -> list[int]:
        return sorted({len(k) for k in self.terms})

    def component(self, m: int) -> BraidedVector:
        return BraidedVector({k: c for k, c in self.terms.items() if len(k) == m})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def sorted_terms(self) -> list[tuple[RootWord, int]]:
        return sorted(self.terms.items())

    def to_json(self, rs: RootSystem) -> list[dict]:
        pos = rs.positive_roots
        return [{"coeff": c, "word": [list(pos[i]) for i in k]}
                for k, c in self.sorted_terms()]

    def format(self, rs: RootSystem) -> str:
        """Human-readable form such as ``x[1,1]x[0,1] - x[1,0]``."""
        if not self.terms:
            return "0"
        pos = rs.positive_roots
        parts = []
        for k, c in self.sorted_terms():
            mono = "".join("x[" + ",".join(map(str, pos[i])) + "]" for i in k) or "1"
            if c == 1:
                parts.append(f"+ {mono}")
            elif c == -1:
                parts.append(f"- {mono}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {abs(c)}*{mono}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


class TensorSplit:
    """Integer combination of pairs of root words, for coproducts."""

    __slots__ = ("pairs",)

    def __init__(self, pairs: Mapping[tuple[RootWord, RootWord], int] | None = None) -> None:
        self.pairs: dict[tuple[RootWord, RootWord], int] = _clean(pairs or {})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TensorSplit) and self.pairs == other.pairs

    def __repr__(self) -> str:
        return f"TensorSplit({dict(sorted(self.pairs.items()))})"

    def left_part(self, right: RootWord) -> BraidedVector:
        return BraidedVector({l: c for (l, r), c in self.pairs.items() if r == right})

    def right_part(self, left: RootWord) -> BraidedVector:
        return BraidedVector({r: c for (l, r), c in self.pairs.items() if l == left})


def gen(rs: RootSystem, a: Root) -> BraidedVector:
    """The generator x_a for a root a of either sign."""
    s, i = rs.signed_index(a)
    return BraidedVector({(i,): s})


def one() -> BraidedVector:
    return BraidedVector({(): 1})


def word_vector(rs: RootSystem, word: Word) -> BraidedVector:
    """x_{b_1} ... x_{b_k} for a word in simple-root indices."""
    return BraidedVector({tuple(rs.index[rs.simple(b)] for b in word): 1})


def w_degree(rs: RootSystem, word: RootWord) -> GroupElement:
    """Product s_{a_1} ... s_{a_m} of the reflections along a root word."""
    g = identity(rs)
    for i in word:
        g = g * reflection(rs, rs.positive_roots[i])
    return g


def _twist(rs: RootSystem, a: int, word: RootWord) -> tuple[int, RootWord]:
    """Apply s_a letterwise; return (sign, word)."""
    row = rs.refl[a]
    sign = 1
    out = []
    for b in word:
        s, j = row[b]
        if s < 0:
            sign = -sign
        out.append(j)
    return sign, tuple(out)


def braiding(rs: RootSystem, i: int, v: BraidedVector) -> BraidedVector:
    """Psi_i on the tensor factors at positions i, i+1 (0-based)."""
    acc: dict[RootWord, int] = defaultdict(int)
    for word, c in v.terms.items():
        if not 0 <= i < len(word) - 1:
            raise ValueError(f"braiding position {i} out of range for degree {len(word)}")
        a, b = word[i], word[i + 1]
        s, j = rs.refl[a][b]
        acc[word[:i] + (j, a) + word[i + 2:]] += s * c
    return BraidedVector(acc)


def _move_split(rs: RootSystem, terms: Mapping[RootWord, int]) -> dict[int, dict[RootWord, int]]:
    """
    Apply 1 + Psi_{m-1} + Psi_{m-1}Psi_{m-2} + ... (each summand carries one
    letter to the end) and split the result by that last letter.
    """
    refl = rs.refl
    out: dict[int, dict[RootWord, int]] = {}
    for word, c in terms.items():
        m = len(word)
        for k in range(m):
            a = word[k]
            row = refl[a]
            sign = c
            tail = list(word[:k])
            for b in word[k + 1:]:
                s, j = row[b]
                if s < 0:
                    sign = -sign
                tail.append(j)
            bucket = out.setdefault(a, {})
            key = tuple(tail)
            bucket[key] = bucket.get(key, 0) + sign
    for a in list(out):
        bucket = {k: c for k, c in out[a].items() if c}
        if bucket:
            out[a] = bucket
        else:
            del out[a]
    return out


def _sym(rs: RootSystem, terms: Mapping[RootWord, int], m: int) -> dict[RootWord, int]:
    if m <= 1:
        return dict(terms)
    acc: dict[RootWord, int] = defaultdict(int)
    for a, y in _move_split(rs, terms).items():
        for k, c in _sym(rs, y, m - 1).items():
            acc[k + (a,)] += c
    return acc


def _sym_is_zero(rs: RootSystem, terms: Mapping[RootWord, int], m: int) -> bool:
    if not terms:
        return True
    if m <= 1:
        return False
    return all(_sym_is_zero(rs, y, m - 1) for y in _move_split(rs, terms).values())


def symmetrizer(rs: RootSystem, m: int, v: BraidedVector) -> BraidedVector:
    """[m]!(v) via [m]! = ([m-1]! x 1)(1 + Psi_{m-1} + ... + Psi_{m-1}...Psi_1)."""
    if any(len(k) != m for k in v.terms):
        raise ValueError(f"input is not homogeneous of degree {m}")
    return BraidedVector(_sym(rs, v.terms, m))


def is_zero_in_nichols(rs: RootSystem, v: BraidedVector) -> bool:
    """True iff every homogeneous component lies in the kernel of its symmetrizer."""
    for m in v.degrees():
        if not _sym_is_zero(rs, v.component(m).terms, m):
            return False
    return True


def _pair(rs: RootSystem, phi: Mapping[RootWord, int], x: Mapping[RootWord, int], m: int) -> int:
    if m == 0:
        return phi.get((), 0) * x.get((), 0)
    # the last letter of [m]!x meets the first letter of phi
    heads: dict[int, dict[RootWord, int]] = {}
    for k, c in phi.items():
        heads.setdefault(k[0], {})[k[1:]] = c
    total = 0
    for a, y in _move_split(rs, x).items():
        h = heads.get(a)
        if h:
            total += _pair(rs, h, y, m - 1)
    return total


def pairing(rs: RootSystem, phi: BraidedVector, x: BraidedVector) -> int:
    """The duality pairing ev(phi, [m]! x), summed over matching degrees."""
    total = 0
    for m in set(phi.degrees()) & set(x.degrees()):
        total += _pair(rs, phi.component(m).terms, x.component(m).terms, m)
    return total


def coproduct(rs: RootSystem, v: BraidedVector) -> TensorSplit:
    """
    Multiply out (x_{a_1} (x) 1 + 1 (x) x_{a_1}) ... in the braided tensor
    product, where (L (x) R)(x (x) 1) = L (g_R . x) (x) R.
    """
    refl = rs.refl
    total: dict[tuple[RootWord, RootWord], int] = defaultdict(int)
    for word, c in v.terms.items():
        cur: dict[tuple[RootWord, RootWord], int] = {((), ()): c}
        for a in word:
            nxt: dict[tuple[RootWord, RootWord], int] = defaultdict(int)
            for (left, right), coeff in cur.items():
                nxt[left, right + (a,)] += coeff
                s, j = 1, a
                for r in reversed(right):
                    t, j = refl[r][j]
                    s *= t
                nxt[left + (j,), right] += s * coeff
            cur = nxt
        for k, coeff in cur.items():
            total[k] += coeff
    return TensorSplit(total)


def rho(v: BraidedVector) -> BraidedVector:
    """Reverse every word."""
    return BraidedVector({k[::-1]: c for k, c in v.terms.items()})


def sbar(rs: RootSystem, v: BraidedVector) -> BraidedVector:
    """(a_1, ..., a_m) -> (g_1, ..., g_m) with g_i = s_{a_1} ... s_{a_{i-1}}(a_i)."""
    refl = rs.refl
    acc: dict[RootWord, int] = defaultdict(int)
    for word, c in v.terms.items():
        sign = c
        out = []
        for i, a in enumerate(word):
            s, j = 1, a
            for b in reversed(word[:i]):
                t, j = refl[b][j]
                s *= t
            sign *= s
            out.append(j)
        acc[tuple(out)] += sign
    return BraidedVector(acc)


def w_act(rs: RootSystem, w: GroupElement, v: BraidedVector) -> BraidedVector:
    """Letterwise action x_a -> x_{w(a)}."""
    images = [rs.signed_index(w.apply(a)) for a in rs.positive_roots]
    acc: dict[RootWord, int] = defaultdict(int)
    for word, c in v.terms.items():
        sign = c
        out = []
        for i in word:
            s, j = images[i]
            sign *= s
            out.append(j)
        acc[tuple(out)] += sign
    return BraidedVector(acc)


def left_derivative(rs: RootSystem, xi: BraidedVector, x: BraidedVector) -> BraidedVector:
    """<xi, x_(1)> x_(2)."""
    acc: dict[RootWord, int] = defaultdict(int)
    cache: dict[RootWord, int] = {}
    for (left, right), c in coproduct(rs, x).pairs.items():
        p = cache.get(left)
        if p is None:
            p = cache[left] = pairing(rs, xi, BraidedVector({left: 1}))
        if p:
            acc[right] += p * c
    return BraidedVector(acc)


def right_derivative(rs: RootSystem, phi: BraidedVector, x: BraidedVector) -> BraidedVector:
    """(phi) D_x = phi_(1) <phi_(2), x>."""
    acc: dict[RootWord, int] = defaultdict(int)
    cache: dict[RootWord, int] = {}
    for (left, right), c in coproduct(rs, phi).pairs.items():
        p = cache.get(right)
        if p is None:
            p = cache[right] = pairing(rs, BraidedVector({right: 1}), x)
        if p:
            acc[left] += p * c
    return BraidedVector(acc)


def opposite_left_derivative(rs: RootSystem, x: BraidedVector, phi: BraidedVector) -> BraidedVector:
    """The opposite left derivative by x applied to phi: (phi) D_{rho(x)}."""
    return right_derivative(rs, phi, rho(x))


def opposite_right_derivative(rs: RootSystem, xi: BraidedVector, x: BraidedVector) -> BraidedVector:
    """The opposite right derivative by xi applied to x: D_{rho(xi)}(x)."""
    return left_derivative(rs, rho(xi), x)
