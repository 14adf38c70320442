"""Concrete finite groups for the five families, plus centers and centralizers.

The four presented families use a normal form a^i b^j stored at index
i + m*j (m = order of the first generator), with multiplication read off
the conjugation relation.  PSL(2, 2^k) is realised as SL(2, 2^k): in
characteristic two the scalar matrices of determinant one reduce to the
identity, so no quotient is needed.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from .errors import AbelianGroup, InvalidParams
from .gf2k import FieldGF2k

# Above this order the Cayley table is not materialised.
TABLE_LIMIT = 2048


class Family(enum.Enum):
    GeneralizedQuaternion = "quaternion"
    Dihedral = "dihedral"
    Quasidihedral = "quasidihedral"
    Metacyclic = "metacyclic"
    ProjectiveSpecialLinear = "psl"


PARAM_NAMES: dict[Family, tuple[str, ...]] = {
    Family.GeneralizedQuaternion: ("n",),
    Family.Dihedral: ("n",),
    Family.Quasidihedral: ("n",),
    Family.Metacyclic: ("p", "q"),
    Family.ProjectiveSpecialLinear: ("k",),
}


@dataclass(frozen=True)
class GroupSpec:
    family: Family
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(v) for v in self.params))
        names = PARAM_NAMES[self.family]
        if len(self.params) != len(names):
            raise InvalidParams(f"{self.family.value} takes parameters {names}, got {self.params}")
        if any(v < 1 for v in self.params):
            raise InvalidParams(f"parameters must be positive integers, got {self.params}")
        fam, p = self.family, self.params
        if fam is Family.GeneralizedQuaternion and p[0] < 2:
            raise InvalidParams("Q_4n requires n >= 2")
        if fam is Family.Dihedral and p[0] < 3:
            raise InvalidParams("D_2n requires n >= 3")
        if fam is Family.Quasidihedral and p[0] < 4:
            raise InvalidParams("QD_2^n requires n >= 4")
        if fam is Family.Metacyclic and p[0] <= 2:
            raise InvalidParams("M_2pq requires p > 2")

    @classmethod
    def quaternion(cls, n: int) -> GroupSpec:
        return cls(Family.GeneralizedQuaternion, (n,))

    @classmethod
    def dihedral(cls, n: int) -> GroupSpec:
        return cls(Family.Dihedral, (n,))

    @classmethod
    def quasidihedral(cls, n: int) -> GroupSpec:
        return cls(Family.Quasidihedral, (n,))

    @classmethod
    def metacyclic(cls, p: int, q: int) -> GroupSpec:
        return cls(Family.Metacyclic, (p, q))

    @classmethod
    def psl(cls, k: int) -> GroupSpec:
        return cls(Family.ProjectiveSpecialLinear, (k,))

    @property
    def param_dict(self) -> dict[str, int]:
        return dict(zip(PARAM_NAMES[self.family], self.params))

    @property
    def expected_order(self) -> int:
        fam, p = self.family, self.params
        if fam is Family.GeneralizedQuaternion:
            return 4 * p[0]
        if fam is Family.Dihedral:
            return 2 * p[0]
        if fam is Family.Quasidihedral:
            return 2 ** p[0]
        if fam is Family.Metacyclic:
            return 2 * p[0] * p[1]
        q = 2 ** p[0]
        return q * (q * q - 1)

    def __str__(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.param_dict.items())
        return f"{self.family.value}({args})"


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A group on indices 0..order-1 with 0 the identity.

    `mul` is vectorised: it multiplies two equally shaped index arrays
    elementwise.
    """

    name: str
    order: int
    labels: tuple[str, ...]
    mul: Callable[[np.ndarray, np.ndarray], np.ndarray] = field(repr=False)
    generators: dict[str, int] = field(default_factory=dict)

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def multiply(self, a: int, b: int) -> int:
        return int(self.mul(np.array([a]), np.array([b]))[0])

    def power(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inverse(a), -e
        out = 0
        while e:
            if e & 1:
                out = self.multiply(out, a)
            a = self.multiply(a, a)
            e >>= 1
        return out

    def element_order(self, a: int) -> int:
        x, n = a, 1
        while x != 0:
            x = self.multiply(x, a)
            n += 1
        return n

    @cached_property
    def table(self) -> np.ndarray | None:
        """Cayley table (row a, column b holds a*b), or None for large groups."""
        if self.order > TABLE_LIMIT:
            return None
        e = self.elements
        t = self.mul(np.repeat(e, self.order), np.tile(e, self.order)).reshape(self.order, self.order)
        t.setflags(write=False)
        return t

    def inverse(self, a: int) -> int:
        row = self.mul(np.full(self.order, a), self.elements)
        return int(np.flatnonzero(row == 0)[0])

    def commutes_with(self, a: int) -> np.ndarray:
        """Boolean mask of the elements commuting with a."""
        t = self.table
        if t is not None:
            return t[a, :] == t[:, a]
        left = self.mul(np.full(self.order, a), self.elements)
        right = self.mul(self.elements, np.full(self.order, a))
        return left == right


@dataclass(frozen=True)
class ElementSubset:
    """A subset of a group's elements; `members` is sorted and is the dedup key."""

    members: tuple[int, ...]
    group_order: int

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> ElementSubset:
        return cls(tuple(int(i) for i in np.flatnonzero(mask)), len(mask))

    @property
    def cardinality(self) -> int:
        return len(self.members)

    @property
    def bits(self) -> int:
        out = 0
        for i in self.members:
            out |= 1 << i
        return out

    def __contains__(self, i: int) -> bool:
        return (self.bits >> i) & 1 == 1

    def __len__(self) -> int:
        return len(self.members)

    def issubset(self, other: ElementSubset) -> bool:
        return self.bits & ~other.bits == 0

    def is_whole_group(self) -> bool:
        return len(self.members) == self.group_order


# -- construction -----------------------------------------------------------

def _pair_group(name: str, m: int, s: int, rule, labels, generators) -> FiniteGroup:
    """Group of pairs (i mod m, j mod s) at index i + m*j with (i, j)(i', j') = rule(...)."""

    def mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        i, j = a % m, a // m
        i2, j2 = b % m, b // m
        ri, rj = rule(i, j, i2, j2)
        return (ri % m) + m * (rj % s)

    return FiniteGroup(name, m * s, tuple(labels), mul, generators)


def _word(gen_a: str, gen_b: str, i: int, j: int) -> str:
    parts = []
    if i:
        parts.append(gen_a if i == 1 else f"{gen_a}^{i}")
    if j:
        parts.append(gen_b if j == 1 else f"{gen_b}^{j}")
    return " ".join(parts) or "1"


def _quaternion(n: int) -> FiniteGroup:
    m = 2 * n

    # y x^i = x^-i y and y^2 = x^n
    def rule(i, j, i2, j2):
        sign = 1 - 2 * j
        return i + sign * i2 + n * (j * j2), j + j2

    labels = [_word("x", "y", i, j) for j in range(2) for i in range(m)]
    return _pair_group(f"Q_{4 * n}", m, 2, rule, labels, {"x": 1, "y": m})


def _dihedral(n: int) -> FiniteGroup:
    def rule(i, j, i2, j2):
        return i + (1 - 2 * j) * i2, j + j2

    labels = [_word("x", "y", i, j) for j in range(2) for i in range(n)]
    return _pair_group(f"D_{2 * n}", n, 2, rule, labels, {"x": 1, "y": n})


def _quasidihedral(n: int) -> FiniteGroup:
    m = 2 ** (n - 1)
    r = 2 ** (n - 2) - 1

    # b a^i = a^(r i) b, r^2 = 1 mod m
    def rule(i, j, i2, j2):
        return i + np.where(j == 1, r * i2, i2), j + j2

    labels = [_word("a", "b", i, j) for j in range(2) for i in range(m)]
    return _pair_group(f"QD_{2 ** n}", m, 2, rule, labels, {"a": 1, "b": m})


def _metacyclic(p: int, q: int) -> FiniteGroup:
    # b^j a b^-j = a^((-1)^j)
    def rule(i, j, i2, j2):
        return i + (1 - 2 * (j % 2)) * i2, j + j2

    labels = [_word("a", "b", i, j) for j in range(2 * q) for i in range(p)]
    return _pair_group(f"M_{2 * p * q}", p, 2 * q, rule, labels, {"a": 1, "b": p})


def _psl(k: int) -> FiniteGroup:
    field_ = FieldGF2k(k)
    qf = field_.size
    mt = field_.mul_table
    mats = []
    for a in range(qf):
        for b in range(qf):
            for c in range(qf):
                for d in range(qf):
                    if mt[a, d] ^ mt[b, c] == 1:
                        mats.append((a, b, c, d))
    ident = (1, 0, 0, 1)
    mats.remove(ident)
    mats.insert(0, ident)
    arr = np.array(mats, dtype=np.int64)
    codes = ((arr[:, 0] * qf + arr[:, 1]) * qf + arr[:, 2]) * qf + arr[:, 3]
    lookup = np.full(qf ** 4, -1, dtype=np.int64)
    lookup[codes] = np.arange(len(mats))

    def mul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x = arr[np.asarray(x, dtype=np.int64)]
        y = arr[np.asarray(y, dtype=np.int64)]
        a = mt[x[..., 0], y[..., 0]] ^ mt[x[..., 1], y[..., 2]]
        b = mt[x[..., 0], y[..., 1]] ^ mt[x[..., 1], y[..., 3]]
        c = mt[x[..., 2], y[..., 0]] ^ mt[x[..., 3], y[..., 2]]
        d = mt[x[..., 2], y[..., 1]] ^ mt[x[..., 3], y[..., 3]]
        return lookup[((a * qf + b) * qf + c) * qf + d]

    labels = [f"[[{a},{b}],[{c},{d}]]" for a, b, c, d in mats]
    gens = {"s": mats.index((1, 1, 0, 1)), "t": mats.index((0, 1, 1, 0))}
    return FiniteGroup(f"PSL(2,{qf})", len(mats), tuple(labels), mul, gens)


def build_group(spec: GroupSpec) -> FiniteGroup:
    fam, p = spec.family, spec.params
    if fam is Family.GeneralizedQuaternion:
        return _quaternion(p[0])
    if fam is Family.Dihedral:
        return _dihedral(p[0])
    if fam is Family.Quasidihedral:
        return _quasidihedral(p[0])
    if fam is Family.Metacyclic:
        return _metacyclic(*p)
    return _psl(p[0])


def defining_relations(spec: GroupSpec, g: FiniteGroup) -> list[tuple[str, int, int]]:
    """(name, lhs, rhs) element pairs for every relation of the presentation.

    PSL has no presentation here; its relation is det = 1, enforced at construction.
    """
    fam, p = spec.family, spec.params
    mul, pw, inv = g.multiply, g.power, g.inverse
    if fam is Family.ProjectiveSpecialLinear:
        return []
    if fam in (Family.GeneralizedQuaternion, Family.Dihedral):
        x, y = g.generators["x"], g.generators["y"]
        n = p[0]
        conj = ("y x y^-1 = x^-1", mul(mul(y, x), inv(y)), inv(x))
        if fam is Family.GeneralizedQuaternion:
            return [
                ("x^2n = 1", pw(x, 2 * n), 0),
                ("x^n = y^2", pw(x, n), pw(y, 2)),
                ("y x = x^-1 y", mul(y, x), mul(inv(x), y)),
                conj,
            ]
        return [("x^n = 1", pw(x, n), 0), ("y^2 = 1", pw(y, 2), 0), conj]
    a, b = g.generators["a"], g.generators["b"]
    bab = mul(mul(b, a), inv(b))
    if fam is Family.Quasidihedral:
        n = p[0]
        return [
            ("a^(2^(n-1)) = 1", pw(a, 2 ** (n - 1)), 0),
            ("b^2 = 1", pw(b, 2), 0),
            ("b a b^-1 = a^(2^(n-2)-1)", bab, pw(a, 2 ** (n - 2) - 1)),
        ]
    pp, q = p
    return [
        ("a^p = 1", pw(a, pp), 0),
        ("b^2q = 1", pw(b, 2 * q), 0),
        ("b a b^-1 = a^-1", bab, inv(a)),
    ]


def check_group_axioms(g: FiniteGroup, *, exhaustive_limit: int = 200,
                       samples: int = 100_000, seed: int = 0) -> None:
    """Raise AssertionError unless identity, inverses and associativity hold.

    Associativity is checked on all triples up to `exhaustive_limit` elements
    and on `samples` random triples beyond that.
    """
    e = g.elements
    zero = np.zeros_like(e)
    if not (np.array_equal(g.mul(zero, e), e) and np.array_equal(g.mul(e, zero), e)):
        raise AssertionError("index 0 is not a two-sided identity")
    t = g.table
    if t is not None:
        if not all(np.array_equal(np.sort(row), e) for row in t):
            raise AssertionError("multiplication table is not a Latin square")
        has_inv = (t == 0).any(axis=1) & (t == 0).any(axis=0)
        if not has_inv.all():
            raise AssertionError("an element lacks a two-sided inverse")
    else:
        for a in range(g.order):
            b = g.inverse(a)
            if g.multiply(b, a) != 0:
                raise AssertionError(f"element {a} lacks a two-sided inverse")
    if t is not None and g.order <= exhaustive_limit:
        for a in range(g.order):
            # rows: (a*b)*c and a*(b*c) over all (b, c)
            if not np.array_equal(t[t[a]], t[a][t]):
                raise AssertionError("multiplication is not associative")
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, g.order, size=(3, samples))
        if not np.array_equal(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c))):
            raise AssertionError("multiplication is not associative (sampled)")


# -- centers and centralizers ------------------------------------------------

def centralizer(g: FiniteGroup, elem: int) -> ElementSubset:
    if not 0 <= elem < g.order:
        raise IndexError(f"element {elem} out of range for order {g.order}")
    return ElementSubset.from_mask(g.commutes_with(elem))


def center(g: FiniteGroup) -> ElementSubset:
    t = g.table
    if t is not None:
        return ElementSubset.from_mask((t == t.T).all(axis=1))
    mask = np.ones(g.order, dtype=bool)
    for a in range(g.order):
        mask &= g.commutes_with(a)
    return ElementSubset.from_mask(mask)


def proper_centralizers(g: FiniteGroup) -> tuple[ElementSubset, ...]:
    """Distinct centralizers other than G, ordered by (cardinality desc, members)."""
    seen: set[tuple[int, ...]] = set()
    out = []
    for a in range(g.order):
        c = centralizer(g, a)
        if c.is_whole_group() or c.members in seen:
            continue
        seen.add(c.members)
        out.append(c)
    if not out:
        raise AbelianGroup(f"{g.name} is abelian: every centralizer is the whole group")
    out.sort(key=lambda c: (-c.cardinality, c.members))
    return tuple(out)
