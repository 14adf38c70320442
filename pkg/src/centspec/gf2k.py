"""Arithmetic in GF(2^k), elements encoded as k-bit integers."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np


def _clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _gf2_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def is_irreducible_gf2(poly: int) -> bool:
    """Trial division by every polynomial of degree 1..deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for d in range(2, 1 << (deg // 2 + 1)):
        if _gf2_mod(poly, d) == 0:
            return False
    return True


def smallest_irreducible(k: int) -> int:
    """Smallest degree-k irreducible over GF(2) with nonzero constant term.

    Bit i of the result is the coefficient of x^i, so x^3 + x + 1 is 0b1011.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    for poly in range((1 << k) | 1, 1 << (k + 1), 2):
        if is_irreducible_gf2(poly):
            return poly
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True)
class FieldGF2k:
    k: int

    @cached_property
    def modulus(self) -> int:
        return smallest_irreducible(self.k)

    @property
    def size(self) -> int:
        return 1 << self.k

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return _gf2_mod(_clmul(a, b), self.modulus)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2^k)")
        # a^(2^k - 2)
        out, base, e = 1, a, self.size - 2
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.size
        t = np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        t.setflags(write=False)
        return t

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 is not in the multiplicative group")
        x, n = a, 1
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n
