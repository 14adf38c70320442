"""Univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored constant term first and trailing zeros are trimmed,
so equality of two instances is exact coefficient equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(a) for a in self.coeffs)
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", c[:end])

    # -- constructors -------------------------------------------------
    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def linear_root(cls, r: int) -> IntPolynomial:
        """x - r"""
        return cls((-r, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[tuple[int, int]]) -> IntPolynomial:
        """Product of (x - r)^m over (r, m) pairs."""
        out = cls.constant(1)
        for r, m in roots:
            out = out * cls.linear_root(r) ** m
        return out

    # -- basic properties ---------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        return reduce(gcd, self.coeffs, 0)

    def primitive(self) -> IntPolynomial:
        """Divide by the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    # -- arithmetic ---------------------------------------------------
    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative exponent")
        out, base = IntPolynomial.constant(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def divmod_monic(self, d: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Quotient and remainder by a divisor with leading coefficient +-1."""
        if d.leading not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        dd = d.degree
        if len(rem) - 1 < dd:
            return IntPolynomial(), self
        quot = [0] * (len(rem) - dd)
        lead = d.leading
        for i in range(len(rem) - 1, dd - 1, -1):
            q = rem[i] * lead
            if q:
                quot[i - dd] = q
                for j, c in enumerate(d.coeffs):
                    rem[i - dd + j] -= q * c
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:dd]))

    def exact_div(self, d: IntPolynomial) -> IntPolynomial:
        q, r = self.divmod_monic(d)
        if not r.is_zero():
            raise ArithmeticError(f"{d} does not divide {self}")
        return q

    def divides(self, other: IntPolynomial) -> bool:
        return other.divmod_monic(self)[1].is_zero()

    def pseudo_rem(self, d: IntPolynomial) -> IntPolynomial:
        """Remainder of lc(d)^(deg self - deg d + 1) * self by d, over Z."""
        rem = list(self.coeffs)
        dd, lc = d.degree, d.leading
        while len(rem) - 1 >= dd and any(rem):
            shift = len(rem) - 1 - dd
            top = rem[-1]
            rem = [c * lc for c in rem]
            for j, c in enumerate(d.coeffs):
                rem[shift + j] -= top * c
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return IntPolynomial(tuple(rem))

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def reflect(self, n: int) -> IntPolynomial:
        """Monic-normalised f(n - x): roots r become n - r."""
        out = IntPolynomial()
        base = IntPolynomial((n, -1))
        for c in reversed(self.coeffs):
            out = out * base + c
        return -out if out.leading < 0 else out

    # -- display ------------------------------------------------------
    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(p: IntPolynomial | int) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial.constant(p)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q[x] via a primitive remainder sequence."""
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, a.pseudo_rem(b).primitive()
    return a.primitive()


def squarefree_decomposition(f: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm for a monic f: returns [(g_i, i)] with f = prod g_i^i.

    Each g_i is monic, squarefree, pairwise coprime; trivial factors are omitted.
    """
    if not f.is_monic():
        raise ValueError("squarefree_decomposition expects a monic polynomial")
    if f.degree < 1:
        return []
    df = f.derivative()
    a0 = poly_gcd(f, df)
    b = f.exact_div(a0)
    c = df.exact_div(a0)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out
