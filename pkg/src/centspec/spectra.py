"""Exact adjacency / Laplacian / signless Laplacian spectra.

Everything here is integer arithmetic.  Characteristic polynomials are
computed modulo enough 31-bit primes to pin every coefficient and then
lifted by CRT; integer eigenvalues are split off with the rational root
test, and whatever is left stays as an integer polynomial factor.  The only
floating point lives in `approx_roots`, which is for display.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb, isqrt, prod
from typing import Iterable, Mapping, Sequence

import numpy as np

from ._charpoly_mod import charpoly_mod_p, primes_below_2_31
from .errors import DimensionMismatch, MissingZero
from .graphs import CliqueDecomposition, Graph
from .poly import IntPolynomial, squarefree_decomposition

# Root-bound ceiling for scanning candidates directly; above it we factor c0.
_SCAN_LIMIT = 2_000_000


class MatrixKind(enum.Enum):
    Adjacency = "adjacency"
    Laplacian = "laplacian"
    SignlessLaplacian = "signless_laplacian"


class QuotientVariant(enum.Enum):
    CliqueUnion = "clique_union"
    Multipartite = "multipartite"


@dataclass(frozen=True)
class ExactSpectrum:
    """Integer eigenvalues with multiplicities plus integer-rootless residual factors.

    Always built through `ExactSpectrum.build`, which merges duplicate
    eigenvalues, drops zero multiplicities and puts residual factors in a
    canonical squarefree form, so `==` is multiset equality.
    """

    eigenvalues: tuple[tuple[int, int], ...]
    residuals: tuple[tuple[IntPolynomial, int], ...] = ()

    @classmethod
    def build(cls, eigenvalues: Mapping[int, int] | Iterable[tuple[int, int]] = (),
              residuals: Iterable[tuple[IntPolynomial, int]] = ()) -> ExactSpectrum:
        items = eigenvalues.items() if isinstance(eigenvalues, Mapping) else eigenvalues
        merged: dict[int, int] = {}
        for value, mult in items:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for eigenvalue {value}")
            merged[int(value)] = merged.get(int(value), 0) + int(mult)
        eig = tuple(sorted((v, m) for v, m in merged.items() if m))
        return cls(eig, _canonical_residuals(residuals))

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.eigenvalues) + sum(f.degree * m for f, m in self.residuals)

    def multiplicity(self, value: int) -> int:
        return dict(self.eigenvalues).get(value, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.eigenvalues)

    def __add__(self, other: ExactSpectrum) -> ExactSpectrum:
        """Multiset union (the spectrum of a direct sum)."""
        return ExactSpectrum.build(self.eigenvalues + other.eigenvalues,
                                   self.residuals + other.residuals)

    def as_polynomial(self) -> IntPolynomial:
        out = IntPolynomial.from_roots(self.eigenvalues)
        for f, m in self.residuals:
            out = out * f ** m
        return out

    def power_sum(self, k: int) -> int:
        """Sum of the k-th powers of all eigenvalues, k in {1, 2}, counted with multiplicity."""
        if k not in (1, 2):
            raise ValueError("only first and second power sums are supported")
        total = sum(m * v ** k for v, m in self.eigenvalues)
        for f, m in self.residuals:
            d = f.degree
            e1 = -f[d - 1]
            e2 = f[d - 2]
            total += m * (e1 if k == 1 else e1 * e1 - 2 * e2)
        return total

    def __str__(self) -> str:
        parts = [f"{v}^{m}" if m > 1 else str(v) for v, m in self.eigenvalues]
        parts += [f"roots({f})" + (f"^{m}" if m > 1 else "") for f, m in self.residuals]
        return "{" + ", ".join(parts) + "}"


def _canonical_residuals(residuals: Iterable[tuple[IntPolynomial, int]]) -> tuple[tuple[IntPolynomial, int], ...]:
    product = IntPolynomial.constant(1)
    for f, m in residuals:
        if m < 0:
            raise ValueError("negative residual multiplicity")
        if f.degree < 1 or not m:
            continue
        if f.leading < 0:
            f = -f
        if not f.is_monic():
            raise ValueError(f"residual factor {f} is not monic")
        product = product * f ** m
    return tuple(sorted(squarefree_decomposition(product), key=lambda fm: (fm[1], fm[0].coeffs)))


# -- matrices ----------------------------------------------------------------

def matrix_of(graph: Graph, kind: MatrixKind) -> np.ndarray:
    a = graph.adjacency.astype(np.int64)
    if kind is MatrixKind.Adjacency:
        return a
    d = np.diag(a.sum(axis=1))
    return d - a if kind is MatrixKind.Laplacian else d + a


def quotient_matrix(parts: Sequence[int] | CliqueDecomposition, kind: MatrixKind,
                    variant: QuotientVariant) -> np.ndarray:
    """Quotient of the chosen matrix over the part classes, parts in the given order.

    Entry (i, j) is the row sum of the (i, j) block, which is constant on an
    equitable partition.
    """
    sizes = np.array(list(parts), dtype=np.int64)
    m = len(sizes)
    if m == 0:
        raise ValueError("at least one part is required")
    if variant is QuotientVariant.CliqueUnion:
        adj = np.diag(sizes - 1)
    else:
        adj = np.tile(sizes, (m, 1))
        np.fill_diagonal(adj, 0)
    if kind is MatrixKind.Adjacency:
        return adj
    deg = np.diag(adj.sum(axis=1))
    return deg - adj if kind is MatrixKind.Laplacian else deg + adj


# -- characteristic polynomial ----------------------------------------------

def _coefficient_bound(rows: list[list[int]]) -> int:
    """B with |c_i| <= B for every coefficient of det(xI - M).

    c_i is a signed sum of C(n, i) principal minors, each bounded by Hadamard
    with the largest row norm r, so |c_i| <= C(n, i) r^i <= (1 + r)^n.  For
    symmetric M the eigenvalues are real and Maclaurin's inequality gives the
    same shape with r^2 replaced by trace(M^2) / n, which is usually far smaller.
    """
    n = len(rows)
    max_sq = max(sum(v * v for v in row) for row in rows)
    r = isqrt(max_sq) + 1
    symmetric = all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i))
    if symmetric:
        total_sq = sum(v * v for row in rows for v in row)
        r = min(r, isqrt(-(-total_sq // n)) + 1)
    return max(comb(n, i) * r ** i for i in range(n + 1))


def char_poly(m) -> IntPolynomial:
    """Monic det(xI - m) with exact integer coefficients."""
    rows = [[int(v) for v in row] for row in np.asarray(m, dtype=object).tolist()] if len(m) else []
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("char_poly needs a square matrix")
    if n == 0:
        return IntPolynomial.constant(1)
    bound = 2 * _coefficient_bound(rows) + 1
    count = 1
    while prod(primes_below_2_31(count)) <= bound:
        count += 1
    chosen = primes_below_2_31(count)

    coeffs = [0] * (n + 1)
    acc_mod = 1
    for p in chosen:
        reduced = np.array([[v % p for v in row] for row in rows], dtype=np.int64)
        res = [int(c) for c in charpoly_mod_p(reduced, p)]
        if acc_mod == 1:
            coeffs = res
        else:
            inv = pow(acc_mod % p, -1, p)
            coeffs = [c + acc_mod * ((r - c) * inv % p) for c, r in zip(coeffs, res)]
        acc_mod *= p
    half = acc_mod // 2
    return IntPolynomial(tuple(c - acc_mod if c > half else c for c in coeffs))


def det_bareiss(m) -> int:
    """Fraction-free Gaussian elimination determinant."""
    a = [[int(v) for v in row] for row in np.asarray(m, dtype=object).tolist()]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# -- spectrum extraction -------------------------------------------------------

def _iroot_ceil(x: int, k: int) -> int:
    """Smallest t >= 0 with t^k >= x."""
    if x <= 0:
        return 0
    t = int(round(x ** (1.0 / k))) if x.bit_length() < 1000 else 1 << (x.bit_length() // k + 1)
    while t ** k < x:
        t += 1
    while t > 0 and (t - 1) ** k >= x:
        t -= 1
    return t


def root_bound(f: IntPolynomial) -> int:
    """Fujiwara bound: every complex root of monic f has |root| <= the result."""
    d = f.degree
    terms = [_iroot_ceil(abs(f[d - i]), i) for i in range(1, d)]
    terms.append(_iroot_ceil(-(-abs(f[0]) // 2), d))
    return 2 * max(terms, default=0)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _integer_root_candidates(f: IntPolynomial) -> list[int]:
    c0 = f[0]
    bound = root_bound(f)
    if bound <= _SCAN_LIMIT:
        pos = [r for r in range(1, min(bound, abs(c0)) + 1) if c0 % r == 0]
    else:
        pos = [r for r in _divisors(c0) if r <= bound]
    return [s * r for r in pos for s in (1, -1)]


def extract_spectrum(p: IntPolynomial) -> ExactSpectrum:
    if not p.is_monic():
        raise ValueError(f"extract_spectrum expects a monic polynomial, got {p}")
    zeros = 0
    while p[zeros] == 0 and zeros < p.degree:
        zeros += 1
    f = IntPolynomial(p.coeffs[zeros:])
    eig = {0: zeros} if zeros else {}
    if f.degree > 0:
        for r in _integer_root_candidates(f):
            lin = IntPolynomial.linear_root(r)
            while f.degree > 0 and f(r) == 0:
                f = f.exact_div(lin)
                eig[r] = eig.get(r, 0) + 1
    residuals = [(f, 1)] if f.degree > 0 else []
    return ExactSpectrum.build(eig, residuals)


def spectrum_of(graph: Graph, kind: MatrixKind) -> ExactSpectrum:
    return extract_spectrum(char_poly(matrix_of(graph, kind)))


def is_integral(s: ExactSpectrum) -> bool:
    return not s.residuals


def complement_L_spectrum(s: ExactSpectrum, n: int) -> ExactSpectrum:
    """Laplacian spectrum of the complement from that of the graph on n vertices."""
    if s.dimension != n:
        raise DimensionMismatch(f"spectrum has dimension {s.dimension}, expected {n}")
    if s.multiplicity(0) == 0:
        raise MissingZero("a Laplacian spectrum must contain 0")
    eig = {0: 1}
    for v, m in s.eigenvalues:
        if v == 0:
            m -= 1
        if m:
            eig[n - v] = eig.get(n - v, 0) + m
    return ExactSpectrum.build(eig, [(f.reflect(n), m) for f, m in s.residuals])


def approx_roots(p: IntPolynomial) -> list[float]:
    """Real roots to about 1e-12, for display only."""
    if p.degree < 1:
        return []
    if p.degree == 1:
        return [-p[0] / p[1]]
    roots = np.roots([float(c) for c in reversed(p.coeffs)])
    scale = max(1.0, float(np.max(np.abs(roots))))
    out = []
    dp = p.derivative()
    for z in roots:
        if abs(z.imag) > 1e-6 * scale:
            continue
        x = float(z.real)
        for _ in range(50):
            fx, dfx = _horner(p, x), _horner(dp, x)
            if dfx == 0:
                break
            step = fx / dfx
            x -= step
            if abs(step) <= 1e-15 * max(1.0, abs(x)):
                break
        out.append(x)
    return sorted(out)


def _horner(p: IntPolynomial, x: float) -> float:
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc
