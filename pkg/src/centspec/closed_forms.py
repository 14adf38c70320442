"""Closed-form spectra, characteristic polynomials, eigenvector families and
integrality conditions for the centralizer and co-centralizer graphs.

Nothing in this module looks at a group or a graph: every value is computed
from the family parameters alone, so it can be checked against the exact
spectra computed in `centspec.spectra`.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Sequence

from .graphs import CliqueDecomposition, Variant, psl_block_sizes
from .groups import Family, GroupSpec
from .poly import IntPolynomial
from .spectra import ExactSpectrum, MatrixKind, char_poly, extract_spectrum, is_integral

A, L, Q = MatrixKind.Adjacency, MatrixKind.Laplacian, MatrixKind.SignlessLaplacian


@dataclass(frozen=True)
class EigenvectorFamily:
    label: str
    eigenvalue: int
    vectors: tuple[tuple[int, ...], ...]
    multiplicity: int


@dataclass(frozen=True)
class QuotientFamily:
    """Block indicators spanning an invariant subspace: M @ S == S @ quotient,
    where the columns of S are `vectors`."""

    label: str
    vectors: tuple[tuple[int, ...], ...]
    quotient: tuple[tuple[int, ...], ...]


def is_perfect_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


# -- generic graph families -----------------------------------------------------

def union_cliques_spectrum(parts: Sequence[int] | CliqueDecomposition, kind: MatrixKind) -> ExactSpectrum:
    parts = list(parts)
    if not parts:
        raise ValueError("at least one part is required")
    if kind is A:
        eig = [(-1, sum(parts) - len(parts))] + [(m - 1, 1) for m in parts]
    elif kind is L:
        eig = [(0, len(parts))] + [(m, m - 1) for m in parts]
    else:
        eig = []
        for m in parts:
            eig += [(2 * (m - 1), 1), (m - 2, m - 1)]
    return ExactSpectrum.build(eig)


def multipartite_adj_charpoly(parts: Sequence[int] | CliqueDecomposition) -> IntPolynomial:
    """lambda^(P-m) [prod(lambda + p_i) - sum_i p_i prod_{j != i}(lambda + p_j)]."""
    parts = list(parts)
    if not parts:
        raise ValueError("at least one part is required")
    lam = IntPolynomial.x()
    full = IntPolynomial.constant(1)
    for p in parts:
        full = full * (lam + p)
    correction = IntPolynomial()
    for i, p in enumerate(parts):
        term = IntPolynomial.constant(p)
        for j, pj in enumerate(parts):
            if j != i:
                term = term * (lam + pj)
        correction = correction + term
    return (full - correction).shift(sum(parts) - len(parts))


def star_spectrum(n: int, kind: MatrixKind) -> ExactSpectrum:
    """Spectrum of K_{1,n}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind is A:
        if is_perfect_square(n):
            s = isqrt(n)
            return ExactSpectrum.build([(0, n - 1), (s, 1), (-s, 1)])
        return ExactSpectrum.build({0: n - 1}, [(IntPolynomial((-n, 0, 1)), 1)])
    # bipartite, so L and Q coincide
    return ExactSpectrum.build([(0, 1), (1, n - 1), (n + 1, 1)])


def _two_clique_display(m: int, kind: MatrixKind) -> ExactSpectrum:
    """Displayed spectra of K_m ⊔ K_1."""
    if kind is A:
        return ExactSpectrum.build([(-1, m - 1), (0, 1), (m - 1, 1)])
    if kind is L:
        return ExactSpectrum.build([(0, 2), (m, m - 1)])
    return ExactSpectrum.build([(0, 1), (m - 2, m - 1), (2 * (m - 1), 1)])


def _clique_size(spec: GroupSpec) -> int:
    """The m in K_m ⊔ K_1 for the four two-clique families."""
    fam, p = spec.family, spec.params
    if fam is Family.GeneralizedQuaternion:
        return p[0]
    if fam is Family.Quasidihedral:
        return 2 ** (p[0] - 2)
    n = p[0]  # dihedral rule, also applied to M_2pq with n = p
    return n if n % 2 else n // 2


# -- PSL(2, 2^k) -----------------------------------------------------------------

def psl_cocentralizer_cubic(k: int) -> IntPolynomial:
    """x^3 - (2^(4k-2) + 3*2^(2k-2) + 2^(3k)) x + (-2^(5k-1) - 2^(4k-1) + 2^(3k-1) + 2^(2k-1))."""
    # 2^(2k-2) * 4 = 2^(2k), so work in quarters to stay integral at k = 1
    lin = (2 ** (4 * k) + 3 * 2 ** (2 * k)) // 4 + 2 ** (3 * k)
    const = (-(2 ** (5 * k)) - 2 ** (4 * k) + 2 ** (3 * k) + 2 ** (2 * k)) // 2
    return IntPolynomial((const, -lin, 0, 1))


def psl_quotient_matrix(k: int) -> tuple[tuple[int, ...], ...]:
    """The 3x3 signless-Laplacian quotient of the PSL co-centralizer graph."""
    q, h = 2 ** k, 2 ** (k - 1)
    deg_b = h + 2 ** (2 * k - 1) + 1
    deg_c = 3 * h + 2 ** (2 * k - 1) + 1
    return (
        (2 ** (2 * k), h * (q + 1), h * (q - 1)),
        (q + 1, deg_b, h * (q - 1)),
        (q + 1, h * (q + 1), deg_c),
    )


def _psl_spectrum(k: int, variant: Variant, kind: MatrixKind) -> ExactSpectrum:
    q, h = 2 ** k, 2 ** (k - 1)
    if variant is Variant.Centralizer:
        if kind is A:
            return ExactSpectrum.build([
                (-1, 2 ** (2 * k) + q - 2),
                (q, 1),
                (h * (q + 1) - 1, 1),
                (h * (q - 1) - 1, 1),
            ])
        if kind is L:
            return ExactSpectrum.build([
                (0, 3),
                (q + 1, q),
                (h * (q + 1), h * (q + 1) - 1),
                (h * (q - 1), h * (q - 1) - 1),
            ])
        return ExactSpectrum.build([
            (q - 1, q),                              # (a)
            (h * (q + 1) - 2, h * (q + 1) - 1),      # (b)
            (h * (q - 1) - 2, h * (q - 1) - 1),      # (c)
            ((q + 1) * (q - 2), 1),                  # (d)
            (2 ** (2 * k) + q - 2, 1),               # (e)
            (2 ** (k + 1), 1),                       # (f)
        ])
    if kind is A:
        return extract_spectrum(psl_cocentralizer_cubic(k).shift(q + 2 ** (2 * k) - 2))
    if kind is L:
        return ExactSpectrum.build([
            (0, 1),
            (2 ** (2 * k), q),
            (h + 2 ** (2 * k - 1) + 1, h * (q + 1) - 1),
            (2 ** (2 * k - 1) + 3 * h + 1, h * (q - 1) - 1),
            (2 ** (2 * k) + q + 1, 2),
        ])
    clauses = ExactSpectrum.build([
        (2 ** (2 * k), q),                                   # (a)
        (h + 2 ** (2 * k - 1) + 1, h * (q + 1) - 1),         # (b)
        (3 * h + 2 ** (2 * k - 1) + 1, h * (q - 1) - 1),     # (c)
    ])
    return clauses + extract_spectrum(char_poly(psl_quotient_matrix(k)))   # (d)


def family_spectrum(spec: GroupSpec, variant: Variant, kind: MatrixKind) -> ExactSpectrum:
    if spec.family is Family.ProjectiveSpecialLinear:
        return _psl_spectrum(spec.params[0], variant, kind)
    m = _clique_size(spec)
    if variant is Variant.Centralizer:
        return _two_clique_display(m, kind)
    return star_spectrum(m, kind)


def _block_vectors(sizes: Sequence[int], block: int) -> tuple[list[tuple[int, ...]], tuple[int, ...]]:
    """Difference vectors e_j - e_first inside one block, and that block's indicator."""
    n = sum(sizes)
    start = sum(sizes[:block])
    diffs = []
    for t in range(1, sizes[block]):
        v = [0] * n
        v[start] = -1
        v[start + t] = 1
        diffs.append(tuple(v))
    ind = [0] * n
    for t in range(sizes[block]):
        ind[start + t] = 1
    return diffs, tuple(ind)


def psl_eigenbasis(k: int, variant: Variant) -> list[EigenvectorFamily | QuotientFamily]:
    """Eigenvector families in block order (2^k+1, 2^(k-1)(2^k+1), 2^(k-1)(2^k-1))."""
    if k < 1:
        raise ValueError("k must be >= 1")
    q, h = 2 ** k, 2 ** (k - 1)
    sizes = psl_block_sizes(k)
    blocks = [_block_vectors(sizes, b) for b in range(3)]
    if variant is Variant.Centralizer:
        diff_claims = [("V1", q - 1, q), ("V2", h * (q + 1) - 2, h * (q + 1) - 1),
                       ("V3", h * (q - 1) - 2, h * (q - 1) - 1)]
        ind_claims = [("1_block1", 2 ** (k + 1)), ("1_block2", 2 ** (2 * k) + q - 2),
                      ("1_block3", (q + 1) * (q - 2))]
        out: list[EigenvectorFamily | QuotientFamily] = [
            EigenvectorFamily(name, lam, tuple(blocks[b][0]), mult)
            for b, (name, lam, mult) in enumerate(diff_claims)
        ]
        out += [EigenvectorFamily(name, lam, (blocks[b][1],), 1)
                for b, (name, lam) in enumerate(ind_claims)]
        return out
    diff_claims = [("S1", 2 ** (2 * k), q), ("S2", h + 2 ** (2 * k - 1) + 1, h * (q + 1) - 1),
                   ("S3", 3 * h + 2 ** (2 * k - 1) + 1, h * (q - 1) - 1)]
    out = [EigenvectorFamily(name, lam, tuple(blocks[b][0]), mult)
           for b, (name, lam, mult) in enumerate(diff_claims)]
    out.append(QuotientFamily("indicators", tuple(blk[1] for blk in blocks), psl_quotient_matrix(k)))
    return out


# -- integrality ------------------------------------------------------------------

@dataclass(frozen=True)
class IntegralityClaim:
    rule: str
    holds: bool


def integrality_claim(spec: GroupSpec, variant: Variant, kind: MatrixKind) -> IntegralityClaim:
    if variant is Variant.Centralizer:
        return IntegralityClaim("always", True)
    if spec.family is Family.ProjectiveSpecialLinear:
        k = spec.params[0]
        if kind is L:
            return IntegralityClaim("always", True)
        if kind is Q:
            quotient_spec = extract_spectrum(char_poly(psl_quotient_matrix(k)))
            return IntegralityClaim("quotient matrix has integral spectrum", is_integral(quotient_spec))
        return IntegralityClaim("cubic has only integer roots",
                                is_integral(extract_spectrum(psl_cocentralizer_cubic(k))))
    if kind is not A:
        return IntegralityClaim("always", True)
    m = _clique_size(spec)
    fam = spec.family
    if fam is Family.Quasidihedral:
        rule = "2^(n-2) is a perfect square"
    elif fam is Family.GeneralizedQuaternion or spec.params[0] % 2:
        rule = f"{'p' if fam is Family.Metacyclic else 'n'} is a perfect square"
    else:
        rule = f"{'p' if fam is Family.Metacyclic else 'n'}/2 is a perfect square"
    return IntegralityClaim(rule, is_perfect_square(m))
