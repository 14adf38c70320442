"""End-to-end checks: group -> graphs -> exact spectra vs closed forms."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from . import closed_forms as cf
from .errors import BudgetExceeded, CentspecError, DimensionMismatch
from .graphs import (CliqueDecomposition, Graph, Variant, centralizer_graph, clique_decomposition,
                     claimed_structure, psl_block_sizes)
from .groups import Family, GroupSpec, build_group
from .spectra import (ExactSpectrum, MatrixKind, char_poly, complement_L_spectrum, extract_spectrum,
                      is_integral, matrix_of)

DEFAULT_BUDGET = 100_000
ALL_VARIANTS = tuple(Variant)
ALL_KINDS = tuple(MatrixKind)


def budget_from_env() -> int:
    return int(os.environ.get("SPECTRA_BUDGET", DEFAULT_BUDGET))


@dataclass(frozen=True)
class SpectrumEntry:
    variant: Variant
    kind: MatrixKind
    oracle: ExactSpectrum
    closed_form: ExactSpectrum

    @property
    def match(self) -> bool:
        return self.oracle == self.closed_form


@dataclass(frozen=True)
class StructureEntry:
    computed: CliqueDecomposition
    claimed: CliqueDecomposition
    cardinalities: tuple[tuple[int, int], ...]   # (centralizer size, how many)

    @property
    def match(self) -> bool:
        return self.computed == self.claimed

    @property
    def centralizer_count(self) -> int:
        return self.computed.total

    @property
    def implied_count(self) -> int:
        return self.claimed.total


@dataclass(frozen=True)
class IntegralityEntry:
    variant: Variant
    kind: MatrixKind
    rule: str
    claimed: bool
    computed: bool

    @property
    def match(self) -> bool:
        return self.claimed == self.computed


@dataclass(frozen=True)
class EigenbasisCheck:
    verified: bool
    orthogonal: bool
    count_ok: bool
    within_family_orthogonal: bool = False

    @property
    def ok(self) -> bool:
        return self.verified and self.orthogonal and self.count_ok


@dataclass(frozen=True)
class EigenbasisEntry:
    variant: Variant
    check: EigenbasisCheck
    on_claimed_structure: bool


@dataclass(frozen=True)
class ConsistencyEntry:
    """Cross-checks that do not involve closed forms: trace identities and
    the complement-Laplacian transfer applied to the oracle spectra."""

    trace_identities: bool
    complement_transfer: bool


@dataclass(frozen=True)
class VerificationReport:
    spec: GroupSpec
    group_order: int
    structure: StructureEntry
    spectra: tuple[SpectrumEntry, ...]
    integrality: tuple[IntegralityEntry, ...]
    eigenbasis: tuple[EigenbasisEntry, ...]
    consistency: ConsistencyEntry
    degenerate: bool
    explanation: str = ""
    notes: tuple[str, ...] = field(default=())

    @property
    def all_match(self) -> bool:
        return (self.structure.match
                and all(e.match for e in self.spectra)
                and all(e.match for e in self.integrality)
                and all(e.check.ok for e in self.eigenbasis)
                and self.consistency.trace_identities
                and self.consistency.complement_transfer)

    @property
    def genuine_mismatch(self) -> bool:
        """A mismatch outside the documented degenerate parameters."""
        return not self.all_match and not self.degenerate

    def spectrum(self, variant: Variant, kind: MatrixKind) -> SpectrumEntry:
        return next(e for e in self.spectra if e.variant is variant and e.kind is kind)

    def fingerprint(self) -> tuple:
        """Everything except the parameters, for comparing instances."""
        return (self.structure.computed, self.structure.claimed, self.spectra,
                self.integrality, self.eigenbasis, self.degenerate)


@dataclass(frozen=True)
class InstanceError:
    family: Family
    params: tuple[int, ...]
    error: str
    kind: str


# -- degeneracies ----------------------------------------------------------------

def known_degeneracy(spec: GroupSpec) -> str | None:
    """Why the claimed structure cannot hold at these parameters, if it cannot."""
    fam, p = spec.family, spec.params
    if fam is Family.GeneralizedQuaternion and p[0] == 2:
        return ("the cyclic centralizer <x> has order 2n = 4, the same as the n centralizers "
                "of the y x^j, so all n + 1 vertices fall into one clique")
    if fam is Family.Dihedral and p[0] == 4:
        return ("the rotation centralizer has order n = 4, the same as the n/2 reflection "
                "centralizers, so all n/2 + 1 vertices fall into one clique")
    if fam is Family.Metacyclic and p[0] == 4:
        return ("the centralizer of a has order pq = 4q, the same as the p/2 centralizers of "
                "the a^i b, so all p/2 + 1 vertices fall into one clique")
    if fam is Family.ProjectiveSpecialLinear and p[0] == 1:
        return ("the 2^(k-1)(2^k+1) = 3 split-torus subgroups have order 2^k - 1 = 1 and are "
                "not centralizers of any non-central element, so that clique is absent")
    return None


def _describe_difference(s: StructureEntry) -> str:
    sizes = ", ".join(f"{count} of order {size}" for size, count in s.cardinalities)
    return (f"computed {s.computed} with parts {list(s.computed.parts)} "
            f"({s.centralizer_count} proper centralizers: {sizes}) vs claimed parts "
            f"{list(s.claimed.parts)} ({s.implied_count} vertices)")


# -- eigenbasis checks -------------------------------------------------------------

def _exact_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free elimination."""
    a = [list(map(int, r)) for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(rank + 1, len(a)):
            a[i] = [(a[i][j] * a[rank][col] - a[rank][j] * a[i][col]) // prev for j in range(ncols)]
        prev = a[rank][col]
        rank += 1
        if rank == len(a):
            break
    return rank


def check_eigenbasis(matrix, families: Sequence[cf.EigenvectorFamily | cf.QuotientFamily]) -> EigenbasisCheck:
    """Exact M v = lambda v per vector (M S = S B for quotient families),
    cross-family orthogonality, and a full independent set of the right size.

    `within_family_orthogonal` is reported separately: difference vectors sharing
    a base coordinate are independent but not orthogonal.
    """
    m = np.asarray(matrix, dtype=object)
    dim = m.shape[0] if m.size else 0
    for fam in families:
        for v in fam.vectors:
            if len(v) != dim:
                raise DimensionMismatch(f"{fam.label}: vector of length {len(v)} for a {dim}x{dim} matrix")

    verified = True
    count_ok = True
    for fam in families:
        vs = np.array(fam.vectors, dtype=object).reshape(len(fam.vectors), dim)
        if isinstance(fam, cf.QuotientFamily):
            b = np.array(fam.quotient, dtype=object)
            s = vs.T
            if b.shape != (len(fam.vectors),) * 2 or not np.array_equal(m.dot(s), s.dot(b)):
                verified = False
        else:
            if len(fam.vectors) != fam.multiplicity:
                count_ok = False
            for v in vs:
                if not np.array_equal(m.dot(v), fam.eigenvalue * v):
                    verified = False

    orthogonal = True
    within = True
    for i, fa in enumerate(families):
        for fb in families[i:]:
            for va in fa.vectors:
                for vb in fb.vectors:
                    if va is vb:
                        continue
                    dot = sum(x * y for x, y in zip(va, vb) if x and y)
                    if dot:
                        if fa is fb:
                            within = False
                        else:
                            orthogonal = False
    all_vectors = [v for fam in families for v in fam.vectors]
    if len(all_vectors) != dim or _exact_rank(all_vectors) != dim:
        count_ok = False
    return EigenbasisCheck(verified, orthogonal, count_ok, within)


def _block_order(graph: Graph, sizes: Sequence[int], variant: Variant) -> list[int] | None:
    """Vertex order that lays the cliques out as consecutive blocks of the given sizes."""
    base = graph if variant is Variant.Centralizer else graph.complement()
    comps = base.components()
    order: list[int] = []
    for size in sizes:
        match = next((c for c in comps if len(c) == size), None)
        if match is None:
            return None
        comps.remove(match)
        order += match
    return order if not comps else None


# -- main entry points ---------------------------------------------------------------

def _trace_ok(graph: Graph, spectra: dict[MatrixKind, ExactSpectrum]) -> bool:
    edges2 = 2 * graph.edge_count
    ok = True
    if MatrixKind.Adjacency in spectra:
        s = spectra[MatrixKind.Adjacency]
        ok &= s.power_sum(1) == 0 and s.power_sum(2) == edges2
    for kind in (MatrixKind.Laplacian, MatrixKind.SignlessLaplacian):
        if kind in spectra:
            ok &= spectra[kind].power_sum(1) == edges2
    return bool(ok)


def verify_instance(spec: GroupSpec, *, budget: int | None = None,
                    variants: Iterable[Variant] = ALL_VARIANTS,
                    kinds: Iterable[MatrixKind] = ALL_KINDS) -> VerificationReport:
    budget = budget_from_env() if budget is None else budget
    if spec.expected_order > budget:
        raise BudgetExceeded(f"{spec} has order {spec.expected_order} > budget {budget}")
    variants, kinds = tuple(variants), tuple(kinds)

    group = build_group(spec)
    cent = centralizer_graph(group)
    graphs = {Variant.Centralizer: cent, Variant.CoCentralizer: cent.complement()}

    counts: dict[int, int] = {}
    for c in cent.cardinalities:
        counts[c] = counts.get(c, 0) + 1
    structure = StructureEntry(clique_decomposition(cent), claimed_structure(spec),
                               tuple(sorted(counts.items(), reverse=True)))

    entries, integrality = [], []
    oracle: dict[Variant, dict[MatrixKind, ExactSpectrum]] = {v: {} for v in variants}
    for variant, kind in product(variants, kinds):
        s = extract_spectrum(char_poly(matrix_of(graphs[variant], kind)))
        oracle[variant][kind] = s
        entries.append(SpectrumEntry(variant, kind, s, cf.family_spectrum(spec, variant, kind)))
        claim = cf.integrality_claim(spec, variant, kind)
        integrality.append(IntegralityEntry(variant, kind, claim.rule, claim.holds, is_integral(s)))

    trace_ok = all(_trace_ok(graphs[v], oracle[v]) for v in variants)
    transfer_ok = True
    if all(MatrixKind.Laplacian in oracle.get(v, {}) for v in ALL_VARIANTS):
        n = cent.order
        transfer_ok = (complement_L_spectrum(oracle[Variant.Centralizer][MatrixKind.Laplacian], n)
                       == oracle[Variant.CoCentralizer][MatrixKind.Laplacian])

    degenerate_reason = known_degeneracy(spec)
    notes = []
    eigenbasis = []
    if spec.family is Family.ProjectiveSpecialLinear and MatrixKind.SignlessLaplacian in kinds:
        k = spec.params[0]
        sizes = psl_block_sizes(k)
        for variant in variants:
            order = _block_order(graphs[variant], sizes, variant)
            on_claimed = order is None
            if on_claimed:
                g = Graph.clique_union(sizes)
                g = g if variant is Variant.Centralizer else g.complement()
            else:
                g = graphs[variant].permuted(order)
            check = check_eigenbasis(matrix_of(g, MatrixKind.SignlessLaplacian), cf.psl_eigenbasis(k, variant))
            eigenbasis.append(EigenbasisEntry(variant, check, on_claimed))
        if any(e.on_claimed_structure for e in eigenbasis):
            notes.append("eigenvector families checked on the claimed block structure, "
                         "which the computed graph does not have")
        quotient_spec = extract_spectrum(char_poly(cf.psl_quotient_matrix(k)))
        notes.append(f"quotient matrix spectrum at k={k}: {quotient_spec} "
                     f"({'integral' if is_integral(quotient_spec) else 'not integral'})")

    explanation = ""
    if degenerate_reason is not None:
        explanation = f"degenerate parameters: {degenerate_reason}; "
        explanation += _describe_difference(structure) if not structure.match else "structure agrees"
    elif not structure.match:
        explanation = "structure mismatch: " + _describe_difference(structure)

    return VerificationReport(
        spec=spec,
        group_order=group.order,
        structure=structure,
        spectra=tuple(entries),
        integrality=tuple(integrality),
        eigenbasis=tuple(eigenbasis),
        consistency=ConsistencyEntry(trace_ok, transfer_ok),
        degenerate=degenerate_reason is not None,
        explanation=explanation,
        notes=tuple(notes),
    )


def expand_params(family: Family, ranges: dict[str, Iterable[int]]) -> list[tuple[int, ...]]:
    from .groups import PARAM_NAMES
    names = PARAM_NAMES[family]
    missing = [n for n in names if n not in ranges]
    if missing:
        raise ValueError(f"{family.value} needs parameter(s) {missing}")
    return list(product(*(list(ranges[n]) for n in names)))


def sweep(family: Family, ranges: dict[str, Iterable[int]], *,
          variants: Iterable[Variant] = ALL_VARIANTS, kinds: Iterable[MatrixKind] = ALL_KINDS,
          budget: int | None = None) -> list[VerificationReport | InstanceError]:
    variants, kinds = tuple(variants), tuple(kinds)
    out: list[VerificationReport | InstanceError] = []
    for params in expand_params(family, ranges):
        try:
            out.append(verify_instance(GroupSpec(family, params), budget=budget,
                                       variants=variants, kinds=kinds))
        except CentspecError as exc:
            out.append(InstanceError(family, params, str(exc), type(exc).__name__))
    return out


def q_independence(reports: Iterable[VerificationReport]) -> dict[int, bool]:
    """For metacyclic reports: does every q give the same report for a fixed p?"""
    by_p: dict[int, list[tuple]] = {}
    for r in reports:
        if isinstance(r, VerificationReport) and r.spec.family is Family.Metacyclic:
            by_p.setdefault(r.spec.params[0], []).append(r.fingerprint())
    return {p: all(f == fps[0] for f in fps) for p, fps in sorted(by_p.items())}
