"""Centralizer and co-centralizer graphs and their clique-union structure."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import NotCliqueUnion
from .groups import ElementSubset, Family, FiniteGroup, GroupSpec, proper_centralizers


class Variant(enum.Enum):
    Centralizer = "centralizer"
    CoCentralizer = "cocentralizer"


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple graph on vertices 0..n-1 stored as a read-only boolean matrix."""

    adjacency: np.ndarray
    cardinalities: tuple[int, ...] | None = None
    vertices: tuple[ElementSubset, ...] | None = None

    def __post_init__(self):
        a = np.array(self.adjacency, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be square")
        if a.diagonal().any():
            raise ValueError("graph has loops")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency is not symmetric")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            a[u, v] = a[v, u] = True
        return cls(a)

    @classmethod
    def clique_union(cls, parts: Sequence[int]) -> Graph:
        """Disjoint union of complete graphs, blocks in the given order."""
        labels = np.repeat(np.arange(len(parts)), parts)
        a = labels[:, None] == labels[None, :]
        np.fill_diagonal(a, False)
        return cls(a)

    @classmethod
    def complete_multipartite(cls, parts: Sequence[int]) -> Graph:
        return cls.clique_union(parts).complement()

    @property
    def order(self) -> int:
        return self.adjacency.shape[0]

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1).astype(np.int64)

    def complement(self) -> Graph:
        a = ~self.adjacency
        np.fill_diagonal(a, False)
        return Graph(a, self.cardinalities, self.vertices)

    def permuted(self, order: Sequence[int]) -> Graph:
        """Relabel so that new vertex i is old vertex order[i]."""
        idx = np.asarray(order)
        card = tuple(self.cardinalities[i] for i in idx) if self.cardinalities else None
        verts = tuple(self.vertices[i] for i in idx) if self.vertices else None
        return Graph(self.adjacency[np.ix_(idx, idx)], card, verts)

    def components(self) -> list[list[int]]:
        seen = np.zeros(self.order, dtype=bool)
        out = []
        for s in range(self.order):
            if seen[s]:
                continue
            comp, stack = [], [s]
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in np.flatnonzero(self.adjacency[u] & ~seen):
                    seen[v] = True
                    stack.append(int(v))
            out.append(sorted(comp))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self) -> int:
        return hash(self.adjacency.tobytes())


@dataclass(frozen=True)
class CliqueDecomposition:
    """Part sizes p1 >= p2 >= ... of a clique union (or complete multipartite graph)."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"part sizes must be positive: {parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"parts must be sorted descending: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> CliqueDecomposition:
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return " ⊔ ".join(f"K_{p}" for p in self.parts) if self.parts else "(empty)"


def centralizer_graph(g: FiniteGroup) -> Graph:
    """Vertices: distinct proper centralizers; edges: equal cardinality."""
    verts = proper_centralizers(g)
    card = np.array([c.cardinality for c in verts])
    a = card[:, None] == card[None, :]
    np.fill_diagonal(a, False)
    return Graph(a, tuple(int(c) for c in card), verts)


def cocentralizer_graph(g: FiniteGroup) -> Graph:
    return centralizer_graph(g).complement()


def graph_for(g: FiniteGroup, variant: Variant) -> Graph:
    return centralizer_graph(g) if variant is Variant.Centralizer else cocentralizer_graph(g)


def clique_decomposition(graph: Graph) -> CliqueDecomposition:
    sizes = []
    for comp in graph.components():
        sub = graph.adjacency[np.ix_(comp, comp)]
        if sub.sum() != len(comp) * (len(comp) - 1):
            raise NotCliqueUnion(f"component {comp[:8]}{'...' if len(comp) > 8 else ''} is not complete")
        sizes.append(len(comp))
    return CliqueDecomposition.of(sizes)


def multipartite_decomposition(graph: Graph) -> CliqueDecomposition:
    """Part sizes of a complete multipartite graph (clique structure of the complement)."""
    return clique_decomposition(graph.complement())


def psl_block_sizes(k: int) -> tuple[int, int, int]:
    """Clique sizes for PSL(2, 2^k) in the order the closed forms use them."""
    q = 2 ** k
    return q + 1, (q // 2) * (q + 1), (q // 2) * (q - 1)


def claimed_structure(spec: GroupSpec, variant: Variant = Variant.Centralizer) -> CliqueDecomposition:
    """Claimed part sizes; for the co-centralizer they are read as multipartite parts."""
    fam, p = spec.family, spec.params
    if fam in (Family.GeneralizedQuaternion, Family.Quasidihedral):
        n = p[0] if fam is Family.GeneralizedQuaternion else 2 ** (p[0] - 2)
        return CliqueDecomposition.of([n, 1])
    if fam in (Family.Dihedral, Family.Metacyclic):
        n = p[0]
        return CliqueDecomposition.of([n if n % 2 else n // 2, 1])
    return CliqueDecomposition.of(psl_block_sizes(p[0]))
