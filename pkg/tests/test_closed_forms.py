from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from centspec import closed_forms as cf
from centspec.graphs import Graph, Variant, claimed_structure
from centspec.groups import GroupSpec
from centspec.poly import IntPolynomial
from centspec.spectra import ExactSpectrum, MatrixKind, char_poly, extract_spectrum, matrix_of, spectrum_of
from centspec.verifier import check_eigenbasis

A, L, Q = MatrixKind.Adjacency, MatrixKind.Laplacian, MatrixKind.SignlessLaplacian
X = IntPolynomial.x()
CENT, CO = Variant.Centralizer, Variant.CoCentralizer


def test_union_cliques_examples():
    assert cf.union_cliques_spectrum([5, 1], A).as_dict() == {-1: 4, 0: 1, 4: 1}
    assert cf.union_cliques_spectrum([5, 1], Q).as_dict() == {0: 1, 3: 4, 8: 1}
    for kind in (A, L, Q):
        assert cf.union_cliques_spectrum([1], kind).as_dict() == {0: 1}


def test_multipartite_examples():
    assert cf.multipartite_adj_charpoly([7, 1]) == (X ** 2 - 7).shift(6)
    assert cf.multipartite_adj_charpoly([3, 3, 1]) == (X ** 3 - 15 * X - 18).shift(4)
    assert cf.multipartite_adj_charpoly([1, 1]) == X ** 2 - 1


def test_star_examples():
    assert cf.star_spectrum(9, A).as_dict() == {3: 1, -3: 1, 0: 8}
    assert cf.star_spectrum(5, L).as_dict() == {0: 1, 1: 4, 6: 1}
    assert cf.star_spectrum(1, A).as_dict() == {1: 1, -1: 1}


def test_family_spectrum_examples():
    psl2 = GroupSpec.psl(2)
    assert cf.family_spectrum(psl2, CENT, A).as_dict() == {-1: 18, 4: 1, 9: 1, 5: 1}
    assert cf.family_spectrum(psl2, CO, L).as_dict() == {0: 1, 16: 4, 11: 9, 15: 5, 21: 2}
    assert cf.family_spectrum(GroupSpec.psl(1), CO, Q).as_dict() == {1: 1, 4: 5, 9: 1}


def test_psl_cubic_at_k1_is_derived_value():
    assert cf.psl_cocentralizer_cubic(1) == X ** 3 - 15 * X - 18


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_psl_cubic_is_multipartite_charpoly(k):
    # the cubic must equal the nonzero part of the complete tripartite charpoly
    from centspec.graphs import psl_block_sizes
    full = cf.multipartite_adj_charpoly(sorted(psl_block_sizes(k), reverse=True))
    assert full == cf.psl_cocentralizer_cubic(k).shift(sum(psl_block_sizes(k)) - 3)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_psl_quotient_is_multipartite_quotient(k):
    from centspec.graphs import psl_block_sizes
    from centspec.spectra import QuotientVariant, quotient_matrix
    q = quotient_matrix(psl_block_sizes(k), Q, QuotientVariant.Multipartite)
    assert q.tolist() == [list(r) for r in cf.psl_quotient_matrix(k)]


def test_quotient_integrality_by_k():
    assert extract_spectrum(char_poly(cf.psl_quotient_matrix(1))).as_dict() == {1: 1, 4: 1, 9: 1}
    for k in (2, 3):
        assert extract_spectrum(char_poly(cf.psl_quotient_matrix(k))).residuals


def test_eigenbasis_examples():
    fams = cf.psl_eigenbasis(1, CENT)
    v1 = next(f for f in fams if f.label == "V1")
    assert v1.eigenvalue == 1 and len(v1.vectors) == 2 and len(v1.vectors[0]) == 7
    third = next(f for f in fams if f.label == "1_block3")
    assert third.eigenvalue == 0
    s2 = next(f for f in cf.psl_eigenbasis(2, CO) if f.label == "S2")
    assert s2.eigenvalue == 11 and len(s2.vectors) == 9


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("variant", [CENT, CO])
def test_eigenbasis_on_block_structure(k, variant):
    from centspec.graphs import psl_block_sizes
    g = Graph.clique_union(psl_block_sizes(k))
    if variant is CO:
        g = g.complement()
    check = check_eigenbasis(matrix_of(g, Q), cf.psl_eigenbasis(k, variant))
    assert check.verified and check.count_ok and check.orthogonal
    # difference vectors inside one family share a coordinate, so they are not orthogonal
    assert not check.within_family_orthogonal


def test_integrality_claim_examples():
    assert not cf.integrality_claim(GroupSpec.quaternion(7), CO, A).holds
    assert cf.integrality_claim(GroupSpec.quasidihedral(6), CO, A).holds
    assert cf.integrality_claim(GroupSpec.dihedral(8), CO, A).holds
    assert cf.integrality_claim(GroupSpec.psl(1), CO, Q).holds
    assert not cf.integrality_claim(GroupSpec.psl(2), CO, Q).holds


FAMILY_SPECS = ([GroupSpec.quaternion(n) for n in range(2, 30)] + [GroupSpec.dihedral(n) for n in range(3, 30)]
                + [GroupSpec.quasidihedral(n) for n in range(4, 12)]
                + [GroupSpec.metacyclic(p, q) for p in range(3, 12) for q in (1, 4)]
                + [GroupSpec.psl(k) for k in range(1, 7)])


@pytest.mark.parametrize("spec", FAMILY_SPECS, ids=str)
def test_closed_form_dimension_is_claimed_order(spec):
    n = claimed_structure(spec).total
    for variant in (CENT, CO):
        for kind in (A, L, Q):
            assert cf.family_spectrum(spec, variant, kind).dimension == n


@pytest.mark.parametrize("spec", [s for s in FAMILY_SPECS if s.family.value != "psl"][:40], ids=str)
def test_two_clique_forms_match_claimed_graph(spec):
    g = Graph.clique_union(claimed_structure(spec).parts)
    for kind in (A, L, Q):
        assert cf.family_spectrum(spec, CENT, kind) == spectrum_of(g, kind)
        assert cf.family_spectrum(spec, CO, kind) == spectrum_of(g.complement(), kind)


@given(st.integers(1, 40))
def test_star_L_equals_Q(n):
    assert cf.star_spectrum(n, L) == cf.star_spectrum(n, Q)


@given(st.lists(st.integers(1, 7), min_size=1, max_size=6))
def test_union_cliques_adjacency_polynomial(parts):
    g = Graph.clique_union(parts)
    assert cf.union_cliques_spectrum(parts, A).as_polynomial() == char_poly(matrix_of(g, A))
