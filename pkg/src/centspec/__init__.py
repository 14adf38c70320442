"""Exact spectra of centralizer and co-centralizer graphs of finite non-abelian groups."""
from .errors import (AbelianGroup, BudgetExceeded, DimensionMismatch, InvalidParams, MissingZero,
                     NotCliqueUnion)
from .graphs import (CliqueDecomposition, Graph, Variant, centralizer_graph, clique_decomposition,
                     cocentralizer_graph, claimed_structure)
from .groups import (ElementSubset, Family, FiniteGroup, GroupSpec, build_group, center, centralizer,
                     proper_centralizers)
from .poly import IntPolynomial
from .spectra import (ExactSpectrum, MatrixKind, QuotientVariant, approx_roots, char_poly,
                      complement_L_spectrum, extract_spectrum, is_integral, matrix_of, quotient_matrix)
from .verifier import VerificationReport, check_eigenbasis, sweep, verify_instance

__version__ = "0.1.0"
