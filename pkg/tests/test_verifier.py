from __future__ import annotations

import numpy as np
import pytest

from centspec import closed_forms as cf
from centspec.errors import BudgetExceeded, DimensionMismatch
from centspec.graphs import Graph, Variant, centralizer_graph, psl_block_sizes
from centspec.groups import Family, GroupSpec, build_group
from centspec.spectra import MatrixKind, matrix_of
from centspec.verifier import (EigenbasisCheck, InstanceError, check_eigenbasis, known_degeneracy,
                               q_independence, sweep, verify_instance)

Q = MatrixKind.SignlessLaplacian


def test_quaternion_n5_all_match():
    r = verify_instance(GroupSpec.quaternion(5))
    assert r.all_match and not r.degenerate and not r.genuine_mismatch
    assert len(r.spectra) == 6


def test_quaternion_n2_degenerate():
    r = verify_instance(GroupSpec.quaternion(2))
    assert not r.structure.match and r.degenerate and not r.genuine_mismatch
    assert r.structure.computed.parts == (3,) and r.structure.claimed.parts == (2, 1)
    assert "[3]" in r.explanation or "K_3" in r.explanation


def test_psl_k2_eigenbasis_count():
    r = verify_instance(GroupSpec.psl(2))
    assert r.all_match
    assert all(e.check.ok and not e.on_claimed_structure for e in r.eigenbasis)
    assert r.structure.computed.total == 21


def test_sweeps():
    rs = sweep(Family.GeneralizedQuaternion, {"n": range(2, 21)})
    assert len(rs) == 19
    assert [r.spec.params[0] for r in rs if not r.all_match] == [2]
    rs = sweep(Family.Dihedral, {"n": range(3, 21)})
    assert [r.spec.params[0] for r in rs if not r.all_match] == [4]
    rs = sweep(Family.Metacyclic, {"p": [3, 5], "q": [1, 2, 3]})
    assert q_independence(rs) == {3: True, 5: True}


def test_sweep_records_errors():
    rs = sweep(Family.ProjectiveSpecialLinear, {"k": [2, 9]}, budget=1000)
    assert isinstance(rs[1], InstanceError) and rs[1].kind == "BudgetExceeded"
    with pytest.raises(BudgetExceeded):
        verify_instance(GroupSpec.psl(3), budget=100)


def test_check_eigenbasis_controls():
    g = Graph.clique_union(psl_block_sizes(2))
    m = matrix_of(g, Q)
    fams = cf.psl_eigenbasis(2, Variant.Centralizer)
    assert check_eigenbasis(m, fams).ok
    empty = check_eigenbasis(np.zeros((0, 0), dtype=np.int64), [])
    assert empty == EigenbasisCheck(True, True, True, True)
    bad = [cf.EigenvectorFamily(f.label, f.eigenvalue + 1, f.vectors, f.multiplicity)
           if i == 0 else f for i, f in enumerate(fams)]
    assert not check_eigenbasis(m, bad).verified
    with pytest.raises(DimensionMismatch):
        check_eigenbasis(np.zeros((3, 3), dtype=np.int64), fams)


def test_known_degeneracy_predicate():
    assert known_degeneracy(GroupSpec.dihedral(4))
    assert known_degeneracy(GroupSpec.metacyclic(4, 2))
    assert known_degeneracy(GroupSpec.psl(1))
    assert known_degeneracy(GroupSpec.dihedral(6)) is None


def test_report_is_deterministic():
    from centspec.serialize import report_to_dict
    import json
    a = json.dumps(report_to_dict(verify_instance(GroupSpec.quasidihedral(5))), sort_keys=True)
    b = json.dumps(report_to_dict(verify_instance(GroupSpec.quasidihedral(5))), sort_keys=True)
    assert a == b


def test_structure_counts():
    r = verify_instance(GroupSpec.dihedral(6))
    assert r.structure.centralizer_count == centralizer_graph(build_group(GroupSpec.dihedral(6))).order
    assert r.structure.implied_count == 4
