from __future__ import annotations

import itertools

import numpy as np
import pytest

from centspec.errors import AbelianGroup, InvalidParams
from centspec.groups import (Family, GroupSpec, build_group, center, centralizer, check_group_axioms,
                             defining_relations, proper_centralizers)


def brute_center(g):
    return [a for a in range(g.order) if all(g.multiply(a, b) == g.multiply(b, a) for b in range(g.order))]


def brute_centralizer(g, x):
    return [a for a in range(g.order) if g.multiply(a, x) == g.multiply(x, a)]


SMALL_SPECS = ([GroupSpec.quaternion(n) for n in range(2, 9)]
               + [GroupSpec.dihedral(n) for n in range(3, 11)]
               + [GroupSpec.quasidihedral(n) for n in range(4, 7)]
               + [GroupSpec.metacyclic(p, q) for p in (3, 4, 5) for q in (1, 2, 3)]
               + [GroupSpec.psl(k) for k in (1, 2)])


def test_build_quaternion_n2():
    g = build_group(GroupSpec.quaternion(2))
    assert g.order == 8
    assert center(g).cardinality == 2


def test_dihedral_relation():
    spec = GroupSpec.dihedral(3)
    g = build_group(spec)
    assert g.order == 6
    x, y = g.generators["x"], g.generators["y"]
    assert g.multiply(g.multiply(y, x), g.inverse(y)) == g.inverse(x)


def test_psl_order_matches_brute_count():
    from centspec.gf2k import FieldGF2k
    f = FieldGF2k(2)
    count = sum(1 for a, b, c, d in itertools.product(range(4), repeat=4)
                if f.add(f.mul(a, d), f.mul(b, c)) == 1)
    assert build_group(GroupSpec.psl(2)).order == count == 60


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
def test_relations_and_axioms(spec):
    g = build_group(spec)
    assert g.order == spec.expected_order
    for name, lhs, rhs in defining_relations(spec, g):
        assert lhs == rhs, name
    check_group_axioms(g)


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
def test_center_and_centralizers_against_brute_force(spec):
    g = build_group(spec)
    z = center(g)
    assert list(z.members) == brute_center(g)
    fam, p = spec.family, spec.params
    expected = {Family.GeneralizedQuaternion: 2, Family.Quasidihedral: 2,
                Family.ProjectiveSpecialLinear: 1}.get(fam)
    if fam is Family.Dihedral:
        expected = 1 if p[0] % 2 else 2
    if expected is not None:
        assert z.cardinality == expected
    for x in range(0, g.order, max(1, g.order // 17)):
        assert list(centralizer(g, x).members) == brute_centralizer(g, x)
    for c in proper_centralizers(g):
        assert z.issubset(c) and not c.is_whole_group()
        members = np.array(c.members)
        prod = g.mul(members[:, None], members[None, :])
        assert np.isin(prod, members).all()


@pytest.mark.parametrize("n", range(2, 12))
def test_quaternion_centralizer_count(n):
    assert len(proper_centralizers(build_group(GroupSpec.quaternion(n)))) == n + 1


def test_spec_examples():
    g = build_group(GroupSpec.quaternion(3))
    assert center(g).cardinality == 2
    assert center(build_group(GroupSpec.dihedral(5))).cardinality == 1
    assert center(build_group(GroupSpec.psl(1))).cardinality == 1
    x = g.generators["x"]
    assert centralizer(g, x).cardinality == 6
    assert centralizer(g, 0).is_whole_group()
    q8 = build_group(GroupSpec.quaternion(2))
    y = q8.generators["y"]
    assert centralizer(q8, y).cardinality == 4
    cards = sorted(c.cardinality for c in proper_centralizers(g))
    assert cards == [4, 4, 4, 6]
    assert sorted(c.cardinality for c in proper_centralizers(build_group(GroupSpec.psl(1)))) == [2, 2, 2, 3]
    assert sorted(c.cardinality for c in proper_centralizers(build_group(GroupSpec.dihedral(5)))) == [2] * 5 + [5]


def test_proper_centralizers_canonical_order():
    cs = proper_centralizers(build_group(GroupSpec.psl(2)))
    keys = [(-c.cardinality, c.members) for c in cs]
    assert keys == sorted(keys)
    assert len(set(c.members for c in cs)) == len(cs)


@pytest.mark.parametrize("family,params", [
    (Family.GeneralizedQuaternion, (1,)), (Family.Dihedral, (2,)), (Family.Quasidihedral, (3,)),
    (Family.Metacyclic, (2, 1)), (Family.Metacyclic, (3, 0)), (Family.ProjectiveSpecialLinear, (0,)),
    (Family.Dihedral, (3, 4)),
])
def test_invalid_params(family, params):
    with pytest.raises(InvalidParams):
        GroupSpec(family, params)


def test_abelian_raises():
    from centspec.groups import FiniteGroup

    def mul(a, b):
        return (np.asarray(a) + np.asarray(b)) % 4

    g = FiniteGroup("Z4", 4, tuple(map(str, range(4))), mul, (1,))
    with pytest.raises(AbelianGroup):
        proper_centralizers(g)
