import math

import pytest

from steinitz.group import ResidueGroup, builtin_groups, from_abelian, from_metacyclic, parse_group
from steinitz.galois import (
    FieldDescriptor,
    OmegaAction,
    class_stabilizer,
    e_field_of_class,
    field_of_class,
    omega_orbits,
    orbit_degree_check,
    parse_kappa,
)
from steinitz.verify import omega_actions

F21 = from_metacyclic(7, 3, 2)
SMALL = {name: parse_group(desc) for name, desc in builtin_groups().items() if parse_group(desc).order <= 24}


def label_orbits(G, A):
    C = G.classes
    return [sorted(G.labels[C.reps[c]] for c in orbit) for orbit in omega_orbits(G, A)]


def test_f21_orbits_under_full_action():
    assert label_orbits(F21, OmegaAction.full(21)) == [[(0, 0)], [(1, 0), (3, 0)], [(0, 1), (0, 2)]]


def test_f21_orbits_under_trivial_action():
    assert len(omega_orbits(F21, OmegaAction.trivial(21))) == 5


def test_f21_stabilizers_and_fields():
    A = OmegaAction.full(21)
    C = F21.classes
    seven = C.rep_orders.index(7)
    three = C.rep_orders.index(3)
    assert class_stabilizer(F21, A, seven) == ResidueGroup(7, (1, 2, 4))
    assert class_stabilizer(F21, A, three) == ResidueGroup(3, (1,))
    f7 = field_of_class(F21, A, seven)
    assert (f7.m, f7.degree, f7.fixer.generators()) == (7, 2, [2])
    f3 = field_of_class(F21, A, three)
    assert (f3.m, f3.degree) == (3, 2)
    ident = field_of_class(F21, A, C.identity_class)
    assert ident.degree == 1


def test_cyclic_orbit_is_all_generators():
    G = from_abelian([5])
    orbits = omega_orbits(G, OmegaAction.full(5))
    assert sorted(map(len, orbits)) == [1, 4]
    G = from_abelian([5])
    assert all(len(o) == 1 for o in omega_orbits(G, OmegaAction.trivial(5)))
    # a subgroup of index 2 splits the generators in two
    assert sorted(map(len, omega_orbits(G, OmegaAction.generated(5, [4])))) == [1, 2, 2]


def test_field_descriptor_json():
    f = FieldDescriptor(7, ResidueGroup.units(7), ResidueGroup(7, (1, 2, 4)))
    assert f.to_json() == {"m": 7, "fixer_gens": [2], "degree": 2}
    with pytest.raises(ValueError):
        FieldDescriptor(7, ResidueGroup(7, (1, 2, 4)), ResidueGroup(7, (1, 6)))


def test_action_must_match_exponent():
    with pytest.raises(ValueError):
        omega_orbits(F21, OmegaAction.full(7))
    with pytest.raises(ValueError):
        OmegaAction(6, ResidueGroup.units(5))


def test_parse_kappa():
    assert parse_kappa("full", 12).H == ResidueGroup.units(12)
    assert parse_kappa("trivial", 12).H == ResidueGroup.trivial(12)
    assert parse_kappa("gens=5", 12).H.elements == (1, 5)
    assert parse_kappa(" gens = 5, 7 ", 12).H.elements == (1, 5, 7, 11)
    assert parse_kappa("gens=", 12).H == ResidueGroup.trivial(12)


@pytest.mark.parametrize("spec", ["gens=2", "gens=x", "everything", "gens=3,5"])
def test_parse_kappa_errors(spec):
    with pytest.raises(ValueError):
        parse_kappa(spec, 12)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_inverse_convention_gives_same_partition(name):
    G = SMALL[name]
    for A in omega_actions(G.exponent):
        assert omega_orbits(G, A) == omega_orbits(G, A, inverse=True)


@pytest.mark.parametrize("name", sorted(SMALL))
def test_three_descriptions_of_the_field_agree(name):
    G = SMALL[name]
    C = G.classes
    for A in omega_actions(G.exponent):
        orbits = omega_orbits(G, A)
        assert sorted(c for o in orbits for c in o) == list(range(len(C)))
        for c in range(len(C)):
            f = field_of_class(G, A, c)
            assert class_stabilizer(G, A, c) == f.fixer == e_field_of_class(G, A, c).fixer
            assert orbit_degree_check(G, A, c)
            assert len(A.image(f.m)) % len(f.fixer) == 0


def test_omega_actions_cover_cyclic_subgroups():
    actions = omega_actions(15)
    Hs = {A.H.elements for A in actions}
    units = [k for k in range(1, 15) if math.gcd(k, 15) == 1]
    for k in units:
        assert ResidueGroup.generated(15, [k]).elements in Hs
    assert ResidueGroup.units(15).elements in Hs
    assert len(Hs) == len(actions)
