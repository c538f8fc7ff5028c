import copy
import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import embed, numeric_multiplicities
from steinitz.characters import (
    TableValidationError,
    VirtualCharacter,
    abelian_table,
    bundled_tables,
    character_table,
    class_function,
    galois_conjugate,
    ingest_table,
    metacyclic_table,
    product_table,
    regular_character,
    restrict_multiplicities,
    table_to_json,
    trivial_character,
    validate_table,
    value,
)
from steinitz.cyclotomic import root_of_unity
from steinitz.group import builtin_groups, direct_product, from_abelian, from_metacyclic, parse_group

S3 = "perm:3:(1 2),(1 2 3)"
GROUPS = {name: parse_group(desc) for name, desc in builtin_groups().items()}
TABLES = {name: character_table(G) for name, G in GROUPS.items()}


def bundled(name):
    return copy.deepcopy(next(d for d in bundled_tables() if d["name"] == name))


@pytest.mark.parametrize("name", sorted(TABLES))
def test_every_table_validates(name):
    T = TABLES[name]
    validate_table(T)
    assert len(T) == len(T.classes)
    assert sum(d * d for d in T.degrees) == T.order


@pytest.mark.parametrize("name", sorted(TABLES))
def test_orthogonality_numerically(name):
    T = TABLES[name]
    sizes = T.classes.sizes
    rows = [[embed(v) for v in row] for row in T.irreducibles]
    for i, a in enumerate(rows):
        for j, b in enumerate(rows):
            ip = sum(s * x * y.conjugate() for s, x, y in zip(sizes, a, b))
            assert abs(ip - (T.order if i == j else 0)) < 1e-7


@pytest.mark.parametrize("name", sorted(TABLES))
def test_values_live_in_exponent_field(name):
    T = TABLES[name]
    for row in T.irreducibles:
        for v in row:
            assert T.exponent % v.conductor == 0


@pytest.mark.parametrize("name", sorted(TABLES))
def test_regular_character_values(name):
    T = TABLES[name]
    rho = regular_character(T)
    for c in range(len(T.classes)):
        assert value(T, rho, c) == (T.order if c == T.classes.identity_class else 0)
    assert all(value(T, trivial_character(T), c) == 1 for c in range(len(T.classes)))


@pytest.mark.parametrize("name", sorted(n for n in TABLES if GROUPS[n].order <= 42))
def test_irreducible_multiplicities_against_numeric_dft(name):
    T = TABLES[name]
    C = T.classes
    for i, row in enumerate(T.irreducibles):
        for c in range(len(C)):
            vals = [row[C.power_class(c, k)] for k in range(C.rep_orders[c])]
            mult = T.multiplicities[i][c]
            assert list(mult) == numeric_multiplicities(vals)
            assert min(mult) >= 0 and sum(mult) == T.degrees[i]
            assert restrict_multiplicities(T, VirtualCharacter.basis(len(T), i), c) == mult


def test_s3_examples():
    T = TABLES["S3"]
    assert regular_character(T).coeffs == (1, 1, 2)
    std = T.degrees.index(2)
    three = T.classes.rep_orders.index(3)
    assert restrict_multiplicities(T, VirtualCharacter.basis(3, std), three) == (0, 1, 1)
    assert restrict_multiplicities(T, trivial_character(T), three) == (1, 0, 0)


def test_regular_restriction_is_multiple_of_regular():
    for name in ("S3", "D4", "F21", "C2xC6"):
        T = TABLES[name]
        rho = regular_character(T)
        for c in range(len(T.classes)):
            m = T.classes.rep_orders[c]
            assert restrict_multiplicities(T, rho, c) == (T.order // m,) * m


def test_trivial_group_table():
    T = character_table(from_abelian([]))
    assert regular_character(T).coeffs == (1,)


def test_abelian_tables():
    T = abelian_table(from_abelian([2]))
    assert sorted(tuple(int(v.to_rational()) for v in row) for row in T.irreducibles) == [(1, -1), (1, 1)]
    T = abelian_table(from_abelian([3]))
    z = root_of_unity(3)
    rows = {tuple(row) for row in T.irreducibles}
    assert (1, z, z * z) in {tuple(r) for r in rows} or (1, z * z, z) in rows
    T = abelian_table(from_abelian([2, 2]))
    assert all(v.to_rational() in (1, -1) for row in T.irreducibles for v in row)
    with pytest.raises(ValueError):
        abelian_table(parse_group(S3))


def test_abelian_table_of_a_permutation_group():
    # abelian tables come from the Cayley table, not from the constructor
    T = character_table(parse_group("perm:5:(1 2)(3 4 5)"))
    assert len(T) == 6
    validate_table(T)


def test_metacyclic_tables():
    T = metacyclic_table(from_metacyclic(7, 3, 2))
    assert sorted(T.degrees) == [1, 1, 1, 3, 3]
    T = metacyclic_table(from_metacyclic(5, 2, 4))
    assert sorted(T.degrees) == [1, 1, 2, 2]
    T = metacyclic_table(from_metacyclic(25, 2, 24))
    assert sum(d * d for d in T.degrees) == 50


def test_product_table():
    S3g = parse_group(S3)
    C2 = from_abelian([2])
    GH = direct_product(S3g, C2)
    T = product_table(TABLES["S3"], character_table(C2), GH)
    validate_table(T)
    assert sorted(T.degrees) == [1, 1, 1, 1, 2, 2]


def test_galois_conjugate_permutes_irreducibles():
    T = TABLES["F21"]
    for k in (2, 4, 5, 8, 10, 11, 13, 16, 17, 19, 20):
        images = sorted(galois_conjugate(T, VirtualCharacter.basis(len(T), i), k).coeffs.index(1) for i in range(len(T)))
        assert images == list(range(len(T)))


# -- ingestion -------------------------------------------------------------


def test_bundled_tables_ingest_and_match():
    for name, desc in [("S3", S3), ("D4", builtin_groups()["D4"]), ("Q8", builtin_groups()["Q8"]),
                       ("A4", builtin_groups()["A4"]), ("S4", builtin_groups()["S4"])]:
        doc = bundled(name)
        ingest_table(doc)
        T = ingest_table(doc, parse_group(desc))
        validate_table(T)


def test_round_trip_through_json(tmp_path):
    T = TABLES["A4"]
    path = tmp_path / "a4.json"
    path.write_text(json.dumps(table_to_json(T)))
    U = ingest_table(path, GROUPS["A4"])
    assert U.irreducibles == T.irreducibles


def test_perturbed_value_rejected():
    doc = bundled("S3")
    doc["characters"][2][1] = {"conductor": 1, "terms": [[-2, 1, 0]]}
    with pytest.raises(TableValidationError) as err:
        ingest_table(doc)
    assert err.value.relation == "row orthogonality"


def test_missing_power_map_rejected():
    doc = bundled("S3")
    del doc["power_map"]
    with pytest.raises(TableValidationError) as err:
        ingest_table(doc)
    assert err.value.relation == "power map required"


def test_bad_class_equation_rejected():
    doc = bundled("S3")
    doc["classes"][1]["size"] = 3
    with pytest.raises(TableValidationError):
        ingest_table(doc)


def test_power_map_with_wrong_orders_rejected():
    doc = bundled("S4")
    # the square of a 4-cycle must have order 2, not 1
    doc["power_map"] = [e if e[:2] != [4, 2] else [4, 2, 0] for e in doc["power_map"]]
    with pytest.raises(TableValidationError) as err:
        ingest_table(doc)
    assert err.value.relation == "power map consistency"


def test_power_map_into_wrong_class_rejected():
    doc = bundled("S4")
    # orders still agree, but the square of a 4-cycle is a double transposition
    doc["power_map"] = [e if e[:2] != [4, 2] else [4, 2, 1] for e in doc["power_map"]]
    with pytest.raises(TableValidationError) as err:
        ingest_table(doc)
    assert err.value.relation == "restriction multiplicity"


def test_shuffled_classes_are_matched():
    doc = bundled("S4")
    k = len(doc["classes"])
    rng = random.Random(3)
    perm = list(range(k))
    rng.shuffle(perm)
    where = {old: new for new, old in enumerate(perm)}
    shuffled = {
        "order": doc["order"],
        "classes": [doc["classes"][old] for old in perm],
        "power_map": [[where[c], j, where[t]] for c, j, t in doc["power_map"]],
        "characters": [[row[old] for old in perm] for row in doc["characters"]],
    }
    T = ingest_table(shuffled, GROUPS["S4"])
    validate_table(T)
    ref = TABLES["S4"]
    assert sorted(map(tuple, T.irreducibles), key=str) == sorted(map(tuple, ref.irreducibles), key=str)


def test_table_for_the_wrong_group_is_rejected():
    # D4 and Q8 share class sizes, orders and character values up to class order;
    # only the power maps and class multiplication tell them apart
    with pytest.raises(TableValidationError):
        ingest_table(bundled("S3"), GROUPS["C6"])
    doc = bundled("D4")
    T = ingest_table(doc, GROUPS["D4"])
    assert T.group is GROUPS["D4"]
    with pytest.raises(TableValidationError):
        ingest_table(doc, GROUPS["Q8"])


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["S3", "D4", "F21", "A4", "C3xC3", "D5"]), st.lists(st.integers(-3, 3), min_size=8, max_size=8))
def test_virtual_restriction_is_linear(name, raw):
    T = TABLES[name]
    phi = VirtualCharacter(tuple(raw[: len(T)]))
    vals = class_function(T, phi)
    for c in range(len(T.classes)):
        mult = restrict_multiplicities(T, phi, c, vals)
        expect = [sum(a * T.multiplicities[i][c][j] for i, a in enumerate(phi.coeffs)) for j in range(len(mult))]
        assert list(mult) == expect
        assert sum(mult) == value(T, phi, c).to_rational() if c == T.classes.identity_class else True
