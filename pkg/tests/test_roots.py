# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import itertools

import pytest

from dlvar.errors import InputError, ValidationError
from dlvar.roots.cartan import ROOT_COUNTS, CartanMatrix
from dlvar.roots.catalog import catalog_datum, catalog_keys, catalog_root_system
from dlvar.roots.datum import (
    DLDatum,
    enumerate_isogenies,
    is_frobenius_type,
    is_phi_coxeter,
    minimal_exponents,
    phi_fixed_weyl,
    phi_support,
    validate_isogeny,
)
from dlvar.roots.system import build_root_system, weyl_group, weyl_group_of

WEYL_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "C2": 8, "G2": 12, "D4": 192, "F4": 1152}


@pytest.mark.parametrize("label", sorted(ROOT_COUNTS))
def test_root_counts(label):
    rs = build_root_system(CartanMatrix.catalog(label))
    assert len(rs.roots) == ROOT_COUNTS[label]
    assert len(rs.positive_roots) == ROOT_COUNTS[label] // 2
    assert len(rs.coroots) == len(rs.roots)


@pytest.mark.parametrize("label,order", sorted(WEYL_ORDERS.items()))
def test_weyl_group_order_and_longest_element(label, order):
    cartan = CartanMatrix.catalog(label)
    w = weyl_group_of(cartan)
    assert len(w) == order
    assert w.longest.length == ROOT_COUNTS[label] // 2


def test_simple_pairing_is_cartan_entry():
    rs = build_root_system(CartanMatrix.catalog("G2"))
    c = rs.cartan.entries
    for i in range(2):
        for j in range(2):
            ai = tuple(int(k == i) for k in range(2))
            aj = tuple(int(k == j) for k in range(2))
            assert rs.pair(ai, rs.coroot_of(aj)) == c[i][j]


@pytest.mark.parametrize(
    "rows",
    [
        [[2, 1], [-1, 2]],
        [[2, -1], [0, 2]],
        [[3, -1], [-1, 2]],
        [[2, -1, 0], [-1, 2]],
    ],
)
def test_invalid_cartan_matrices(rows):
    with pytest.raises(ValidationError):
        CartanMatrix.from_rows(rows)


def test_affine_cartan_is_rejected():
    with pytest.raises(ValidationError):
        build_root_system(CartanMatrix.from_rows([[2, -2], [-2, 2]]))


def test_unknown_cartan_label():
    with pytest.raises(InputError):
        CartanMatrix.catalog("E9")


def test_bruhat_order_on_a2():
    w = weyl_group_of(CartanMatrix.catalog("A2"))
    e, s1, s2 = w.identity, w.from_word((1,)), w.from_word((2,))
    w0 = w.longest
    assert all(w.bruhat_leq(e, x) for x in w.elements)
    assert all(w.bruhat_leq(x, w0) for x in w.elements)
    assert not w.bruhat_leq(s1, s2)
    assert w.bruhat_leq(s1, w.from_word((2, 1)))


def test_reduced_words_of_longest_a2():
    w = weyl_group_of(CartanMatrix.catalog("A2"))
    assert set(w.reduced_words(w.longest)) == {(1, 2, 1), (2, 1, 2)}


def test_catalog_keys_build():
    for key in catalog_keys():
        param = 0 if key in ("2C2", "2G2", "2F4") else 2
        datum = catalog_datum(key, param)
        assert datum.key == key


def test_suzuki_exponents_are_unequal():
    datum = catalog_datum("2C2", 1)
    assert datum.p == 2
    assert datum.exps == (2, 1)
    assert not is_frobenius_type(datum)
    assert (datum.r, datum.s) == (2, 3)


def test_enumerate_isogenies_finds_suzuki_only_in_characteristic_two():
    rs = catalog_root_system("C2")
    twisted = [d for d in enumerate_isogenies(rs, 2, 2) if d.perm == (2, 1)]
    assert twisted and all(d.exps[0] == d.exps[1] + 1 for d in twisted)
    assert not [d for d in enumerate_isogenies(rs, 3, 2) if d.perm == (2, 1)]


def test_invalid_isogeny_is_rejected():
    rs = catalog_root_system("A2")
    with pytest.raises(ValidationError):
        DLDatum.create(rs, 2, (2, 1), (1, 0))


def test_phi_fixed_weyl_and_coxeter_elements():
    split = catalog_datum("A2", 2)
    assert len(phi_fixed_weyl(split)) == 6
    unitary = catalog_datum("2A2", 2)
    fixed = phi_fixed_weyl(unitary)
    assert {w.word_text for w in fixed} == {"e", "121"}
    w = unitary.weyl
    assert is_phi_coxeter(unitary, w.from_word((1,)))
    assert not is_phi_coxeter(unitary, w.from_word((1, 2)))
    assert is_phi_coxeter(split, w.from_word((1, 2)))


def test_weyl_group_of_root_system():
    elements = weyl_group(build_root_system(CartanMatrix.catalog("A1")))
    assert sorted(w.length for w in elements) == [0, 1]
    c2 = weyl_group(catalog_root_system("C2"))
    assert len(c2) == 8 and max(w.length for w in c2) == 4


@pytest.mark.parametrize("key,param,expected", [("2A2", 2, (2, 2)), ("2C2", 0, (2, 1)), ("A2", 2, (1, 1))])
def test_minimal_exponents(key, param, expected):
    assert minimal_exponents(catalog_datum(key, param)) == expected


def test_phi_support_closes_under_orbits():
    unitary = catalog_datum("2A2", 2)
    w = unitary.weyl
    assert phi_support(unitary, w.from_word((1,))) == frozenset({1, 2})
    assert phi_support(unitary, w.from_word(())) == frozenset()
    split = catalog_datum("A2", 2)
    assert phi_support(split, split.weyl.from_word((2,))) == frozenset({2})


def test_suzuki_fixed_weyl_is_identity_and_longest():
    fixed = phi_fixed_weyl(catalog_datum("2C2", 0))
    assert sorted(w.length for w in fixed) == [0, 4]


def test_character_and_coroot_actions_preserve_pairing():
    group = weyl_group_of(CartanMatrix.catalog("G2"))
    x, y = (3, -1), (2, 5)
    for w in group.elements:
        moved_x = group.act_on_character(w, x)
        moved_y = group.act_on_coroot(w, y)
        assert sum(a * b for a, b in zip(moved_x, moved_y)) == sum(a * b for a, b in zip(x, y))


@pytest.mark.parametrize("key,param,expected", [("A2", 2, (1, 2)), ("2A2", 2, (2, 1)), ("2C2", 0, (2, 1))])
def test_phi_permutes_simple_reflections_by_d(key, param, expected):
    assert catalog_datum(key, param).phi_on_generators() == expected


def test_reduced_words_of_longest_c2():
    w = weyl_group_of(CartanMatrix.catalog("C2"))
    assert set(w.reduced_words(w.longest)) == {(1, 2, 1, 2), (2, 1, 2, 1)}


def test_bruhat_order_examples():
    c2 = weyl_group_of(CartanMatrix.catalog("C2"))
    s1, s2 = c2.from_word((1,)), c2.from_word((2,))
    assert c2.bruhat_leq(s1, c2.from_word((2, 1)))
    assert not c2.bruhat_leq(s2, s1)
    a2 = weyl_group_of(CartanMatrix.catalog("A2"))
    assert not a2.bruhat_leq(a2.from_word((1, 2)), a2.from_word((2, 1)))


def test_enumerate_isogenies_on_f4_finds_the_ree_tits_flip():
    rs = catalog_root_system("F4")
    flips = {d.exps for d in enumerate_isogenies(rs, 2, 2) if d.perm == (4, 3, 2, 1)}
    assert flips == {(0, 0, 1, 1), (1, 1, 2, 2)}


def test_enumerate_isogenies_on_g2_flips_only_in_characteristic_three():
    rs = catalog_root_system("G2")
    assert [d for d in enumerate_isogenies(rs, 3, 4) if d.perm == (2, 1)]
    assert not [d for d in enumerate_isogenies(rs, 2, 4) if d.perm == (2, 1)]


@pytest.mark.parametrize(
    "key,q,expected",
    [("weil-A1xA1", 2, (2, 2)), ("weil-A1xA1", 4, (2, 4)), ("weil-A1^3", 2, (3, 3)), ("weil-A1^3", 4, (3, 6))],
)
def test_weil_restriction_minimal_exponents(key, q, expected):
    assert minimal_exponents(catalog_datum(key, q)) == expected


@pytest.mark.parametrize("label", ["C2", "G2", "A3"])
def test_validate_isogeny_does_not_depend_on_labelling(label):
    rs = catalog_root_system(label)
    n = rs.rank
    c = rs.cartan.entries
    for sigma in itertools.permutations(range(n)):
        rows = [[c[sigma[i]][sigma[j]] for j in range(n)] for i in range(n)]
        relabelled = build_root_system(CartanMatrix.from_rows(rows))
        inverse = {v: k for k, v in enumerate(sigma)}
        for perm in itertools.permutations(range(1, n + 1)):
            moved = tuple(inverse[perm[sigma[i]] - 1] + 1 for i in range(n))
            for exps in itertools.product(range(3), repeat=n):
                moved_exps = tuple(exps[sigma[i]] for i in range(n))
                for p in (2, 3):
                    assert validate_isogeny(rs, p, perm, exps) == validate_isogeny(relabelled, p, moved, moved_exps)
