# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import itertools

import pytest

from dlvar.errors import InputError
from dlvar.geometry.building import building_sp4, find_gamma_embedding, to_dot, to_edge_list
from dlvar.geometry.fields import field, field_of_order
from dlvar.geometry.flags import (
    FULL_A,
    ISOTROPIC_C2,
    bruhat_by_dimensions,
    flag_weyl_group,
    full_flags_a,
    isotropic_flags_c2,
    relative_position,
    standard_flag,
    weyl_permutation,
)
from dlvar.geometry.strata import (
    drinfeld_oracle,
    hermitian_counts,
    ree_point_count,
    strata_histogram,
    surface_equations_check,
    unitary_phi,
)
from dlvar.roots.catalog import catalog_datum
from dlvar.roots.invariants import zero_dim_count


def test_field_arithmetic_f8():
    f = field(2, 3)
    assert f.q == 8
    for a in range(1, 8):
        assert f.mul(a, f.inv(a)) == 1
        assert f.frob(a, 3) == a
    assert all(f.add(a, a) == 0 for a in f.elements)


def test_field_of_order():
    assert (field_of_order(9).p, field_of_order(9).k) == (3, 2)
    with pytest.raises(InputError):
        field_of_order(6)


def test_projective_point_counts():
    f = field(3)
    assert len(f.projective_points(3)) == 13
    assert len(f.projective_points(4)) == 40


@pytest.mark.parametrize("q", [2, 3])
def test_flag_counts(q):
    f = field_of_order(q)
    assert len(full_flags_a(f)) == (q * q + q + 1) * (q + 1)
    assert len(isotropic_flags_c2(f)) == (q**3 + q * q + q + 1) * (q + 1)


def test_relative_position_of_a_flag_with_itself():
    f = field(2)
    for kind in (FULL_A, ISOTROPIC_C2):
        flag = standard_flag(f, kind)
        assert relative_position(flag, flag).word_text == "e"


def test_relative_positions_cover_the_weyl_group():
    f = field(2)
    flags = full_flags_a(f)
    base = flags[0]
    seen = {relative_position(base, g).word_text for g in flags}
    assert seen == {w.word_text for w in flag_weyl_group(FULL_A)}


@pytest.mark.parametrize("kind", [FULL_A, ISOTROPIC_C2])
def test_bruhat_subwords_agree_with_intersection_dimensions(kind):
    group = flag_weyl_group(kind)
    for v, w in itertools.product(group.elements, repeat=2):
        by_subwords = group.bruhat_leq(v, w)
        by_dimensions = bruhat_by_dimensions(weyl_permutation(v, kind), weyl_permutation(w, kind))
        assert by_subwords == by_dimensions, (v.word_text, w.word_text)


@pytest.mark.parametrize("case,q", [("A2", 2), ("A2", 3), ("C2", 2), ("C2", 3)])
def test_identity_stratum_is_the_rational_flag_count(case, q):
    histogram = strata_histogram(case, 1, q)
    assert histogram["e"] == zero_dim_count(catalog_datum(case, q)).total
    assert sum(histogram.values()) == histogram["e"]


def test_strata_partition_all_flags():
    histogram = strata_histogram("A2", 2, 2)
    assert sum(histogram.values()) == (16 + 4 + 1) * 5
    assert histogram["e"] == 21


def test_unitary_strata():
    histogram = strata_histogram("2A2", 2, 2)
    assert histogram["e"] == zero_dim_count(catalog_datum("2A2", 2)).total == 9
    assert sum(histogram.values()) == (16 + 4 + 1) * 5


def test_unitary_phi_is_an_involution_on_flags_over_f4():
    f = field(2, 2)
    for flag in full_flags_a(f)[:40]:
        assert unitary_phi(unitary_phi(flag, 2), 2) == flag


def test_suzuki_twisted_strata_fixed_flags():
    assert strata_histogram("2C2", 1)["e"] == 5


def test_unknown_strata_case():
    with pytest.raises(InputError):
        strata_histogram("G2", 1)


def test_hermitian_counts():
    assert hermitian_counts(2, 1) == 3
    assert hermitian_counts(2, 2) == 9


@pytest.mark.parametrize("k", [1, 2])
def test_surface_equations_match_flags(k):
    assert surface_equations_check(2, k)


def test_drinfeld_count_over_f8():
    histogram = strata_histogram("A2", 3, 2)
    assert drinfeld_oracle(2, 3) == 24
    assert histogram["12"] == histogram["21"] == 24


def test_ree_curve_over_f3():
    assert ree_point_count(1) == 28


def test_building_sp4_f2_is_tutte_coxeter():
    g = building_sp4(2)
    summary = g.summary()
    assert summary["vertices"] == 30
    assert summary["edges"] == 45
    assert summary["degrees"] == [3]
    assert summary["bipartite"]
    assert summary["girth"] == 8


def test_building_sp4_f3():
    g = building_sp4(3)
    assert len(g.vertices) == 80
    assert len(g.edges) == 160
    assert g.degrees == {4}
    assert g.is_bipartite


def test_building_rejects_other_primes():
    with pytest.raises(InputError):
        building_sp4(5)


def test_building_exports():
    g = building_sp4(2)
    dot = to_dot(g)
    assert dot.startswith("graph building {")
    assert dot.count(" -- ") == 45
    assert len(to_edge_list(g).strip().splitlines()) == 45


@pytest.mark.slow
def test_gamma_tree_embeds_in_the_building():
    mapping = find_gamma_embedding(building_sp4(2))
    assert mapping is not None
    assert len(set(mapping.values())) == 22


@pytest.mark.parametrize("p", [2, 3])
def test_building_is_connected(p):
    g = building_sp4(p)
    assert g.is_connected
    assert g.summary()["connected"]


def test_relative_position_is_inverted_by_swapping_the_flags():
    f = field(2)
    group = flag_weyl_group(FULL_A)
    flags = full_flags_a(f)
    for a, b in itertools.product(flags, repeat=2):
        assert relative_position(b, a) == group.inverse(relative_position(a, b))
    c2 = flag_weyl_group(ISOTROPIC_C2)
    isotropic = isotropic_flags_c2(f)
    for a, b in itertools.product(isotropic[:8], isotropic):
        assert relative_position(b, a) == c2.inverse(relative_position(a, b))
