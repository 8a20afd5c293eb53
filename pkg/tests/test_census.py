# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import itertools

from dlvar.weierstrass.census import (
    CHANGES,
    REPRESENTATIVES,
    change,
    discriminant,
    elliptic_census_f2,
    j0_solutions,
    point_count,
    residual_divisor_points,
)


def test_five_classes_with_point_counts_one_to_five():
    census = elliptic_census_f2()
    assert [c.name for c in census.classes] == ["E1", "E2", "E3", "E4", "E5"]
    assert [c.points for c in census.classes] == [1, 2, 3, 4, 5]
    assert census.tuples == 32
    assert census.nonsingular == sum(c.orbit_size for c in census.classes)


def test_automorphism_counts():
    aut = {c.name: c.aut for c in elliptic_census_f2().classes}
    assert aut == {"E1": 4, "E2": 2, "E3": 2, "E4": 2, "E5": 4}


def test_j0_equations_agree_with_stabiliser():
    for c in elliptic_census_f2().classes:
        if c.supersingular:
            assert c.j0_solutions == c.aut
        else:
            assert c.j0_solutions is None
    assert j0_solutions(REPRESENTATIVES["E1"]) == 4


def test_supersingular_classes():
    census = elliptic_census_f2()
    assert {c.name for c in census.classes if c.supersingular} == {"E1", "E3", "E5"}


def test_changes_preserve_smoothness_and_points():
    for a in itertools.product((0, 1), repeat=5):
        if not discriminant(a):
            continue
        for c in CHANGES:
            moved = change(a, *c)
            assert discriminant(moved)
            assert point_count(moved) == point_count(a)


def test_census_rows():
    rows = elliptic_census_f2().rows()
    assert rows[4] == {
        "class": "E5",
        "equation": "y^2+y=x^3+x",
        "points": 5,
        "aut": 4,
        "orbit": 2,
        "supersingular": True,
    }


def test_residual_divisors_on_e5():
    residual = residual_divisor_points()
    assert residual.count_d == 4
    assert residual.counts_d_prime == {1: 0, 2: 0, 4: 4}
    assert residual.degrees_d_prime == [4]
    assert residual.on_curve
    assert residual.disjoint_from_origin
