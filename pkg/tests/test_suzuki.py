# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import itertools
import random

import numpy as np
import pytest

from dlvar.errors import InputError, ValidationError
from dlvar.geometry.fields import field
from dlvar.geometry.flags import isotropic_flags_c2, relative_position
from dlvar.suzuki.flags import c2twist_strata, phi_on_flags, symplectic_completion
from dlvar.suzuki.group import PUBLISHED_S, suzuki_group
from dlvar.suzuki.isogeny import (
    frobenius_square,
    in_lie_kernel,
    is_symplectic,
    lie_block,
    lie_kernel_count,
    minor_isogeny,
    random_symplectic,
)


@pytest.fixture(scope="module")
def sz():
    return suzuki_group()


def test_group_structure(sz):
    assert sz.order == 20
    assert sz.order_of(sz.a) == 5
    assert sz.order_of(sz.s) == 4
    assert sz.s == PUBLISHED_S
    assert sz.relation_holds()
    assert sz.generated((sz.a, sz.s)) == frozenset(sz.elements)


def test_element_orders(sz):
    assert sz.element_orders == {1: 1, 2: 5, 4: 10, 5: 4}


def test_normal_subgroup_orders(sz):
    assert sz.normal_subgroup_orders() == [1, 5, 10, 20]


def test_multiplication_table_csv(sz):
    lines = sz.multiplication_table_csv().strip().splitlines()
    assert len(lines) == 21
    assert lines[0].split(",")[0] == "*"


def test_minor_map_is_a_homomorphism_on_the_group(sz):
    gf = field(2).gf
    mats = [gf(np.array(x)) for x in sz.elements]
    for x, y in itertools.product(mats, repeat=2):
        assert np.array_equal(minor_isogeny(x @ y), minor_isogeny(x) @ minor_isogeny(y))


@pytest.mark.parametrize("k", [2, 3])
def test_minor_map_on_random_symplectic_pairs(k):
    fld = field(2, k)
    rng = random.Random(1000 + k)
    for _ in range(50):
        x, y = random_symplectic(fld, rng), random_symplectic(fld, rng)
        assert is_symplectic(x) and is_symplectic(y)
        assert np.array_equal(minor_isogeny(x @ y), minor_isogeny(x) @ minor_isogeny(y))
        assert np.array_equal(minor_isogeny(minor_isogeny(x)), frobenius_square(x))


def test_minor_isogeny_rejects_bad_input():
    gf2 = field(2).gf
    with pytest.raises(ValidationError):
        minor_isogeny(gf2(np.array([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])))
    gf3 = field(3).gf
    with pytest.raises(ValidationError):
        minor_isogeny(gf3.Identity(4))


def test_lie_kernel():
    assert lie_kernel_count() == 32
    zero = dict.fromkeys("abcduvwxyz", 0)
    assert in_lie_kernel(lie_block({**zero, "b": 1}))
    assert not in_lie_kernel(lie_block({**zero, "v": 1}))


@pytest.mark.parametrize("k", [1, 2])
def test_phi_fixed_flags_are_the_orbit_of_the_standard_flag(sz, k):
    fld = field(2, k)
    fixed = {(f.line, f.plane) for f in isotropic_flags_c2(fld) if phi_on_flags(f) == f}
    orbit = {(f.line, f.plane) for f in sz.fixed_flag_orbit(fld)}
    assert len(fixed) == 5
    assert fixed == orbit
    assert c2twist_strata(k)["e"] == 5


def test_phi_on_flags_does_not_depend_on_the_completion():
    for f in isotropic_flags_c2(field(2)):
        assert phi_on_flags(f, 0) == phi_on_flags(f, 1)


def test_symplectic_completion_has_standard_gram():
    fld = field(2)
    gf = fld.gf
    for f in isotropic_flags_c2(fld):
        basis = gf(np.array(symplectic_completion(f)).T)
        assert is_symplectic(basis)


def test_phi_on_flags_needs_characteristic_two():
    f = isotropic_flags_c2(field(3))[0]
    with pytest.raises(InputError):
        phi_on_flags(f)


def test_c2twist_strata_partition():
    histogram = c2twist_strata(1)
    assert sum(histogram.values()) == 15 * 3


def test_phi_on_flags_does_not_depend_on_the_completion_over_f4():
    for f in isotropic_flags_c2(field(2, 2)):
        assert phi_on_flags(f, 0) == phi_on_flags(f, 1) == phi_on_flags(f, 3)


def test_c2twist_strata_are_unions_of_group_orbits(sz):
    for f in isotropic_flags_c2(field(2)):
        position = relative_position(f, phi_on_flags(f))
        for g in sz.elements:
            moved = sz.act(g, f)
            assert relative_position(moved, phi_on_flags(moved)) == position
