# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

from fractions import Fraction as F

import pytest

from dlvar.errors import InputError, ValidationError
from dlvar.roots.catalog import catalog_datum
from dlvar.roots.invariants import (
    TABLE_ROWS,
    canonical_coefficients,
    canonical_coefficients_scaled,
    curve_genus,
    negative_cases,
    parse_word,
    table_sweep,
    zero_dim_count,
)


def _d2a4(q):
    return q**4 - q**3 + q**2 - q + 1


def _e3d4(q):
    return q**4 - q**2 + 1


def _f2f4(x):
    return 4 * x**4 - 4 * x**3 + 2 * x**2 - 2 * x + 1


# (케이스, 단어) -> 닫힌 식. Suzuki-Ree 는 q0 의 식이다.
CLOSED_FORMS = {
    ("A2", "12"): lambda q: (F(q * q - 2 * q - 2, q * q + q + 1), F(-3, q * q + q + 1)),
    ("2A2", "12"): lambda q: (F(q - 2, q + 1), F(-3, q + 1)),
    ("C2", "21"): lambda q: (F(q * q - q - 2, q * q + 1), F(2 * q - 4, q * q + 1)),
    ("C2", "12"): lambda q: (F(2 * q * q - 2 * q - 2, q * q + 1), F(q - 3, q * q + 1)),
    ("2C2", "12"): lambda x: (F(4 * x * x - 6 * x + 2, 2 * x * x - 1), F(-4 * x + 3, 2 * x * x - 1)),
    ("2C2", "21"): lambda x: (F(2 * x * x - 4 * x + 2, 2 * x * x - 1), F(-6 * x + 4, 2 * x * x - 1)),
    ("2G2", "21"): lambda x: (F(3 * x * x - 5 * x + 2, 3 * x * x - 1), F(-9 * x + 5, 3 * x * x - 1)),
    ("2G2", "12"): lambda x: (F(9 * x * x - 9 * x + 2, 3 * x * x - 1), F(-5 * x + 3, 3 * x * x - 1)),
    ("G2", "12"): lambda q: (F(3 * q * q - 2 * q - 2, q * q - q + 1), F(2 * q - 3, q * q - q + 1)),
    ("G2", "21"): lambda q: (F(q * q - 2, q * q - q + 1), F(4 * q - 5, q * q - q + 1)),
    ("2A3", "12"): lambda q: (F(q * q - 2, q * q - q + 1), F(q - 3, q**3 + 1)),
    ("2A3", "21"): lambda q: (F(q**3 - q * q - 2, q**3 + 1), F(2 * q - 3, q * q - q + 1)),
    ("2A3", "23"): lambda q: (F(q**3 - q * q - 2, q**3 + 1), F(2 * q - 3, q * q - q + 1)),
    ("2A4", "12"): lambda q: (F(q**4 - 2 * q * q + 2 * q - 2, _d2a4(q)), F(q**3 + q - 3, _d2a4(q))),
    ("2A4", "21"): lambda q: (F(q**4 + q**3 - 2 * q * q + q - 2, _d2a4(q)), F(2 * q - 3, _d2a4(q))),
    ("2A4", "13"): lambda q: (F(q**3 - q * q + q - 2, _d2a4(q)), F(2 * q**3 - q * q - 2, _d2a4(q))),
    ("3D4", "12"): lambda q: (F(q**4 + q**3 + q * q - 2 * q - 2, _e3d4(q)), F(q * q + q - 3, _e3d4(q))),
    ("3D4", "21"): lambda q: (F(q**4 - q**3 + q * q - 2, _e3d4(q)), F(2 * q**3 + q * q - q - 3, _e3d4(q))),
    ("2F4", "12"): lambda x: (F(4 * x**4 - 4 * x * x + 4 * x - 2, _f2f4(x)), F(4 * x**3 + 2 * x - 3, _f2f4(x))),
    ("2F4", "43"): lambda x: (F(4 * x**4 - 4 * x * x + 4 * x - 2, _f2f4(x)), F(4 * x**3 + 2 * x - 3, _f2f4(x))),
    ("2F4", "13"): lambda x: (F(2 * x**3 - 2 * x * x + 3 * x - 2, _f2f4(x)), F(8 * x**3 - 2 * x * x - 2, _f2f4(x))),
    ("2F4", "21"): lambda x: (F(4 * x**4 + 4 * x**3 - 4 * x * x + 2 * x - 2, _f2f4(x)), F(4 * x - 3, _f2f4(x))),
    ("2F4", "34"): lambda x: (F(4 * x**4 + 4 * x**3 - 4 * x * x + 2 * x - 2, _f2f4(x)), F(4 * x - 3, _f2f4(x))),
    ("2F4", "24"): lambda x: (
        F(6 * x**3 - 2 * x * x + x - 2, _f2f4(x)),
        F(4 * x**3 - 2 * x * x + 2 * x - 2, _f2f4(x)),
    ),
}

SUZUKI_REE = {"2C2", "2G2", "2F4"}


def _params(key):
    return (0, 1, 2) if key in SUZUKI_REE else (2, 3, 4)


def test_every_table_row_has_a_closed_form():
    assert set(TABLE_ROWS) == set(CLOSED_FORMS)


@pytest.mark.parametrize("key,word", sorted(CLOSED_FORMS))
def test_canonical_coefficients_match_closed_forms(key, word):
    for row in table_sweep(key, word, _params(key)):
        assert row.lambdas == CLOSED_FORMS[(key, word)](row.label), (key, word, row.param)


def test_negative_rows_are_exactly_the_five_known_cases():
    rows = negative_cases({"frobenius": (2, 3, 4), "twisted": (2, 3, 4), "suzuki-ree": (0, 1, 2), "weil": (2, 3)})
    found = {(r.case, r.word, r.param) for r in rows}
    assert found == {
        ("A2", "12", 2),
        ("2A2", "12", 2),
        ("C2", "21", 2),
        ("2C2", "12", 0),
        ("2C2", "21", 0),
        ("2G2", "21", 0),
    }


def test_ree_row_at_n_zero():
    (row,) = table_sweep("2G2", "21", [0])
    assert row.label == 1
    assert row.lambdas == (F(0), F(-2))


def test_scaled_coefficients_do_not_depend_on_scale():
    datum = catalog_datum("G2", 3)
    base = canonical_coefficients(datum, (1, 2)).lambdas
    for m in (1, 2, 5):
        assert canonical_coefficients_scaled(datum, (1, 2), m) == base


def test_twisted_coroots_are_coroots():
    datum = catalog_datum("2A4", 2)
    coeffs = canonical_coefficients(datum, (1, 3))
    assert all(c in datum.rs.coroots for c in coeffs.twisted_coroots)


@pytest.mark.parametrize(
    "key,formula",
    [
        ("A2", lambda q: q**3 + 2 * q**2 + 2 * q + 1),
        ("C2", lambda q: q**4 + 2 * q**3 + 2 * q**2 + 2 * q + 1),
        ("2A2", lambda q: q**3 + 1),
    ],
)
def test_zero_dim_counts(key, formula):
    for q in (2, 3):
        assert zero_dim_count(catalog_datum(key, q)).total == formula(q)


def test_zero_dim_count_c2_at_three():
    assert zero_dim_count(catalog_datum("C2", 3)).total == 160


@pytest.mark.parametrize("key,formula", [("2C2", lambda x: 4 * x**4 + 1), ("2G2", lambda x: 27 * x**6 + 1)])
def test_zero_dim_counts_suzuki_ree(key, formula):
    for n in (0, 1):
        datum = catalog_datum(key, n)
        assert zero_dim_count(datum).total == formula(datum.label_value)


def test_genus():
    assert [curve_genus(catalog_datum("A1", q)) for q in (2, 3)] == [0, 0]
    assert [curve_genus(catalog_datum("2A2", q)) for q in (2, 3)] == [(q * q - q) // 2 for q in (2, 3)]
    assert curve_genus(catalog_datum("2C2", 0)) == 1
    assert curve_genus(catalog_datum("2C2", 1)) == 2 * 2**3 - 2
    assert curve_genus(catalog_datum("2G2", 0)) == 15


def test_genus_rejects_other_cases():
    with pytest.raises(InputError):
        curve_genus(catalog_datum("A2", 2))


@pytest.mark.parametrize("text", ["", "1a", "102", " "])
def test_parse_word_rejects_malformed(text):
    with pytest.raises(InputError):
        parse_word(text)


def test_non_reduced_word_is_rejected():
    with pytest.raises(ValidationError):
        canonical_coefficients(catalog_datum("A2", 2), (1, 1))



@pytest.mark.parametrize("key,word,mirrored", [("2A3", (1, 2), (3, 2)), ("2A4", (1, 2), (4, 3))])
@pytest.mark.parametrize("q", [2, 3])
def test_coefficients_do_not_change_under_the_diagram_symmetry(key, word, mirrored, q):
    datum = catalog_datum(key, q)
    assert canonical_coefficients(datum, word).lambdas == canonical_coefficients(datum, mirrored).lambdas
