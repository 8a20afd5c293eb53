# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import json

import pytest

from dlvar.app import run
from dlvar.cli.report import Report, parse_report
from dlvar.errors import InputError


def _json(capsys, *argv):
    assert run([*argv, "--format", "json"]) == 0
    return json.loads(capsys.readouterr().out)


def test_canonical_coefficients_for_ree_word(capsys):
    report = _json(capsys, "tables", "canonical", "--case", "2G2", "--word", "21", "--q", "0")
    assert report["command"] == "tables canonical"
    (row,) = report["rows"]
    assert row["n"] == 0
    assert row["q0"] == 1
    assert (row["lambda1"], row["lambda2"]) == ("0", "-2")
    assert row["negative"] is True


def test_missing_parameter_exits_with_usage_code(capsys):
    assert run(["tables", "canonical", "--case", "A2", "--word", "12"]) == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_case_exits_with_usage_code(capsys):
    assert run(["tables", "canonical", "--case", "X9", "--word", "12", "--q", "2"]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "error:" in captured.err


def test_json_output_reparses_to_identical_text(capsys):
    assert run(["tables", "zerodim", "--case", "C2", "--q", "2", "3", "--format", "json"]) == 0
    text = capsys.readouterr().out
    assert parse_report(text).to_json() == text
    assert [r["points"] for r in json.loads(text)["rows"]] == [45, 160]


def test_parse_report_rejects_garbage():
    with pytest.raises(InputError):
        parse_report("{not json")


def test_markdown_and_csv_rendering():
    report = Report.build("demo", {"q": [2, 3]}, [{"a": 1, "b": True}, {"a": 2, "c": [1, 2]}], "md")
    text = report.render()
    assert text.startswith("# demo\n")
    assert "- q: 2 3" in text
    assert "| a | b   | c   |" in text
    csv_text = report.model_copy(update={"format": "csv"}).render()
    assert csv_text.splitlines()[0] == "a,b,c"


def test_report_rejects_unknown_format():
    with pytest.raises(ValueError):
        Report(command="demo", format="xml")


def test_suzuki_verify(capsys):
    (row,) = _json(capsys, "suzuki", "verify")["rows"]
    assert row["order"] == 20
    assert (row["ord_a"], row["ord_s"]) == (5, 4)
    assert row["relation"] and row["homomorphism"]
    assert row["lie_kernel"] == 32
    assert row["fixed_flags_f2"] == row["orbit_ab"] == 5


def test_elliptic_census(capsys):
    rows = _json(capsys, "elliptic", "census")["rows"]
    assert [r["points"] for r in rows] == [1, 2, 3, 4, 5]


def test_elliptic_residual(capsys):
    (row,) = _json(capsys, "elliptic", "residual")["rows"]
    assert row["d_points"] == 4
    assert row["d_prime_degrees"] == [4]


def test_weierstrass_classify(capsys):
    report = _json(capsys, "weierstrass", "classify", "--a4", "0", "--a6", "t^5+t^7", "--field", "F4")
    assert {r["place"]: r["type"] for r in report["rows"]} == {"0": "E8", "1": "D4", "inf": "E8"}
    assert report["params"]["reduced"] is False


def test_weierstrass_discriminant(capsys):
    report = _json(capsys, "weierstrass", "discriminant", "--a4", "0", "--a6", "t^5+t^7")
    assert report["params"]["psi"] == "t^12+t^8"
    assert {r["place"]: r["valuation"] for r in report["rows"]} == {"0": 8, "1": 4, "inf": 8}


def test_weierstrass_bad_polynomial(capsys):
    assert run(["weierstrass", "classify", "--a4", "0", "--a6", "1/t"]) == 2


def test_building_export(capsys):
    assert run(["geometry", "building", "--p", "2", "--export", "edges"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 45


def test_drinfeld_strata(capsys):
    rows = _json(capsys, "geometry", "drinfeld")["rows"]
    assert [(r["w"], r["flags"], r["oracle"]) for r in rows] == [("12", 24, 24), ("21", 24, 24)]


def test_genus_defaults(capsys):
    rows = _json(capsys, "tables", "genus", "--case", "2C2")["rows"]
    assert [r["genus"] for r in rows] == [1, 14]


def test_datum_show_lists_phi_coxeter_elements_outside_the_fixed_group(capsys):
    (row,) = _json(capsys, "datum", "show", "--case", "2A2", "--q", "2")["rows"]
    assert row["key"] == "2A2"
    assert row["phi_fixed"] == 2
    assert "1" in row["phi_coxeter"] and "2" in row["phi_coxeter"]
    assert "12" not in row["phi_coxeter"]


def test_datum_show_suzuki_phi_coxeter(capsys):
    (row,) = _json(capsys, "datum", "show", "--case", "2C2", "--q", "0")["rows"]
    assert (row["r"], row["s"]) == (2, 1)
    assert set(row["phi_coxeter"]) == {"1", "2"}


def test_datum_show_split_lists_ordinary_coxeter_elements(capsys):
    (row,) = _json(capsys, "datum", "show", "--case", "A2", "--q", "2")["rows"]
    assert row["phi_fixed"] == 6
    assert set(row["phi_coxeter"]) == {"12", "21"}


def test_datum_enumerate_fills_catalog_keys(capsys):
    rows = _json(capsys, "datum", "enumerate", "--case", "C2", "--p", "2", "--max-exp", "2")["rows"]
    found = {(tuple(r["d"]), tuple(r["exps"])): r["key"] for r in rows}
    assert found[((1, 2), (1, 1))] == "C2"
    assert found[((1, 2), (2, 2))] == "C2"
    assert found[((2, 1), (1, 0))] == "2C2"
    assert found[((2, 1), (2, 1))] == "2C2"


def test_datum_enumerate_unknown_case(capsys):
    assert run(["datum", "enumerate", "--case", "X9", "--p", "2"]) == 2
    assert "error:" in capsys.readouterr().err
