# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import itertools
import logging
import sys
from typing import Callable, Optional, Sequence, Union

import numpy as np

from dlvar.cli.parser import build_parser
from dlvar.cli.report import Report
from dlvar.config import settings
from dlvar.errors import DLVarError, InputError
from dlvar.geometry.building import building_sp4, find_gamma_embedding, to_dot, to_edge_list
from dlvar.geometry.fields import field
from dlvar.geometry.strata import (
    drinfeld_oracle,
    hermitian_counts,
    ree_point_count,
    strata_histogram,
    surface_equations_check,
)
from dlvar.lattice.forms import radical_basis, signature, smith_invariants
from dlvar.lattice.k3 import expected_det, gamma_lattice, gram_S, k3_scan, radical_vector_ab
from dlvar.roots.catalog import (
    FROBENIUS,
    SUZUKI_REE,
    TWISTED,
    WEIL,
    catalog_datum,
    catalog_entry,
    catalog_key_of,
    catalog_root_system,
)
from dlvar.roots.datum import enumerate_isogenies, is_phi_coxeter, phi_fixed_weyl
from dlvar.roots.invariants import TableRow, genus_sweep, negative_cases, table_sweep, zero_dim_sweep
from dlvar.suzuki.group import special_set_action, suzuki_group
from dlvar.suzuki.flags import c2twist_strata
from dlvar.suzuki.isogeny import lie_kernel_count, minor_isogeny
from dlvar.weierstrass.census import elliptic_census_f2, residual_divisor_points
from dlvar.weierstrass.coefficients import coef_field
from dlvar.weierstrass.polys import parse_poly
from dlvar.weierstrass.quasi import ShortWeierstrass, quasi_discriminant
from dlvar.weierstrass.rdp import classify_weierstrass

logger = logging.getLogger(__name__)

Output = Union[Report, str]

NEGATIVE_SWEEP = {FROBENIUS: (2, 3, 4), TWISTED: (2, 3, 4), SUZUKI_REE: (0, 1, 2), WEIL: (2, 3, 4)}


def _report(ns, params: dict, rows: list[dict]) -> Report:
    command = f"{ns.command} {ns.action}"
    return Report.build(command, params, rows, ns.format or settings.default_format)


def _label_name(key: str) -> Optional[str]:
    return "q0" if catalog_entry(key).family == SUZUKI_REE else None


def _table_row(row: TableRow) -> dict:
    entry = catalog_entry(row.case)
    record = {"case": row.case, "word": row.word, entry.parameter_name: row.param}
    if _label_name(row.case):
        record["q0"] = row.label
    record.update({f"lambda{i + 1}": lam for i, lam in enumerate(row.lambdas)})
    record["negative"] = row.negative
    return record


# tables


def tables_canonical(ns) -> Output:
    rows = table_sweep(ns.case, ns.word, ns.q)
    return _report(ns, {"case": ns.case, "word": ns.word, "q": ns.q}, [_table_row(r) for r in rows])


def tables_zerodim(ns) -> Output:
    name = catalog_entry(ns.case).parameter_name
    label = _label_name(ns.case)
    rows = []
    for param, (value, count) in zip(ns.q, zero_dim_sweep(ns.case, ns.q)):
        record = {name: param}
        if label:
            record[label] = value
        record["points"] = count
        rows.append(record)
    return _report(ns, {"case": ns.case, "q": ns.q}, rows)


def tables_genus(ns) -> Output:
    entry = catalog_entry(ns.case)
    params = ns.q or ([0, 1] if entry.family == SUZUKI_REE else [2, 3])
    label = _label_name(ns.case)
    rows = []
    for param, (value, genus) in zip(params, genus_sweep(ns.case, params)):
        record = {entry.parameter_name: param}
        if label:
            record[label] = value
        record["genus"] = genus
        rows.append(record)
    return _report(ns, {"case": ns.case, "q": params}, rows)


def tables_negative(ns) -> Output:
    rows = negative_cases({k: list(v) for k, v in NEGATIVE_SWEEP.items()})
    return _report(ns, {"sweep": NEGATIVE_SWEEP}, [_table_row(r) for r in rows])


# geometry


def geometry_building(ns) -> Output:
    g = building_sp4(ns.p)
    if ns.export == "dot":
        return to_dot(g, f"sp4_f{ns.p}")
    if ns.export == "edges":
        return to_edge_list(g)
    row = g.summary()
    if ns.embed:
        row["gamma_embedding"] = find_gamma_embedding(g) is not None
    return _report(ns, {"p": ns.p}, [row])


def geometry_strata(ns) -> Output:
    histogram = strata_histogram(ns.case, ns.ext, ns.q)
    rows = [{"w": w, "flags": n} for w, n in histogram.items()]
    return _report(ns, {"case": ns.case, "ext": ns.ext, "q": ns.q}, rows)


def geometry_hermitian(ns) -> Output:
    return _report(ns, {"q": ns.q, "ext": ns.ext}, [{"points": hermitian_counts(ns.q, ns.ext)}])


def geometry_surface(ns) -> Output:
    return _report(ns, {"q": ns.q, "ext": ns.ext}, [{"equal": surface_equations_check(ns.q, ns.ext)}])


def geometry_drinfeld(ns) -> Output:
    histogram = strata_histogram("A2", ns.ext, ns.q)
    oracle = drinfeld_oracle(ns.q, ns.ext)
    rows = [{"w": w, "flags": histogram[w], "oracle": oracle} for w in ("12", "21")]
    return _report(ns, {"q": ns.q, "ext": ns.ext}, rows)


def geometry_ree(ns) -> Output:
    return _report(ns, {"ext": ns.ext}, [{"points": ree_point_count(ns.ext)}])


# suzuki


def suzuki_verify(ns) -> Output:
    group = suzuki_group()
    gf = field(2).gf
    mats = [gf(np.array(x)) for x in group.elements]
    homomorphism = all(
        (minor_isogeny(x @ y) == minor_isogeny(x) @ minor_isogeny(y)).all()
        for x, y in itertools.product(mats, repeat=2)
    )
    fixed = {f"fixed_flags_f{2**k}": c2twist_strata(k)["e"] for k in (1, 2)}
    orbit = len({(f.line, f.plane) for f in group.fixed_flag_orbit()})
    row = {
        "order": group.order,
        "ord_a": group.order_of(group.a),
        "ord_s": group.order_of(group.s),
        "relation": group.relation_holds(),
        "normal_subgroups": group.normal_subgroup_orders(),
        "element_orders": group.element_orders,
        "homomorphism": homomorphism,
        "lie_kernel": lie_kernel_count(),
        **fixed,
        "orbit_ab": orbit,
        **special_set_action(),
    }
    return _report(ns, {}, [row])


def suzuki_table(ns) -> Output:
    return suzuki_group().multiplication_table_csv()


def suzuki_flags(ns) -> Output:
    rows = [{"w": w, "flags": n} for w, n in c2twist_strata(ns.ext).items()]
    return _report(ns, {"ext": ns.ext}, rows)


# lattice


def lattice_gamma(ns) -> Output:
    lattice = gamma_lattice()
    sig = signature(lattice)
    radical = radical_basis(lattice)
    ab = radical_vector_ab()
    negated = tuple(-x for x in ab)
    row = {
        "plus": sig.plus,
        "minus": sig.minus,
        "zero": sig.zero,
        "radical": [list(v) for v in radical],
        "radical_is_a_minus_b": len(radical) == 1 and radical[0] in (ab, negated),
    }
    return _report(ns, {}, [row])


def lattice_gram(ns) -> Output:
    lattice = gram_S(ns.n, ns.c)
    row = {
        "det": lattice.det,
        "expected": expected_det(ns.n, ns.c),
        "invariant_factors": list(smith_invariants(lattice)),
        "two_elementary": lattice.is_p_elementary(2),
    }
    return _report(ns, {"n": ns.n, "c": ns.c}, [row])


def lattice_k3scan(ns) -> Output:
    rows = [
        {
            "sigma": r.sigma,
            "c": r.c,
            "det": r.det,
            "discriminant": list(r.invariant_factors),
            "two_elementary": r.two_elementary,
        }
        for r in k3_scan()
    ]
    return _report(ns, {}, rows)


# weierstrass / elliptic


def _weierstrass(ns) -> ShortWeierstrass:
    fld = coef_field(ns.field)
    return ShortWeierstrass(parse_poly(ns.a4, fld), parse_poly(ns.a6, fld), ns.d)


def _params(ns) -> dict:
    return {"a4": ns.a4, "a6": ns.a6, "field": ns.field, "d": ns.d}


def weierstrass_discriminant(ns) -> Output:
    w = _weierstrass(ns)
    q = quasi_discriminant(w)
    rows = [{"place": place, "degree": degree, "valuation": v} for place, degree, v in q.places]
    params = {**_params(ns), "psi": q.psi.format(), "complete": q.complete}
    return _report(ns, params, rows)


def weierstrass_classify(ns) -> Output:
    w = _weierstrass(ns)
    fld = w.field
    result = classify_weierstrass(w)
    nf = result.normal_form
    params = {
        **_params(ns),
        "lambda2": fld.format(nf.lambda2),
        "lambda6": fld.format(nf.lambda6),
        "mu": fld.format(nf.mu),
        "reduced": result.reduced,
    }
    rows = [{"place": place, "type": t} for place, t in result.types.items()]
    return _report(ns, params, rows)


def elliptic_census(ns) -> Output:
    census = elliptic_census_f2()
    return _report(ns, {"tuples": census.tuples, "nonsingular": census.nonsingular}, census.rows())


def elliptic_residual(ns) -> Output:
    residual = residual_divisor_points()
    row = {
        "d_points": residual.count_d,
        "d_prime_degrees": residual.degrees_d_prime,
        "d_prime_counts": residual.counts_d_prime,
        "on_curve": residual.on_curve,
        "disjoint_from_origin": residual.disjoint_from_origin,
    }
    return _report(ns, {}, [row])


# datum


def datum_enumerate(ns) -> Output:
    rs = catalog_root_system(catalog_entry(ns.case).cartan)
    rows = [{**d.describe(), "key": catalog_key_of(d)} for d in enumerate_isogenies(rs, ns.p, ns.max_exp)]
    return _report(ns, {"case": ns.case, "p": ns.p, "max_exp": ns.max_exp}, rows)


def datum_show(ns) -> Output:
    datum = catalog_datum(ns.case, ns.q)
    fixed = phi_fixed_weyl(datum)
    row = {
        **datum.describe(),
        "phi_fixed": len(fixed),
        "phi_coxeter": [w.word_text for w in datum.weyl if is_phi_coxeter(datum, w)],
    }
    return _report(ns, {"case": ns.case, "q": ns.q}, [row])


HANDLERS: dict[tuple[str, str], Callable[..., Output]] = {
    ("tables", "canonical"): tables_canonical,
    ("tables", "zerodim"): tables_zerodim,
    ("tables", "genus"): tables_genus,
    ("tables", "negative"): tables_negative,
    ("geometry", "building"): geometry_building,
    ("geometry", "strata"): geometry_strata,
    ("geometry", "hermitian"): geometry_hermitian,
    ("geometry", "surface"): geometry_surface,
    ("geometry", "drinfeld"): geometry_drinfeld,
    ("geometry", "ree"): geometry_ree,
    ("suzuki", "verify"): suzuki_verify,
    ("suzuki", "table"): suzuki_table,
    ("suzuki", "flags"): suzuki_flags,
    ("lattice", "gamma"): lattice_gamma,
    ("lattice", "gram"): lattice_gram,
    ("lattice", "k3scan"): lattice_k3scan,
    ("weierstrass", "classify"): weierstrass_classify,
    ("weierstrass", "discriminant"): weierstrass_discriminant,
    ("elliptic", "census"): elliptic_census,
    ("elliptic", "residual"): elliptic_residual,
    ("datum", "enumerate"): datum_enumerate,
    ("datum", "show"): datum_show,
}


def execute(argv: Sequence[str]) -> Output:
    """argv 를 해석해 처리기를 실행한다. 사용법 오류는 InputError 로 바꾼다."""
    parser = build_parser()
    try:
        ns = parser.parse_args(list(argv))
    except SystemExit as exc:
        if exc.code in (0, None):
            raise
        raise InputError(f"usage error: {' '.join(argv)}") from None
    return HANDLERS[(ns.command, ns.action)](ns)


def main(argv: Sequence[str]) -> int:
    try:
        output = execute(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except InputError as exc:
        logger.error("❌ 입력 오류: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except DLVarError as exc:
        logger.error("❌ 계산 오류: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    text = output.render() if isinstance(output, Report) else output
    sys.stdout.write(text)
    logger.info("✅ 완료: %s", " ".join(argv))
    return 0
