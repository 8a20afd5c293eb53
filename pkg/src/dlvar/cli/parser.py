# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import argparse

from dlvar.cli.report import FORMATS


def _common() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=FORMATS, default=None, help="출력 형식 (기본: DLVAR_DEFAULT_FORMAT)")
    return parent


def _group(sub, name: str, help_text: str):
    parser = sub.add_parser(name, help=help_text)
    nested = parser.add_subparsers(dest="action", metavar="<action>", required=True)
    return nested


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="dlvar", description="Deligne-Lusztig variety invariants")
    sub = parser.add_subparsers(dest="command", metavar="<command>", required=True)

    tables = _group(sub, "tables", "canonical coefficients, 0-dimensional counts, genera")
    p = tables.add_parser("canonical", parents=[common], help="(lambda_1, ..., lambda_r) for one word")
    p.add_argument("--case", required=True)
    p.add_argument("--word", required=True, help="digit string, '21' = s2 s1")
    p.add_argument("--q", type=int, nargs="+", required=True, help="q, or n for Suzuki-Ree keys")
    p = tables.add_parser("zerodim", parents=[common], help="|X(id)| by the rational Bruhat decomposition")
    p.add_argument("--case", required=True)
    p.add_argument("--q", type=int, nargs="+", required=True)
    p = tables.add_parser("genus", parents=[common], help="genus of the Coxeter curve")
    p.add_argument("--case", required=True)
    p.add_argument("--q", type=int, nargs="+")
    tables.add_parser("negative", parents=[common], help="rows with every coefficient <= 0")

    geometry = _group(sub, "geometry", "flags over finite fields")
    p = geometry.add_parser("building", parents=[common], help="Tits building of Sp4(F_p)")
    p.add_argument("--p", type=int, required=True, choices=(2, 3))
    p.add_argument("--export", choices=("dot", "edges"))
    p.add_argument("--embed", action="store_true", help="search an induced copy of the 22-vertex tree")
    p = geometry.add_parser("strata", parents=[common], help="flags by relative position to their image")
    p.add_argument("--case", required=True)
    p.add_argument("--ext", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p = geometry.add_parser("hermitian", parents=[common], help="points of the Hermitian curve")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ext", type=int, required=True)
    p = geometry.add_parser("surface", parents=[common], help="bihomogeneous equations against flags")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ext", type=int, required=True)
    p = geometry.add_parser("drinfeld", parents=[common], help="Coxeter strata of A2 against inclusion-exclusion")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--ext", type=int, default=3)
    p = geometry.add_parser("ree", parents=[common], help="points of the Ree curve over F_{3^k}")
    p.add_argument("--ext", type=int, required=True)

    suzuki = _group(sub, "suzuki", "the minor isogeny of Sp4 in characteristic 2")
    suzuki.add_parser("verify", parents=[common], help="structure of the fixed group Sz(2)")
    suzuki.add_parser("table", parents=[common], help="multiplication table as CSV")
    p = suzuki.add_parser("flags", parents=[common], help="isotropic flags by relative position to phi")
    p.add_argument("--ext", type=int, default=1)

    lattice = _group(sub, "lattice", "integral lattices")
    lattice.add_parser("gamma", parents=[common], help="signature and radical of the 22-vertex lattice")
    p = lattice.add_parser("gram", parents=[common], help="determinant of S(n, c)")
    p.add_argument("--n", type=int, required=True, choices=(0, 1, 2))
    p.add_argument("--c", type=int, required=True)
    lattice.add_parser("k3scan", parents=[common], help="sigma = 3..10 scan")

    weierstrass = _group(sub, "weierstrass", "quasi-elliptic fibrations in characteristic 2")
    for name, help_text in (
        ("classify", "rational double points at t = 0, 1, inf"),
        ("discriminant", "quasi-discriminant and valuations"),
    ):
        p = weierstrass.add_parser(name, parents=[common], help=help_text)
        p.add_argument("--a4", required=True)
        p.add_argument("--a6", required=True)
        p.add_argument("--field", default="F2", help="F2, F4, F16, F2(u), ...")
        p.add_argument("--d", type=int, default=2)

    elliptic = _group(sub, "elliptic", "elliptic curves over F2")
    elliptic.add_parser("census", parents=[common], help="isomorphism classes over F2")
    elliptic.add_parser("residual", parents=[common], help="the residual divisors D and D' on E5")

    datum = _group(sub, "datum", "Deligne-Lusztig data")
    p = datum.add_parser("enumerate", parents=[common], help="all isogenies on a catalog root system")
    p.add_argument("--case", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--max-exp", type=int, default=2)
    p = datum.add_parser("show", parents=[common], help="one catalog datum")
    p.add_argument("--case", required=True)
    p.add_argument("--q", type=int, required=True)

    return parser
