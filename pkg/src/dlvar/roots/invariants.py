# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import sympy

from dlvar.errors import ComputationError, InputError
from dlvar.parallel import run_parallel
from dlvar.roots.catalog import catalog_datum, catalog_entry
from dlvar.roots.datum import DLDatum, phi_fixed_weyl
from dlvar.roots.system import Word, matmul

logger = logging.getLogger(__name__)

# 두 계수 표에 실린 (케이스, 단어) 행
TABLE_ROWS: tuple[tuple[str, str], ...] = (
    ("A2", "12"),
    ("2A2", "12"),
    ("C2", "21"),
    ("2C2", "12"),
    ("2C2", "21"),
    ("2G2", "21"),
    ("C2", "12"),
    ("G2", "12"),
    ("G2", "21"),
    ("2G2", "12"),
    ("2A3", "12"),
    ("2A3", "21"),
    ("2A3", "23"),
    ("2A4", "12"),
    ("2A4", "21"),
    ("2A4", "13"),
    ("3D4", "12"),
    ("3D4", "21"),
    ("2F4", "12"),
    ("2F4", "13"),
    ("2F4", "21"),
    ("2F4", "24"),
    ("2F4", "34"),
    ("2F4", "43"),
)

GENUS_CASES = ("A1", "2A2", "2C2", "2G2")


@dataclass(frozen=True)
class CanonicalCoefficients:
    word: Word
    lambdas: tuple[Fraction, ...]
    mu: tuple[Fraction, ...]
    twisted_coroots: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class TableRow:
    case: str
    word: str
    param: int
    label: int  # q 또는 q0
    lambdas: tuple[Fraction, ...]

    @property
    def negative(self) -> bool:
        return all(x <= 0 for x in self.lambdas)


@dataclass(frozen=True)
class ZeroDimCount:
    key: str
    total: int
    summands: dict[str, int]


def parse_word(text: str) -> Word:
    text = str(text).strip()
    if not text or not text.isdigit() or "0" in text:
        raise InputError(f"word must be a non-empty digit string over 1..9, got {text!r}")
    return tuple(int(ch) for ch in text)


def _to_fraction(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def _twisted_coroots(datum: DLDatum, word: Word) -> tuple[tuple[int, ...], ...]:
    weyl = datum.weyl
    result = []
    prefix = weyl.identity.matrix
    for letter in word:
        unit = tuple(int(k == letter - 1) for k in range(datum.rank))
        coroot = weyl.act_on_coroot(weyl.element(prefix), unit)
        if coroot not in datum.rs.coroots:
            raise ComputationError(f"twisted coroot {coroot} is not a coroot")
        result.append(coroot)
        prefix = matmul(prefix, weyl.generator_matrices[letter - 1])
    return tuple(result)


def _solve_mu(datum: DLDatum, word: Word, m: int = 1) -> tuple[Fraction, ...]:
    """(phi^* w^{-1} - id) mu = m (rho - phi^* rho) 의 유리수 해."""
    w = datum.weyl.from_word(word, require_reduced=True)
    n = datum.rank
    pullback = sympy.Matrix(datum.isogeny.pullback)
    w_inverse = sympy.Matrix(w.matrix).T
    operator = pullback * w_inverse - sympy.eye(n)
    if operator.det() == 0:
        raise ComputationError(f"singular operator for {datum.key or datum.rs.cartan.label} word {word}")
    rho = sympy.ones(n, 1)
    mu = operator.LUsolve(m * (rho - pullback * rho))
    return tuple(_to_fraction(x) for x in mu)


def canonical_coefficients(datum: DLDatum, word: Sequence[int]) -> CanonicalCoefficients:
    word = tuple(word)
    mu = _solve_mu(datum, word)
    coroots = _twisted_coroots(datum, word)
    lambdas = tuple(sum(mu[k] * c[k] for k in range(datum.rank)) - 1 for c in coroots)
    return CanonicalCoefficients(word=word, lambdas=lambdas, mu=mu, twisted_coroots=coroots)


def canonical_coefficients_scaled(datum: DLDatum, word: Sequence[int], m: int) -> tuple[Fraction, ...]:
    if m < 1:
        raise InputError(f"scale m must be positive, got {m}")
    word = tuple(word)
    mu = _solve_mu(datum, word, m)
    coroots = _twisted_coroots(datum, word)
    return tuple((sum(mu[k] * c[k] for k in range(datum.rank)) - m) / m for c in coroots)


def table_sweep(key: str, word: Iterable[int] | str, params: Sequence[int]) -> list[TableRow]:
    word = parse_word(word) if isinstance(word, str) else tuple(word)
    text = "".join(str(i) for i in word)
    catalog_entry(key)

    def row(param: int) -> TableRow:
        datum = catalog_datum(key, param)
        coeffs = canonical_coefficients(datum, word)
        return TableRow(case=key, word=text, param=param, label=datum.label_value, lambdas=coeffs.lambdas)

    rows = run_parallel(list(params), row, f"{key} w={text} 계수 표")
    logger.info("✅ 계수 표 완료: %s w=%s, %d행", key, text, len(rows))
    return rows


def negative_cases(params_by_family: dict[str, Sequence[int]]) -> list[TableRow]:
    """표의 모든 행을 훑어 두 계수가 모두 0 이하인 행을 돌려준다."""
    found = []
    for key, text in TABLE_ROWS:
        family = catalog_entry(key).family
        for row in table_sweep(key, text, params_by_family[family]):
            if row.negative:
                found.append(row)
    return found


def zero_dim_count(datum: DLDatum) -> ZeroDimCount:
    summands: dict[str, int] = {}
    for w in phi_fixed_weyl(datum):
        numerator = datum.s * w.length
        if numerator % datum.r:
            raise ComputationError(
                f"r={datum.r} does not divide s*l(w)={numerator} for w={w.word_text} ({datum.key})"
            )
        summands[w.word_text] = datum.p ** (numerator // datum.r)
    total = sum(summands.values())
    logger.debug("🧮 0차원 점 개수: %s -> %d", datum.key, total)
    return ZeroDimCount(key=datum.key, total=total, summands=summands)


def curve_genus(datum: DLDatum) -> int:
    """2g - 2 = lambda_1 * N 으로 종수를 구한다 (길이 1 단어)."""
    if datum.key and datum.key not in GENUS_CASES:
        raise InputError(f"genus is defined for {', '.join(GENUS_CASES)}, got {datum.key}")
    lam = canonical_coefficients(datum, (1,)).lambdas[0]
    count = zero_dim_count(datum).total
    twice = lam * count + 2
    if twice.denominator != 1 or twice.numerator % 2 or twice < 0:
        raise ComputationError(f"non-integral genus: 2g = {twice} for {datum.key}")
    return twice.numerator // 2


def zero_dim_sweep(key: str, params: Sequence[int]) -> list[tuple[int, int]]:
    counts = run_parallel(list(params), lambda q: zero_dim_count(catalog_datum(key, q)).total, f"{key} 0차원")
    return [(catalog_datum(key, q).label_value, n) for q, n in zip(params, counts)]


def genus_sweep(key: str, params: Sequence[int]) -> list[tuple[int, int]]:
    genera = run_parallel(list(params), lambda q: curve_genus(catalog_datum(key, q)), f"{key} 종수")
    return [(catalog_datum(key, q).label_value, g) for q, g in zip(params, genera)]
