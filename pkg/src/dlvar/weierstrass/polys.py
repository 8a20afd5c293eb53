# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
from dataclasses import dataclass
from tokenize import TokenError
from typing import Iterable, Sequence

import galois
import numpy as np
import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from dlvar.errors import ComputationError, InputError
from dlvar.weierstrass.coefficients import CoefField, FiniteCoefField, format_gf, format_poly

logger = logging.getLogger(__name__)

_T, _U, _A = sympy.symbols("t u a")
_TRANSFORMS = standard_transformations + (convert_xor,)


@dataclass(frozen=True, eq=False)
class TPoly:
    """CoefField 계수의 t 다항식. coeffs 는 오름차순이고 끝의 0 은 잘라낸다."""

    field: CoefField
    coeffs: tuple

    @classmethod
    def make(cls, fld: CoefField, coeffs: Iterable) -> "TPoly":
        coeffs = list(coeffs)
        while coeffs and fld.is_zero(coeffs[-1]):
            coeffs.pop()
        return cls(fld, tuple(coeffs))

    @classmethod
    def zero(cls, fld: CoefField) -> "TPoly":
        return cls(fld, ())

    @classmethod
    def constant(cls, fld: CoefField, c) -> "TPoly":
        return cls.make(fld, [c])

    @classmethod
    def monomial(cls, fld: CoefField, c, n: int) -> "TPoly":
        return cls.make(fld, [fld.zero] * n + [c])

    @classmethod
    def from_terms(cls, fld: CoefField, terms: dict[int, object]) -> "TPoly":
        if not terms:
            return cls.zero(fld)
        coeffs = [fld.zero] * (max(terms) + 1)
        for n, c in terms.items():
            coeffs[n] = coeffs[n] + c
        return cls.make(fld, coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, n: int):
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else self.field.zero

    def __add__(self, other: "TPoly") -> "TPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly.make(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other: "TPoly") -> "TPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly.make(self.field, [self.coeff(i) - other.coeff(i) for i in range(n)])

    def __mul__(self, other: "TPoly") -> "TPoly":
        if self.is_zero() or other.is_zero():
            return TPoly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if self.field.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return TPoly.make(self.field, out)

    def __pow__(self, n: int) -> "TPoly":
        result = TPoly.constant(self.field, self.field.one)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPoly) or len(self.coeffs) != len(other.coeffs):
            return False
        return all(self.field.eq(a, b) for a, b in zip(self.coeffs, other.coeffs))

    def scale(self, c) -> "TPoly":
        return TPoly.make(self.field, [c * a for a in self.coeffs])

    def derivative(self) -> "TPoly":
        """특성 2: d/dt (c t^n) 은 n 이 홀수일 때만 c t^(n-1)."""
        return TPoly.make(
            self.field,
            [self.coeffs[n] if n % 2 else self.field.zero for n in range(1, len(self.coeffs))],
        )

    def is_square(self) -> bool:
        return all(self.field.is_zero(c) for c in self.coeffs[1::2]) and all(
            self.field.is_square(c) for c in self.coeffs[0::2]
        )

    def sqrt(self) -> "TPoly":
        if not self.is_square():
            raise InputError(f"{self.format()} is not a square")
        return TPoly.make(self.field, [self.field.sqrt(c) for c in self.coeffs[0::2]])

    def evaluate(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divide_linear(self, c) -> tuple["TPoly", object]:
        """(t - c) 로 나눈 몫과 나머지 (Horner)."""
        if self.is_zero():
            return self, self.field.zero
        acc = self.field.zero
        quotient = [self.field.zero] * self.degree
        for i in range(self.degree, -1, -1):
            acc = acc * c + self.coeffs[i]
            if i > 0:
                quotient[i - 1] = acc
        return TPoly.make(self.field, quotient), acc

    def valuation_at(self, c) -> int:
        if self.is_zero():
            raise ComputationError("valuation of the zero polynomial")
        poly, count = self, 0
        while True:
            quotient, remainder = poly.divide_linear(c)
            if not self.field.is_zero(remainder):
                return count
            poly, count = quotient, count + 1

    def to_galois(self) -> galois.Poly:
        if not isinstance(self.field, FiniteCoefField):
            raise InputError(f"factorisation is only available over finite fields, not {self.field.name}")
        gf = self.field.gf
        if self.is_zero():
            return galois.Poly.Zero(gf)
        return galois.Poly(gf(np.array([int(c) for c in self.coeffs])), order="asc")

    def factor_places(self) -> list[tuple[str, int, int]]:
        """유한 자리 (이름, 차수, 중복도). 1차 인수는 근으로 이름 붙인다."""
        poly = self.to_galois()
        if poly.degree < 1:
            return []
        monic = poly // galois.Poly(poly.field([int(poly.coeffs[0])]))
        factors, multiplicities = monic.factors()
        places = []
        for factor, mult in zip(factors, multiplicities):
            if factor.degree == 1:
                label = format_gf(int(factor.coeffs[-1]))
            else:
                label = format_poly(factor, "t")
            places.append((label, int(factor.degree), int(mult)))
        return sorted(places, key=lambda p: (p[1], p[0]))

    def format(self, var: str = "t") -> str:
        terms = []
        for n in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[n]
            if self.field.is_zero(c):
                continue
            mono = "" if n == 0 else var if n == 1 else f"{var}^{n}"
            text = self.field.format(c)
            if not mono:
                terms.append(text)
            elif text == "1":
                terms.append(mono)
            else:
                terms.append(f"({text})*{mono}" if any(ch in text for ch in "+/") else f"{text}*{mono}")
        return "+".join(terms) or "0"

    def __repr__(self) -> str:
        return f"TPoly({self.format()} over {self.field.name})"


def tpoly(fld: CoefField, coeffs: Sequence[int]) -> TPoly:
    """정수 계수 (오름차순) 를 상수로 올린다."""
    return TPoly.make(fld, [fld.constant(c) for c in coeffs])


def _element(fld: CoefField, poly: sympy.Poly, what: str):
    total = fld.zero
    for monomial, coefficient in poly.terms():
        if not coefficient.is_Integer:
            raise InputError(f"non-integer coefficient {coefficient} in {what}")
        if int(coefficient) % 2:
            u_degree, a_degree = monomial[-2:]
            total = total + fld.from_parts(1, u_degree, a_degree)
    return total


def parse_poly(text: str, fld: CoefField) -> TPoly:
    """'t^7+t^5', 'u*t^2+1', 'a*t^5' 같은 문자열을 t 다항식으로 읽는다. 정수 계수는 mod 2."""
    try:
        expr = parse_expr(str(text), local_dict={"t": _T, "u": _U, "a": _A}, transformations=_TRANSFORMS)
    except (SyntaxError, TypeError, TokenError, sympy.SympifyError) as exc:
        raise InputError(f"malformed polynomial {text!r}: {exc}") from exc
    expr = sympy.sympify(expr)
    unknown = expr.free_symbols - {_T, _U, _A}
    if unknown:
        raise InputError(f"unknown symbols {sorted(map(str, unknown))} in {text!r}; use t, u and a")
    num, den = sympy.fraction(sympy.together(expr))
    if den.has(_T):
        raise InputError(f"t may not appear in a denominator: {text!r}")
    try:
        num_poly = sympy.Poly(sympy.expand(num), _T, _U, _A)
        den_poly = sympy.Poly(sympy.expand(den), _U, _A)
    except sympy.PolynomialError as exc:
        raise InputError(f"malformed polynomial {text!r}: {exc}") from exc
    denominator = _element(fld, sympy.Poly(den_poly.as_expr(), _T, _U, _A), f"denominator of {text!r}")
    if fld.is_zero(denominator):
        raise InputError(f"denominator of {text!r} vanishes in characteristic 2")
    terms: dict[int, object] = {}
    for monomial, coefficient in num_poly.terms():
        if not coefficient.is_Integer:
            raise InputError(f"non-integer coefficient {coefficient} in {text!r}")
        if int(coefficient) % 2 == 0:
            continue
        t_degree, u_degree, a_degree = monomial
        terms[t_degree] = terms.get(t_degree, fld.zero) + fld.from_parts(1, u_degree, a_degree) / denominator
    poly = TPoly.from_terms(fld, terms)
    logger.debug("🔍 다항식 파싱: %r -> %s", text, poly.format())
    return poly
