# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
import random
import re
from dataclasses import dataclass
from typing import Iterator, Optional, Union

import galois
import numpy as np

from dlvar.errors import InputError
from dlvar.geometry.fields import field

logger = logging.getLogger(__name__)

_MAX_M = 4


def _poly_is_zero(p: galois.Poly) -> bool:
    return p.degree == 0 and int(p.coeffs[0]) == 0


def _poly_sqrt(p: galois.Poly, m: int) -> Optional[galois.Poly]:
    """짝수 차수 항만 있으면 차수를 반으로, 계수는 2^(m-1) 거듭제곱."""
    gf = p.field
    coeffs = list(p.coeffs[::-1])
    if any(int(c) for c in coeffs[1::2]):
        return None
    halved = [c ** (2 ** (m - 1)) for c in coeffs[0::2]]
    return galois.Poly(gf(np.array([int(c) for c in halved])), order="asc")


def format_gf(value: int) -> str:
    """F_{2^m} 원소를 생성원 a 의 다항식으로 쓴다."""
    if value in (0, 1):
        return str(value)
    terms = []
    for e in range(value.bit_length() - 1, -1, -1):
        if value >> e & 1:
            terms.append("1" if e == 0 else "a" if e == 1 else f"a^{e}")
    return "+".join(terms)


def format_poly(p: galois.Poly, var: str) -> str:
    terms = []
    coeffs = p.coeffs[::-1]
    for e in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[e])
        if not c:
            continue
        mono = "" if e == 0 else var if e == 1 else f"{var}^{e}"
        text = format_gf(c)
        if not mono:
            terms.append(text)
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"({text})*{mono}" if "+" in text else f"{text}*{mono}")
    return "+".join(terms) or "0"


@dataclass(frozen=True, eq=False)
class RatFunc:
    """F_{2^m}(u) 원소. 분모는 monic, 분자/분모 서로소."""

    num: galois.Poly
    den: galois.Poly

    @classmethod
    def make(cls, num: galois.Poly, den: galois.Poly) -> "RatFunc":
        if _poly_is_zero(den):
            raise ZeroDivisionError("rational function with zero denominator")
        g = galois.gcd(num, den)
        num, den = num // g, den // g
        lead = galois.Poly(den.field([int(den.coeffs[0] ** -1)]))
        return cls(num * lead, den * lead)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.make(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.make(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc.make(-self.num, self.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.make(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if _poly_is_zero(other.num):
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc.make(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int) -> "RatFunc":
        base = self if n >= 0 else RatFunc.make(self.den, self.num)
        result = RatFunc.make(galois.Poly.One(self.num.field), galois.Poly.One(self.num.field))
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((tuple(int(c) for c in self.num.coeffs), tuple(int(c) for c in self.den.coeffs)))

    def __repr__(self) -> str:
        return f"RatFunc({format_poly(self.num, 'u')} / {format_poly(self.den, 'u')})"


class FiniteCoefField:
    """F_{2^m}, m <= 4. 완전체이므로 모든 원소가 제곱이다."""

    perfect = True

    def __init__(self, m: int):
        if not 1 <= m <= _MAX_M:
            raise InputError(f"F_2^{m} is not supported (1 <= m <= {_MAX_M})")
        self.m = m
        self.gf = field(2, m).gf
        self.name = f"F{2**m}"

    def __repr__(self) -> str:
        return self.name

    @property
    def zero(self):
        return self.gf(0)

    @property
    def one(self):
        return self.gf(1)

    @property
    def generator(self):
        return self.gf(2 if self.m > 1 else 1)

    def constant(self, value: int):
        return self.gf(value)

    def from_parts(self, coefficient: int, u_degree: int, a_degree: int):
        if u_degree:
            raise InputError(f"symbol u is not available over {self.name}")
        return self.gf(coefficient % 2) * self.generator**a_degree

    def is_zero(self, x) -> bool:
        return int(x) == 0

    def eq(self, x, y) -> bool:
        return int(x) == int(y)

    def is_square(self, x) -> bool:
        return True

    def sqrt(self, x):
        return x ** (2 ** (self.m - 1))

    def elements(self) -> Iterator:
        return (self.gf(v) for v in range(2**self.m))

    def random_element(self, rng: random.Random, nonzero: bool = False):
        low = 1 if nonzero else 0
        return self.gf(rng.randrange(low, 2**self.m))

    def format(self, x) -> str:
        return format_gf(int(x))


class RationalFunctionField:
    """F_{2^m}(u), 불완전체."""

    perfect = False

    def __init__(self, m: int):
        if not 1 <= m <= _MAX_M:
            raise InputError(f"F_2^{m}(u) is not supported (1 <= m <= {_MAX_M})")
        self.m = m
        self.gf = field(2, m).gf
        self.base = FiniteCoefField(m)
        self.name = f"F{2**m}(u)"

    def __repr__(self) -> str:
        return self.name

    def _poly(self, coeffs_asc) -> galois.Poly:
        return galois.Poly(self.gf(np.array([int(c) for c in coeffs_asc])), order="asc")

    def from_polys(self, num: galois.Poly, den: galois.Poly) -> RatFunc:
        return RatFunc.make(num, den)

    def embed(self, c) -> RatFunc:
        return RatFunc.make(self._poly([int(c)]), self._poly([1]))

    @property
    def zero(self) -> RatFunc:
        return self.embed(0)

    @property
    def one(self) -> RatFunc:
        return self.embed(1)

    @property
    def generator(self) -> RatFunc:
        return self.embed(int(self.base.generator))

    @property
    def u(self) -> RatFunc:
        return RatFunc.make(self._poly([0, 1]), self._poly([1]))

    def constant(self, value: int) -> RatFunc:
        return self.embed(value)

    def from_parts(self, coefficient: int, u_degree: int, a_degree: int) -> RatFunc:
        return self.embed(self.base.from_parts(coefficient, 0, a_degree)) * self.u**u_degree

    def is_zero(self, x: RatFunc) -> bool:
        return _poly_is_zero(x.num)

    def eq(self, x: RatFunc, y: RatFunc) -> bool:
        return x == y

    def is_square(self, x: RatFunc) -> bool:
        return _poly_sqrt(x.num, self.m) is not None and _poly_sqrt(x.den, self.m) is not None

    def sqrt(self, x: RatFunc) -> RatFunc:
        num, den = _poly_sqrt(x.num, self.m), _poly_sqrt(x.den, self.m)
        if num is None or den is None:
            raise InputError(f"{self.format(x)} is not a square in {self.name}")
        return RatFunc.make(num, den)

    def random_element(self, rng: random.Random, nonzero: bool = False, degree: int = 3) -> RatFunc:
        while True:
            num = self._poly([rng.randrange(2**self.m) for _ in range(degree + 1)])
            den = self._poly([rng.randrange(2**self.m) for _ in range(degree)] + [1])
            x = RatFunc.make(num, den)
            if not nonzero or not self.is_zero(x):
                return x

    def format(self, x: RatFunc) -> str:
        num = format_poly(x.num, "u")
        if x.den.degree == 0:
            return num
        return f"({num})/({format_poly(x.den, 'u')})"


CoefField = Union[FiniteCoefField, RationalFunctionField]

_FIELD_NAME = re.compile(r"^F(\d+)(\(u\))?$")


def coef_field(name: str) -> CoefField:
    """'F2', 'F4', 'F16', 'F2(u)' ..."""
    match = _FIELD_NAME.match(str(name).strip().replace(" ", ""))
    if not match:
        raise InputError(f"unknown coefficient field {name!r}; expected F2, F4, F8, F16 or F2(u), F4(u), ...")
    order = int(match.group(1))
    m = order.bit_length() - 1
    if order != 2**m or m < 1:
        raise InputError(f"coefficient field order must be a power of 2, got {order}")
    return RationalFunctionField(m) if match.group(2) else FiniteCoefField(m)
