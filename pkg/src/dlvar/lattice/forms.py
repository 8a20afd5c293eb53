# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

import sympy
from sympy import factorint
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from dlvar.errors import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Signature:
    plus: int
    minus: int
    zero: int


@dataclass(frozen=True)
class IntLattice:
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.gram)
        if any(len(row) != n for row in self.gram):
            raise ValidationError("Gram matrix must be square")
        if any(self.gram[i][j] != self.gram[j][i] for i in range(n) for j in range(n)):
            raise ValidationError("Gram matrix must be symmetric")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntLattice":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def matrix(self) -> sympy.Matrix:
        return sympy.Matrix(self.gram)

    @property
    def det(self) -> int:
        return int(self.matrix.det())

    def pairing(self, u: Sequence[int], v: Sequence[int]) -> int:
        return sum(u[i] * self.gram[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def congruent(self, u: Sequence[Sequence[int]]) -> "IntLattice":
        """U^T G U"""
        m = sympy.Matrix(u)
        return IntLattice.from_rows((m.T * self.matrix * m).tolist())

    def discriminant_group(self) -> tuple[int, ...]:
        return tuple(d for d in smith_invariants(self) if d != 1)

    def is_p_elementary(self, p: int) -> bool:
        return is_p_elementary(self, p)


def signature(lattice: IntLattice) -> Signature:
    """유리수 합동 대각화 (대각 피벗, 없으면 e_i -> e_i + e_j)."""
    a = [[Fraction(x) for x in row] for row in lattice.gram]
    active = list(range(lattice.rank))
    plus = minus = 0
    while active:
        pivot = next((i for i in active if a[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for k in range(lattice.rank):
                a[i][k] += a[j][k]
            for k in range(lattice.rank):
                a[k][i] += a[k][j]
            pivot = i
        d = a[pivot][pivot]
        if d > 0:
            plus += 1
        else:
            minus += 1
        active.remove(pivot)
        for j in active:
            factor = a[j][pivot] / d
            if factor:
                for k in active:
                    a[j][k] -= factor * a[pivot][k]
        for j in active:
            a[j][pivot] = a[pivot][j] = Fraction(0)
    return Signature(plus=plus, minus=minus, zero=lattice.rank - plus - minus)


def _primitive(vector: Sequence) -> tuple[int, ...]:
    denominators = [Fraction(x).denominator for x in vector]
    scale = reduce(lcm, denominators, 1)
    ints = [int(Fraction(x) * scale) for x in vector]
    content = reduce(gcd, ints, 0) or 1
    ints = [x // content for x in ints]
    first = next((x for x in ints if x), 0)
    return tuple(-x for x in ints) if first < 0 else tuple(ints)


def radical_basis(lattice: IntLattice) -> list[tuple[int, ...]]:
    kernel = lattice.matrix.nullspace()
    return [_primitive([sympy.Rational(x) for x in vec]) for vec in kernel]


def _invariant_factors(diagonal: Sequence[int]) -> tuple[int, ...]:
    """임의 대각형을 d_1 | d_2 | ... 꼴로 정규화한다."""
    nonzero = [abs(d) for d in diagonal if d != 0]
    zeros = len(diagonal) - len(nonzero)
    exponents: dict[int, list[int]] = defaultdict(list)
    for d in nonzero:
        for p, e in factorint(d).items():
            exponents[p].append(e)
    size = len(nonzero)
    factors = [1] * size
    for p, exps in exponents.items():
        exps = sorted(exps) + []
        padded = [0] * (size - len(exps)) + exps
        for i, e in enumerate(padded):
            factors[i] *= p**e
    return tuple(factors) + (0,) * zeros


def smith_invariants(lattice: IntLattice) -> tuple[int, ...]:
    snf = smith_normal_form(lattice.matrix, domain=ZZ)
    diagonal = [int(snf[i, i]) for i in range(lattice.rank)]
    factors = _invariant_factors(diagonal)
    logger.debug("🧮 Smith 불변인자: %s", factors)
    return factors


def is_p_elementary(lattice: IntLattice, p: int) -> bool:
    factors = smith_invariants(lattice)
    if 0 in factors:
        return False
    return all(d in (1, p) for d in factors)
