# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import itertools
import logging
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import galois
import numpy as np
from sympy import isprime

from dlvar.errors import InputError, check_enumeration

logger = logging.getLogger(__name__)

Vec = tuple[int, ...]
Basis = tuple[Vec, ...]

_MAX_ORDER = 4096


class Fq:
    """F_{p^k}. 원소는 galois 의 정수 표현 (다항식 기저) 이고 연산은 미리 만든 표로 한다."""

    def __init__(self, p: int, k: int = 1):
        if not isprime(p) or k < 1 or p**k > _MAX_ORDER:
            raise InputError(f"unsupported field F_{p}^{k}")
        self.p = p
        self.k = k
        self.q = p**k
        if k == 1:
            self.gf = galois.GF(p)
        else:
            self.gf = galois.GF(p**k, irreducible_poly=galois.irreducible_poly(p, k, method="min"))
        e = self.gf.elements
        self._add = (e[:, None] + e[None, :]).view(np.ndarray).tolist()
        self._mul = (e[:, None] * e[None, :]).view(np.ndarray).tolist()
        self._neg = (-e).view(np.ndarray).tolist()
        self._inv = [0] + np.reciprocal(e[1:]).view(np.ndarray).tolist()
        self._frob = [(e ** (p**j)).view(np.ndarray).tolist() for j in range(k)]
        logger.debug("🧮 유한체 생성: F_%d (p=%d, k=%d)", self.q, p, k)

    def __repr__(self) -> str:
        return f"Fq({self.p}^{self.k})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Fq) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        return self._inv[a]

    def power(self, a: int, n: int) -> int:
        return int(self.gf(a) ** n)

    def frob(self, a: int, e: int = 1) -> int:
        """a^(p^e)"""
        return self._frob[e % self.k][a]

    def qpow(self, a: int, q: int) -> int:
        """a^q, q 는 p 의 거듭제곱."""
        e = 0
        while self.p**e < q:
            e += 1
        if self.p**e != q:
            raise InputError(f"{q} is not a power of {self.p}")
        return self.frob(a, e)

    def total(self, values: Iterable[int]) -> int:
        acc = 0
        for v in values:
            acc = self._add[acc][v]
        return acc

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        return self.total(self._mul[a][b] for a, b in zip(u, v))

    def contains_subfield(self, q: int) -> bool:
        e = 0
        while self.p**e < q:
            e += 1
        return self.p**e == q and self.k % e == 0

    # 선형대수 (galois FieldArray)

    def array(self, rows: Sequence[Sequence[int]]):
        return self.gf(np.array(rows, dtype=int))

    def rref(self, rows: Sequence[Sequence[int]]) -> Basis:
        rows = [tuple(r) for r in rows if any(r)]
        if not rows:
            return ()
        reduced = self.array(rows).row_reduce().view(np.ndarray).tolist()
        return tuple(tuple(r) for r in reduced if any(r))

    def rank(self, rows: Sequence[Sequence[int]]) -> int:
        rows = [r for r in rows if any(r)]
        if not rows:
            return 0
        return int(np.linalg.matrix_rank(self.array(rows)))

    def null_space(self, rows: Sequence[Sequence[int]], n: int) -> Basis:
        """rows 에 직교하는 (x . r = 0) 벡터 공간의 기저 (rref)."""
        rows = [r for r in rows if any(r)]
        if not rows:
            return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        kernel = self.array(rows).null_space().view(np.ndarray).tolist()
        return self.rref(kernel)

    def intersection_dim(self, a: Basis, b: Basis) -> int:
        return len(a) + len(b) - self.rank(list(a) + list(b))

    def contains(self, big: Basis, small: Basis) -> bool:
        return self.rank(list(big) + list(small)) == len(big)

    def apply_frob(self, basis: Basis, e: int) -> Basis:
        return self.rref([[self.frob(x, e) for x in row] for row in basis])

    def vectors(self, n: int) -> Iterator[Vec]:
        check_enumeration(f"F_{self.q}^{n} vectors", self.q**n)
        return itertools.product(range(self.q), repeat=n)

    def projective_points(self, n: int) -> list[Vec]:
        """첫 비영 좌표가 1 인 대표원, 사전순."""
        check_enumeration(f"P^{n - 1}(F_{self.q})", (self.q**n - 1) // (self.q - 1))
        points = []
        for lead in range(n):
            for tail in itertools.product(range(self.q), repeat=n - lead - 1):
                points.append((0,) * lead + (1,) + tail)
        return sorted(points)


@lru_cache(maxsize=32)
def field(p: int, k: int = 1) -> Fq:
    return Fq(p, k)


def field_of_order(q: int) -> Fq:
    for p in (2, 3, 5, 7):
        k = 0
        value = 1
        while value < q:
            value *= p
            k += 1
        if value == q and k >= 1:
            return field(p, k)
    raise InputError(f"no supported field of order {q}")
