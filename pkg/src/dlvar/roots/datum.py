# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import itertools
import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import sympy

from dlvar.config import settings
from dlvar.errors import ComputationError, InputError, ValidationError
from dlvar.roots.system import IntMatrix, RootSystem, WeylElement, WeylGroup, weyl_group_of

logger = logging.getLogger(__name__)

_MAX_R = 6


@dataclass(frozen=True)
class IsogenyMatrix:
    """phi_* 의 단순 coroot 기저 행렬. 전치는 문자 좌표 위의 phi^* 이다."""

    matrix: IntMatrix

    @classmethod
    def build(cls, p: int, perm: Sequence[int], exps: Sequence[int]) -> "IsogenyMatrix":
        n = len(perm)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[perm[i] - 1][i] = p ** exps[i]
        return cls(tuple(tuple(row) for row in rows))

    @property
    def pullback(self) -> IntMatrix:
        return tuple(zip(*self.matrix))

    def as_sympy(self) -> sympy.Matrix:
        return sympy.Matrix(self.matrix)


def _perm_order(perm: Sequence[int]) -> int:
    current = list(range(1, len(perm) + 1))
    for order in range(1, len(perm) + 2):
        current = [perm[x - 1] for x in current]
        if current == list(range(1, len(perm) + 1)):
            return order
    return 0


def validate_isogeny(rs: RootSystem, p: int, perm: Sequence[int], exps: Sequence[int]) -> bool:
    """p^{s_i} C[d(j)][d(i)] == p^{s_j} C[j][i] 를 모든 (i, j) 에 대해 검사한다."""
    n = rs.rank
    if len(perm) != n or len(exps) != n or sorted(perm) != list(range(1, n + 1)):
        return False
    if p < 2 or any(s < 0 for s in exps):
        return False
    c = rs.cartan.entries
    d = [x - 1 for x in perm]
    return all(
        p ** exps[i] * c[d[j]][d[i]] == p ** exps[j] * c[j][i]
        for i in range(n)
        for j in range(n)
    )


def _minimal_exponents(p: int, perm: Sequence[int], exps: Sequence[int]) -> Optional[tuple[int, int]]:
    phi = IsogenyMatrix.build(p, perm, exps).as_sympy()
    n = len(perm)
    power = sympy.eye(n)
    for r in range(1, _MAX_R + 1):
        power = power * phi
        diagonal = {int(power[i, i]) for i in range(n)}
        off = any(power[i, j] != 0 for i in range(n) for j in range(n) if i != j)
        if off or len(diagonal) != 1:
            continue
        value = diagonal.pop()
        s = 0
        while value % p == 0:
            value //= p
            s += 1
        if value == 1 and s > 0:
            return r, s
    return None


def _order_allowed(rs: RootSystem, perm: Sequence[int]) -> bool:
    order = _perm_order(perm)
    if order <= 2:
        return True
    label = rs.cartan.label
    # 위수 3 이상은 D4 와 A1 곱 (Weil 제한) 만 허용
    return label == "D4" and order == 3 or label.startswith("A1^")


@dataclass(frozen=True)
class DLDatum:
    rs: RootSystem = field(repr=False)
    p: int
    perm: tuple[int, ...]
    exps: tuple[int, ...]
    r: int
    s: int
    key: str = ""
    label_value: int = 0  # 표의 행 라벨 (q 또는 q0)

    @classmethod
    def create(
        cls,
        rs: RootSystem,
        p: int,
        perm: Sequence[int],
        exps: Sequence[int],
        key: str = "",
        label_value: int = 0,
    ) -> "DLDatum":
        perm = tuple(int(x) for x in perm)
        exps = tuple(int(x) for x in exps)
        if not validate_isogeny(rs, p, perm, exps):
            raise ValidationError(f"invalid isogeny data: p={p}, d={perm}, s={exps} on {rs.cartan.label}")
        if not _order_allowed(rs, perm):
            raise ValidationError(f"diagram permutation {perm} of order {_perm_order(perm)} not admitted")
        minimal = _minimal_exponents(p, perm, exps)
        if minimal is None:
            raise ValidationError(f"phi_*^r is not a positive power of p for r <= {_MAX_R}: s={exps}")
        return cls(rs=rs, p=p, perm=perm, exps=exps, r=minimal[0], s=minimal[1], key=key, label_value=label_value)

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def isogeny(self) -> IsogenyMatrix:
        return IsogenyMatrix.build(self.p, self.perm, self.exps)

    @property
    def weyl(self) -> WeylGroup:
        return weyl_group_of(self.rs.cartan)

    def orbits(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        result = []
        for start in range(1, self.rank + 1):
            if start in seen:
                continue
            orbit = {start}
            x = self.perm[start - 1]
            while x != start:
                orbit.add(x)
                x = self.perm[x - 1]
            seen |= orbit
            result.append(frozenset(orbit))
        return result

    def phi_on_weyl(self, w: WeylElement) -> WeylElement:
        phi = self.isogeny.as_sympy()
        conj = phi * sympy.Matrix(w.matrix) * phi.inv()
        if any(not x.is_integer for x in conj):
            raise ComputationError(f"phi w phi^-1 is not integral for {w}")
        return self.weyl.element(tuple(tuple(int(x) for x in conj.row(i)) for i in range(self.rank)))

    def phi_on_generators(self) -> tuple[int, ...]:
        return tuple(self.phi_on_weyl(g).word[0] for g in self.weyl.generators)

    def describe(self) -> dict:
        return {
            "key": self.key,
            "type": self.rs.cartan.label,
            "p": self.p,
            "d": list(self.perm),
            "exps": list(self.exps),
            "r": self.r,
            "s": self.s,
            "frobenius": is_frobenius_type(self),
        }


def enumerate_isogenies(rs: RootSystem, p: int, max_exp: int) -> list[DLDatum]:
    if not 0 <= max_exp <= settings.max_exp:
        raise InputError(f"max_exp must be within 0..{settings.max_exp}, got {max_exp}")
    n = rs.rank
    found = []
    for perm in itertools.permutations(range(1, n + 1)):
        if not _order_allowed(rs, perm):
            continue
        for exps in itertools.product(range(max_exp + 1), repeat=n):
            if not validate_isogeny(rs, p, perm, exps):
                continue
            if _minimal_exponents(p, perm, exps) is None:
                continue
            found.append(DLDatum.create(rs, p, perm, exps))
    found.sort(key=lambda d: (d.perm, d.exps))
    logger.info("🔍 동종사상 열거: %s, p=%d, max_exp=%d -> %d개", rs.cartan.label, p, max_exp, len(found))
    return found


def minimal_exponents(datum: DLDatum) -> tuple[int, int]:
    return datum.r, datum.s


def is_frobenius_type(datum: DLDatum) -> bool:
    return len(set(datum.exps)) == 1


def phi_fixed_weyl(datum: DLDatum) -> list[WeylElement]:
    phi = datum.isogeny.as_sympy()
    return [w for w in datum.weyl if phi * sympy.Matrix(w.matrix) == sympy.Matrix(w.matrix) * phi]


def phi_support(datum: DLDatum, w: WeylElement) -> frozenset[int]:
    support = w.support
    return frozenset().union(*(orbit for orbit in datum.orbits() if orbit & support))


def is_phi_coxeter(datum: DLDatum, w: WeylElement) -> bool:
    support = w.support
    if w.length != len(support):
        return False
    return all(len(orbit & support) == 1 for orbit in datum.orbits())
