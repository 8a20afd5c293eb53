# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
from dataclasses import dataclass
from typing import Sequence

from dlvar.errors import ComputationError, InputError, check_enumeration
from dlvar.geometry.fields import Basis, Fq, Vec
from dlvar.roots.cartan import CartanMatrix
from dlvar.roots.system import WeylElement, WeylGroup, weyl_group_of

logger = logging.getLogger(__name__)

FULL_A = "full-A"
ISOTROPIC_C2 = "isotropic-C2"

Perm = tuple[int, ...]

# <x, y> = x1 y4 + x2 y3 - x3 y2 - x4 y1
SYMPLECTIC_J = ((0, 0, 0, 1), (0, 0, 1, 0), (0, -1, 0, 0), (-1, 0, 0, 0))

# C2 생성원과 S4 위치 교환: s1 = (12)(34), s2 = (23)
_C2_SWAPS = {1: ((0, 1), (2, 3)), 2: ((1, 2),)}


@dataclass(frozen=True)
class FlagConfig:
    kind: str
    field: Fq
    line: Basis
    plane: Basis

    @property
    def dim(self) -> int:
        return 3 if self.kind == FULL_A else 4

    def chain(self) -> tuple[Basis, ...]:
        """F_1 ⊂ ... ⊂ F_n (C2 는 L ⊂ U ⊂ L^perp ⊂ V)."""
        whole = tuple(tuple(int(i == j) for j in range(self.dim)) for i in range(self.dim))
        if self.kind == FULL_A:
            return (self.line, self.plane, whole)
        return (self.line, self.plane, symplectic_perp(self.field, self.line), whole)


def symplectic_form(field: Fq, x: Sequence[int], y: Sequence[int]) -> int:
    acc = 0
    for i in range(4):
        for j in range(4):
            c = SYMPLECTIC_J[i][j]
            if c:
                term = field.mul(x[i], y[j])
                acc = field.add(acc, term if c > 0 else field.neg(term))
    return acc


def _j_row(field: Fq, v: Sequence[int]) -> Vec:
    """x -> <v, x> 의 계수 벡터."""
    return tuple(
        field.total(
            field.mul(v[i], SYMPLECTIC_J[i][j] % field.p) for i in range(4)
        )
        for j in range(4)
    )


def symplectic_perp(field: Fq, basis: Basis) -> Basis:
    return field.null_space([_j_row(field, v) for v in basis], 4)


def full_flags_a(field: Fq, n: int = 3) -> list[FlagConfig]:
    if n != 3:
        raise InputError("only complete flags in dimension 3 are supported")
    total = (field.q**2 + field.q + 1) * (field.q + 1)
    check_enumeration(f"A2 flags over F_{field.q}", total)
    flags = []
    points = field.projective_points(3)
    for h in points:
        plane = field.null_space([h], 3)
        for v in points:
            if field.dot(h, v) == 0:
                flags.append(FlagConfig(FULL_A, field, (v,), plane))
    return flags


def isotropic_flags_c2(field: Fq) -> list[FlagConfig]:
    total = (field.q**3 + field.q**2 + field.q + 1) * (field.q + 1)
    check_enumeration(f"C2 flags over F_{field.q}", total)
    flags = []
    points = field.projective_points(4)
    for v in points:
        seen: set[Basis] = set()
        for w in points:
            if w == v or symplectic_form(field, v, w) != 0:
                continue
            plane = field.rref([v, w])
            if len(plane) == 2 and plane not in seen:
                seen.add(plane)
                flags.append(FlagConfig(ISOTROPIC_C2, field, (v,), plane))
    return flags


def intersection_profile(f: FlagConfig, g: FlagConfig) -> tuple[tuple[int, ...], ...]:
    """profile[i][j] = dim(F_{i+1} ∩ G_{j+1})"""
    if f.kind != g.kind or f.field != g.field:
        raise InputError("flags of different kinds or fields")
    fc, gc = f.chain(), g.chain()
    return tuple(tuple(f.field.intersection_dim(a, b) for b in gc) for a in fc)


def permutation_from_profile(profile: Sequence[Sequence[int]]) -> Perm:
    n = len(profile)

    def m(i: int, j: int) -> int:
        return profile[i - 1][j - 1] if i and j else 0

    perm = [0] * n
    for nu in range(1, n + 1):
        hits = [i for i in range(1, n + 1) if m(i, nu) - m(i - 1, nu) - m(i, nu - 1) + m(i - 1, nu - 1) == 1]
        if len(hits) != 1:
            raise ComputationError(f"intersection profile is not a permutation pattern: {profile}")
        perm[nu - 1] = hits[0]
    return tuple(perm)


def rank_profile(perm: Perm) -> tuple[tuple[int, ...], ...]:
    """w[i, j] = #{nu <= j : w(nu) <= i}"""
    n = len(perm)
    return tuple(
        tuple(sum(1 for nu in range(j) if perm[nu] <= i) for j in range(1, n + 1)) for i in range(1, n + 1)
    )


def bruhat_by_dimensions(v: Perm, w: Perm) -> bool:
    pv, pw = rank_profile(v), rank_profile(w)
    return all(a >= b for rv, rw in zip(pv, pw) for a, b in zip(rv, rw))


def _swaps(kind: str, letter: int, n: int) -> tuple[tuple[int, int], ...]:
    if kind == FULL_A:
        if not 1 <= letter < n:
            raise InputError(f"letter {letter} out of range for S{n}")
        return ((letter - 1, letter),)
    return _C2_SWAPS[letter]


def word_to_permutation(word: Sequence[int], kind: str) -> Perm:
    n = 3 if kind == FULL_A else 4
    perm = list(range(1, n + 1))
    for letter in word:
        for a, b in _swaps(kind, letter, n):
            perm[a], perm[b] = perm[b], perm[a]
    return tuple(perm)


def permutation_to_word(perm: Perm, kind: str) -> tuple[int, ...]:
    """오른쪽 내림을 하나씩 벗겨 축약 단어를 얻는다."""
    perm = list(perm)
    letters = (1, 2)
    word: list[int] = []
    while True:
        for letter in letters:
            a, b = _swaps(kind, letter, len(perm))[0]
            if perm[a] > perm[b]:
                for x, y in _swaps(kind, letter, len(perm)):
                    perm[x], perm[y] = perm[y], perm[x]
                word.append(letter)
                break
        else:
            break
    if perm != sorted(perm):
        raise ComputationError(f"permutation {perm} did not reduce to the identity")
    return tuple(reversed(word))


def flag_weyl_group(kind: str) -> WeylGroup:
    return weyl_group_of(CartanMatrix.catalog("A2" if kind == FULL_A else "C2"))


def weyl_permutation(w: WeylElement, kind: str) -> Perm:
    return word_to_permutation(w.word, kind)


def relative_position(f: FlagConfig, g: FlagConfig) -> WeylElement:
    perm = permutation_from_profile(intersection_profile(f, g))
    return flag_weyl_group(f.kind).from_word(permutation_to_word(perm, f.kind), require_reduced=True)


def frobenius_flag(f: FlagConfig, e: int) -> FlagConfig:
    fld = f.field
    return FlagConfig(f.kind, fld, fld.apply_frob(f.line, e), fld.apply_frob(f.plane, e))


def standard_flag(field: Fq, kind: str) -> FlagConfig:
    n = 3 if kind == FULL_A else 4
    e = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return FlagConfig(kind, field, (e[0],), (e[0], e[1]))
