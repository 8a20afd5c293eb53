# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from dlvar.errors import ComputationError, InputError, ValidationError, check_enumeration
from dlvar.roots.cartan import CartanMatrix

logger = logging.getLogger(__name__)

Vector = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]
Word = tuple[int, ...]

_MAX_ROOTS = 240


def _key(m: np.ndarray) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in m)


def _identity(n: int) -> IntMatrix:
    return _key(np.eye(n, dtype=np.int64))


def _matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return _key(np.array(a, dtype=np.int64) @ np.array(b, dtype=np.int64))


def _apply(a: IntMatrix, v: Sequence[int]) -> Vector:
    return tuple(int(x) for x in np.array(a, dtype=np.int64) @ np.array(v, dtype=np.int64))


def _is_positive(v: Vector) -> bool:
    return all(x >= 0 for x in v)


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanMatrix
    roots: tuple[Vector, ...]
    coroots: tuple[Vector, ...]  # roots[k] 에 대응하는 coroot (단순 coroot 좌표)

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def positive_roots(self) -> tuple[Vector, ...]:
        return tuple(r for r in self.roots if _is_positive(r))

    @property
    def positive_coroots(self) -> tuple[Vector, ...]:
        return tuple(c for c in self.coroots if _is_positive(c))

    def coroot_of(self, root: Sequence[int]) -> Vector:
        return self.coroots[self.roots.index(tuple(root))]

    def pair(self, root: Sequence[int], coroot: Sequence[int]) -> int:
        """<root, coroot>, 둘 다 단순 기저 좌표."""
        c = self.cartan.entries
        return sum(root[i] * coroot[j] * c[i][j] for i in range(self.rank) for j in range(self.rank))


@dataclass(frozen=True)
class WeylElement:
    matrix: IntMatrix  # 단순 coroot 기저 위의 작용
    word: Word = field(compare=False)
    length: int = field(compare=False)
    cartan: CartanMatrix = field(compare=True, repr=False, default=None)

    def __str__(self) -> str:
        return "e" if not self.word else "".join(f"s{i}" for i in self.word)

    @property
    def word_text(self) -> str:
        return "".join(str(i) for i in self.word) or "e"

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.word)


def build_root_system(cartan: CartanMatrix) -> RootSystem:
    """단순근을 단순 반사로 닫아 근계와 coroot 대응을 만든다."""
    n = cartan.rank
    c = cartan.entries
    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    pairs = {(v, v) for v in simple}
    queue = deque(pairs)
    while queue:
        root, coroot = queue.popleft()
        for i in range(n):
            # s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
            b = sum(root[k] * c[k][i] for k in range(n))
            new_root = tuple(root[k] - (b if k == i else 0) for k in range(n))
            # s_i(beta^vee) = beta^vee - <alpha_i, beta^vee> alpha_i^vee
            a = sum(c[i][k] * coroot[k] for k in range(n))
            new_coroot = tuple(coroot[k] - (a if k == i else 0) for k in range(n))
            pair = (new_root, new_coroot)
            if pair not in pairs:
                if not (_is_positive(new_root) or _is_positive(tuple(-x for x in new_root))):
                    raise ValidationError(f"reflection closure of {cartan.label or c} is not a root system")
                pairs.add(pair)
                queue.append(pair)
                if len(pairs) > _MAX_ROOTS:
                    raise ValidationError(f"{cartan.label or c} is not of finite type")

    ordered = sorted(pairs, key=lambda p: (not _is_positive(p[0]), sum(abs(x) for x in p[0]), p[0]))
    roots = tuple(p[0] for p in ordered)
    coroots = tuple(p[1] for p in ordered)
    if len(set(roots)) != len(roots):
        raise ValidationError(f"root/coroot correspondence is not a bijection for {cartan.label or c}")
    expected = cartan.expected_root_count()
    if expected is not None and expected != len(roots):
        raise ValidationError(f"{cartan.label}: {len(roots)} roots, expected {expected}")
    logger.debug("🧮 근계 생성 완료: %s, |Phi|=%d", cartan.label or "custom", len(roots))
    return RootSystem(cartan=cartan, roots=roots, coroots=coroots)


class WeylGroup:
    """길이 순 BFS 로 만든 Weyl 군. 각 원소의 단어는 사전순 최소 축약 단어다."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.rank = rs.rank
        c = rs.cartan.entries
        n = self.rank
        self.generator_matrices: tuple[IntMatrix, ...] = tuple(
            tuple(tuple(int(k == l) - (c[i][l] if k == i else 0) for l in range(n)) for k in range(n))
            for i in range(n)
        )
        self._positive = np.array(rs.positive_coroots, dtype=np.int64)
        self._by_matrix: dict[IntMatrix, WeylElement] = {}
        self.elements: list[WeylElement] = []
        self._build()

    def _build(self) -> None:
        ident = _identity(self.rank)
        layer = [(ident, ())]
        self._add(ident, ())
        while layer:
            next_layer = []
            for matrix, word in layer:
                for i in range(self.rank):
                    product = _matmul(matrix, self.generator_matrices[i])
                    if product in self._by_matrix:
                        continue
                    new_word = word + (i + 1,)
                    self._add(product, new_word)
                    next_layer.append((product, new_word))
            check_enumeration("Weyl group", len(self.elements))
            layer = next_layer
        logger.debug("🧮 Weyl 군 생성 완료: %s, |W|=%d", self.rs.cartan.label or "custom", len(self.elements))

    def _add(self, matrix: IntMatrix, word: Word) -> None:
        length = self.length_of_matrix(matrix)
        if length != len(word):
            raise ComputationError(f"length mismatch for word {word}: matrix length {length}")
        element = WeylElement(matrix=matrix, word=word, length=length, cartan=self.rs.cartan)
        self._by_matrix[matrix] = element
        self.elements.append(element)

    def length_of_matrix(self, matrix: IntMatrix) -> int:
        images = self._positive @ np.array(matrix, dtype=np.int64).T
        return int((images < 0).any(axis=1).sum())

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest(self) -> WeylElement:
        return max(self.elements, key=lambda w: w.length)

    @property
    def generators(self) -> tuple[WeylElement, ...]:
        return tuple(self._by_matrix[m] for m in self.generator_matrices)

    def element(self, matrix: IntMatrix) -> WeylElement:
        try:
            return self._by_matrix[tuple(tuple(row) for row in matrix)]
        except KeyError:
            raise ComputationError("matrix is not an element of this Weyl group") from None

    def from_word(self, word: Iterable[int], require_reduced: bool = False) -> WeylElement:
        word = tuple(word)
        matrix = _identity(self.rank)
        for letter in word:
            if not 1 <= letter <= self.rank:
                raise InputError(f"letter {letter} out of range 1..{self.rank} in word {word}")
            matrix = _matmul(matrix, self.generator_matrices[letter - 1])
        element = self._by_matrix[matrix]
        if require_reduced and element.length != len(word):
            raise ValidationError(f"word {word} is not reduced (length {element.length})")
        return element

    def _check(self, *elements: WeylElement) -> None:
        for w in elements:
            if w.cartan != self.rs.cartan:
                raise InputError("Weyl elements belong to different root systems")

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        self._check(a, b)
        return self._by_matrix[_matmul(a.matrix, b.matrix)]

    def inverse(self, w: WeylElement) -> WeylElement:
        self._check(w)
        return self.from_word(reversed(w.word))

    def right_descents(self, w: WeylElement) -> tuple[int, ...]:
        self._check(w)
        return tuple(
            i + 1
            for i in range(self.rank)
            if self.length_of_matrix(_matmul(w.matrix, self.generator_matrices[i])) < w.length
        )

    def act_on_coroot(self, w: WeylElement, y: Sequence[int]) -> Vector:
        return _apply(w.matrix, y)

    def act_on_character(self, w: WeylElement, x: Sequence) -> tuple:
        """w(x) = (W^{-1})^T x, 문자 좌표는 단순 coroot 와의 짝."""
        inv = self.inverse(w).matrix
        return tuple(sum(inv[k][i] * x[k] for k in range(self.rank)) for i in range(self.rank))

    def subword_products(self, w: WeylElement) -> set[IntMatrix]:
        products = {_identity(self.rank)}
        for letter in w.word:
            gen = self.generator_matrices[letter - 1]
            products |= {_matmul(m, gen) for m in products}
        return products

    def bruhat_leq(self, v: WeylElement, w: WeylElement) -> bool:
        self._check(v, w)
        if v.length > w.length:
            return False
        return v.matrix in self.subword_products(w)

    def reduced_words(self, w: WeylElement) -> tuple[Word, ...]:
        self._check(w)
        memo: dict[IntMatrix, set[Word]] = {}

        def words(x: WeylElement) -> set[Word]:
            if x.length == 0:
                return {()}
            if x.matrix in memo:
                return memo[x.matrix]
            found: set[Word] = set()
            for i in self.right_descents(x):
                prefix = self._by_matrix[_matmul(x.matrix, self.generator_matrices[i - 1])]
                found |= {word + (i,) for word in words(prefix)}
            memo[x.matrix] = found
            return found

        return tuple(sorted(words(w)))


@lru_cache(maxsize=32)
def weyl_group_of(cartan: CartanMatrix) -> WeylGroup:
    return WeylGroup(build_root_system(cartan))


def weyl_group(rs: RootSystem) -> list[WeylElement]:
    return list(weyl_group_of(rs.cartan).elements)


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    if v.cartan != w.cartan:
        raise InputError("Weyl elements belong to different root systems")
    return weyl_group_of(v.cartan).bruhat_leq(v, w)


def reduced_words(w: WeylElement) -> tuple[Word, ...]:
    return weyl_group_of(w.cartan).reduced_words(w)


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return _matmul(a, b)
