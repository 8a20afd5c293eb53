# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import csv
import io
import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Optional

import networkx as nx
import numpy as np

from dlvar.errors import ComputationError
from dlvar.geometry.fields import Fq, field
from dlvar.geometry.flags import ISOTROPIC_C2, SYMPLECTIC_J, FlagConfig
from dlvar.suzuki.isogeny import minor_image

logger = logging.getLogger(__name__)

Key = tuple[tuple[int, ...], ...]

# 심플렉틱이고 phi-고정인 위수 4 원소
PUBLISHED_S: Key = ((1, 1, 1, 1), (0, 1, 1, 0), (0, 0, 1, 1), (0, 0, 0, 1))

_J2 = np.array(SYMPLECTIC_J) % 2


def _key(m: np.ndarray) -> Key:
    return tuple(tuple(int(x) for x in row) for row in m)


def _all_f2_matrices() -> np.ndarray:
    """4x4 F2 행렬 65536개, 성분을 이어 붙인 비트열의 사전순."""
    bits = (np.arange(2**16)[:, None] >> np.arange(15, -1, -1)) & 1
    return bits.reshape(-1, 4, 4)


def _batch_minor(m: np.ndarray) -> np.ndarray:
    image = np.array(minor_image(m.transpose(1, 2, 0)))
    return image.transpose(2, 0, 1) % 2


@lru_cache(maxsize=1)
def sp4_f2() -> np.ndarray:
    m = _all_f2_matrices()
    gram = np.einsum("nji,jk,nkl->nil", m, _J2, m) % 2
    symplectic = m[(gram == _J2).all(axis=(1, 2))]
    logger.info("🧱 Sp4(F2) 열거: %d개", len(symplectic))
    return symplectic


@dataclass(frozen=True)
class SuzukiGroup:
    elements: tuple[Key, ...]
    a: Key
    s: Key

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def _index(self) -> dict[Key, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @property
    def identity(self) -> Key:
        return _key(np.eye(4, dtype=int))

    def multiply(self, x: Key, y: Key) -> Key:
        return _key(np.array(x) @ np.array(y) % 2)

    def power(self, x: Key, n: int) -> Key:
        result = self.identity
        for _ in range(n):
            result = self.multiply(result, x)
        return result

    def inverse(self, x: Key) -> Key:
        return self.power(x, self.order_of(x) - 1)

    def order_of(self, x: Key) -> int:
        y, n = x, 1
        while y != self.identity:
            y = self.multiply(y, x)
            n += 1
        return n

    @property
    def element_orders(self) -> dict[int, int]:
        return dict(sorted(Counter(self.order_of(x) for x in self.elements).items()))

    def relation_holds(self) -> bool:
        """S A S^-1 = A^2"""
        conj = self.multiply(self.multiply(self.s, self.a), self.inverse(self.s))
        return conj == self.power(self.a, 2)

    def generated(self, gens: Iterable[Key]) -> frozenset[Key]:
        gens = list(gens)
        subgroup = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.multiply(x, g)
                    if y not in subgroup:
                        subgroup.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(subgroup)

    def is_normal(self, subgroup: frozenset[Key]) -> bool:
        return all(
            self.multiply(self.multiply(g, h), self.inverse(g)) in subgroup
            for g in self.elements
            for h in subgroup
        )

    def normal_subgroup_orders(self) -> list[int]:
        candidates = {self.generated((x, y)) for x, y in itertools.product(self.elements, repeat=2)}
        return sorted({len(h) for h in candidates if self.is_normal(h)})

    def multiplication_table_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["*"] + list(range(self.order)))
        for i, x in enumerate(self.elements):
            writer.writerow([i] + [self._index[self.multiply(x, y)] for y in self.elements])
        return buf.getvalue()

    def act(self, g: Key, flag: FlagConfig) -> FlagConfig:
        fld = flag.field
        m = fld.gf(np.array(g))

        def image(basis):
            return fld.rref((m @ fld.gf(np.array(basis)).T).T.view(np.ndarray).tolist())

        return FlagConfig(flag.kind, fld, image(flag.line), image(flag.plane))

    def fixed_flag_orbit(self, fld: Optional[Fq] = None) -> list[FlagConfig]:
        """표준 깃발 B 의 A^i 이동, 0 <= i < 5."""
        fld = fld or field(2)
        e = [tuple(int(i == j) for j in range(4)) for i in range(4)]
        standard = FlagConfig(ISOTROPIC_C2, fld, (e[0],), (e[0], e[1]))
        return [self.act(self.power(self.a, i), standard) for i in range(self.order_of(self.a))]


def suzuki_group() -> SuzukiGroup:
    sp4 = sp4_f2()
    fixed = sp4[(_batch_minor(sp4) == sp4).all(axis=(1, 2))]
    elements = tuple(_key(m) for m in fixed)
    logger.info("🔍 phi-고정 부분군: %d개", len(elements))
    if PUBLISHED_S not in elements:
        raise ComputationError("published S is not a phi-fixed symplectic matrix")
    probe = SuzukiGroup(elements, a=PUBLISHED_S, s=PUBLISHED_S)
    a = next(
        (
            x
            for x in elements
            if probe.order_of(x) == 5 and SuzukiGroup(elements, a=x, s=PUBLISHED_S).relation_holds()
        ),
        None,
    )
    if a is None:
        raise ComputationError("no order-5 element A with S A S^-1 = A^2")
    group = SuzukiGroup(elements, a=a, s=PUBLISHED_S)
    if group.generated((group.a, group.s)) != frozenset(elements):
        raise ComputationError("<A, S> is not the whole phi-fixed group")
    logger.info("✅ Sz(2) 구성 완료: |G|=%d, A=%s", group.order, group.a)
    return group


def special_sets() -> list[frozenset[tuple[int, ...]]]:
    """서로 짝이 모두 1 인 F2^4 의 5-부분집합."""
    vectors = [v for v in itertools.product((0, 1), repeat=4) if any(v)]
    graph = nx.Graph()
    graph.add_nodes_from(vectors)
    for u, v in itertools.combinations(vectors, 2):
        if int(np.array(u) @ _J2 @ np.array(v)) % 2 == 1:
            graph.add_edge(u, v)
    return sorted((frozenset(c) for c in nx.find_cliques(graph) if len(c) == 5), key=sorted)


def special_set_action() -> dict:
    """Sp4(F2) 가 특수 집합 위에 작용하는 순열 표현의 크기와 충실성."""
    sets = special_sets()
    index = {s: i for i, s in enumerate(sets)}
    images = set()
    for m in sp4_f2():
        perm = tuple(
            index.get(frozenset(tuple(int(x) for x in m @ np.array(v) % 2) for v in s), -1) for s in sets
        )
        images.add(perm)
    faithful = len(images) == len(sp4_f2()) and all(-1 not in p for p in images)
    return {"special_sets": len(sets), "faithful": faithful}
