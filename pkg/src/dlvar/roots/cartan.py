# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
from dataclasses import dataclass
from typing import Sequence

import sympy

from dlvar.errors import InputError, ValidationError

logger = logging.getLogger(__name__)

Entries = tuple[tuple[int, ...], ...]

# C_ij = <alpha_i, alpha_j^vee>
_CATALOG: dict[str, list[list[int]]] = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "A4": [[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
    "C2": [[2, -1], [-2, 2]],
    "G2": [[2, -1], [-3, 2]],
    # 중심 노드는 2번
    "D4": [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]],
    "F4": [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
}

ROOT_COUNTS = {"A1": 2, "A2": 6, "A3": 12, "A4": 20, "C2": 8, "G2": 12, "D4": 24, "F4": 48}


@dataclass(frozen=True)
class CartanMatrix:
    entries: Entries
    label: str = ""

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0 or any(len(row) != n for row in self.entries):
            raise ValidationError(f"Cartan matrix must be square and non-empty: {self.entries}")
        for i in range(n):
            if self.entries[i][i] != 2:
                raise ValidationError(f"diagonal entry C[{i}][{i}] = {self.entries[i][i]} != 2")
            for j in range(n):
                if i == j:
                    continue
                if self.entries[i][j] > 0:
                    raise ValidationError(f"positive off-diagonal entry C[{i}][{j}] = {self.entries[i][j]}")
                if (self.entries[i][j] == 0) != (self.entries[j][i] == 0):
                    raise ValidationError(f"asymmetric zero pattern at ({i}, {j})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], label: str = "") -> "CartanMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows), label)

    @classmethod
    def catalog(cls, label: str) -> "CartanMatrix":
        if label.startswith("A1^"):
            return cls.block_diagonal(*([cls.catalog("A1")] * int(label[3:])))
        if label not in _CATALOG:
            raise InputError(f"unknown Cartan type: {label!r}")
        return cls.from_rows(_CATALOG[label], label)

    @classmethod
    def block_diagonal(cls, *parts: "CartanMatrix") -> "CartanMatrix":
        n = sum(part.rank for part in parts)
        rows = [[0] * n for _ in range(n)]
        offset = 0
        for part in parts:
            for i, row in enumerate(part.entries):
                for j, value in enumerate(row):
                    rows[offset + i][offset + j] = value
            offset += part.rank
        labels = [part.label for part in parts]
        label = f"A1^{len(parts)}" if set(labels) == {"A1"} else "x".join(labels)
        return cls.from_rows(rows, label)

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def det(self) -> int:
        return int(sympy.Matrix(self.entries).det())

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i][j]

    def expected_root_count(self) -> int | None:
        if self.label.startswith("A1^"):
            return 2 * self.rank
        return ROOT_COUNTS.get(self.label)
