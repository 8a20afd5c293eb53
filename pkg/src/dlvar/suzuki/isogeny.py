# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Sequence

import galois
import numpy as np

from dlvar.errors import ComputationError, ValidationError
from dlvar.geometry.fields import Fq
from dlvar.geometry.flags import SYMPLECTIC_J

logger = logging.getLogger(__name__)

# 16개 2-소행렬의 행/열 쌍
MINOR_PAIRS: tuple[tuple[int, int], ...] = ((0, 1), (0, 2), (1, 3), (2, 3))

LIE_PARAMETERS = ("a", "b", "c", "d", "u", "v", "w", "x", "y", "z")


@dataclass(frozen=True, eq=False)
class DualNumber:
    """a + eps*b, eps^2 = 0"""

    a: object
    b: object

    def __add__(self, other: "DualNumber") -> "DualNumber":
        return DualNumber(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DualNumber") -> "DualNumber":
        return DualNumber(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "DualNumber") -> "DualNumber":
        return DualNumber(self.a * other.a, self.a * other.b + self.b * other.a)


def minor_image(sigma) -> list[list]:
    """sigma[r][c] 는 +, -, * 가 정의된 환 원소면 된다 (FieldArray, numpy 벡터, DualNumber)."""
    return [
        [sigma[r1][c1] * sigma[r2][c2] - sigma[r1][c2] * sigma[r2][c1] for c1, c2 in MINOR_PAIRS]
        for r1, r2 in MINOR_PAIRS
    ]


def symplectic_j(gf: type[galois.FieldArray]) -> galois.FieldArray:
    return gf(np.array(SYMPLECTIC_J) % gf.characteristic)


def is_symplectic(m: galois.FieldArray) -> bool:
    gf = type(m)
    j = symplectic_j(gf)
    return m.shape == (4, 4) and np.array_equal(m.T @ j @ m, j)


def minor_isogeny(m: galois.FieldArray, check: bool = True) -> galois.FieldArray:
    gf = type(m)
    if gf.characteristic != 2:
        raise ValidationError("the minor isogeny is defined in characteristic 2")
    if check and not is_symplectic(m):
        raise ValidationError("minor_isogeny expects a symplectic 4x4 matrix")
    image = gf(np.array([[int(x) for x in row] for row in minor_image(m)]))
    if check and not is_symplectic(image):
        raise ComputationError("minor image of a symplectic matrix is not symplectic")
    return image


def frobenius_square(m: galois.FieldArray) -> galois.FieldArray:
    return m**2


def transvection(gf: type[galois.FieldArray], v: Sequence[int], a: int) -> galois.FieldArray:
    """x -> x + a <v, x> v"""
    vec = gf(np.array(v).reshape(4, 1))
    return gf.Identity(4) + gf(a) * (vec @ vec.T @ symplectic_j(gf))


def random_symplectic(field: Fq, rng: random.Random, steps: int = 8) -> galois.FieldArray:
    gf = field.gf
    m = gf.Identity(4)
    for _ in range(steps):
        v = [rng.randrange(field.q) for _ in range(4)]
        m = m @ transvection(gf, v, rng.randrange(1, field.q))
    return m


def lie_block(params: dict[str, int]) -> list[list[int]]:
    """[[A, B], [C, D]], B = [[u, v], [w, u]], C = [[x, y], [z, x]], D = [[d, b], [c, a]] (특성 2)."""
    a, b, c, d = (params[k] for k in "abcd")
    u, v, w = (params[k] for k in "uvw")
    x, y, z = (params[k] for k in "xyz")
    return [
        [a, b, u, v],
        [c, d, w, u],
        [x, y, d, b],
        [z, x, c, a],
    ]


def in_lie_kernel(t: Sequence[Sequence[int]]) -> bool:
    """phi(I + eps T) = I 인지 F2[eps] 위에서 계산한다."""
    gf2 = galois.GF(2)
    sigma = [[DualNumber(gf2(int(i == j)), gf2(t[i][j] % 2)) for j in range(4)] for i in range(4)]
    image = minor_image(sigma)
    return all(
        int(image[i][j].a) == int(i == j) and int(image[i][j].b) == 0 for i in range(4) for j in range(4)
    )


def _block_conditions(params: dict[str, int]) -> bool:
    return params["a"] == params["d"] and params["v"] == params["w"] == 0 and params["y"] == params["z"] == 0


def lie_kernel() -> list[dict[str, int]]:
    gf2 = galois.GF(2)
    j = symplectic_j(gf2)
    kernel = []
    for bits in itertools.product((0, 1), repeat=len(LIE_PARAMETERS)):
        params = dict(zip(LIE_PARAMETERS, bits))
        t = gf2(np.array(lie_block(params)))
        if not np.array_equal(t.T @ j + j @ t, gf2.Zeros((4, 4))):
            raise ComputationError(f"block matrix {params} is not in sp4")
        if in_lie_kernel(lie_block(params)):
            kernel.append(params)
    return kernel


def lie_kernel_count() -> int:
    kernel = lie_kernel()
    mismatched = [p for p in kernel if not _block_conditions(p)]
    expected = sum(
        _block_conditions(dict(zip(LIE_PARAMETERS, bits)))
        for bits in itertools.product((0, 1), repeat=len(LIE_PARAMETERS))
    )
    if mismatched or expected != len(kernel):
        raise ComputationError(f"Lie kernel disagrees with block conditions: {len(kernel)} vs {expected}")
    logger.info("✅ Lie 대수 핵: %d개 (블록 조건과 일치)", len(kernel))
    return len(kernel)
