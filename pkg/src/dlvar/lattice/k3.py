# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
from dataclasses import dataclass

import networkx as nx

from dlvar.errors import InputError
from dlvar.lattice.forms import IntLattice, smith_invariants
from dlvar.parallel import run_parallel

logger = logging.getLogger(__name__)

# 22개 꼭짓점 나무: g = gamma, d = delta, e = epsilon
GAMMA_VERTICES: tuple[str, ...] = (
    "g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "g0",
    "d1", "d2", "d3", "d4", "d5", "d6", "d7", "d8", "d0",
    "rho", "e0", "e1", "e2",
)

GAMMA_EDGES: tuple[tuple[str, str], ...] = (
    ("g1", "g3"), ("g3", "g4"), ("g4", "g5"), ("g5", "g6"), ("g6", "g7"), ("g7", "g8"), ("g8", "g0"),
    ("g4", "g2"),
    ("g0", "rho"), ("rho", "e0"), ("e0", "e1"), ("e1", "e2"),
    ("d1", "d3"), ("d3", "d4"), ("d4", "d5"), ("d5", "d6"), ("d6", "d7"), ("d7", "d8"), ("d8", "d0"),
    ("d4", "d2"),
    ("d0", "rho"),
)

_E8_COEFFICIENTS = {"1": 2, "2": 3, "3": 4, "4": 6, "5": 5, "6": 4, "7": 3, "8": 2, "0": 1}


def gamma_graph() -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(GAMMA_VERTICES)
    graph.add_edges_from(GAMMA_EDGES)
    return graph


def gamma_lattice() -> IntLattice:
    """N = -2E + A"""
    index = {v: i for i, v in enumerate(GAMMA_VERTICES)}
    n = len(GAMMA_VERTICES)
    rows = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in GAMMA_EDGES:
        rows[index[a]][index[b]] = 1
        rows[index[b]][index[a]] = 1
    return IntLattice.from_rows(rows)


def coefficient_vector(prefix: str) -> tuple[int, ...]:
    """2x1 + 3x2 + 4x3 + 6x4 + 5x5 + 4x6 + 3x7 + 2x8 + x0 (x = g 또는 d)."""
    return tuple(
        _E8_COEFFICIENTS[v[1]] if v[0] == prefix and len(v) == 2 else 0 for v in GAMMA_VERTICES
    )


def radical_vector_ab() -> tuple[int, ...]:
    a, b = coefficient_vector("g"), coefficient_vector("d")
    return tuple(x - y for x, y in zip(a, b))


def gram_S(n: int, c: int) -> IntLattice:
    if n not in (0, 1, 2):
        raise InputError(f"n must be 0, 1 or 2, got {n}")
    d = [int(n == i) for i in range(3)]
    rows = [
        [-2, 1, 0, 1, 1, d[0]],
        [1, -2, 1, 0, 0, d[1]],
        [0, 1, -2, 1, 0, d[2]],
        [1, 0, 1, -2, 0, 0],
        [1, 0, 0, 0, -2, c],
        [d[0], d[1], d[2], 0, c, -2],
    ]
    return IntLattice.from_rows(rows)


def expected_det(n: int, c: int) -> int:
    return -(8 * c + (16, 13, 12)[n])


@dataclass(frozen=True)
class K3ScanRow:
    sigma: int
    c: int
    det: int
    invariant_factors: tuple[int, ...]
    two_elementary: bool


def k3_scan_row(sigma: int) -> K3ScanRow:
    c = 2 ** (2 * sigma - 3) - 2
    lattice = gram_S(0, c)
    factors = smith_invariants(lattice)
    discriminant = tuple(x for x in factors if x > 1)
    return K3ScanRow(
        sigma=sigma,
        c=c,
        det=lattice.det,
        invariant_factors=discriminant,
        two_elementary=lattice.is_p_elementary(2),
    )


def k3_scan(sigmas=range(3, 11)) -> list[K3ScanRow]:
    rows = run_parallel(list(sigmas), k3_scan_row, "K3 sigma 스캔")
    for row in rows:
        logger.info(
            "🧮 sigma=%d c=%d det=%d 불변인자=%s 2-기본=%s",
            row.sigma, row.c, row.det, row.invariant_factors, row.two_elementary,
        )
    return rows
