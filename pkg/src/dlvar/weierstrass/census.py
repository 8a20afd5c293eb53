# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import itertools
import logging
from dataclasses import dataclass, field as dc_field
from typing import Optional

from sympy import mobius, divisors

from dlvar.errors import ComputationError
from dlvar.geometry.fields import Fq, field

logger = logging.getLogger(__name__)

Coeffs = tuple[int, int, int, int, int]  # (a1, a2, a3, a4, a6)

REPRESENTATIVES: dict[str, Coeffs] = {
    "E1": (0, 0, 1, 1, 1),  # y^2+y = x^3+x+1
    "E2": (1, 1, 0, 0, 1),  # y^2+xy = x^3+x^2+1
    "E3": (0, 0, 1, 0, 0),  # y^2+y = x^3
    "E4": (1, 0, 0, 0, 1),  # y^2+xy = x^3+1
    "E5": (0, 0, 1, 1, 0),  # y^2+y = x^3+x
}


def discriminant(a: Coeffs) -> int:
    a1, a2, a3, a4, a6 = a
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return (-b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6) % 2


def change(a: Coeffs, r: int, s: int, t: int) -> Coeffs:
    """u = 1 인 x = x' + r, y = y' + s x' + t."""
    a1, a2, a3, a4, a6 = a
    return (
        (a1 + 2 * s) % 2,
        (a2 - s * a1 + 3 * r - s * s) % 2,
        (a3 + r * a1 + 2 * t) % 2,
        (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) % 2,
        (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1) % 2,
    )


CHANGES = list(itertools.product((0, 1), repeat=3))


def point_count(a: Coeffs) -> int:
    a1, a2, a3, a4, a6 = a
    affine = sum(
        1
        for x, y in itertools.product((0, 1), repeat=2)
        if (y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6) % 2 == 0
    )
    return affine + 1


def equation(a: Coeffs) -> str:
    a1, a2, a3, a4, a6 = a
    lhs = "y^2" + ("+xy" if a1 else "") + ("+y" if a3 else "")
    rhs = "x^3" + ("+x^2" if a2 else "") + ("+x" if a4 else "") + ("+1" if a6 else "")
    return f"{lhs}={rhs}"


def j0_solutions(a: Coeffs) -> Optional[int]:
    """a1 = a2 = 0, a3 = 1 인 형식에서 r = s, r(a4+1) = 0 의 해 (r, s, t) 개수."""
    a1, a2, a3, a4, _ = a
    if (a1, a2, a3) != (0, 0, 1):
        return None
    return sum(1 for r, s, t in CHANGES if r == s and r * (a4 + 1) % 2 == 0)


@dataclass(frozen=True)
class CensusClass:
    name: str
    representative: Coeffs
    equation: str
    points: int
    aut: int
    orbit_size: int
    supersingular: bool
    j0_solutions: Optional[int] = None


@dataclass(frozen=True)
class EllipticCensus:
    classes: list[CensusClass]
    tuples: int
    nonsingular: int

    def rows(self) -> list[dict]:
        return [
            {
                "class": c.name,
                "equation": c.equation,
                "points": c.points,
                "aut": c.aut,
                "orbit": c.orbit_size,
                "supersingular": c.supersingular,
            }
            for c in self.classes
        ]


def elliptic_census_f2() -> EllipticCensus:
    tuples = list(itertools.product((0, 1), repeat=5))
    smooth = [a for a in tuples if discriminant(a)]
    orbits: list[frozenset[Coeffs]] = []
    seen: set[Coeffs] = set()
    for a in smooth:
        if a in seen:
            continue
        orbit = frozenset(change(a, *c) for c in CHANGES)
        seen |= orbit
        orbits.append(orbit)

    classes = []
    for orbit in orbits:
        named = [n for n, rep in REPRESENTATIVES.items() if rep in orbit]
        if len(named) != 1:
            raise ComputationError(f"orbit {sorted(orbit)} matches representatives {named}")
        name = named[0]
        rep = REPRESENTATIVES[name]
        aut = sum(1 for c in CHANGES if change(rep, *c) == rep)
        if aut * len(orbit) != len(CHANGES):
            raise ComputationError(f"{name}: |Aut|={aut} and orbit {len(orbit)} do not multiply to 8")
        solutions = j0_solutions(rep)
        if solutions is not None and solutions != aut:
            raise ComputationError(f"{name}: j=0 equations give {solutions}, stabiliser gives {aut}")
        classes.append(
            CensusClass(
                name=name,
                representative=rep,
                equation=equation(rep),
                points=point_count(rep),
                aut=aut,
                orbit_size=len(orbit),
                supersingular=rep[0] == 0,
                j0_solutions=solutions,
            )
        )
    classes.sort(key=lambda c: c.name)
    for c in classes:
        if f"E{c.points}" != c.name:
            raise ComputationError(f"{c.name} has {c.points} rational points")
    logger.info("✅ F2 위 타원곡선 %d개 (비특이 방정식 %d / %d)", len(classes), len(smooth), len(tuples))
    return EllipticCensus(classes=classes, tuples=len(tuples), nonsingular=len(smooth))


@dataclass(frozen=True)
class ResidualDivisors:
    count_d: int
    degrees_d_prime: list[int]
    counts_d_prime: dict[int, int] = dc_field(default_factory=dict)  # F_{2^k} 점 개수
    on_curve: bool = True
    disjoint_from_origin: bool = True


# E5: y^2 + y = x^3 + x
_A4, _A6 = 1, 0


def _on_e5(f: Fq, x: int, y: int) -> bool:
    lhs = f.add(f.mul(y, y), y)
    rhs = f.total([f.power(x, 3), f.mul(_A4, x), _A6])
    return lhs == rhs


def _d_points(f: Fq) -> list[tuple[int, int]]:
    """x^2 + x = 0, y^2 + y = (a4+1) x + a6"""
    return [
        (x, y)
        for x, y in itertools.product(f.elements, repeat=2)
        if f.add(f.mul(x, x), x) == 0 and f.add(f.mul(y, y), y) == f.add(f.mul(_A4 ^ 1, x), _A6)
    ]


def _d_prime_points(f: Fq) -> list[tuple[int, int]]:
    """x^2 + x + 1 = 0, y^2 + y = a4 x + (a6+1)"""
    return [
        (x, y)
        for x, y in itertools.product(f.elements, repeat=2)
        if f.total([f.mul(x, x), x, 1]) == 0 and f.add(f.mul(y, y), y) == f.add(f.mul(_A4, x), _A6 ^ 1)
    ]


def _meets_infinity() -> bool:
    """동차화한 D, D' 가 원점 e = (0:1:0) 을 지나는지."""
    x, y, z = 0, 1, 0
    d = (x * x + x * z, y * y + y * z + (_A4 ^ 1) * x * z + _A6 * z * z)
    d_prime = (x * x + x * z + z * z, y * y + y * z + _A4 * x * z + (_A6 ^ 1) * z * z)
    return any(all(v % 2 == 0 for v in eqs) for eqs in (d, d_prime))


def _places(counts: dict[int, int]) -> list[int]:
    """F_{2^k} 점 개수에서 닫힌 점의 차수를 뫼비우스 반전으로 구한다."""
    degrees = []
    for n in sorted(counts):
        exact = sum(int(mobius(n // d)) * counts[d] for d in divisors(n) if d in counts)
        if exact % n:
            raise ComputationError(f"{exact} points of exact degree {n} is not divisible by {n}")
        degrees.extend([n] * (exact // n))
    return degrees


def residual_divisor_points() -> ResidualDivisors:
    f2 = field(2)
    d_points = _d_points(f2)
    counts = {k: len(_d_prime_points(field(2, k))) for k in (1, 2, 4)}
    degrees = _places(counts)

    f16 = field(2, 4)
    on_curve = all(_on_e5(f2, x, y) for x, y in d_points) and all(
        _on_e5(f16, x, y) for x, y in _d_prime_points(f16)
    )
    if not on_curve:
        raise ComputationError("residual divisor points are not on E5")
    disjoint = not _meets_infinity()
    logger.info("🔍 잉여 인자: |D(F2)|=%d, D' 닫힌 점 차수 %s", len(d_points), degrees)
    return ResidualDivisors(
        count_d=len(d_points),
        degrees_d_prime=degrees,
        counts_d_prime=counts,
        on_curve=on_curve,
        disjoint_from_origin=disjoint,
    )
