# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
from collections import Counter
from typing import Callable

from dlvar.errors import InputError, check_enumeration
from dlvar.geometry.fields import Fq, field_of_order
from dlvar.geometry.flags import (
    FULL_A,
    FlagConfig,
    flag_weyl_group,
    frobenius_flag,
    full_flags_a,
    isotropic_flags_c2,
    relative_position,
)
from dlvar.suzuki.flags import c2twist_strata

logger = logging.getLogger(__name__)

STRATA_CASES = ("A2", "C2", "2A2", "2C2")


def _exponent(field: Fq, q: int) -> int:
    e = 0
    while field.p**e < q:
        e += 1
    if field.p**e != q or field.k % e:
        raise InputError(f"F_{field.q} does not contain F_{q}")
    return e


def _unitary_row(field: Fq, u, q: int) -> tuple[int, ...]:
    """v -> <u, v> = u0^q v2 + u1^q v1 + u2^q v0 의 계수."""
    return tuple(field.qpow(u[2 - j], q) for j in range(3))


def unitary_phi(f: FlagConfig, q: int) -> FlagConfig:
    """(L ⊂ U) -> (U^perp ⊂ L^perp)"""
    field = f.field
    if f.kind != FULL_A:
        raise InputError("unitary phi acts on complete flags in dimension 3")
    if not field.contains_subfield(q * q):
        raise InputError(f"F_{field.q} has no subfield F_{q * q}")
    new_line = field.null_space([_unitary_row(field, u, q) for u in f.plane], 3)
    new_plane = field.null_space([_unitary_row(field, u, q) for u in f.line], 3)
    return FlagConfig(FULL_A, field, new_line, new_plane)


def _case_map(case: str, field: Fq, q: int) -> tuple[list[FlagConfig], Callable[[FlagConfig], FlagConfig]]:
    if case == "A2":
        e = _exponent(field, q)
        return full_flags_a(field), lambda f: frobenius_flag(f, e)
    if case == "C2":
        e = _exponent(field, q)
        return isotropic_flags_c2(field), lambda f: frobenius_flag(f, e)
    if case == "2A2":
        return full_flags_a(field), lambda f: unitary_phi(f, q)
    raise InputError(f"unsupported strata case {case!r}; expected one of {STRATA_CASES}")


def strata_histogram(case: str, ext: int, q: int = 2) -> dict[str, int]:
    """F_{q^ext} 위의 모든 깃발을 inv(F, phi(F)) 로 분류한다. 2C2 는 F_{2^ext} 위에서 센다."""
    if case == "2C2":
        return c2twist_strata(ext)
    order = q**ext
    field = field_of_order(order)
    flags, phi = _case_map(case, field, q)
    counts = Counter(relative_position(f, phi(f)).word_text for f in flags)
    group = flag_weyl_group(flags[0].kind)
    histogram = {w.word_text: counts.get(w.word_text, 0) for w in group}
    logger.info("✅ 층 분해 완료: %s over F_%d, 깃발 %d개", case, order, len(flags))
    return histogram


def hermitian_counts(q: int, k: int) -> int:
    """X^q Z + Y^(q+1) + Z^q X = 0 의 F_{q^k} 사영 해 개수."""
    field = field_of_order(q**k)
    count = 0
    for x, y, z in field.projective_points(3):
        value = field.total(
            (
                field.mul(field.qpow(x, q), z),
                field.mul(field.qpow(y, q), y),
                field.mul(field.qpow(z, q), x),
            )
        )
        count += value == 0
    return count


def surface_equations_check(q: int, k: int) -> bool:
    """쌍동차 방정식의 해 집합과 {(L, U) : L ⊂ U, U^perp ⊂ U} 가 같은지 전수 비교."""
    field = field_of_order(q**k)
    points = field.projective_points(3)
    check_enumeration("P2 x P2 pairs", len(points) ** 2)

    def surface(x, y) -> bool:
        if field.dot(x, y) != 0:
            return False
        value = field.total(
            (
                field.mul(y[0], field.qpow(y[2], q)),
                field.mul(y[1], field.qpow(y[1], q)),
                field.mul(y[2], field.qpow(y[0], q)),
            )
        )
        return value == 0

    by_equations = {(x, y) for x in points for y in points if surface(x, y)}

    by_flags = set()
    for y in points:
        plane = field.null_space([y], 3)
        perp = field.null_space([_unitary_row(field, u, q) for u in plane], 3)
        if not field.contains(plane, perp):
            continue
        for x in points:
            if field.contains(plane, (x,)):
                by_flags.add((x, y))
    logger.debug("🔍 곡면 방정식 비교: 방정식 %d쌍, 깃발 %d쌍", len(by_equations), len(by_flags))
    return by_equations == by_flags


def drinfeld_oracle(q: int, k: int) -> int:
    """|P^2(F_{q^k})| 에서 F_q-유리 직선 위의 점을 포함배제로 뺀 값."""
    big = q**k
    lines = q * q + q + 1
    rational_points = q * q + q + 1
    # 각 직선은 big + 1 점, 유리점은 q + 1 개 직선에 중복 포함
    union = lines * (big + 1) - rational_points * q
    return big * big + big + 1 - union


def ree_point_count(k: int) -> int:
    """y^3 - y = x(x^3 - x), z^3 - z = x(y^3 - y) 의 F_{3^k} 아핀 해 + 무한원점 1."""
    if not 1 <= k <= 4:
        raise InputError(f"ree_point_count supports 1 <= k <= 4, got {k}")
    field = field_of_order(3**k)
    preimage = Counter()
    roots: dict[int, list[int]] = {}
    for y in field.elements:
        value = field.sub(field.frob(y, 1), y)
        preimage[value] += 1
        roots.setdefault(value, []).append(y)
    affine = 0
    for x in field.elements:
        rhs = field.mul(x, field.sub(field.frob(x, 1), x))
        for y in roots.get(rhs, ()):
            affine += preimage[field.mul(x, field.sub(field.frob(y, 1), y))]
    logger.info("✅ Ree 곡선 점 개수 (F_%d): 아핀 %d + 1", field.q, affine)
    return affine + 1
