# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
from collections import Counter

import numpy as np

from dlvar.errors import ComputationError, InputError
from dlvar.geometry.fields import Vec, field_of_order
from dlvar.geometry.flags import (
    ISOTROPIC_C2,
    FlagConfig,
    flag_weyl_group,
    isotropic_flags_c2,
    relative_position,
    symplectic_form,
)
from dlvar.suzuki.isogeny import minor_isogeny

logger = logging.getLogger(__name__)


def _nth(candidates, choice: int, what: str) -> Vec:
    for i, v in enumerate(candidates):
        if i == choice:
            return v
    raise ComputationError(f"symplectic completion failed: no {what} (choice={choice})")


def symplectic_completion(f: FlagConfig, choice: int = 0) -> tuple[Vec, Vec, Vec, Vec]:
    """(L ⊂ U) 를 Gram 행렬이 J 인 기저 v1..v4 로 완성한다. choice 번째 후보를 쓴다."""
    if f.kind != ISOTROPIC_C2:
        raise InputError("symplectic completion needs an isotropic C2 flag")
    fld = f.field

    def form(x, y) -> int:
        return symplectic_form(fld, x, y)

    v1 = f.line[0]
    v2 = _nth((u for u in f.plane if fld.rank([v1, u]) == 2), 0, "v2 in U")
    v4 = _nth((x for x in fld.vectors(4) if form(v1, x) == 1 and form(v2, x) == 0), choice, "v4")
    v3 = _nth(
        (x for x in fld.vectors(4) if form(v1, x) == 0 and form(v2, x) == 1 and form(v4, x) == 0),
        choice,
        "v3",
    )
    return v1, v2, v3, v4


def phi_on_flags(f: FlagConfig, choice: int = 0) -> FlagConfig:
    fld = f.field
    if fld.p != 2:
        raise InputError("phi on flags lives in characteristic 2")
    basis = symplectic_completion(f, choice)
    g = fld.gf(np.array(basis).T)
    image = minor_isogeny(g).view(np.ndarray)
    columns = image.T.tolist()
    line = fld.rref(columns[:1])
    plane = fld.rref(columns[:2])
    return FlagConfig(ISOTROPIC_C2, fld, line, plane)


def c2twist_strata(k: int) -> dict[str, int]:
    """F_{2^k} 위의 모든 등방 깃발을 inv(F, phi(F)) 로 분류한다."""
    if not 1 <= k <= 2:
        raise InputError(f"c2twist_strata supports 1 <= k <= 2, got {k}")
    fld = field_of_order(2**k)
    flags = isotropic_flags_c2(fld)
    counts = Counter(relative_position(f, phi_on_flags(f)).word_text for f in flags)
    histogram = {w.word_text: counts.get(w.word_text, 0) for w in flag_weyl_group(ISOTROPIC_C2)}
    logger.info("✅ 2C2 층 분해 완료 (F_%d): 깃발 %d개, e=%d", fld.q, len(flags), histogram["e"])
    return histogram
