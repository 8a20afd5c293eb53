# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from sympy import factorint

from dlvar.errors import InputError
from dlvar.roots.cartan import CartanMatrix
from dlvar.roots.datum import DLDatum
from dlvar.roots.system import RootSystem, build_root_system

logger = logging.getLogger(__name__)

FROBENIUS = "frobenius"
TWISTED = "twisted"
SUZUKI_REE = "suzuki-ree"
WEIL = "weil"


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    cartan: str
    family: str
    perm: tuple[int, ...]
    scale: tuple[int, ...]  # exps = scale * s + offset
    offset: tuple[int, ...]
    prime: Optional[int] = None  # Suzuki-Ree 고정 소수

    @property
    def parameter_name(self) -> str:
        return "n" if self.family == SUZUKI_REE else "q"


def _entry(key, cartan, family, perm, scale=None, offset=None, prime=None) -> CatalogEntry:
    n = len(perm)
    return CatalogEntry(
        key=key,
        cartan=cartan,
        family=family,
        perm=tuple(perm),
        scale=tuple(scale or (1,) * n),
        offset=tuple(offset or (0,) * n),
        prime=prime,
    )


CATALOG: dict[str, CatalogEntry] = {
    e.key: e
    for e in (
        _entry("A1", "A1", FROBENIUS, (1,)),
        _entry("A2", "A2", FROBENIUS, (1, 2)),
        _entry("A3", "A3", FROBENIUS, (1, 2, 3)),
        _entry("A4", "A4", FROBENIUS, (1, 2, 3, 4)),
        _entry("C2", "C2", FROBENIUS, (1, 2)),
        _entry("G2", "G2", FROBENIUS, (1, 2)),
        _entry("D4", "D4", FROBENIUS, (1, 2, 3, 4)),
        _entry("F4", "F4", FROBENIUS, (1, 2, 3, 4)),
        _entry("2A2", "A2", TWISTED, (2, 1)),
        _entry("2A3", "A3", TWISTED, (3, 2, 1)),
        _entry("2A4", "A4", TWISTED, (4, 3, 2, 1)),
        _entry("3D4", "D4", TWISTED, (3, 2, 4, 1)),
        _entry("2C2", "C2", SUZUKI_REE, (2, 1), offset=(1, 0), prime=2),
        _entry("2G2", "G2", SUZUKI_REE, (2, 1), offset=(1, 0), prime=3),
        _entry("2F4", "F4", SUZUKI_REE, (4, 3, 2, 1), offset=(0, 0, 1, 1), prime=2),
        _entry("weil-A1xA1", "A1^2", WEIL, (2, 1)),
        _entry("weil-A1^3", "A1^3", WEIL, (2, 3, 1)),
        _entry("sr-A1xA1", "A1^2", WEIL, (2, 1), scale=(1, 0)),
    )
}


def catalog_keys() -> list[str]:
    return list(CATALOG)


def catalog_entry(key: str) -> CatalogEntry:
    try:
        return CATALOG[key]
    except KeyError:
        raise InputError(f"unknown case key {key!r}; known: {', '.join(CATALOG)}") from None


@lru_cache(maxsize=None)
def catalog_root_system(cartan: str) -> RootSystem:
    return build_root_system(CartanMatrix.catalog(cartan))


def split_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise InputError(f"q must be a prime power > 1, got {q}")
    factors = factorint(q)
    if len(factors) != 1:
        raise InputError(f"q must be a prime power, got {q}")
    ((p, s),) = factors.items()
    return int(p), int(s)


def catalog_datum(key: str, param: int) -> DLDatum:
    """케이스 키와 파라미터 (q 또는 n) 로 DL 데이터를 만든다."""
    entry = catalog_entry(key)
    rs = catalog_root_system(entry.cartan)
    if entry.family == SUZUKI_REE:
        if param < 0:
            raise InputError(f"{key}: parameter n must be non-negative, got {param}")
        p, s = entry.prime, int(param)
        label = p ** s
    else:
        p, s = split_prime_power(int(param))
        label = int(param)
    exps = tuple(a * s + b for a, b in zip(entry.scale, entry.offset))
    datum = DLDatum.create(rs, p, entry.perm, exps, key=key, label_value=label)
    logger.debug("🧱 카탈로그 데이터: %s", datum.describe())
    return datum


def catalog_key_of(datum: DLDatum) -> str:
    """같은 (Cartan, d, 지수) 를 주는 카탈로그 키. 없으면 빈 문자열."""
    for entry in CATALOG.values():
        if entry.perm != datum.perm or catalog_root_system(entry.cartan).cartan.entries != datum.rs.cartan.entries:
            continue
        if entry.prime is not None and entry.prime != datum.p:
            continue
        steps = {(e - b) // a for e, a, b in zip(datum.exps, entry.scale, entry.offset) if a}
        if len(steps) != 1:
            continue
        s = steps.pop()
        lowest = 0 if entry.family == SUZUKI_REE else 1
        if s >= lowest and tuple(a * s + b for a, b in zip(entry.scale, entry.offset)) == datum.exps:
            return entry.key
    return ""
