# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Optional

import galois

from dlvar.config import settings
from dlvar.errors import ComputationError, InputError
from dlvar.weierstrass.coefficients import CoefField, FiniteCoefField
from dlvar.weierstrass.polys import TPoly
from dlvar.weierstrass.quasi import INFINITY, NormalForm, ShortWeierstrass, normal_form_reduce, read_normal_form

logger = logging.getLogger(__name__)


class RDPType(str, Enum):
    REGULAR = "Regular"
    A1 = "A1"
    C3 = "C3"
    C5 = "C5"
    C7 = "C7"
    D4 = "D4"
    D8 = "D8"
    E8 = "E8"
    G2 = "G2"
    UNDECIDABLE = "Undecidable"


def _poly_roots_over_polynomials(coeffs: list[galois.Poly]) -> Optional[int]:
    """monic B(S) (오름차순 계수, F[u] 원소) 의 F[u] 안의 서로 다른 근의 개수."""
    gf = coeffs[0].field
    zero = galois.Poly.Zero(gf)
    count = 0
    if coeffs[0] == zero:
        count += 1
        while coeffs[0] == zero:
            coeffs = coeffs[1:]
    if len(coeffs) == 1:
        return count

    constant = coeffs[0]
    lead = constant.coeffs[0]
    monic = constant // galois.Poly(gf([int(lead)]))
    if monic.degree > 0:
        factors, multiplicities = monic.factors()
    else:
        factors, multiplicities = [], []
    units = [gf(c) for c in range(1, gf.order)]
    candidates = len(units)
    for m in multiplicities:
        candidates *= int(m) + 1
    if candidates > settings.max_enum:
        logger.warning("⚠️ 근 후보 %d개가 상한 %d 를 넘어 판정 불가", candidates, settings.max_enum)
        return None

    for exponents in itertools.product(*(range(int(m) + 1) for m in multiplicities)):
        divisor = galois.Poly.One(gf)
        for f, e in zip(factors, exponents):
            divisor = divisor * f**e
        for c in units:
            s = divisor * galois.Poly(gf([int(c)]))
            value = zero
            for b in reversed(coeffs):
                value = value * s + b
            if value == zero:
                count += 1
    return count


def count_roots(p: TPoly) -> Optional[int]:
    """계수체 안의 서로 다른 근의 개수. F(u) 에서 후보가 너무 많으면 None."""
    fld = p.field
    if p.degree < 1:
        raise ComputationError(f"root count of a constant polynomial {p.format('T')}")
    if isinstance(fld, FiniteCoefField):
        return sum(1 for x in fld.elements() if fld.is_zero(p.evaluate(x)))

    monic = p.scale(fld.one / p.coeffs[-1])
    n = monic.degree
    denominator = reduce(galois.lcm, [c.den for c in monic.coeffs])
    scale = fld.from_polys(denominator, galois.Poly.One(fld.gf))
    # T = S / D 로 바꾸면 계수가 다항식이 된다
    rescaled = [monic.coeff(k) * scale ** (n - k) for k in range(n + 1)]
    if any(c.den.degree != 0 for c in rescaled):
        raise ComputationError(f"rescaling left a denominator in {p.format('T')}")
    return _poly_roots_over_polynomials([c.num for c in rescaled])


def _cubic_type(fld: CoefField, omega_sq, mu) -> RDPType:
    cubic = TPoly.make(fld, [mu, omega_sq, fld.zero, fld.one])
    roots = count_roots(cubic)
    if roots is None:
        return RDPType.UNDECIDABLE
    types = {0: RDPType.G2, 1: RDPType.C3, 3: RDPType.D4}
    if roots not in types:
        raise ComputationError(f"{cubic.format('T')} has {roots} roots; separable cubic expected")
    return types[roots]


def rdp_at_one(lambda2, lambda6, mu, fld: CoefField) -> RDPType:
    """t = 1 의 특이점: P(T) = T^3 + (lambda2+lambda6) T + mu 의 분해 모양으로 정한다."""
    if fld.is_zero(mu):
        raise InputError("mu must be nonzero")
    omega_sq = lambda2 + lambda6
    if not fld.is_square(omega_sq):
        return RDPType.REGULAR
    omega = fld.sqrt(omega_sq)
    if not fld.is_square(mu + omega**3):
        return RDPType.A1
    return _cubic_type(fld, omega_sq, mu)


def rdp_at_zero(lambda2, lambda6, mu, fld: CoefField, swap: bool = False) -> RDPType:
    """t = 0 의 특이점. swap 이면 lambda2, lambda6 을 바꿔 t = inf 를 본다."""
    if fld.is_zero(mu):
        raise InputError("mu must be nonzero")
    if swap:
        lambda2, lambda6 = lambda6, lambda2
    if fld.is_zero(lambda2):
        return RDPType.E8
    if not fld.is_square(lambda2):
        return RDPType.C3
    r = fld.sqrt(lambda2)
    if not fld.is_square(mu / (lambda2**2 * r)):
        return RDPType.C5
    # (lambda6 lambda2^-3 + mu lambda2^-7/2) / (mu lambda2^-5/2)^2, u 가중치 0
    c = lambda6 * lambda2**2 / mu**2 + lambda2 * r / mu
    roots = count_roots(TPoly.make(fld, [c, fld.one, fld.one]))
    if roots is None:
        return RDPType.UNDECIDABLE
    return RDPType.C7 if roots == 0 else RDPType.D8


def classify_normal_form(nf: NormalForm, fld: CoefField) -> dict[str, RDPType]:
    return {
        "0": rdp_at_zero(nf.lambda2, nf.lambda6, nf.mu, fld),
        "1": rdp_at_one(nf.lambda2, nf.lambda6, nf.mu, fld),
        INFINITY: rdp_at_zero(nf.lambda2, nf.lambda6, nf.mu, fld, swap=True),
    }


def classify_k3_family(alpha, fld: CoefField) -> tuple[RDPType, RDPType, RDPType]:
    """y^2 = x^3 + alpha^3 (t^5 + t^7) 의 (0, 1, inf) 특이점."""
    if isinstance(alpha, int):
        alpha = fld.constant(alpha)
    if fld.is_zero(alpha):
        raise InputError("alpha must be nonzero")
    nf = NormalForm(fld.zero, fld.zero, alpha**3)
    types = classify_normal_form(nf, fld)
    logger.debug("🔍 K3 족 alpha=%s over %s: %s", fld.format(alpha), fld.name, types)
    return types["0"], types["1"], types[INFINITY]


@dataclass(frozen=True)
class Classification:
    normal_form: NormalForm
    types: dict[str, RDPType]
    reduced: bool  # 정규형으로 바꿨는지


def classify_weierstrass(w: ShortWeierstrass) -> Classification:
    fld = w.field
    nf = read_normal_form(w)
    reduced = False
    if nf is None:
        if not fld.perfect:
            raise InputError(f"over {fld.name} the equation must already be in normal form a4=l2*t^2+l6*t^6, a6=mu*(t^5+t^7)")
        nf = normal_form_reduce(w)
        reduced = True
    types = classify_normal_form(nf, fld)
    logger.info("✅ 특이점 분류 (%s): %s", fld.name, {k: v.value for k, v in types.items()})
    return Classification(normal_form=nf, types=types, reduced=reduced)
