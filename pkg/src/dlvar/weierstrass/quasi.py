# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
from dataclasses import dataclass, field
from typing import Optional, Union

from dlvar.errors import ComputationError, InputError, ValidationError
from dlvar.weierstrass.coefficients import CoefField, FiniteCoefField
from dlvar.weierstrass.polys import TPoly

logger = logging.getLogger(__name__)

INFINITY = "inf"


@dataclass(frozen=True)
class ShortWeierstrass:
    """y^2 = x^3 + a4 x + a6, deg a_i <= d*i."""

    a4: TPoly
    a6: TPoly
    d: int = 2

    def __post_init__(self) -> None:
        if self.a4.field is not self.a6.field:
            raise ValidationError("a4 and a6 live over different coefficient fields")
        if self.d < 1:
            raise ValidationError(f"degree bound d must be positive, got {self.d}")
        if self.a4.degree > 4 * self.d or self.a6.degree > 6 * self.d:
            raise ValidationError(
                f"degree bound violated: deg a4={self.a4.degree} (<= {4 * self.d}), "
                f"deg a6={self.a6.degree} (<= {6 * self.d})"
            )

    @property
    def field(self) -> CoefField:
        return self.a4.field

    @classmethod
    def from_long_form(cls, a2: TPoly, a4: TPoly, a6: TPoly, d: int = 2) -> "ShortWeierstrass":
        """a1 = a3 = 0 인 긴 형식에서 x = x' + a2 로 a2 를 없앤다."""
        return cls(a4 + a2 * a2, a6 + a4 * a2, d)

    def format(self) -> str:
        return f"y^2=x^3+({self.a4.format()})*x+({self.a6.format()})"


@dataclass(frozen=True)
class QuasiDiscriminant:
    psi: TPoly
    valuations: dict[str, int] = field(default_factory=dict)
    places: list[tuple[str, int, int]] = field(default_factory=list)  # (자리, 차수, 값)
    complete: bool = True  # 모든 유한 자리를 알고 있는지

    @property
    def vanishing(self) -> bool:
        return self.psi.is_zero()

    def val(self, place: str) -> int:
        return self.valuations.get(place, 0)


def _psi(w: ShortWeierstrass) -> TPoly:
    """Psi = a4 (D a4)^2 + (D a6)^2"""
    da4, da6 = w.a4.derivative(), w.a6.derivative()
    return w.a4 * da4 * da4 + da6 * da6


def quasi_discriminant(w: ShortWeierstrass) -> QuasiDiscriminant:
    psi = _psi(w)
    fld = w.field
    if psi.is_zero():
        logger.warning("⚠️ 준판별식이 0 입니다: %s", w.format())
        return QuasiDiscriminant(psi=psi, complete=isinstance(fld, FiniteCoefField))
    valuations = {"0": psi.valuation_at(fld.zero), "1": psi.valuation_at(fld.one)}
    places: list[tuple[str, int, int]] = []
    complete = isinstance(fld, FiniteCoefField)
    if complete:
        for label, degree, mult in psi.factor_places():
            places.append((label, degree, mult))
            valuations[label] = mult
    else:
        places = [(p, 1, v) for p, v in valuations.items() if v]
    at_infinity = 12 * w.d - 4 - psi.degree
    valuations[INFINITY] = at_infinity
    places.append((INFINITY, 1, at_infinity))
    if complete:
        total = sum(degree * v for _, degree, v in places)
        if total != 12 * w.d - 4:
            raise ComputationError(f"quasi-discriminant divisor has degree {total}, expected {12 * w.d - 4}")
    logger.debug("🧮 준판별식: %s, 값 %s", psi.format(), valuations)
    return QuasiDiscriminant(psi=psi, valuations=valuations, places=places, complete=complete)


Coef = Union[TPoly, object]


def _as_tpoly(fld: CoefField, x: Optional[Coef]) -> TPoly:
    if x is None:
        return TPoly.zero(fld)
    if isinstance(x, TPoly):
        return x
    return TPoly.constant(fld, x)


def transform(w: ShortWeierstrass, u, s: Optional[Coef] = None, tau: Optional[Coef] = None) -> ShortWeierstrass:
    """x = u^2 x' + s^2, y = u^3 y' + s u^2 x' + tau 로 바꾼 짧은 형식."""
    fld = w.field
    if fld.is_zero(u):
        raise InputError("coordinate change needs an invertible u")
    s, tau = _as_tpoly(fld, s), _as_tpoly(fld, tau)
    s2 = s * s
    s4 = s2 * s2
    inv = fld.one / u
    a4 = (w.a4 + s4).scale(inv**4)
    a6 = (w.a6 + tau * tau + s2 * (s4 + w.a4)).scale(inv**6)
    return ShortWeierstrass(a4, a6, w.d)


@dataclass(frozen=True)
class NormalForm:
    """a4 = lambda2 t^2 + lambda6 t^6, a6 = mu (t^5 + t^7)"""

    lambda2: object
    lambda6: object
    mu: object
    reduced: Optional[ShortWeierstrass] = None
    s: Optional[TPoly] = None
    tau: Optional[TPoly] = None

    def weierstrass(self, fld: CoefField) -> ShortWeierstrass:
        a4 = TPoly.from_terms(fld, {2: self.lambda2, 6: self.lambda6})
        a6 = TPoly.from_terms(fld, {5: self.mu, 7: self.mu})
        return ShortWeierstrass(a4, a6, 2)


def read_normal_form(w: ShortWeierstrass) -> Optional[NormalForm]:
    """이미 정규형이면 (lambda2, lambda6, mu) 를 읽고, 아니면 None."""
    fld = w.field
    if w.d != 2:
        return None
    a4_support = {n for n, c in enumerate(w.a4.coeffs) if not fld.is_zero(c)}
    a6_support = {n for n, c in enumerate(w.a6.coeffs) if not fld.is_zero(c)}
    if not a4_support <= {2, 6} or a6_support != {5, 7}:
        return None
    if not fld.eq(w.a6.coeff(5), w.a6.coeff(7)):
        return None
    return NormalForm(w.a4.coeff(2), w.a4.coeff(6), w.a6.coeff(5), reduced=w)


def _check_hypotheses(q: QuasiDiscriminant) -> None:
    if q.vanishing:
        raise ValidationError("quasi-discriminant vanishes")
    for place, bound in (("0", 8), ("1", 4), (INFINITY, 8)):
        if q.val(place) < bound:
            raise ValidationError(f"val_{place}(Psi) = {q.val(place)} < {bound}")


def normal_form_reduce(w: ShortWeierstrass) -> NormalForm:
    """u = 1 좌표 변환으로 4 | i 인 a4 계수와 2 | j 인 a6 계수를 지운다."""
    fld = w.field
    if not fld.perfect:
        raise InputError(f"normal form reduction needs a perfect field, got {fld.name}")
    if w.d != 2:
        raise InputError(f"normal form reduction is defined for d = 2, got d = {w.d}")
    _check_hypotheses(quasi_discriminant(w))

    s = TPoly.from_terms(fld, {i // 4: fld.sqrt(fld.sqrt(w.a4.coeff(i))) for i in (0, 4, 8)})
    step = transform(w, fld.one, s, None)
    tau = TPoly.from_terms(fld, {j // 2: fld.sqrt(step.a6.coeff(j)) for j in range(0, 13, 2)})
    reduced = transform(step, fld.one, None, tau)

    form = read_normal_form(reduced)
    if form is None:
        raise ComputationError(f"reduction did not reach the normal form: {reduced.format()}")
    logger.info(
        "✅ 정규형: lambda2=%s, lambda6=%s, mu=%s",
        fld.format(form.lambda2), fld.format(form.lambda6), fld.format(form.mu),
    )
    return NormalForm(form.lambda2, form.lambda6, form.mu, reduced=reduced, s=s, tau=tau)
