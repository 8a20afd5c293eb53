# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

from dlvar.config import settings


class DLVarError(Exception):
    """dlvar 전체 예외의 기반 클래스."""

    exit_code = 1


class InputError(DLVarError):
    """사용자 입력 오류 (알 수 없는 케이스 키, 잘못된 단어/다항식 등)."""

    exit_code = 2


class ValidationError(InputError):
    """Cartan 행렬, 동종사상, 축약 단어, 심플렉틱 조건 위반."""


class ComputationError(DLVarError):
    """내부 불일치 (특이 연산자, 비정수 종수, 나눗셈 실패 등)."""


class EnumerationLimitError(ComputationError):
    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: {size} states exceed limit {limit} (DLVAR_MAX_ENUM)")
        self.what = what
        self.size = size
        self.limit = limit


def check_enumeration(what: str, size: int) -> None:
    if size > settings.max_enum:
        raise EnumerationLimitError(what, size, settings.max_enum)
