# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.
#
# This software is the confidential and proprietary information of TmaxSoft Co., Ltd. ("Confidential Information").
# You shall not disclose such Confidential Information and shall use it only in accordance with the terms of the license agreement you entered into with TmaxSoft Co., Ltd.

import logging
from pprint import pformat

from pydantic import field_validator
from pydantic_settings import BaseSettings

logger = logging.getLogger(__name__)

_VALID_FORMATS = {"json", "csv", "md"}


class Settings(BaseSettings):
    # 선택 환경변수 (DLVAR_ 접두사)
    max_enum: int = 10_000_000  # 열거 상한 (요청당 상태 수)
    log_level: str = "INFO"
    max_workers: int = 4  # 표 스윕 / 격자 스캔 병렬도
    default_format: str = "md"  # --format 미지정 시 출력 형식
    max_exp: int = 4  # enumerate_isogenies 지수 상한

    model_config = {
        "env_prefix": "DLVAR_",
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore",
    }

    @field_validator("log_level")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        level = str(v or "INFO").upper()
        valid = {"CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"}
        if level not in valid:
            raise ValueError(f"log_level must be one of {sorted(valid)}")
        return level

    @field_validator("default_format")
    @classmethod
    def normalize_format(cls, v: str) -> str:
        fmt = str(v or "md").strip().lower()
        if fmt not in _VALID_FORMATS:
            raise ValueError(f"default_format must be one of {sorted(_VALID_FORMATS)}")
        return fmt

    @field_validator("max_enum", "max_workers")
    @classmethod
    def positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be a positive integer")
        return v

    def summary(self) -> str:
        """설정 요약 문자열을 반환한다."""
        summary = {
            "max_enum": self.max_enum,
            "log_level": self.log_level,
            "max_workers": self.max_workers,
            "default_format": self.default_format,
            "max_exp": self.max_exp,
        }
        return pformat(summary, sort_dicts=False)


# 앱 시작 시 즉시 유효성 검사 (import 시 실행)
settings = Settings()
