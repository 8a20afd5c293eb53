# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
import sys
from typing import Optional, Sequence

from dlvar.cli.commands import main
from dlvar.config import settings

LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"
LOG_LEVEL = getattr(logging, settings.log_level.upper(), logging.INFO)

logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT, stream=sys.stderr, force=True)
logger = logging.getLogger(__name__)


def run(argv: Optional[Sequence[str]] = None) -> int:
    logger.debug("⚙️ 현재 설정값:\n%s", settings.summary())
    args = list(sys.argv[1:] if argv is None else argv)
    logger.info("🚀 dlvar 실행을 시작합니다: %s", " ".join(args) or "<no args>")
    return main(args)
