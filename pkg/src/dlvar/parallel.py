# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, Sequence, TypeVar

from dlvar.config import settings

logger = logging.getLogger(__name__)

T = TypeVar("T")


def run_parallel(items: Sequence, func: Callable[..., T], what: str) -> list[T]:
    """입력 순서를 유지한 채 스레드 풀에서 실행한다. 실패는 모두 기록 후 첫 실패를 다시 던진다."""
    if not items:
        return []
    max_workers = max(1, settings.max_workers)
    logger.info("🚦 %s 병렬 실행: %d개 대상, 최대 동시성 %d", what, len(items), max_workers)
    results: dict[int, T] = {}
    failures: list[tuple[int, Exception]] = []
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        future_map = {executor.submit(func, item): idx for idx, item in enumerate(items)}
        for future in as_completed(future_map):
            idx = future_map[future]
            try:
                results[idx] = future.result()
            except Exception as exc:
                logger.error("❌ %s 실패: %s (%s)", what, items[idx], exc)
                failures.append((idx, exc))
    if failures:
        raise min(failures, key=lambda f: f[0])[1]
    return [results[idx] for idx in range(len(items))]
