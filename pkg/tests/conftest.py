# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import os
import sys

import pytest

SRC_PATH = os.path.join(os.path.dirname(os.path.dirname(__file__)), "src")
if SRC_PATH not in sys.path:
    sys.path.insert(0, SRC_PATH)


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "slow: long-running searches (deselect with -m 'not slow')")
