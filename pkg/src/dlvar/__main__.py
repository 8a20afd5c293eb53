# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.

import sys

from dlvar.app import run


if __name__ == "__main__":
    sys.exit(run())
