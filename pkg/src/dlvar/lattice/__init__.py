# Copyright (c) 2026 TmaxSoft Co., Ltd.
# All rights reserved.
