#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
partmod - 启动脚本

等价于 `python -m partmod`，在仓库根目录直接运行时使用。
"""

import os
import sys

# 添加项目路径
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from partmod.cli.app import main


if __name__ == "__main__":
    sys.exit(main())
