"""
预言机规模限制

环境变量 PARTMOD_ORACLE_CAP 优先于配置中的 oracle.size_cap。
"""

import os
from typing import Optional

from config.computation import OracleSettings
from partmod.utils.constants import OracleConstants
from partmod.utils.errors import OutOfRange, TooLarge, get_error_message

_settings = OracleSettings()


def configure(settings: OracleSettings) -> None:
    """由命令行入口根据配置文件设置"""
    global _settings
    _settings = settings


def size_cap(explicit: Optional[int] = None) -> int:
    """
    当前生效的 n 上限：显式参数 > 环境变量 > 配置

    Raises:
        OutOfRange: 环境变量不是正整数
    """
    if explicit is not None:
        return explicit
    from_env = os.environ.get(OracleConstants.SIZE_CAP_ENV)
    if from_env:
        try:
            value = int(from_env)
        except ValueError:
            value = 0
        if value < 1:
            message, suggestion = get_error_message(
                "oracle_cap_env", env=OracleConstants.SIZE_CAP_ENV, value=from_env
            )
            raise OutOfRange(message, suggestion)
        return value
    return _settings.size_cap


def max_gram_cells() -> int:
    return _settings.max_gram_cells


def check_size(n: int, cap: Optional[int] = None) -> None:
    """
    Raises:
        TooLarge: n 超过上限
    """
    limit = size_cap(cap)
    if n > limit:
        message, suggestion = get_error_message("oracle_cap", n=n, cap=limit)
        raise TooLarge(message, suggestion)
