"""
日志配置模块

- 彩色格式输出到 stderr（stdout 只留给数据输出）
- JSON 格式输出到文件
- 错误日志分离
"""

import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from loguru import logger

LEVEL_COLORS = {
    "TRACE": "<dim>",
    "DEBUG": "<cyan>",
    "INFO": "<green>",
    "SUCCESS": "<green><bold>",
    "WARNING": "<yellow>",
    "ERROR": "<red>",
    "CRITICAL": "<RED><bold>",
}


@dataclass
class LoggerSettings:
    """日志设置"""

    level: str = "INFO"
    file: str = "logs/partmod.log"
    rotation: str = "50 MB"
    retention: str = "14 days"
    console_output: bool = True
    file_output: bool = True

    @classmethod
    def from_dict(cls, data: dict) -> "LoggerSettings":
        """从字典创建配置"""
        return cls(
            level=str(data.get("level", "INFO")).upper(),
            file=data.get("file", "logs/partmod.log"),
            rotation=data.get("rotation", "50 MB"),
            retention=data.get("retention", "14 days"),
            console_output=bool(data.get("console_output", True)),
            file_output=bool(data.get("file_output", True)),
        )

    def with_level(self, level: Optional[str]) -> "LoggerSettings":
        """返回修改了控制台级别的副本（命令行 --quiet / --verbose）"""
        return replace(self, level=level.upper()) if level else self


class LoggerManager:
    """日志管理器"""

    def __init__(self, settings: LoggerSettings):
        self.settings = settings
        self.log_file = Path(settings.file)

    @staticmethod
    def _console_format(record: dict) -> str:
        """控制台输出格式"""
        level = record["level"].name
        color = LEVEL_COLORS.get(level, "")
        reset = "</>" if color else ""
        return (
            "<dim>{time:HH:mm:ss}</dim> | "
            f"{color}{level:8}{reset} | "
            "<cyan>{name}</cyan>:<dim>{function}:{line}</dim> | "
            "{message}\n{exception}"
        )

    def setup(self):
        """配置日志系统"""
        logger.remove()

        if self.settings.console_output:
            logger.add(
                sys.stderr,
                format=self._console_format,
                level=self.settings.level,
                colorize=True,
                catch=True,
            )

        if not self.settings.file_output:
            return

        self.log_file.parent.mkdir(parents=True, exist_ok=True)

        # 文件输出 - serialize=True 写 JSON 行
        logger.add(
            str(self.log_file),
            format="{message}",
            level="DEBUG",
            rotation=self.settings.rotation,
            retention=self.settings.retention,
            serialize=True,
            encoding="utf-8",
            catch=True,
        )

        # 错误日志单独文件
        error_file = str(self.log_file).replace(".log", "_error.log")
        logger.add(
            error_file,
            format="{message}",
            level="ERROR",
            rotation=self.settings.rotation,
            retention=self.settings.retention,
            serialize=True,
            encoding="utf-8",
            catch=True,
        )


def setup(settings: Optional[LoggerSettings] = None) -> LoggerManager:
    """
    设置日志系统

    Args:
        settings: 日志设置，默认使用默认设置

    Returns:
        LoggerManager: 日志管理器实例
    """
    if settings is None:
        settings = LoggerSettings()

    manager = LoggerManager(settings)
    manager.setup()
    return manager
