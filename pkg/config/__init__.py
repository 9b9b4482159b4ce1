"""
配置模块

统一加载和管理所有配置项
"""

import os
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv

from config.logger import LoggerSettings, setup
from config.computation import OracleSettings, ScanSettings, SelftestSettings, validate_all

DEFAULT_CONFIG_PATH = "config/settings.yaml"


def _expand_env_vars(value):
    """
    递归展开配置值中的环境变量

    支持格式：${VAR_NAME} 或 ${VAR_NAME:default_value}
    """
    if isinstance(value, str):
        pattern = r'\$\{([^:}]+)(?::([^}]*))?\}'

        def replace_env_var(match):
            var_name = match.group(1)
            default_value = match.group(2) if match.group(2) is not None else ''
            return os.environ.get(var_name, default_value)

        return re.sub(pattern, replace_env_var, value)

    elif isinstance(value, dict):
        return {k: _expand_env_vars(v) for k, v in value.items()}

    elif isinstance(value, list):
        return [_expand_env_vars(item) for item in value]

    return value


@dataclass
class Config:
    """应用配置"""

    logger: LoggerSettings = field(default_factory=LoggerSettings)
    oracle: OracleSettings = field(default_factory=OracleSettings)
    scan: ScanSettings = field(default_factory=ScanSettings)
    selftest: SelftestSettings = field(default_factory=SelftestSettings)

    @classmethod
    def from_dict(cls, data: dict) -> "Config":
        data = _expand_env_vars(data or {})
        return cls(
            logger=LoggerSettings.from_dict(data.get("logging", {}) or {}),
            oracle=OracleSettings.from_dict(data.get("oracle", {}) or {}),
            scan=ScanSettings.from_dict(data.get("scan", {}) or {}),
            selftest=SelftestSettings.from_dict(data.get("selftest", {}) or {}),
        )

    @classmethod
    def load(cls, config_path: str = DEFAULT_CONFIG_PATH) -> "Config":
        """
        加载配置文件

        先读取 .env，再展开 YAML 中的 ${VAR:default}。

        Args:
            config_path: 配置文件路径

        Returns:
            Config: 配置对象
        """
        load_dotenv()
        config_file = Path(config_path)
        if not config_file.exists():
            raise FileNotFoundError(f"配置文件不存在: {config_path}")

        with open(config_file, "r", encoding="utf-8") as f:
            config_data = yaml.safe_load(f) or {}

        return cls.from_dict(config_data)

    def validate(self) -> tuple[bool, list[str]]:
        """
        验证配置是否有效

        Returns:
            (is_valid, error_messages)
        """
        return validate_all(self.oracle, self.scan, self.selftest)

    def assert_valid(self) -> None:
        """
        断言配置有效，无效时抛出异常

        Raises:
            ValueError: 配置无效时
        """
        is_valid, errors = self.validate()
        if not is_valid:
            raise ValueError(
                "Config 验证失败:\n" +
                "\n".join(f"  - {e}" for e in errors)
            )


# 全局配置实例
_config: Optional[Config] = None


def get(config_path: str = DEFAULT_CONFIG_PATH) -> Config:
    """
    获取配置实例

    首次调用时加载配置并设置日志。
    """
    global _config
    if _config is None:
        _config = Config.load(config_path)
        setup(_config.logger)
    return _config


def reset() -> None:
    """清除缓存的配置实例"""
    global _config
    _config = None
