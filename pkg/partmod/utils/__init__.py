"""工具模块 - 错误类型、常量与插件注册表"""

from partmod.utils.errors import PartmodError, format_error, get_error_message
from partmod.utils.plugin_registry import PluginRegistry

__all__ = [
    'PartmodError',
    'format_error',
    'get_error_message',
    'PluginRegistry',
]
