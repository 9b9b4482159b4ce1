"""
自检套件注册表

套件用装饰器登记在出处标签下，运行时按优先级取出。

    @suite_registry.register("Lem 2.8", priority=90, description="conormal excess")
    def conormal_excess(settings, result, cap):
        ...
"""

from typing import Callable, Dict, List, NamedTuple, Optional, TypeVar

from loguru import logger

T = TypeVar('T')


class _Entry(NamedTuple):
    plugin: Callable
    priority: int
    description: str
    order: int


class PluginRegistry:
    """标签 -> 可调用对象；优先级高的排前，同级保持登记顺序"""

    def __init__(self, registry_name: str):
        self._name = registry_name
        self._entries: Dict[str, _Entry] = {}

    def register(self, name: str, *, priority: int = 0, description: str = "") -> Callable[[T], T]:
        """
        登记装饰器，重名时覆盖并记录警告

        Raises:
            TypeError: 被装饰对象不可调用
        """
        def decorator(plugin: T) -> T:
            if not callable(plugin):
                raise TypeError(f"Plugin {name} must be callable")
            previous = self._entries.get(name)
            if previous is not None:
                logger.warning(f"[{self._name}] 标签 '{name}' 重复登记: "
                               f"{previous.plugin.__name__} -> {plugin.__name__}")
            self._entries[name] = _Entry(plugin, priority, description, len(self._entries))
            logger.debug(f"[{self._name}] 登记 '{name}': {plugin.__name__} (priority={priority})")
            return plugin

        return decorator

    def get(self, name: str, default: Optional[Callable] = None) -> Optional[Callable]:
        entry = self._entries.get(name)
        return entry.plugin if entry is not None else default

    def describe(self, name: str) -> str:
        """登记时的说明，未登记返回空串"""
        entry = self._entries.get(name)
        return entry.description if entry is not None else ""

    def list_names(self) -> List[str]:
        return sorted(self._entries, key=lambda n: (-self._entries[n].priority, self._entries[n].order))

    def is_registered(self, name: str) -> bool:
        return name in self._entries

    def count(self) -> int:
        return len(self._entries)
