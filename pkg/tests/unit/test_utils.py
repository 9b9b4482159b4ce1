"""
Unit tests for Utils Module

Tests the error types, error templates and the plugin registry.
"""

import pytest

from partmod.utils.errors import (
    ERROR_TEMPLATES,
    IrregularInput,
    NotAPartition,
    OutOfRange,
    PartmodError,
    TooLarge,
    format_error,
    get_error_message,
)
from partmod.utils.plugin_registry import PluginRegistry


@pytest.mark.unit
class TestErrors:
    """测试错误类型"""

    def test_message_with_suggestion(self):
        """测试带修复建议的消息"""
        error = TooLarge("n = 14 exceeds the oracle size cap 11", "Raise the cap")
        assert error.message == "n = 14 exceeds the oracle size cap 11"
        assert error.suggestion == "Raise the cap"
        assert str(error) == "n = 14 exceeds the oracle size cap 11. Suggestion: Raise the cap"

    def test_message_without_suggestion(self):
        """测试没有建议时只输出消息"""
        assert str(NotAPartition("parts must be non-increasing")) == "parts must be non-increasing"

    def test_input_errors_are_value_errors(self):
        """测试输入类错误同时是 ValueError"""
        for error_type in (NotAPartition, IrregularInput, OutOfRange):
            assert issubclass(error_type, PartmodError)
            assert issubclass(error_type, ValueError)
        assert not issubclass(TooLarge, ValueError)

    def test_format_error(self):
        """测试一行诊断格式"""
        assert format_error(OutOfRange("n < 5")) == "Error: OutOfRange: n < 5"
        assert format_error(KeyError("p")) == "Error: Missing required field - 'p'"
        assert format_error(RuntimeError("boom")) == "Error: boom"


@pytest.mark.unit
class TestErrorTemplates:
    """测试错误消息模板"""

    def test_known_template(self):
        """测试模板替换"""
        message, suggestion = get_error_message("irregular_input", partition="2,2", p=2)
        assert message == "Partition 2,2 is not 2-regular"
        assert "2 or more times" in suggestion

    def test_unknown_template(self):
        """测试未知模板原样返回"""
        assert get_error_message("no_such_template") == ("no_such_template", None)

    def test_all_templates_have_message(self):
        """测试每个模板都有消息"""
        for template in ERROR_TEMPLATES.values():
            assert template["message"]


@pytest.mark.unit
class TestPluginRegistry:
    """测试插件注册表"""

    @pytest.fixture
    def registry(self):
        """创建注册表"""
        return PluginRegistry("TestSuite")

    def test_register_plugin(self, registry):
        """测试注册插件"""
        @registry.register("Lem 1", description="first")
        def first():
            return 1

        assert registry.is_registered("Lem 1")
        assert registry.get("Lem 1") is first
        assert registry.count() == 1

    def test_get_unknown(self, registry):
        """测试获取未注册插件返回默认值"""
        assert registry.get("missing") is None
        assert registry.get("missing", "fallback") == "fallback"

    def test_priority_order(self, registry):
        """测试按优先级排序，同级保持注册顺序"""
        @registry.register("low", priority=1)
        def low():
            pass

        @registry.register("high", priority=10)
        def high():
            pass

        @registry.register("low2", priority=1)
        def low2():
            pass

        assert registry.list_names() == ["high", "low", "low2"]

    def test_describe(self, registry):
        """测试登记说明"""
        @registry.register("Lem 2", priority=5, description="second")
        def second():
            pass

        assert registry.describe("Lem 2") == "second"
        assert registry.describe("missing") == ""

    def test_replace_plugin(self, registry):
        """测试重名注册会覆盖"""
        registry.register("dup")(lambda: 1)
        registry.register("dup")(lambda: 2)
        assert registry.get("dup")() == 2
        assert registry.count() == 1

    def test_non_callable(self, registry):
        """测试不可调用对象被拒绝"""
        with pytest.raises(TypeError):
            registry.register("bad")(42)
