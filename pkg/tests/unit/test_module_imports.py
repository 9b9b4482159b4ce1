"""
模块导入验证测试

确保各子包的公开接口可以被导入，自检套件全部注册，
命令行解析器可以构建。
"""

import importlib

import pytest


PACKAGES = [
    "partmod.partition",
    "partmod.branching",
    "partmod.mullineux",
    "partmod.alternating",
    "partmod.classifier",
    "partmod.oracle",
    "partmod.cli",
    "partmod.utils",
]


@pytest.mark.unit
class TestModuleImports:
    """测试所有关键模块可以正确导入"""

    @pytest.mark.parametrize("name", PACKAGES)
    def test_public_names_exist(self, name):
        """测试 __all__ 中的名字都存在"""
        module = importlib.import_module(name)
        for public in module.__all__:
            assert hasattr(module, public), f"{name}.{public}"

    def test_selftest_suites_registered(self):
        """测试自检套件全部注册"""
        from partmod.cli.selftest import suite_registry
        assert suite_registry.count() == 10
        assert suite_registry.list_names()[0] == "Lem 2.8"
        assert suite_registry.list_names()[-1] == "Thm 1 scan"

    def test_build_parser(self):
        """测试命令行解析器可以构建"""
        from partmod.cli.app import build_parser
        args = build_parser().parse_args(["classify", "--p", "2", "--n", "9", "--lhs", "5,3,1+", "--rhs", "8,1"])
        assert args.command == "classify"
        assert args.format == "pretty"
