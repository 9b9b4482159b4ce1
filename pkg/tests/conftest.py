"""
Pytest configuration and shared fixtures

This file contains common fixtures and configuration for all tests.
"""

import sys
from pathlib import Path

import pytest
import yaml

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from config.computation import OracleSettings
from partmod import oracle
from partmod.partition import Partition


# ==================== Fixtures for Partitions ====================

@pytest.fixture
def P():
    """简写：P(5, 3, 1) -> Partition((5, 3, 1))"""
    return lambda *parts: Partition(tuple(parts))


# ==================== Fixtures for Configuration ====================

@pytest.fixture
def settings_data(tmp_path):
    """测试用配置：关闭文件日志，缩小自检范围"""
    return {
        "logging": {
            "level": "WARNING",
            "file": str(tmp_path / "logs" / "partmod.log"),
            "console_output": True,
            "file_output": False,
        },
        "oracle": {"size_cap": "${PARTMOD_ORACLE_CAP:11}", "max_gram_cells": 20000000},
        "scan": {"max_n": 18, "jobs": 1, "default_format": "json"},
        "selftest": {
            "signature_max_n": 8,
            "crystal_max_n": 7,
            "mullineux_max_n": 8,
            "identity_max_n": 8,
            "compatibility_max_n": 7,
            "fixed_family_max_n": 12,
            "splitting_max_n": 12,
            "two_row_max_n": 7,
            "scan_max_n": 7,
            "suites": [],
        },
    }


@pytest.fixture
def settings_file(tmp_path, settings_data):
    """写入临时配置文件"""
    path = tmp_path / "settings.yaml"
    path.write_text(yaml.safe_dump(settings_data, allow_unicode=True), encoding="utf-8")
    return path


# ==================== Fixtures for Global State Cleanup ====================

@pytest.fixture(autouse=True)
def reset_oracle_limits(monkeypatch):
    """每个测试使用默认的预言机上限，不受环境变量影响"""
    monkeypatch.delenv("PARTMOD_ORACLE_CAP", raising=False)
    oracle.configure(OracleSettings())
    yield
    oracle.configure(OracleSettings())


# ==================== Pytest Hooks ====================

def pytest_collection_modifyitems(config, items):
    """Modify test collection to add default markers"""
    for item in items:
        # Mark tests in specific directories
        if "unit" in str(item.fspath):
            item.add_marker(pytest.mark.unit)
        elif "integration" in str(item.fspath):
            item.add_marker(pytest.mark.integration)
