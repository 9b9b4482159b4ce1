"""
Integration test configuration
"""

import json
from typing import List, Tuple

import pytest

from partmod.cli.app import main


@pytest.fixture
def run_cli(capsys, settings_file):
    """
    以临时配置运行命令行

    Returns:
        (exit_code, stdout, stderr)
    """
    def run(*argv: str) -> Tuple[int, str, str]:
        code = main(["--config", str(settings_file), *argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return run


@pytest.fixture
def json_payloads():
    """把 JSON 行输出解析为 payload 列表"""
    def parse(out: str) -> List[dict]:
        return [json.loads(line)["payload"] for line in out.splitlines() if line.strip()]
    return parse
