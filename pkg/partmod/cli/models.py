"""
命令行请求与输出模型

OutputRecord 的 elapsed 只写到诊断流，不进入数据流，
保证相同调用的输出逐字节一致。
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from partmod.classifier import Verdict
from partmod.utils.constants import CLASSIFIER_MIN_N, CLASSIFIER_PRIMES, SCHEMA_VERSION


class OutputRecord(BaseModel):
    """数据流中的一条记录（JSON 模式下占一行）"""
    model_config = ConfigDict(extra='forbid')

    schema_version: int = Field(default=SCHEMA_VERSION, description="记录格式版本")
    command: str = Field(..., description="子命令名")
    argv: List[str] = Field(default_factory=list, description="原始参数")
    payload: Dict[str, Any] = Field(default_factory=dict, description="子命令相关的数据")
    elapsed: Optional[float] = Field(default=None, exclude=True, description="耗时（秒），只写诊断流")

    def to_json_line(self) -> str:
        return self.model_dump_json()


class ClassifyRequest(BaseModel):
    """classify / scan 的参数"""
    model_config = ConfigDict(extra='forbid')

    p: int = Field(..., description="特征")
    n: int = Field(..., description="对称群次数")

    @field_validator('p')
    @classmethod
    def validate_p(cls, v):
        if v not in CLASSIFIER_PRIMES:
            raise ValueError(f'分类器只支持 p ∈ {CLASSIFIER_PRIMES}，收到 {v}')
        return v

    @field_validator('n')
    @classmethod
    def validate_n(cls, v):
        if v < CLASSIFIER_MIN_N:
            raise ValueError(f'分类器要求 n >= {CLASSIFIER_MIN_N}，收到 {v}')
        return v


class ScanRequest(ClassifyRequest):
    """scan 的参数"""
    only: Optional[Verdict] = Field(default=None, description="只输出该判定结果")
    jobs: int = Field(default=1, ge=1, description="线程数")
    max_n: int = Field(default=18, ge=CLASSIFIER_MIN_N, description="扫描允许的最大 n")


class CharacteristicRequest(BaseModel):
    """组合学命令（nodes / mullineux / oracle）的参数：任意 p >= 2"""
    model_config = ConfigDict(extra='forbid')

    p: int = Field(..., ge=2, description="特征")
    max_n: Optional[int] = Field(default=None, ge=1, description="扫描的最大 n")
