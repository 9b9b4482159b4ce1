"""交错群不可约标签模型"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from partmod.partition import Partition


class Variant(str, Enum):
    """
    标签变体

    PLUS/MINUS 只是形式记号：用奇置换共轭会交换两者，
    下游逻辑只依赖“相同/不同”。
    """
    WHOLE = "whole"
    PLUS = "plus"
    MINUS = "minus"

    @property
    def suffix(self) -> str:
        return {"whole": "", "plus": "+", "minus": "-"}[self.value]

    @property
    def is_split(self) -> bool:
        return self is not Variant.WHOLE

    def opposite(self) -> "Variant":
        if self is Variant.PLUS:
            return Variant.MINUS
        if self is Variant.MINUS:
            return Variant.PLUS
        return self


@dataclass(frozen=True, order=True)
class AltLabel:
    """A_n 的不可约标签：E^λ（WHOLE）或 E^λ_±"""
    partition: Partition
    variant: Variant = Variant.WHOLE

    @property
    def size(self) -> int:
        return self.partition.size

    def __str__(self) -> str:
        return f"{self.partition}{self.variant.suffix}"


@dataclass(frozen=True)
class DiagnosticClause:
    """诊断报告中的一条判据"""
    name: str
    passed: bool
    citation: str
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "citation": self.citation, "detail": self.detail}


@dataclass(frozen=True)
class DiagnosticReport:
    """逐条判据的通过/失败报告"""
    partition: Partition
    p: int
    clauses: Tuple[DiagnosticClause, ...]

    @property
    def passed(self) -> bool:
        return all(clause.passed for clause in self.clauses)

    def failed(self) -> Tuple[DiagnosticClause, ...]:
        return tuple(clause for clause in self.clauses if not clause.passed)

    def to_dict(self) -> dict:
        return {
            "partition": str(self.partition),
            "p": self.p,
            "passed": self.passed,
            "clauses": [clause.to_dict() for clause in self.clauses],
        }
