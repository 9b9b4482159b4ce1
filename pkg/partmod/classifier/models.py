"""分类器领域模型"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from partmod.alternating import AltLabel
from partmod.partition import Partition


class Verdict(str, Enum):
    """张量积 V ⊗ W 的判定结果"""
    TRIVIAL = "trivial"                   # 有一个因子是一维的
    NOT_IRREDUCIBLE = "notirreducible"
    IRREDUCIBLE = "irreducible"
    BASIC_SPIN_OPEN = "open"              # 涉及 β_n，只能给出必要条件


class Subcase(str, Enum):
    """基本旋量情形的子情形"""
    SPLIT_NONSPLIT = "split_nonsplit"
    BOTH_SPLIT = "both_split"


@dataclass(frozen=True)
class HeightConstraint:
    """乘积可能形状对应的 h(ν) 上界（仅供参考，不参与判定）"""
    shape: str
    max_height: int

    def to_dict(self) -> dict:
        return {"shape": self.shape, "max_height": self.max_height}


@dataclass(frozen=True)
class BasicSpinReport:
    """
    D^λ ⊗ D^{β_n} 的必要条件报告

    passes 当且仅当非旋量因子的正规结点数不超过 bound；
    height_constraints 与 min_height 只作说明。
    """
    subcase: Subcase
    factor: Partition
    normal_node_count: int
    bound: int
    height_constraints: Tuple[HeightConstraint, ...] = field(default_factory=tuple)
    min_height: int = 1

    @property
    def passes(self) -> bool:
        return self.normal_node_count <= self.bound

    def to_dict(self) -> dict:
        return {
            "subcase": self.subcase.value,
            "factor": str(self.factor),
            "normal_node_count": self.normal_node_count,
            "bound": self.bound,
            "passes": self.passes,
            "height_constraints": [c.to_dict() for c in self.height_constraints],
            "min_height": self.min_height,
        }


@dataclass(frozen=True)
class Classification:
    """
    classify 的结果

    IRREDUCIBLE 必须且只能带一个乘积标签；每个结果至少有一个出处标签。
    """
    p: int
    n: int
    lhs: AltLabel
    rhs: AltLabel
    verdict: Verdict
    citations: Tuple[str, ...]
    product: Optional[AltLabel] = None
    mullineux_partner: Optional[AltLabel] = None
    report: Optional[BasicSpinReport] = None

    def __post_init__(self):
        if not self.citations:
            raise ValueError("分类结果必须至少带一个出处标签")
        if (self.verdict is Verdict.IRREDUCIBLE) != (self.product is not None):
            raise ValueError(f"只有 IRREDUCIBLE 带乘积标签: verdict={self.verdict}, product={self.product}")
        if self.product is not None and self.product.size != self.n:
            raise ValueError(f"乘积 {self.product} 的大小不是 {self.n}")

    def to_dict(self) -> dict:
        """JSON 行格式，键顺序固定"""
        row = {
            "p": self.p,
            "n": self.n,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "verdict": self.verdict.value,
        }
        if self.product is not None:
            row["product"] = str(self.product)
        if self.mullineux_partner is not None:
            row["mullineux_partner"] = str(self.mullineux_partner)
        row["citations"] = list(self.citations)
        if self.report is not None:
            row["report"] = self.report.to_dict()
        return row


@dataclass
class ScanSummary:
    """一次扫描中各判定结果的计数"""
    p: int
    n: int
    counts: dict = field(default_factory=lambda: {verdict.value: 0 for verdict in Verdict})

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def add(self, row: Classification) -> None:
        self.counts[row.verdict.value] += 1

    def to_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "total": self.total, "counts": dict(self.counts)}
