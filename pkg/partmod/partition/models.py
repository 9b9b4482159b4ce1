"""分拆领域模型

- Partition: 分拆（弱递减正整数序列）
- Node: Young 图中的结点 (row, col)，1 起始
- ContentVector: 按剩余类统计的结点数
"""

from dataclasses import dataclass
from typing import Iterator, Tuple

from partmod.utils.constants import EMPTY_PARTITION_TEXT
from partmod.utils.errors import NotAPartition


@dataclass(frozen=True, order=True)
class Partition:
    """分拆值对象

    parts 为弱递减的正整数元组，空元组表示 ∅。
    超出高度的下标读作 0（part(i)），成对判据无需补零。
    比较按 parts 的字典序进行。
    """
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for index, value in enumerate(parts):
            if isinstance(value, bool) or not isinstance(value, int):
                raise NotAPartition(f"第 {index} 项不是整数: {value!r}", index=index)
            if value < 1:
                raise NotAPartition(f"第 {index} 项不是正数: {value}", index=index)
            if index > 0 and value > parts[index - 1]:
                raise NotAPartition(
                    f"第 {index} 项 {value} 大于前一项 {parts[index - 1]}，序列不是弱递减的",
                    index=index,
                )
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        """n = 各部分之和"""
        return sum(self.parts)

    @property
    def height(self) -> int:
        """h = 部分个数"""
        return len(self.parts)

    def part(self, i: int) -> int:
        """第 i 行的长度（1 起始），超出高度读作 0"""
        if i < 1:
            raise IndexError(f"行号从 1 开始: {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def nodes(self) -> Iterator["Node"]:
        """按行、列顺序遍历所有结点"""
        for row, length in enumerate(self.parts, start=1):
            for col in range(1, length + 1):
                yield Node(row, col)

    def __contains__(self, node: "Node") -> bool:
        return 1 <= node.col <= self.part(node.row)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return EMPTY_PARTITION_TEXT
        return ",".join(str(x) for x in self.parts)

    def to_list(self) -> list[int]:
        return list(self.parts)


@dataclass(frozen=True, order=True)
class Node:
    """Young 图结点（英式记法，行列都从 1 开始）"""
    row: int
    col: int

    def __post_init__(self):
        if self.row < 1 or self.col < 1:
            raise ValueError(f"结点坐标必须为正: ({self.row}, {self.col})")

    def to_list(self) -> list[int]:
        return [self.row, self.col]

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


@dataclass(frozen=True)
class ContentVector:
    """content 向量：counts[i] 为剩余类 i 的结点数"""
    counts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError(f"content 计数不能为负: {self.counts}")

    @property
    def p(self) -> int:
        return len(self.counts)

    @property
    def size(self) -> int:
        return sum(self.counts)

    def shifted(self, residue: int, delta: int) -> "ContentVector":
        """将剩余类 residue 的计数加上 delta"""
        counts = list(self.counts)
        counts[residue] += delta
        return ContentVector(tuple(counts))
