"""Mullineux 领域模型"""

from dataclasses import dataclass
from typing import Tuple

from partmod.partition import Node, Partition


@dataclass(frozen=True)
class PRim:
    """
    p-边缘

    nodes 按遍历顺序排列，remainder 为去掉 p-边缘后的分拆。
    """
    partition: Partition
    nodes: Tuple[Node, ...]
    remainder: Partition

    @property
    def size(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class MullineuxSymbol:
    """
    Mullineux 符号

    columns[i] = (a_i, r_i)：第 i 次去掉的 p-边缘大小与当时的行数。
    """
    columns: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple((int(a), int(r)) for a, r in self.columns))

    @classmethod
    def from_rows(cls, a: Tuple[int, ...], r: Tuple[int, ...]) -> "MullineuxSymbol":
        if len(a) != len(r):
            raise ValueError(f"符号两行长度不同: {a} / {r}")
        return cls(tuple(zip(a, r)))

    @property
    def a(self) -> Tuple[int, ...]:
        return tuple(a for a, _ in self.columns)

    @property
    def r(self) -> Tuple[int, ...]:
        return tuple(r for _, r in self.columns)

    @property
    def size(self) -> int:
        return sum(self.a)

    def is_well_formed(self, p: int) -> bool:
        """a_i >= 1，r_i <= a_i <= p·r_i，r_i 单调不增"""
        if any(r < 1 or a < r or a > p * r for a, r in self.columns):
            return False
        return all(r >= r_next for r, r_next in zip(self.r, self.r[1:]))

    def to_dict(self) -> dict:
        return {"a": list(self.a), "r": list(self.r)}

    def __str__(self) -> str:
        return f"({','.join(map(str, self.a))} ; {','.join(map(str, self.r))})"
