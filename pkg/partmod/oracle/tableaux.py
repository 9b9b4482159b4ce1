"""标准 Young 表"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from partmod.oracle.limits import check_size
from partmod.partition import Partition, hook_length_count
from partmod.utils.errors import InternalDefect


@dataclass(frozen=True)
class YoungTableau:
    """按行存储的 Young 表"""
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        width = len(self.rows[0]) if self.rows else 0
        return tuple(
            tuple(row[col] for row in self.rows if len(row) > col)
            for col in range(width)
        )

    def is_standard(self) -> bool:
        rows_increase = all(a < b for row in self.rows for a, b in zip(row, row[1:]))
        cols_increase = all(a < b for col in self.columns for a, b in zip(col, col[1:]))
        return rows_increase and cols_increase


def _fill(rows: List[List[int]], shape: Tuple[int, ...], value: int, n: int, out: List[YoungTableau]) -> None:
    if value > n:
        out.append(YoungTableau(tuple(tuple(row) for row in rows)))
        return
    for i, length in enumerate(shape):
        j = len(rows[i])
        if j < length and (i == 0 or len(rows[i - 1]) > j):
            rows[i].append(value)
            _fill(rows, shape, value + 1, n, out)
            rows[i].pop()


def standard_tableaux(la: Partition, cap: Optional[int] = None) -> List[YoungTableau]:
    """
    λ 形状的全部标准 Young 表

    依次把 1..n 放入从上到下的可放位置，顺序固定；
    数量与钩长公式核对。

    Raises:
        TooLarge: n 超过预言机上限
    """
    check_size(la.size, cap)
    tableaux: List[YoungTableau] = []
    _fill([[] for _ in la.parts], la.parts, 1, la.size, tableaux)

    expected = hook_length_count(la)
    if len(tableaux) != expected:
        raise InternalDefect(f"{la} 的标准表数量 {len(tableaux)} 与钩长公式 {expected} 不符")
    return tableaux
