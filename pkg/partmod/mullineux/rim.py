"""
p-边缘

边缘结点是满足 (i+1, j+1) ∉ λ 的结点 (i, j)。从 (1, λ_1) 出发：
若 (i+1, j) ∉ λ 则走到 (i, j-1)，否则走到 (i+1, j)，列号到 0 时停止。
每 p 个结点成一组；若一组的最后一个结点在第 r 行，下一组从第 r+1 行的
第一个边缘结点开始，最后一组可以不满 p 个。
"""

from collections import Counter
from typing import List

from partmod.mullineux.models import PRim
from partmod.partition import Node, Partition, check_characteristic
from partmod.utils.errors import EmptyPartition


def rim_nodes(la: Partition) -> List[Node]:
    """按遍历顺序列出全部边缘结点"""
    if not la.parts:
        return []
    nodes = []
    row, col = 1, la.part(1)
    while col >= 1:
        nodes.append(Node(row, col))
        if la.part(row + 1) >= col:
            row += 1
        else:
            col -= 1
    return nodes


def p_rim(la: Partition, p: int) -> PRim:
    """
    计算 λ 的 p-边缘

    Raises:
        EmptyPartition: λ = ∅
    """
    check_characteristic(p)
    if not la.parts:
        raise EmptyPartition("空分拆没有 p-边缘")

    rim = rim_nodes(la)
    selected: List[Node] = []
    start = 0
    while start < len(rim):
        group = rim[start:start + p]
        selected.extend(group)
        next_row = group[-1].row + 1
        start = next((k for k in range(start + len(group), len(rim)) if rim[k].row == next_row), len(rim))

    # 每行被去掉的结点是该行最右侧的一段
    removed = Counter(node.row for node in selected)
    parts = tuple(length - removed.get(row, 0) for row, length in enumerate(la.parts, start=1))
    remainder = Partition(tuple(x for x in parts if x > 0))
    return PRim(partition=la, nodes=tuple(selected), remainder=remainder)
