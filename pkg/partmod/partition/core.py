"""
分拆与 Young 图运算

提供合法性检查、p-正则性、共轭、剩余类、content、块判定、
可加/可去结点、基本旋量分拆与 p-正则分拆枚举。
所有函数都是值输入的纯函数。
"""

from math import factorial
from typing import Iterable, Iterator, List, Optional, Sequence

from partmod.partition.models import ContentVector, Node, Partition
from partmod.utils.constants import EMPTY_PARTITION_TEXT
from partmod.utils.errors import (
    LabelSyntaxError,
    NotAPartition,
    OutOfRange,
    SizeMismatch,
    get_error_message,
)


def check_characteristic(p: int) -> int:
    """检查特征 p >= 2"""
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        raise OutOfRange(f"特征必须是 >= 2 的整数: {p!r}")
    return p


def validate(parts: Sequence[int]) -> Partition:
    """
    把整数序列转换为分拆

    Args:
        parts: 整数序列

    Returns:
        Partition

    Raises:
        NotAPartition: 序列不是弱递减或含非正数（报告出错下标）
    """
    return Partition(tuple(parts))


def is_p_regular(la: Partition, p: int) -> bool:
    """没有任何部分重复 p 次或更多"""
    check_characteristic(p)
    parts = la.parts
    return all(parts[i] != parts[i + p - 1] for i in range(len(parts) - p + 1))


def conjugate(la: Partition) -> Partition:
    """共轭分拆 λ′，λ′_j = #{i : λ_i >= j}"""
    if not la.parts:
        return la
    return Partition(tuple(sum(1 for x in la.parts if x >= j) for j in range(1, la.parts[0] + 1)))


def residue(node: Node, p: int) -> int:
    """结点剩余类 res(a,b) = (b - a) mod p，取 0..p-1 代表元"""
    check_characteristic(p)
    return (node.col - node.row) % p


def content(la: Partition, p: int) -> ContentVector:
    """统计每个剩余类的结点数"""
    counts = [0] * check_characteristic(p)
    for row, length in enumerate(la.parts, start=1):
        for col in range(1, length + 1):
            counts[(col - row) % p] += 1
    return ContentVector(tuple(counts))


def same_block(la: Partition, mu: Partition, p: int) -> bool:
    """
    判断两个分拆是否属于同一个块（content 相同）

    Raises:
        SizeMismatch: |λ| != |μ|
    """
    if la.size != mu.size:
        message, suggestion = get_error_message(
            "size_mismatch", lhs=la, lhs_size=la.size, rhs=mu, rhs_size=mu.size
        )
        raise SizeMismatch(message, suggestion)
    return content(la, p) == content(mu, p)


def removable_nodes(la: Partition) -> List[Node]:
    """可去结点，按行从上到下"""
    h = la.height
    return [
        Node(row, la.part(row))
        for row in range(1, h + 1)
        if la.part(row) > la.part(row + 1)
    ]


def addable_nodes(la: Partition) -> List[Node]:
    """可加结点，按行从上到下（包括第 h+1 行）"""
    h = la.height
    return [
        Node(row, la.part(row) + 1)
        for row in range(1, h + 2)
        if row == 1 or la.part(row - 1) > la.part(row)
    ]


def remove_node(la: Partition, node: Node) -> Partition:
    """去掉结点，结果必须仍是分拆"""
    if node.col != la.part(node.row):
        raise NotAPartition(f"{node} 不是 {la} 的行末结点", index=node.row - 1)
    parts = list(la.parts)
    parts[node.row - 1] -= 1
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition(tuple(parts))


def add_node(la: Partition, node: Node) -> Partition:
    """添加结点，结果必须仍是分拆"""
    if node.col != la.part(node.row) + 1 or node.row > la.height + 1:
        raise NotAPartition(f"{node} 不能添加到 {la} 上", index=node.row - 1)
    parts = list(la.parts)
    if node.row == len(parts) + 1:
        parts.append(1)
    else:
        parts[node.row - 1] += 1
    return Partition(tuple(parts))


def basic_spin(n: int) -> Partition:
    """基本旋量分拆 β_n = (⌈(n+1)/2⌉, ⌊(n-1)/2⌋)"""
    if n < 3:
        raise OutOfRange(f"β_n 要求 n >= 3: {n}")
    return Partition(((n + 2) // 2, (n - 1) // 2))


def _descending(n: int, max_part: int, p: Optional[int], last: int, run: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        next_run = run + 1 if first == last else 1
        if p is not None and next_run >= p:
            continue
        for rest in _descending(n - first, first, p, first, next_run):
            yield (first,) + rest


def enumerate_p_regular(n: int, p: int) -> Iterator[Partition]:
    """
    枚举 n 的所有 p-正则分拆

    顺序固定为字典序降序，保证命令行输出可逐字节复现。
    """
    if n < 0:
        raise OutOfRange(f"n 不能为负: {n}")
    check_characteristic(p)
    for parts in _descending(n, n, p, 0, 0):
        yield Partition(parts)


def partitions_of(n: int) -> Iterator[Partition]:
    """枚举 n 的所有分拆（字典序降序）"""
    if n < 0:
        raise OutOfRange(f"n 不能为负: {n}")
    for parts in _descending(n, n, None, 0, 0):
        yield Partition(parts)


def parse_partition(text: str) -> Partition:
    """
    解析文本写法 "5,3,1"；空分拆写作 "-"，"0" 不被接受

    Raises:
        LabelSyntaxError: 文本无法解析
        NotAPartition: 解析出的序列不是分拆
    """
    text = text.strip()
    if text == EMPTY_PARTITION_TEXT:
        return Partition(())
    if not text:
        raise LabelSyntaxError("分拆文本为空", "空分拆请写作 '-'")
    try:
        parts = tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise LabelSyntaxError(f"无法解析分拆: {text!r}", "使用逗号分隔的正整数，例如 5,3,1")
    return Partition(parts)


def format_partition(la: Partition) -> str:
    """parse_partition 的逆运算"""
    return str(la)


def hook_lengths(la: Partition) -> List[List[int]]:
    """每个结点的钩长"""
    conj = conjugate(la)
    return [
        [la.part(row) - col + conj.part(col) - row + 1 for col in range(1, la.part(row) + 1)]
        for row in range(1, la.height + 1)
    ]


def hook_length_count(la: Partition) -> int:
    """钩长公式 n!/∏hooks，即标准 Young 表的个数"""
    product = 1
    for row in hook_lengths(la):
        for hook in row:
            product *= hook
    return factorial(la.size) // product


def is_p_core(la: Partition, p: int) -> bool:
    """没有钩长被 p 整除"""
    check_characteristic(p)
    return all(hook % p != 0 for row in hook_lengths(la) for hook in row)


def pairs(values: Iterable[int]) -> Iterator[tuple]:
    """把序列两两分组：(λ_1, λ_2), (λ_3, λ_4), ...，末尾不足补 0"""
    values = list(values)
    if len(values) % 2:
        values.append(0)
    for i in range(0, len(values), 2):
        yield values[i], values[i + 1]
