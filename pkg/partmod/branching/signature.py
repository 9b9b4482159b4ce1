"""
约化 i-签名与晶体算子

签名约定：按行从上到下排列 i-可加结点（+）与 i-可去结点（-），
反复消去相邻的 "+-"（可加结点在可去结点之上）直到不动点。
剩余的 - 为正规结点，+ 为余正规结点；good 为最下方的正规结点，
cogood 为最上方的余正规结点。
"""

from typing import List

from loguru import logger

from partmod.branching.models import ADDABLE, REMOVABLE, SignatureReport, SignedNode
from partmod.partition import (
    Node,
    Partition,
    add_node,
    addable_nodes,
    is_p_regular,
    removable_nodes,
    remove_node,
    residue,
)
from partmod.utils.errors import (
    IrregularInput,
    IrregularResult,
    NotEnoughConormalNodes,
    NotEnoughNormalNodes,
    NotNormal,
    OutOfRange,
    get_error_message,
)


def require_p_regular(la: Partition, p: int) -> Partition:
    """检查 λ 是 p-正则的，否则抛出 IrregularInput"""
    if not is_p_regular(la, p):
        message, suggestion = get_error_message("irregular_input", partition=la, p=p)
        raise IrregularInput(message, suggestion)
    return la


def _check_residue(p: int, i: int) -> int:
    if not 0 <= i < p:
        raise OutOfRange(f"剩余类必须在 0..{p - 1} 之间: {i}")
    return i


def reduce_signature(sequence: List[SignedNode]) -> List[SignedNode]:
    """消去相邻的 "+-" 直到不动点（栈实现，结果与消去顺序无关）"""
    stack: List[SignedNode] = []
    for entry in sequence:
        if entry.sign == REMOVABLE and stack and stack[-1].sign == ADDABLE:
            stack.pop()
        else:
            stack.append(entry)
    return stack


def signature(la: Partition, p: int, i: int) -> SignatureReport:
    """
    计算 λ 的约化 i-签名

    Args:
        la: p-正则分拆
        p: 特征
        i: 剩余类 0..p-1

    Returns:
        SignatureReport

    Raises:
        IrregularInput: λ 不是 p-正则的
    """
    require_p_regular(la, p)
    _check_residue(p, i)

    entries = [SignedNode(node, ADDABLE) for node in addable_nodes(la) if residue(node, p) == i]
    entries += [SignedNode(node, REMOVABLE) for node in removable_nodes(la) if residue(node, p) == i]
    # 同一行的可加与可去结点剩余类不同，按行排序即得从上到下的顺序
    entries.sort(key=lambda entry: entry.node.row)

    return SignatureReport(residue=i, sequence=tuple(entries), reduced=tuple(reduce_signature(entries)))


def signatures(la: Partition, p: int) -> List[SignatureReport]:
    """所有剩余类的签名，按剩余类排序"""
    return [signature(la, p, i) for i in range(p)]


def epsilon(la: Partition, p: int, i: int) -> int:
    return signature(la, p, i).epsilon


def phi(la: Partition, p: int, i: int) -> int:
    return signature(la, p, i).phi


def normal_count(la: Partition, p: int) -> int:
    """正规结点总数 Σ_i ε_i"""
    return sum(report.epsilon for report in signatures(la, p))


def conormal_count(la: Partition, p: int) -> int:
    """余正规结点总数 Σ_i φ_i，恒等于 normal_count + 1"""
    return sum(report.phi for report in signatures(la, p))


def normal_nodes(la: Partition, p: int) -> List[Node]:
    """所有剩余类的正规结点，按行从上到下"""
    return sorted(node for report in signatures(la, p) for node in report.normal_nodes)


def conormal_nodes(la: Partition, p: int) -> List[Node]:
    """所有剩余类的余正规结点，按行从上到下"""
    return sorted(node for report in signatures(la, p) for node in report.conormal_nodes)


def e_tilde(la: Partition, p: int, i: int, r: int = 1) -> Partition:
    """
    ẽ_i^r：重复 r 次去掉 i-good 结点

    每一步都重新计算签名。

    Raises:
        NotEnoughNormalNodes: ε_i(λ) < r
    """
    if r < 1:
        raise OutOfRange(f"r 必须 >= 1: {r}")
    available = signature(la, p, i).epsilon
    if available < r:
        raise NotEnoughNormalNodes(f"{la} 只有 {available} 个 {i}-正规结点，无法执行 ẽ_{i}^{r}")

    current = la
    for _ in range(r):
        good = signature(current, p, i).good
        current = remove_node(current, good)
    logger.debug(f"ẽ_{i}^{r}({la}) = {current} (p={p})")
    return current


def f_tilde(la: Partition, p: int, i: int, r: int = 1) -> Partition:
    """
    f̃_i^r：重复 r 次添加 i-cogood 结点

    Raises:
        NotEnoughConormalNodes: φ_i(λ) < r
    """
    if r < 1:
        raise OutOfRange(f"r 必须 >= 1: {r}")
    available = signature(la, p, i).phi
    if available < r:
        raise NotEnoughConormalNodes(f"{la} 只有 {available} 个 {i}-余正规结点，无法执行 f̃_{i}^{r}")

    current = la
    for _ in range(r):
        cogood = signature(current, p, i).cogood
        current = add_node(current, cogood)
    logger.debug(f"f̃_{i}^{r}({la}) = {current} (p={p})")
    return current


def restriction_multiplicity(la: Partition, p: int, node: Node) -> int:
    """
    合成因子重数 [e_i D^λ : D^{λ∖A}]

    等于位于 A 所在行及其上方的 i-正规结点个数，其中 i = res(A)。

    Raises:
        NotNormal: A 不是正规结点
        IrregularResult: λ∖A 不是 p-正则的
    """
    i = residue(node, p)
    report = signature(la, p, i)
    if node not in report.normal_nodes:
        raise NotNormal(f"{node} 不是 {la} 的 {i}-正规结点")
    smaller = remove_node(la, node)
    if not is_p_regular(smaller, p):
        raise IrregularResult(f"{la} 去掉 {node} 后得到 {smaller}，不是 {p}-正则的")
    return sum(1 for normal in report.normal_nodes if normal.row <= node.row)
