"""
乘积标签

- case_i_product: ν = (λ∖A)∪B，A 为最上方可去结点，B 为倒数第二个可加结点
- char2_exceptional_family: 特征 2 下的分裂族 (n/2-j, n/2-j-1, j+1, j)
"""

from typing import Optional, Tuple

from partmod.alternating import splits
from partmod.branching import is_js, require_p_regular
from partmod.mullineux import mullineux
from partmod.partition import (
    Partition,
    add_node,
    addable_nodes,
    is_p_regular,
    removable_nodes,
    remove_node,
)
from partmod.utils.errors import IrregularResult, NotAPartition, OutOfRange, PreconditionViolated


def case_i_product(la: Partition, p: int) -> Partition:
    """
    ν = (λ∖A)∪B

    B 在 λ 上取。不检查 p ∤ n，调用方负责。

    Raises:
        PreconditionViolated: λ 不分裂或不是 JS 分拆
        IrregularResult: ν 不是分拆或不是 p-正则的
    """
    require_p_regular(la, p)
    if not splits(la, p) or not is_js(la, p):
        raise PreconditionViolated(f"{la} 在 p={p} 时不是分裂 JS 分拆")

    node_a = removable_nodes(la)[0]
    node_b = addable_nodes(la)[-2]
    try:
        nu = add_node(remove_node(la, node_a), node_b)
    except NotAPartition:
        raise IrregularResult(f"去掉 {node_a} 再添加 {node_b} 后不是分拆 (λ={la})")
    if not is_p_regular(nu, p):
        raise IrregularResult(f"乘积 {nu} 不是 {p}-正则的 (λ={la})")
    return nu


def case_i_products(la: Partition, p: int) -> Tuple[Partition, Optional[Partition]]:
    """返回 (ν, ν 的 Mullineux 伙伴)；p = 2 时伙伴为 None"""
    nu = case_i_product(la, p)
    if p == 2:
        return nu, None
    return nu, mullineux(nu, p)


def char2_exceptional_family(n: int, j: int) -> Partition:
    """
    (n/2-j, n/2-j-1, j+1, j)

    Raises:
        OutOfRange: n ≢ 2 (mod 4) 或 j 不在 0..(n-6)/4
    """
    if n % 4 != 2 or n < 6:
        raise OutOfRange(f"要求 n ≡ 2 (mod 4) 且 n >= 6: n={n}")
    if not 0 <= j <= (n - 6) // 4:
        raise OutOfRange(f"j 必须在 0..{(n - 6) // 4} 之间: {j}")
    half = n // 2
    return Partition(tuple(x for x in (half - j, half - j - 1, j + 1, j) if x > 0))
