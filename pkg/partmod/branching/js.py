"""
JS 分拆判定

两个独立实现：
- is_js_by_signature: 正规结点恰好一个
- is_js_closed_form: 把 λ 写成 (a_1^{b_1}, ..., a_h^{b_h})，要求
  a_i - a_{i+1} + b_i + b_{i+1} ≡ 0 (mod p)；p = 2 时等价于所有部分奇偶相同
"""

from itertools import groupby

from loguru import logger

from partmod.branching.signature import normal_count, require_p_regular
from partmod.partition import Partition
from partmod.utils.errors import InternalDefect


def is_js_by_signature(la: Partition, p: int) -> bool:
    return normal_count(la, p) == 1


def is_js_closed_form(la: Partition, p: int) -> bool:
    require_p_regular(la, p)
    if not la.parts:
        return False
    if p == 2:
        return len({part % 2 for part in la.parts}) == 1

    blocks = [(value, len(list(group))) for value, group in groupby(la.parts)]
    return all(
        (a - a_next + b + b_next) % p == 0
        for (a, b), (a_next, b_next) in zip(blocks, blocks[1:])
    )


def is_js(la: Partition, p: int) -> bool:
    """
    λ 是否为 JS 分拆

    同时计算两种判据，不一致时视为实现缺陷。

    Raises:
        IrregularInput: λ 不是 p-正则的
        InternalDefect: 两种判据不一致
    """
    by_signature = is_js_by_signature(la, p)
    closed_form = is_js_closed_form(la, p)
    if by_signature != closed_form:
        logger.error(f"JS 判据不一致: λ={la}, p={p}, 签名={by_signature}, 闭式={closed_form}")
        raise InternalDefect(f"JS 判据不一致: {la} (p={p})")
    return by_signature
