"""
Mullineux 映射

λ ↦ λ^M 通过 Mullineux 符号计算：把每一列 (a_i, r_i) 换成
(a_i, a_i - r_i + ε_i)，ε_i = 0 若 p | a_i，否则为 1，再由新符号重建分拆。
"""

from functools import lru_cache
from typing import Optional

from loguru import logger

from partmod.branching import require_p_regular
from partmod.mullineux.models import MullineuxSymbol
from partmod.mullineux.rim import p_rim
from partmod.partition import Partition, enumerate_p_regular
from partmod.utils.errors import NoSuchPartition


@lru_cache(maxsize=None)
def mullineux_symbol(la: Partition, p: int) -> MullineuxSymbol:
    """反复去掉 p-边缘，记录 (边缘大小, 行数)"""
    require_p_regular(la, p)
    columns = []
    current = la
    while current.parts:
        rim = p_rim(current, p)
        columns.append((rim.size, current.height))
        current = rim.remainder
    return MullineuxSymbol(tuple(columns))


def _contains(outer: Partition, inner: Partition) -> bool:
    return all(outer.part(row) >= length for row, length in enumerate(inner.parts, start=1))


def _rebuild(columns: tuple, inner: Partition, p: int) -> Optional[Partition]:
    """从最内层向外逐层添加 p-边缘"""
    if not columns:
        return inner
    *outer_columns, (a, r) = columns
    for candidate in enumerate_p_regular(inner.size + a, p):
        if candidate.height != r or not _contains(candidate, inner):
            continue
        rim = p_rim(candidate, p)
        if rim.size == a and rim.remainder == inner:
            found = _rebuild(tuple(outer_columns), candidate, p)
            if found is not None:
                return found
    return None


@lru_cache(maxsize=None)
def partition_from_symbol(symbol: MullineuxSymbol, p: int) -> Partition:
    """
    由 Mullineux 符号重建分拆，并重新计算符号校验

    Raises:
        NoSuchPartition: 没有 p-正则分拆对应该符号
    """
    if not symbol.is_well_formed(p):
        raise NoSuchPartition(f"符号 {symbol} 不合法 (p={p})")

    result = _rebuild(symbol.columns, Partition(()), p)
    if result is None or mullineux_symbol(result, p) != symbol:
        raise NoSuchPartition(f"没有 {p}-正则分拆的 Mullineux 符号是 {symbol}")
    return result


def flip_symbol(symbol: MullineuxSymbol, p: int) -> MullineuxSymbol:
    """(a_i, r_i) ↦ (a_i, a_i - r_i + ε_i)"""
    return MullineuxSymbol(tuple(
        (a, a - r + (0 if a % p == 0 else 1)) for a, r in symbol.columns
    ))


def mullineux_by_symbol(la: Partition, p: int) -> Partition:
    """按符号翻转计算 λ^M（任意 p，包括 p = 2）"""
    image = partition_from_symbol(flip_symbol(mullineux_symbol(la, p), p), p)
    logger.debug(f"Mullineux({la}) = {image} (p={p})")
    return image


def mullineux(la: Partition, p: int) -> Partition:
    """
    λ^M

    p = 2 时符号差为平凡特征，直接返回 λ。

    Raises:
        IrregularInput: λ 不是 p-正则的
    """
    require_p_regular(la, p)
    if p == 2:
        return la
    return mullineux_by_symbol(la, p)


def is_mullineux_fixed(la: Partition, p: int) -> bool:
    return mullineux(la, p) == la
