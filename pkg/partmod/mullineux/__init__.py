"""Mullineux 模块 - p-边缘、Mullineux 符号与 Mullineux 映射"""

from partmod.mullineux.models import MullineuxSymbol, PRim
from partmod.mullineux.rim import p_rim, rim_nodes
from partmod.mullineux.mapping import (
    flip_symbol,
    is_mullineux_fixed,
    mullineux,
    mullineux_by_symbol,
    mullineux_symbol,
    partition_from_symbol,
)

__all__ = [
    'MullineuxSymbol',
    'PRim',
    'p_rim',
    'rim_nodes',
    'mullineux_symbol',
    'partition_from_symbol',
    'flip_symbol',
    'mullineux',
    'mullineux_by_symbol',
    'is_mullineux_fixed',
]
