"""分拆模块 - 分拆与 Young 图的精确运算"""

from partmod.partition.models import ContentVector, Node, Partition
from partmod.partition.core import (
    add_node,
    addable_nodes,
    basic_spin,
    check_characteristic,
    conjugate,
    content,
    enumerate_p_regular,
    format_partition,
    hook_length_count,
    hook_lengths,
    is_p_core,
    is_p_regular,
    pairs,
    parse_partition,
    partitions_of,
    remove_node,
    removable_nodes,
    residue,
    same_block,
    validate,
)

__all__ = [
    # 模型
    'Partition',
    'Node',
    'ContentVector',
    # 运算
    'validate',
    'is_p_regular',
    'conjugate',
    'residue',
    'content',
    'same_block',
    'removable_nodes',
    'addable_nodes',
    'remove_node',
    'add_node',
    'basic_spin',
    'enumerate_p_regular',
    'partitions_of',
    'parse_partition',
    'format_partition',
    'hook_lengths',
    'hook_length_count',
    'is_p_core',
    'pairs',
    'check_characteristic',
]
