"""Specht 预言机 - polytabloid、Gram 秩与维数恒等式验证"""

from partmod.oracle.limits import check_size, configure, size_cap
from partmod.oracle.tableaux import YoungTableau, standard_tableaux
from partmod.oracle.tabloids import Tabloid, permutation_sign, polytabloid
from partmod.oracle.finite_field import rank_mod, rref_mod
from partmod.oracle.gram import GramCertificate, dimension, dimension_table, gram_rank, polytabloid_matrix
from partmod.oracle.verify import (
    DimensionCheck,
    case_i_sweep,
    split_dimension,
    two_row_sweep,
    verify_case_i,
    verify_mullineux_dimension,
    verify_tensor_both_split,
    verify_two_row,
)

__all__ = [
    'configure',
    'size_cap',
    'check_size',
    'YoungTableau',
    'standard_tableaux',
    'Tabloid',
    'permutation_sign',
    'polytabloid',
    'rank_mod',
    'rref_mod',
    'GramCertificate',
    'gram_rank',
    'dimension',
    'dimension_table',
    'polytabloid_matrix',
    'DimensionCheck',
    'split_dimension',
    'verify_two_row',
    'verify_case_i',
    'verify_tensor_both_split',
    'verify_mullineux_dimension',
    'two_row_sweep',
    'case_i_sweep',
]
