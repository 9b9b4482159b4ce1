"""分支规则模块 - 签名、晶体算子、JS 判定与限制公式"""

from partmod.branching.models import (
    RestrictionBlock,
    RestrictionCertificate,
    RestrictionTerm,
    SignatureReport,
    SignedNode,
)
from partmod.branching.signature import (
    conormal_count,
    conormal_nodes,
    e_tilde,
    epsilon,
    f_tilde,
    normal_count,
    normal_nodes,
    phi,
    reduce_signature,
    require_p_regular,
    restriction_multiplicity,
    signature,
    signatures,
)
from partmod.branching.js import is_js, is_js_by_signature, is_js_closed_form
from partmod.branching.restriction import base_p_digits, restriction_blocks, two_row_restriction

__all__ = [
    'SignedNode',
    'SignatureReport',
    'RestrictionTerm',
    'RestrictionCertificate',
    'RestrictionBlock',
    'signature',
    'signatures',
    'reduce_signature',
    'require_p_regular',
    'epsilon',
    'phi',
    'normal_count',
    'conormal_count',
    'normal_nodes',
    'conormal_nodes',
    'e_tilde',
    'f_tilde',
    'restriction_multiplicity',
    'is_js',
    'is_js_by_signature',
    'is_js_closed_form',
    'two_row_restriction',
    'restriction_blocks',
    'base_p_digits',
]
