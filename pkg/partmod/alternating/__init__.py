"""交错群模块 - 分裂判定、A_n 标签与分裂 JS 诊断"""

from partmod.alternating.models import AltLabel, DiagnosticClause, DiagnosticReport, Variant
from partmod.alternating.splitting import (
    alt_labels,
    canonical_partition,
    check_label,
    format_label,
    is_dim_one,
    labels_of_size,
    make_label,
    parse_label,
    splits,
)
from partmod.alternating.diagnostics import case_i_node_report, split_js_diagnostics

__all__ = [
    'Variant',
    'AltLabel',
    'DiagnosticClause',
    'DiagnosticReport',
    'splits',
    'alt_labels',
    'canonical_partition',
    'is_dim_one',
    'make_label',
    'check_label',
    'parse_label',
    'format_label',
    'labels_of_size',
    'split_js_diagnostics',
    'case_i_node_report',
]
