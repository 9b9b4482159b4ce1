"""分类器模块 - 张量积不可约性判定"""

from partmod.classifier.models import (
    BasicSpinReport,
    Classification,
    HeightConstraint,
    ScanSummary,
    Subcase,
    Verdict,
)
from partmod.classifier.products import case_i_product, case_i_products, char2_exceptional_family
from partmod.classifier.engine import TensorClassifier, basic_spin_report, classify
from partmod.classifier.scan import classify_all, filter_rows, label_pairs, summarize

__all__ = [
    'Verdict',
    'Subcase',
    'HeightConstraint',
    'BasicSpinReport',
    'Classification',
    'ScanSummary',
    'case_i_product',
    'case_i_products',
    'char2_exceptional_family',
    'TensorClassifier',
    'basic_spin_report',
    'classify',
    'classify_all',
    'filter_rows',
    'label_pairs',
    'summarize',
]
