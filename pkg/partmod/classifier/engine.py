"""
张量积不可约性分类（p ∈ {2, 3}，n >= 5）

判定顺序：
1. 有一个因子是一维的 -> TRIVIAL
2. 两个都不分裂 -> NOT_IRREDUCIBLE
3. 恰有一个分裂 (V = E^λ_±, W = E^μ)：
   - μ ∈ {(n-1,1), (n-1,1)^M}：p=2 要求 n 奇且 λ 为 JS，p=3 要求 λ 为 JS 且 3 ∤ n
   - 否则 p=2 且 β_n ∈ {λ, μ}：检查正规结点数上界，通过则 BASIC_SPIN_OPEN
   - 其余 NOT_IRREDUCIBLE
4. 两个都分裂：
   - p=3：仅 n=6、两者都是 (4,1,1) 且变体相反时不可约，乘积 E^{(4,2)}
   - p=2：有一个是 β_n 时检查正规结点数上界，否则 NOT_IRREDUCIBLE

(n-1,1) 分支先于基本旋量分支判定。
"""

from math import ceil
from loguru import logger

from partmod.alternating import AltLabel, Variant, canonical_partition, check_label, is_dim_one, splits
from partmod.branching import is_js, normal_count
from partmod.classifier.models import (
    BasicSpinReport,
    Classification,
    HeightConstraint,
    Subcase,
    Verdict,
)
from partmod.classifier.products import case_i_products
from partmod.partition import Partition, basic_spin
from partmod.utils.constants import (
    CLASSIFIER_MIN_N,
    CLASSIFIER_PRIMES,
    BasicSpinBounds,
    Citation,
)
from partmod.utils.errors import (
    InternalDefect,
    OutOfRange,
    SizeMismatch,
    UnsupportedCharacteristic,
    get_error_message,
)

TENSOR_BOTH_SPLIT_FACTOR = Partition((4, 1, 1))
TENSOR_BOTH_SPLIT_PRODUCT = Partition((4, 2))


def _parity_index(n: int) -> int:
    """界元组按 (n 奇, n 偶) 排列"""
    return 0 if n % 2 == 1 else 1


def _whole_label(la: Partition, p: int) -> AltLabel:
    if splits(la, p):
        raise InternalDefect(f"乘积 {la} 在 p={p} 时分裂，无法给出 WHOLE 标签")
    return AltLabel(canonical_partition(la, p), Variant.WHOLE)


def basic_spin_report(subcase: Subcase, factor: Partition, n: int) -> BasicSpinReport:
    """D^λ ⊗ D^{β_n} 的必要条件：非旋量因子 λ 的正规结点数上界及 h(ν) 的参考范围"""
    index = _parity_index(n)
    if subcase is Subcase.SPLIT_NONSPLIT:
        bound = BasicSpinBounds.SPLIT_NONSPLIT_NORMAL[index]
        constraints = (
            HeightConstraint("D^ν | D^ν", BasicSpinBounds.SPLIT_NONSPLIT_HEIGHT[index]),
        )
    else:
        bound = BasicSpinBounds.BOTH_SPLIT_NORMAL[index]
        constraints = (
            HeightConstraint("four factors, ν non-split", 10 if index == 0 else 12),
            HeightConstraint("two factors, ν split", 6 if index == 0 else 8),
            HeightConstraint("mixed-sign factors", 6 if index == 0 else 8),
            HeightConstraint("single split factor, n ≡ 0 mod 4", 4),
        )
    return BasicSpinReport(
        subcase=subcase,
        factor=factor,
        normal_node_count=normal_count(factor, 2),
        bound=bound,
        height_constraints=constraints,
        min_height=ceil(factor.height / 2),
    )


class TensorClassifier:
    """
    特征 p 下 A_n 不可约模张量积的分类器

    只支持 p ∈ {2, 3}；p >= 5 属于已有结果。
    """

    def __init__(self, p: int, n: int):
        if p not in CLASSIFIER_PRIMES:
            message, suggestion = get_error_message("unsupported_p", p=p)
            raise UnsupportedCharacteristic(message, suggestion)
        if n < CLASSIFIER_MIN_N:
            raise OutOfRange(f"分类器要求 n >= {CLASSIFIER_MIN_N}: n={n}")
        self.p = p
        self.n = n
        self.natural = canonical_partition(Partition((n - 1, 1)), p)
        self.beta = basic_spin(n) if p == 2 else None

    def _check(self, label: AltLabel) -> AltLabel:
        if label.size != self.n:
            message, suggestion = get_error_message(
                "size_mismatch", lhs=label.partition, lhs_size=label.size, rhs=f"S_{self.n}", rhs_size=self.n
            )
            raise SizeMismatch(message, suggestion)
        return check_label(label, self.p)

    def _result(self, lhs, rhs, verdict, citations, **extra) -> Classification:
        return Classification(
            p=self.p, n=self.n, lhs=lhs, rhs=rhs, verdict=verdict, citations=tuple(citations), **extra
        )

    def classify(self, lhs: AltLabel, rhs: AltLabel) -> Classification:
        """
        判定 V ⊗ W 是否不可约

        Raises:
            SizeMismatch: 标签大小不是 n
            VariantInconsistent: 变体与分裂性不一致
        """
        lhs, rhs = self._check(lhs), self._check(rhs)
        p = self.p

        if is_dim_one(lhs.partition, p) or is_dim_one(rhs.partition, p):
            return self._result(lhs, rhs, Verdict.TRIVIAL, [Citation.DIM_ONE])

        lhs_split, rhs_split = lhs.variant.is_split, rhs.variant.is_split

        if not lhs_split and not rhs_split:
            citation = Citation.BOTH_WHOLE_CHAR2 if p == 2 else Citation.BOTH_WHOLE_CHAR3
            return self._result(lhs, rhs, Verdict.NOT_IRREDUCIBLE, [Citation.MAIN, citation])

        if lhs_split != rhs_split:
            split_label, whole_label = (lhs, rhs) if lhs_split else (rhs, lhs)
            return self._one_split(lhs, rhs, split_label.partition, whole_label.partition)

        return self._both_split(lhs, rhs)

    def _one_split(self, lhs: AltLabel, rhs: AltLabel, la: Partition, mu: Partition) -> Classification:
        p, n = self.p, self.n

        if mu == self.natural:
            if p == 2:
                citations = [Citation.NATURAL_OR_SPIN_CHAR2, Citation.CASE_I_CHAR2]
                holds = n % 2 == 1 and is_js(la, p)
            else:
                citations = [Citation.SPLIT_PAIRS]
                holds = is_js(la, p) and n % 3 != 0
            if not holds:
                return self._result(lhs, rhs, Verdict.NOT_IRREDUCIBLE, citations)

            nu, partner = case_i_products(la, p)
            product = _whole_label(nu, p)
            partner_label = None
            if partner is not None and partner != nu:
                partner_label = AltLabel(nu if product.partition == partner else partner, Variant.WHOLE)
            logger.debug(f"(i) 型不可约: {lhs} ⊗ {rhs} = {product} (p={p}, n={n})")
            return self._result(
                lhs, rhs, Verdict.IRREDUCIBLE, [Citation.CASE_I] + citations,
                product=product, mullineux_partner=partner_label,
            )

        if p == 2 and self.beta in (la, mu):
            factor = mu if la == self.beta else la
            report = basic_spin_report(Subcase.SPLIT_NONSPLIT, factor, n)
            return self._basic_spin(lhs, rhs, report)

        citation = Citation.NATURAL_OR_SPIN_CHAR2 if p == 2 else Citation.SPLIT_PAIRS
        return self._result(lhs, rhs, Verdict.NOT_IRREDUCIBLE, [citation])

    def _both_split(self, lhs: AltLabel, rhs: AltLabel) -> Classification:
        p, n = self.p, self.n

        if p == 3:
            if (
                n == 6
                and lhs.partition == TENSOR_BOTH_SPLIT_FACTOR
                and rhs.partition == TENSOR_BOTH_SPLIT_FACTOR
                and lhs.variant != rhs.variant
            ):
                return self._result(
                    lhs, rhs, Verdict.IRREDUCIBLE, [Citation.BOTH_SPLIT_CHAR3],
                    product=_whole_label(TENSOR_BOTH_SPLIT_PRODUCT, p),
                )
            return self._result(lhs, rhs, Verdict.NOT_IRREDUCIBLE, [Citation.BOTH_SPLIT_CHAR3])

        if self.beta in (lhs.partition, rhs.partition):
            factor = rhs.partition if lhs.partition == self.beta else lhs.partition
            report = basic_spin_report(Subcase.BOTH_SPLIT, factor, n)
            return self._basic_spin(lhs, rhs, report)

        return self._result(lhs, rhs, Verdict.NOT_IRREDUCIBLE, [Citation.SPLIT_PAIRS])

    def _basic_spin(self, lhs: AltLabel, rhs: AltLabel, report: BasicSpinReport) -> Classification:
        if report.passes:
            return self._result(
                lhs, rhs, Verdict.BASIC_SPIN_OPEN, [Citation.MAIN, Citation.BASIC_SPIN, Citation.HEIGHT_BOUND],
                report=report,
            )
        logger.debug(
            f"基本旋量必要条件不满足: {report.factor} 有 {report.normal_node_count} 个正规结点 > {report.bound}"
        )
        return self._result(lhs, rhs, Verdict.NOT_IRREDUCIBLE, [Citation.BASIC_SPIN], report=report)


def classify(p: int, n: int, lhs: AltLabel, rhs: AltLabel) -> Classification:
    """判定 V ⊗ W（V、W 为 A_n 的不可约标签）是否不可约"""
    return TensorClassifier(p, n).classify(lhs, rhs)

