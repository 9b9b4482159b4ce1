"""
维数恒等式验证

用 Gram 秩检查两行限制公式、(i) 型乘积与 n=6、p=3 的分裂张量积。
分裂标签的维数取 dim D^λ / 2，奇数秩视为缺陷。
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from loguru import logger

from partmod.alternating import AltLabel, Variant, canonical_partition, is_dim_one, splits
from partmod.branching import two_row_restriction
from partmod.classifier import Verdict, case_i_product, classify
from partmod.mullineux import mullineux
from partmod.oracle.gram import dimension
from partmod.partition import Partition, enumerate_p_regular
from partmod.utils.errors import OddDimension, OutsideLemmaScope, PreconditionViolated


@dataclass(frozen=True)
class DimensionCheck:
    """维数恒等式 lhs = rhs 的检查结果"""
    name: str
    partition: Partition
    p: int
    lhs: int
    rhs: int
    detail: Tuple[Tuple[str, int], ...] = field(default_factory=tuple)

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "partition": str(self.partition),
            "p": self.p,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "detail": {label: value for label, value in self.detail},
        }


def split_dimension(la: Partition, p: int, cap: Optional[int] = None) -> int:
    """
    dim E^λ_± = dim D^λ / 2

    Raises:
        OddDimension: 分裂分拆的 Gram 秩为奇数
    """
    full = dimension(la, p, cap)
    if full % 2:
        logger.error(f"分裂分拆 {la} (p={p}) 的 Gram 秩 {full} 为奇数")
        raise OddDimension(f"分裂分拆 {la} 的 Gram 秩 {full} 是奇数 (p={p})")
    return full // 2


def verify_two_row(la: Partition, p: int, cap: Optional[int] = None) -> DimensionCheck:
    """dim D^λ = Σ 重数 · dim D^μ（μ 取自两行限制证书）"""
    certificate = two_row_restriction(la, p)
    detail = tuple((str(term.partition), dimension(term.partition, p, cap)) for term in certificate.terms)
    rhs = sum(term.multiplicity * dim for term, (_, dim) in zip(certificate.terms, detail))
    check = DimensionCheck("two_row", la, p, dimension(la, p, cap), rhs, detail)
    if not check:
        logger.warning(f"两行限制维数不符: {la} (p={p}) {check.lhs} != {check.rhs}")
    return check


def verify_case_i(la: Partition, p: int, cap: Optional[int] = None) -> DimensionCheck:
    """
    (i) 型乘积的维数恒等式

    p = 2：dim D^λ · dim D^{(n-1,1)} = 2 · dim D^ν
    p = 3：(dim D^λ / 2) · dim D^{(n-1,1)} = dim D^ν

    Raises:
        PreconditionViolated: (λ, (n-1,1)) 不是 (i) 型不可约
    """
    n = la.size
    if is_dim_one(la, p) or not splits(la, p):
        raise PreconditionViolated(f"{la} 不是非平凡的分裂分拆 (p={p})")
    natural = canonical_partition(Partition((n - 1, 1)), p)
    verdict = classify(p, n, AltLabel(la, Variant.PLUS), AltLabel(natural, Variant.WHOLE)).verdict
    if verdict is not Verdict.IRREDUCIBLE:
        raise PreconditionViolated(f"{la} ⊗ ({n - 1},1) 不是 (i) 型不可约: {verdict.value}")

    nu = case_i_product(la, p)
    dim_natural = dimension(natural, p, cap)
    dim_nu = dimension(nu, p, cap)
    detail = (("lambda", dimension(la, p, cap)), ("natural", dim_natural), ("product", dim_nu))
    if p == 2:
        split_dimension(la, p, cap)
        return DimensionCheck("case_i", la, p, dimension(la, p, cap) * dim_natural, 2 * dim_nu, detail)
    return DimensionCheck("case_i", la, p, split_dimension(la, p, cap) * dim_natural, dim_nu, detail)


def verify_tensor_both_split(cap: Optional[int] = None) -> DimensionCheck:
    """p = 3, n = 6：(dim D^{(4,1,1)} / 2)² = dim D^{(4,2)}"""
    factor, product = Partition((4, 1, 1)), Partition((4, 2))
    half = split_dimension(factor, 3, cap)
    dim_product = dimension(product, 3, cap)
    return DimensionCheck(
        "both_split", factor, 3, half * half, dim_product,
        (("factor_half", half), ("product", dim_product)),
    )


def verify_mullineux_dimension(la: Partition, p: int, cap: Optional[int] = None) -> DimensionCheck:
    """dim D^λ = dim D^{λ^M}"""
    image = mullineux(la, p)
    dim_image = dimension(image, p, cap)
    return DimensionCheck(
        "mullineux_dimension", la, p, dimension(la, p, cap), dim_image, ((str(image), dim_image),),
    )


def two_row_sweep(p: int, max_n: int, cap: Optional[int] = None) -> List[DimensionCheck]:
    """所有 t >= 1 的两行 p-正则分拆，n <= max_n"""
    checks = []
    for n in range(3, max_n + 1):
        for la in enumerate_p_regular(n, p):
            if la.height != 2 or la.part(1) == la.part(2):
                continue
            try:
                checks.append(verify_two_row(la, p, cap))
            except OutsideLemmaScope:
                continue
    logger.info(f"两行限制验证 p={p}, n<={max_n}: {sum(map(bool, checks))}/{len(checks)} 通过")
    return checks


def case_i_sweep(p: int, max_n: int, cap: Optional[int] = None) -> List[DimensionCheck]:
    """分类器在 5 <= n <= max_n 上给出的全部 (i) 型不可约，p = 3 时附加 n = 6 的分裂张量积"""
    checks = []
    for n in range(5, max_n + 1):
        for la in enumerate_p_regular(n, p):
            if is_dim_one(la, p) or not splits(la, p):
                continue
            try:
                checks.append(verify_case_i(la, p, cap))
            except PreconditionViolated:
                continue
    if p == 3 and max_n >= 6:
        checks.append(verify_tensor_both_split(cap))
    logger.info(f"分类器维数验证 p={p}, n<={max_n}: {sum(map(bool, checks))}/{len(checks)} 通过")
    return checks
