"""
分裂判定与 A_n 标签

- p = 2：对所有成对下标 (λ_{2i-1}, λ_{2i}) 要求差 <= 2 且和 ≢ 2 (mod 4)
- p >= 3：λ 分裂当且仅当 λ = λ^M
"""

from typing import List, Tuple

from partmod.alternating.models import AltLabel, Variant
from partmod.branching import require_p_regular
from partmod.mullineux import is_mullineux_fixed, mullineux
from partmod.partition import Partition, enumerate_p_regular, pairs, parse_partition
from partmod.utils.errors import VariantInconsistent, get_error_message


def splits(la: Partition, p: int) -> bool:
    """λ 限制到 A_n 后是否分裂为 E^λ_+ ⊕ E^λ_-"""
    require_p_regular(la, p)
    if p == 2:
        return all(a - b <= 2 and (a + b) % 4 != 2 for a, b in pairs(la.parts))
    return is_mullineux_fixed(la, p)


def canonical_partition(la: Partition, p: int) -> Partition:
    """E^λ ≅ E^{λ^M}：p >= 3 时取 {λ, λ^M} 中字典序较大者"""
    require_p_regular(la, p)
    if p == 2:
        return la
    return max(la, mullineux(la, p))


def alt_labels(la: Partition, p: int) -> Tuple[AltLabel, ...]:
    """λ 对应的 A_n 标签：分裂时为 (+, -)，否则为规范代表的 WHOLE"""
    if splits(la, p):
        return AltLabel(la, Variant.PLUS), AltLabel(la, Variant.MINUS)
    return (AltLabel(canonical_partition(la, p), Variant.WHOLE),)


def is_dim_one(la: Partition, p: int) -> bool:
    """λ = (n) 或 λ = (n)^M（平凡与符号表示）"""
    require_p_regular(la, p)
    row = Partition((la.size,)) if la.size else Partition(())
    return la == row or la == mullineux(row, p)


def make_label(la: Partition, p: int, variant: Variant) -> AltLabel:
    """
    构造并检查 A_n 标签

    Raises:
        IrregularInput: λ 不是 p-正则的
        VariantInconsistent: 变体与分裂性不一致
    """
    split = splits(la, p)
    if variant.is_split and not split:
        message, suggestion = get_error_message(
            "variant_on_nonsplit", label=f"{la}{variant.suffix}", partition=la, p=p
        )
        raise VariantInconsistent(message, suggestion)
    if not variant.is_split and split:
        message, suggestion = get_error_message("variant_missing", label=str(la), partition=la, p=p)
        raise VariantInconsistent(message, suggestion)
    if split:
        return AltLabel(la, variant)
    return AltLabel(canonical_partition(la, p), Variant.WHOLE)


def check_label(label: AltLabel, p: int) -> AltLabel:
    """检查标签并返回规范形式"""
    return make_label(label.partition, p, label.variant)


def parse_label(text: str, p: int) -> AltLabel:
    """
    解析 "5,3,1+" / "5,3,1-" / "8,1"

    无后缀表示 WHOLE；非分裂分拆不接受 +/- 后缀。
    """
    text = text.strip()
    variant = Variant.WHOLE
    if text.endswith("+"):
        variant, text = Variant.PLUS, text[:-1]
    elif text.endswith("-") and text != "-":
        variant, text = Variant.MINUS, text[:-1]
    return make_label(parse_partition(text), p, variant)


def format_label(label: AltLabel) -> str:
    return str(label)


def labels_of_size(n: int, p: int) -> List[AltLabel]:
    """A_n 的全部不可约标签（规范形式），按分拆字典序降序"""
    labels = []
    for la in enumerate_p_regular(n, p):
        if splits(la, p):
            labels.extend(alt_labels(la, p))
        elif canonical_partition(la, p) == la:
            labels.append(AltLabel(la, Variant.WHOLE))
    return labels
