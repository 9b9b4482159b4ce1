"""
限制公式

- two_row_restriction: 两行分拆 (n-k, k) 限制到 S_{n-1} 的合成因子（t >= 1 的情形）
- restriction_blocks: e_i D^λ 的块与头部标签
"""

from typing import List

from loguru import logger

from partmod.branching.models import RestrictionBlock, RestrictionCertificate, RestrictionTerm
from partmod.branching.signature import e_tilde, require_p_regular, signatures
from partmod.partition import Partition, content, is_p_regular
from partmod.utils.errors import OutsideLemmaScope, PreconditionViolated


def base_p_digits(m: int, p: int) -> List[int]:
    """m 的 p 进制各位，低位在前"""
    digits = []
    while m > 0:
        m, digit = divmod(m, p)
        digits.append(digit)
    return digits


def _two_row(first: int, second: int) -> Partition:
    return Partition((first, second) if second > 0 else (first,))


def two_row_restriction(la: Partition, p: int) -> RestrictionCertificate:
    """
    两行分拆的限制证书

    写 n-2k = Σ s_j p^j，t 为第一个 s_t < p-1 的下标，δ = 1 当且仅当 s_t < p-2。
    项为 (n-k-1, k):1，(n-k-1+p^j, k-p^j):2 (j < t)，(n-k-1+p^t, k-p^t):δ；
    不是 n-1 的 p-正则分拆的标签被丢弃。

    Raises:
        PreconditionViolated: λ 不是 k >= 1, n-2k >= 1 的两行分拆
        OutsideLemmaScope: t = 0
    """
    require_p_regular(la, p)
    if la.height != 2 or la.part(1) == la.part(2):
        raise PreconditionViolated(f"{la} 不是 n-2k >= 1 的两行分拆")

    n, k = la.size, la.part(2)
    digits = base_p_digits(n - 2 * k, p)
    t = next(j for j in range(len(digits) + 1) if (digits[j] if j < len(digits) else 0) < p - 1)
    if t == 0:
        raise OutsideLemmaScope(
            f"{la}: n-2k={n - 2 * k} 的最低位不是 p-1 (t = 0)",
            "该公式只覆盖 t >= 1",
        )
    digits += [0] * (t + 1 - len(digits))
    delta = 1 if digits[t] < p - 2 else 0

    candidates = [((n - k - 1, k), 1)]
    candidates += [((n - k - 1 + p ** j, k - p ** j), 2) for j in range(t)]
    candidates.append(((n - k - 1 + p ** t, k - p ** t), delta))

    terms = []
    for (first, second), multiplicity in candidates:
        if multiplicity == 0 or second < 0:
            continue
        mu = _two_row(first, second)
        if not is_p_regular(mu, p):
            continue
        terms.append(RestrictionTerm(mu, multiplicity))

    certificate = RestrictionCertificate(
        source=la, p=p, digits=tuple(digits), t=t, delta=delta, terms=tuple(terms)
    )
    logger.debug(f"两行限制 {la} (p={p}): t={t}, δ={delta}, 项={certificate.as_mapping()}")
    return certificate


def restriction_blocks(la: Partition, p: int) -> List[RestrictionBlock]:
    """对每个 ε_i(λ) > 0 的剩余类给出 e_i D^λ 的块、头部标签与头部重数"""
    require_p_regular(la, p)
    base = content(la, p)
    return [
        RestrictionBlock(
            residue=report.residue,
            content=base.shifted(report.residue, -1),
            head=e_tilde(la, p, report.residue),
            multiplicity=report.epsilon,
        )
        for report in signatures(la, p)
        if report.epsilon > 0
    ]
