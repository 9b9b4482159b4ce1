"""
Gram 秩

G[s][t] = ⟨e_s, e_t⟩（tabloid 基为标准正交基），在 GF(p) 上消元求秩。
对 p-正则的 λ，秩等于 dim D^λ。
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional

import numpy as np
from loguru import logger

from partmod.oracle.finite_field import mod_p, rank_mod
from partmod.oracle.limits import check_size, max_gram_cells, size_cap
from partmod.oracle.tableaux import standard_tableaux
from partmod.oracle.tabloids import Tabloid, polytabloid
from partmod.partition import Partition, check_characteristic, enumerate_p_regular
from partmod.utils.errors import TooLarge


@dataclass(frozen=True)
class GramCertificate:
    """Gram 矩阵的秩证书"""
    partition: Partition
    p: int
    syt_count: int
    rank: int

    def __post_init__(self):
        if not 0 <= self.rank <= self.syt_count:
            raise ValueError(f"秩 {self.rank} 不在 0..{self.syt_count} 之间")

    @property
    def nonsingular(self) -> bool:
        return self.rank == self.syt_count

    def to_dict(self) -> dict:
        return {"partition": str(self.partition), "p": self.p, "syt": self.syt_count, "rank": self.rank}


def polytabloid_matrix(la: Partition, p: int, cap: Optional[int] = None) -> np.ndarray:
    """行为标准 polytabloid、列为出现过的 tabloid 的稠密矩阵"""
    tableaux = standard_tableaux(la, cap)
    expansions = [polytabloid(t, p) for t in tableaux]

    index: Dict[Tabloid, int] = {}
    for expansion in expansions:
        for tabloid in expansion:
            index.setdefault(tabloid, len(index))

    cells = len(expansions) * len(index)
    if cells > max_gram_cells():
        raise TooLarge(
            f"{la} 的 polytabloid 矩阵有 {cells} 个单元，超过上限 {max_gram_cells()}",
            "调大 oracle.max_gram_cells",
        )

    P = np.zeros((len(expansions), len(index)), dtype=np.int64)
    for row, expansion in enumerate(expansions):
        for tabloid, coefficient in expansion.items():
            P[row, index[tabloid]] = coefficient
    return P


@lru_cache(maxsize=None)
def _gram_rank(la: Partition, p: int, cap: int) -> GramCertificate:
    P = polytabloid_matrix(la, p, cap)
    G = mod_p(P @ P.T, p)
    certificate = GramCertificate(partition=la, p=p, syt_count=P.shape[0], rank=rank_mod(G, p))
    logger.debug(f"Gram 秩 {la} (p={p}): syt={certificate.syt_count}, rank={certificate.rank}")
    return certificate


def gram_rank(la: Partition, p: int, cap: Optional[int] = None) -> GramCertificate:
    """
    λ 的 Gram 秩证书

    Raises:
        TooLarge: n 超过预言机上限
    """
    check_characteristic(p)
    limit = size_cap(cap)
    check_size(la.size, limit)
    return _gram_rank(la, p, limit)


def dimension(la: Partition, p: int, cap: Optional[int] = None) -> int:
    """dim D^λ（λ 为 p-正则时）"""
    return gram_rank(la, p, cap).rank


def dimension_table(n: int, p: int, cap: Optional[int] = None) -> Dict[Partition, int]:
    """n 的全部 p-正则分拆的 dim D^λ，按字典序降序"""
    return {la: dimension(la, p, cap) for la in enumerate_p_regular(n, p)}
