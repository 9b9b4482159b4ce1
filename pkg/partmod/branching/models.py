"""分支规则领域模型"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

from partmod.partition import ContentVector, Node, Partition


ADDABLE = "+"
REMOVABLE = "-"


@dataclass(frozen=True)
class SignedNode:
    """i-签名中的一项：可加结点记 +，可去结点记 -"""
    node: Node
    sign: str

    def __post_init__(self):
        if self.sign not in (ADDABLE, REMOVABLE):
            raise ValueError(f"签名符号只能是 '+' 或 '-': {self.sign!r}")

    def __str__(self) -> str:
        return f"{self.sign}{self.node}"


@dataclass(frozen=True)
class SignatureReport:
    """
    约化 i-签名

    sequence 为从上到下的原始签名，reduced 为反复消去相邻 "+-" 后的剩余项。
    剩余的 - 为 i-正规结点，剩余的 + 为 i-余正规结点。
    """
    residue: int
    sequence: Tuple[SignedNode, ...]
    reduced: Tuple[SignedNode, ...]

    def __post_init__(self):
        signs = "".join(entry.sign for entry in self.reduced)
        if "+-" in signs:
            raise ValueError(f"约化签名仍含 '+-': {signs}")

    @property
    def normal_nodes(self) -> Tuple[Node, ...]:
        return tuple(e.node for e in self.reduced if e.sign == REMOVABLE)

    @property
    def conormal_nodes(self) -> Tuple[Node, ...]:
        return tuple(e.node for e in self.reduced if e.sign == ADDABLE)

    @property
    def epsilon(self) -> int:
        """ε_i = i-正规结点数"""
        return len(self.normal_nodes)

    @property
    def phi(self) -> int:
        """φ_i = i-余正规结点数"""
        return len(self.conormal_nodes)

    @property
    def good(self) -> Optional[Node]:
        """最下方的 i-正规结点"""
        normal = self.normal_nodes
        return normal[-1] if normal else None

    @property
    def cogood(self) -> Optional[Node]:
        """最上方的 i-余正规结点"""
        conormal = self.conormal_nodes
        return conormal[0] if conormal else None

    def to_dict(self) -> dict:
        return {
            "residue": self.residue,
            "sequence": [str(entry) for entry in self.sequence],
            "epsilon": self.epsilon,
            "phi": self.phi,
            "good": self.good.to_list() if self.good else None,
            "cogood": self.cogood.to_list() if self.cogood else None,
        }


@dataclass(frozen=True)
class RestrictionTerm:
    """两行限制公式中的一项 D^μ 及其重数"""
    partition: Partition
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity not in (1, 2):
            raise ValueError(f"重数只能是 1 或 2: {self.multiplicity}")


@dataclass(frozen=True)
class RestrictionCertificate:
    """
    两行分拆 (n-k, k) 限制到 S_{n-1} 的合成因子证书

    digits 为 n-2k 的 p 进制各位（低位在前，至少补齐到第 t 位），
    t 为第一个满足 s_t < p-1 的下标，delta 为 s_t < p-2 时的 1。
    """
    source: Partition
    p: int
    digits: Tuple[int, ...]
    t: int
    delta: int
    terms: Tuple[RestrictionTerm, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.delta not in (0, 1):
            raise ValueError(f"delta 只能是 0 或 1: {self.delta}")
        target = self.source.size - 1
        for term in self.terms:
            if term.partition.size != target:
                raise ValueError(f"{term.partition} 的大小不是 {target}")

    def as_mapping(self) -> dict:
        return {term.partition: term.multiplicity for term in self.terms}

    def to_dict(self) -> dict:
        return {
            "partition": str(self.source),
            "p": self.p,
            "digits": list(self.digits),
            "t": self.t,
            "delta": self.delta,
            "terms": [
                {"partition": str(term.partition), "multiplicity": term.multiplicity}
                for term in self.terms
            ],
        }


@dataclass(frozen=True)
class RestrictionBlock:
    """e_i D^λ 所在的块：content、头部标签 ẽ_i(λ) 与头部重数 ε_i(λ)"""
    residue: int
    content: ContentVector
    head: Partition
    multiplicity: int

    def to_dict(self) -> dict:
        return {
            "residue": self.residue,
            "content": list(self.content.counts),
            "head": str(self.head),
            "multiplicity": self.multiplicity,
        }
