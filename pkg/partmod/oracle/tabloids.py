"""
Tabloid 与 polytabloid

tabloid 以每行排序后的元组为规范形式；
e_t = Σ_{σ ∈ C_t} sign(σ)·{tσ}，系数模 p。
"""

from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, List, Tuple

from partmod.oracle.tableaux import YoungTableau


@dataclass(frozen=True, order=True)
class Tabloid:
    """行集合序列，每行已排序"""
    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows) -> "Tabloid":
        return cls(tuple(tuple(sorted(row)) for row in rows))

    def __str__(self) -> str:
        return "|".join("".join(map(str, row)) for row in self.rows)


def permutation_sign(perm: Tuple[int, ...]) -> int:
    """按逆序数计算置换的符号"""
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def _column_actions(column: Tuple[int, ...]) -> List[Tuple[Tuple[int, ...], int]]:
    """一列上所有置换后的取值及其符号"""
    return [
        (tuple(column[k] for k in perm), permutation_sign(perm))
        for perm in permutations(range(len(column)))
    ]


def polytabloid(t: YoungTableau, p: int) -> Dict[Tabloid, int]:
    """
    e_t 在 tabloid 基下的展开，系数在 0..p-1，零系数省略

    列置换得到的 tabloid 互不相同，因此每个系数是 ±1。
    """
    columns = t.columns
    shape = [len(row) for row in t.rows]
    expansion: Dict[Tabloid, int] = {}

    for choice in product(*(_column_actions(column) for column in columns)):
        rows = [[0] * length for length in shape]
        sign = 1
        for col, (entries, column_sign) in enumerate(choice):
            sign *= column_sign
            for row, entry in enumerate(entries):
                rows[row][col] = entry
        coefficient = sign % p
        if coefficient:
            expansion[Tabloid.from_rows(rows)] = coefficient
    return expansion
