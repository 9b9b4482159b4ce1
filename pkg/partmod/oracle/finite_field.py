"""素域 GF(p) 上的精确消元（numpy int64）"""

from typing import List, Tuple

import numpy as np


def mod_p(A: np.ndarray, p: int) -> np.ndarray:
    return np.asarray(A % p, dtype=np.int64)


def inv_mod_scalar(a: int, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


def rref_mod(A: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """GF(p) 上的约化行阶梯形，返回 (矩阵, 主元列)"""
    R = mod_p(A.copy(), p)
    m, n = R.shape
    r = 0
    pivot_cols: List[int] = []
    for c in range(n):
        if r >= m:
            break
        nonzero = np.nonzero(R[r:, c])[0]
        if nonzero.size == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = mod_p(R[r] * inv_mod_scalar(R[r, c], p), p)
        factors = R[:, c].copy()
        factors[r] = 0
        rows = np.nonzero(factors)[0]
        if rows.size:
            R[rows] = mod_p(R[rows] - np.outer(factors[rows], R[r]), p)
        pivot_cols.append(c)
        r += 1
    return R, pivot_cols


def rank_mod(A: np.ndarray, p: int) -> int:
    """GF(p) 上的秩"""
    if A.size == 0:
        return 0
    _, pivot_cols = rref_mod(A, p)
    return len(pivot_cols)
