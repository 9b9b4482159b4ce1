"""
分裂 JS 分拆的同余诊断与 (i) 型乘积的结点诊断

每条判据单独报告通过/失败及出处。
"""

from loguru import logger

from partmod.alternating.models import DiagnosticClause, DiagnosticReport
from partmod.alternating.splitting import splits
from partmod.branching import conormal_nodes, is_js, normal_nodes, require_p_regular
from partmod.mullineux import mullineux
from partmod.partition import (
    Partition,
    add_node,
    addable_nodes,
    basic_spin,
    is_p_regular,
    removable_nodes,
    remove_node,
    residue,
)
from partmod.utils.constants import SPLIT_HEIGHT_MIN_N, Citation
from partmod.utils.errors import PreconditionViolated


def _require_split_js(la: Partition, p: int) -> None:
    require_p_regular(la, p)
    if not splits(la, p):
        raise PreconditionViolated(f"{la} 在 p={p} 时不分裂")
    if not is_js(la, p):
        raise PreconditionViolated(f"{la} 在 p={p} 时不是 JS 分拆")


def split_js_diagnostics(la: Partition, p: int) -> DiagnosticReport:
    """
    分裂 JS 分拆的必要条件

    - p = 2：所有部分为奇数，n ≡ h² (mod 4)；n 为偶数且 λ ≠ β_n 时 n ≡ 0 (mod 4)
    - p >= 3：n ≡ h² (mod p)；p = 3 且 n >= 5 时 h >= 3

    Raises:
        PreconditionViolated: λ 不是分裂 JS 分拆
    """
    _require_split_js(la, p)
    n, h = la.size, la.height
    clauses = []

    if p == 2:
        clauses.append(DiagnosticClause(
            "odd_parts", all(part % 2 == 1 for part in la.parts), Citation.SPLIT_JS_CHAR2,
            f"parts={la.to_list()}",
        ))
        clauses.append(DiagnosticClause(
            "n_equiv_h_squared_mod_4", (n - h * h) % 4 == 0, Citation.SPLIT_JS_CHAR2,
            f"n={n}, h²={h * h}",
        ))
        if n % 2 == 0 and n >= 3 and la != basic_spin(n):
            clauses.append(DiagnosticClause(
                "n_divisible_by_4", n % 4 == 0, Citation.SPLIT_JS_CHAR2, f"n={n}",
            ))
    else:
        clauses.append(DiagnosticClause(
            "n_equiv_h_squared_mod_p", (n - h * h) % p == 0, Citation.SPLIT_JS_ODD,
            f"n={n}, h²={h * h}, p={p}",
        ))
        if p == 3 and n >= SPLIT_HEIGHT_MIN_N:
            clauses.append(DiagnosticClause(
                "height_at_least_3", h >= 3, Citation.SPLIT_HEIGHT, f"h={h}",
            ))

    report = DiagnosticReport(la, p, tuple(clauses))
    if not report.passed:
        logger.warning(f"分裂 JS 诊断未通过: {la} (p={p}), 失败项 {[c.name for c in report.failed()]}")
    return report


def case_i_node_report(la: Partition, p: int) -> DiagnosticReport:
    """
    (i) 型乘积涉及的结点

    A 为最上方可去结点，B、C 为最下方两个可加结点。要求 A 是唯一的正规结点
    且剩余类为 0，B、C 恰为全部余正规结点；p >= 3 时 res(B) = -res(C) ≠ 0
    且 ((λ∖A)∪B)^M = (λ∖A)∪C；p = 2 且 n 为奇数时 B、C 的剩余类都是 1。

    Raises:
        PreconditionViolated: λ 不是分裂 JS 分拆，或 p | n
    """
    _require_split_js(la, p)
    n = la.size
    if n % p == 0:
        raise PreconditionViolated(f"p={p} 整除 n={n}")

    node_a = removable_nodes(la)[0]
    *_, node_b, node_c = addable_nodes(la)
    res_b, res_c = residue(node_b, p), residue(node_c, p)

    clauses = [
        DiagnosticClause(
            "top_removable_is_only_normal",
            normal_nodes(la, p) == [node_a] and residue(node_a, p) == 0,
            Citation.CASE_I, f"A={node_a}",
        ),
        DiagnosticClause(
            "bottom_addables_are_conormal",
            conormal_nodes(la, p) == [node_b, node_c],
            Citation.CASE_I, f"B={node_b}, C={node_c}",
        ),
    ]

    if p == 2:
        if n % 2 == 1:
            clauses.append(DiagnosticClause(
                "conormal_residues_one", res_b == 1 and res_c == 1, Citation.CASE_I_CHAR2,
                f"res(B)={res_b}, res(C)={res_c}",
            ))
    else:
        clauses.append(DiagnosticClause(
            "opposite_conormal_residues", res_b == (-res_c) % p and res_b != 0, Citation.CASE_I,
            f"res(B)={res_b}, res(C)={res_c}",
        ))
        swapped = False
        detail = ""
        try:
            smaller = remove_node(la, node_a)
            with_b, with_c = add_node(smaller, node_b), add_node(smaller, node_c)
            if is_p_regular(with_b, p) and is_p_regular(with_c, p):
                swapped = mullineux(with_b, p) == with_c
                detail = f"({with_b})^M={mullineux(with_b, p)}, (λ∖A)∪C={with_c}"
        except ValueError as e:
            detail = str(e)
        clauses.append(DiagnosticClause("mullineux_swaps_b_and_c", swapped, Citation.CASE_I_ODD, detail))

    return DiagnosticReport(la, p, tuple(clauses))
